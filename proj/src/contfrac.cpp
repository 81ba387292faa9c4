#include "plumblat/contfrac.hpp"

#include <cassert>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <boost/integer/common_factor_rt.hpp>

namespace plumblat {
namespace {

BigInt parse_integer(std::string_view text) {
  auto begin = text.find_first_not_of(" \t");
  auto end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos) {
    throw std::invalid_argument("empty integer");
  }
  text = text.substr(begin, end - begin + 1);
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) {
    throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
  }
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') {
      throw std::invalid_argument("malformed integer '" + std::string(text) +
                                  "'");
    }
  }
  return BigInt(std::string(text));
}

}  // namespace

Fraction::Fraction(BigInt p, BigInt q) : p_(std::move(p)), q_(std::move(q)) {
  if (!(q_ > 0 && p_ > q_)) {
    throw std::invalid_argument("fraction " + str() + " must satisfy p > q > 0");
  }
  if (boost::integer::gcd(p_, q_) != 1) {
    throw std::invalid_argument("fraction " + str() + " is not reduced");
  }
}

Fraction Fraction::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw std::invalid_argument("expected p/q, got '" + std::string(text) + "'");
  }
  return Fraction(parse_integer(text.substr(0, slash)),
                  parse_integer(text.substr(slash + 1)));
}

std::string Fraction::str() const { return p_.str() + "/" + q_.str(); }

NegCF::NegCF(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("continued fraction must be non-empty");
  }
  for (const auto& a : coeffs_) {
    if (a < 2) {
      throw std::invalid_argument("continued fraction coefficient " + a.str() +
                                  " is below 2");
    }
  }
}

NegCF NegCF::parse(std::string_view text) {
  std::vector<BigInt> coeffs;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    coeffs.push_back(parse_integer(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return NegCF(std::move(coeffs));
}

BigInt NegCF::sum() const {
  BigInt total = 0;
  for (const auto& a : coeffs_) total += a;
  return total;
}

std::string NegCF::str() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out << ',';
    out << coeffs_[i];
  }
  out << ']';
  return out.str();
}

BlockForm BlockForm::from_cf(const NegCF& cf) {
  BlockForm form;
  std::size_t run = 0;
  for (const auto& a : cf.coeffs()) {
    if (a == 2) {
      ++run;
    } else {
      form.twos.push_back(run);
      form.bigs.push_back(a);
      run = 0;
    }
  }
  form.twos.push_back(run);
  return form;
}

NegCF BlockForm::to_cf() const {
  if (twos.size() != bigs.size() + 1) {
    throw std::invalid_argument("block form needs one more run than big entry");
  }
  std::vector<BigInt> coeffs;
  for (std::size_t i = 0; i < twos.size(); ++i) {
    if (i > 0) {
      if (bigs[i - 1] < 3) {
        throw std::invalid_argument("block form entry below 3");
      }
      coeffs.push_back(bigs[i - 1]);
    }
    coeffs.insert(coeffs.end(), twos[i], BigInt(2));
  }
  return NegCF(std::move(coeffs));
}

NegCF cf_expand(const Fraction& f) {
  std::vector<BigInt> coeffs;
  BigInt p = f.p();
  BigInt q = f.q();
  // p/q = a - r/q with a = ceil(p/q) and 0 <= r < q; recurse on q/r.
  while (q != 0) {
    BigInt a = (p + q - 1) / q;
    BigInt r = a * q - p;
    coeffs.push_back(a);
    p = std::move(q);
    q = std::move(r);
  }
  return NegCF(std::move(coeffs));
}

Fraction cf_eval(const NegCF& cf) {
  // Fold from the right: x = a_i - 1/x keeps x = num/den in lowest terms.
  const auto& a = cf.coeffs();
  BigInt num = a.back();
  BigInt den = 1;
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    BigInt next = a[i] * num - den;
    den = std::move(num);
    num = std::move(next);
    assert(num > den && den > 0);
  }
  return Fraction(std::move(num), std::move(den));
}

NegCF from_adjusted(const std::vector<BigInt>& adjusted) {
  if (adjusted.empty()) {
    throw std::invalid_argument("adjusted continued fraction must be non-empty");
  }
  if (adjusted.size() == 1) return NegCF(adjusted);
  std::vector<BigInt> coeffs(adjusted.size());
  for (std::size_t i = 0; i < adjusted.size(); ++i) {
    bool end = i == 0 || i + 1 == adjusted.size();
    coeffs[i] = adjusted[i] + (end ? 1 : 2);
  }
  return NegCF(std::move(coeffs));
}

NegCF riemenschneider_dual(const NegCF& cf) {
  const BlockForm form = BlockForm::from_cf(cf);
  std::vector<BigInt> adjusted;
  for (std::size_t i = 0; i < form.twos.size(); ++i) {
    if (i > 0) {
      const BigInt zeros = form.bigs[i - 1] - 3;
      if (zeros > BigInt(std::numeric_limits<std::ptrdiff_t>::max() / 4)) {
        throw std::length_error("dual continued fraction is too long");
      }
      adjusted.insert(adjusted.end(), static_cast<std::size_t>(zeros),
                      BigInt(0));
    }
    adjusted.push_back(BigInt(form.twos[i]) + 1);
  }
  return from_adjusted(adjusted);
}

}  // namespace plumblat
