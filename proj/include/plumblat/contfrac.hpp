#pragma once

// Negative (Hirzebruch-Jung) continued fractions.
//
//   [a_1, ..., a_n]^- = a_1 - 1/(a_2 - 1/(... - 1/a_n)),   every a_i >= 2.
//
// Every rational p/q with p > q > 0 has exactly one such expansion. The
// Riemenschneider dual of the expansion of p/q is the expansion of p/(p-q).

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace plumblat {

using BigInt = boost::multiprecision::cpp_int;

/// A reduced fraction p/q with p > q > 0, naming the lens space L(p, q).
class Fraction {
 public:
  /// Throws std::invalid_argument unless gcd(p, q) = 1 and p > q > 0.
  Fraction(BigInt p, BigInt q);

  /// Parses "p/q". Throws std::invalid_argument on malformed text.
  static Fraction parse(std::string_view text);

  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }

  /// p/(p-q): the orientation-reversed lens space.
  Fraction complement() const { return Fraction(p_, p_ - q_); }

  std::string str() const;

  friend bool operator==(const Fraction&, const Fraction&) = default;

 private:
  BigInt p_;
  BigInt q_;
};

/// Coefficients a_1..a_n of a negative continued fraction.
class NegCF {
 public:
  /// Throws std::invalid_argument if empty or any coefficient is < 2.
  explicit NegCF(std::vector<BigInt> coeffs);

  /// Parses "a1,a2,...".
  static NegCF parse(std::string_view text);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  BigInt sum() const;

  std::string str() const;

  friend bool operator==(const NegCF&, const NegCF&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// ([2]^{a_0}, b_1, [2]^{a_1}, ..., b_k, [2]^{a_k}) with every b_i >= 3.
/// `twos` always has one more entry than `bigs`.
struct BlockForm {
  std::vector<std::size_t> twos;
  std::vector<BigInt> bigs;

  static BlockForm from_cf(const NegCF& cf);
  NegCF to_cf() const;

  friend bool operator==(const BlockForm&, const BlockForm&) = default;
};

NegCF cf_expand(const Fraction& f);

Fraction cf_eval(const NegCF& cf);

/// Evaluates the adjusted form [c_1, ..., c_l]' = [c_1+1, c_2+2, ...,
/// c_{l-1}+2, c_l+1]^-. A single entry is its own adjusted form.
NegCF from_adjusted(const std::vector<BigInt>& adjusted);

/// Continued fraction of p/(p-q) computed from that of p/q by the point rule.
NegCF riemenschneider_dual(const NegCF& cf);

}  // namespace plumblat
