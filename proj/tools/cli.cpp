#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "plumblat/bounds.hpp"
#include "plumblat/contfrac.hpp"
#include "plumblat/forbidden.hpp"
#include "plumblat/json_io.hpp"
#include "plumblat/lattice.hpp"
#include "plumblat/plumbing.hpp"

#ifndef PLUMBLAT_APPENDIX_DIR
#define PLUMBLAT_APPENDIX_DIR "tests/appendix"
#endif

namespace plumblat::cli {
namespace {

// Bad user input or unreadable files; everything else is a bug.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  std::uint64_t budget = SearchOptions{}.node_budget;
  unsigned workers = 1;
  std::int64_t pmax = 200;

  SearchOptions search() const { return {budget, workers}; }
};

// Graph given either as a JSON file or as fractions of a connected sum.
struct GraphInput {
  std::string graph_path;
  std::vector<std::string> fractions;

  void attach(CLI::App* cmd) {
    cmd->add_option("--graph", graph_path, "plumbing JSON file");
    cmd->add_option("fractions", fractions, "p/q summands of a connected sum");
  }

  bool from_file() const { return !graph_path.empty(); }
};

std::vector<Fraction> parse_fractions(const std::vector<std::string>& tokens) {
  std::vector<Fraction> out;
  for (const auto& t : tokens) out.push_back(Fraction::parse(t));
  return out;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

Plumbing load_plumbing(const GraphInput& in) {
  if (in.from_file()) {
    if (!in.fractions.empty()) {
      throw InputError("give either --graph or fractions, not both");
    }
    return plumbing_from_json(read_json(in.graph_path));
  }
  if (in.fractions.empty()) throw InputError("no graph: pass --graph or p/q");
  const auto fs = parse_fractions(in.fractions);
  return from_lens_sum(fs);
}

std::vector<VertexRef> parse_marked(const std::string& text) {
  std::vector<VertexRef> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    VertexRef v;
    const auto colon = item.find(':');
    try {
      if (colon == std::string::npos) {
        v.pos = std::stoul(item);
      } else {
        v.chain = std::stoul(item.substr(0, colon));
        v.pos = std::stoul(item.substr(colon + 1));
      }
    } catch (const std::logic_error&) {
      throw InputError("bad vertex '" + item + "', expected pos or chain:pos");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<VertexRef> marked_from_json(const Json& j) {
  std::vector<VertexRef> out;
  for (const auto& v : j) {
    out.push_back({v.at("chain").get<std::size_t>(), v.at("pos").get<std::size_t>()});
  }
  return out;
}

void print_matrix(std::ostream& out, const IntMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << " ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const int v = m(r, c);
      out << (v < 0 ? " " : "  ") << v;
    }
    out << "\n";
  }
}

void print_matrix(std::ostream& out, const GramMatrix& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      out << (j ? " " : "") << g(i, j);
    }
    out << "\n";
  }
}

void print_report(std::ostream& out, const std::string& title,
                  const ConditionReport& r) {
  out << title << ": " << (r.pass() ? "pass" : "fail") << "\n";
  for (const auto& v : r.violations) {
    out << "  " << v.rule << " at";
    for (const auto& w : v.witnesses) out << " " << w.chain << ":" << w.pos;
    out << "  (" << v.detail << ")\n";
  }
}

std::string join(const std::vector<Weight>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    s += (i ? "," : "") + std::to_string(xs[i]);
  }
  return s;
}

// cf ----------------------------------------------------------------------

void cf_expand_cmd(const Globals& g, const std::string& token, std::ostream& out) {
  const Fraction f = Fraction::parse(token);
  const NegCF cf = cf_expand(f);
  if (g.json) {
    out << Json{{"fraction", to_json(f)}, {"cf", to_json(cf)}}.dump(2) << "\n";
  } else {
    out << f.str() << " = " << cf.str() << "\n";
  }
}

void cf_eval_cmd(const Globals& g, const std::string& token, std::ostream& out) {
  const NegCF cf = NegCF::parse(token);
  const Fraction f = cf_eval(cf);
  if (g.json) {
    out << Json{{"cf", to_json(cf)}, {"fraction", to_json(f)}}.dump(2) << "\n";
  } else {
    out << cf.str() << " = " << f.str() << "\n";
  }
}

void cf_dual_cmd(const Globals& g, const std::string& token, std::ostream& out) {
  const NegCF cf = token.find('/') != std::string::npos
                       ? cf_expand(Fraction::parse(token))
                       : NegCF::parse(token);
  const NegCF d = riemenschneider_dual(cf);
  const Fraction f = cf_eval(cf);
  const Fraction fd = cf_eval(d);
  if (g.json) {
    out << Json{{"cf", to_json(cf)},
                {"fraction", to_json(f)},
                {"dual", to_json(d)},
                {"dual_fraction", to_json(fd)}}
               .dump(2)
        << "\n";
  } else {
    out << cf.str() << " (" << f.str() << ") -> " << d.str() << " (" << fd.str()
        << ")\n";
  }
}

// plumb -------------------------------------------------------------------

void plumb_show(const Globals& g, const Plumbing& p, std::ostream& out) {
  if (g.json) {
    out << to_json(p).dump(2) << "\n";
  } else {
    out << p.str() << "\n";
  }
}

void plumb_gram_cmd(const Globals& g, const Plumbing& p, std::ostream& out) {
  const GramMatrix m = gram(p);
  const BigInt det = determinant(m);
  if (g.json) {
    out << Json{{"gram", to_json(m)}, {"determinant", det.str()}}.dump(2) << "\n";
  } else {
    print_matrix(out, m);
    out << "det = " << det << "\n";
  }
}

void plumb_adjusted_cmd(const Globals& g, const Plumbing& p, std::ostream& out) {
  const auto adj = adjusted_weights(p);
  std::vector<std::vector<Weight>> per_chain;
  std::size_t v = 0;
  for (const auto& chain : p.chains()) {
    per_chain.emplace_back(adj.begin() + v, adj.begin() + v + chain.size());
    v += chain.size();
  }
  if (g.json) {
    out << Json{{"adjusted", per_chain}}.dump(2) << "\n";
  } else {
    for (std::size_t c = 0; c < per_chain.size(); ++c) {
      out << (c ? " + " : "") << "(" << join(per_chain[c]) << ")";
    }
    out << "\n";
  }
}

// check -------------------------------------------------------------------

void check_cmd(const Globals& g, const Plumbing& p, bool working,
               std::ostream& out) {
  const ConditionReport r =
      working ? check_working_conditions(p) : check_configurations(p);
  if (g.json) {
    Json j = to_json(r);
    j["graph"] = to_json(p);
    out << j.dump(2) << "\n";
  } else {
    out << p.str() << "\n";
    print_report(out, working ? "working conditions" : "configurations", r);
  }
}

std::vector<Fraction> reduced_fractions(std::int64_t pmax) {
  std::vector<Fraction> out;
  for (std::int64_t p = 2; p <= pmax; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    }
  }
  return out;
}

void bridge_cmd(const Globals& g, std::int64_t pair_pmax, bool converse,
                std::ostream& out) {
  const auto test = converse ? converse_bridge_test : duality_bridge_test;
  std::vector<std::vector<Fraction>> failures;
  std::size_t singles = 0;
  std::size_t pairs = 0;
  for (const auto& f : reduced_fractions(g.pmax)) {
    ++singles;
    const std::vector<Fraction> s{f};
    if (!test(s)) failures.push_back(s);
  }
  const auto small = reduced_fractions(pair_pmax / 2);
  for (std::size_t i = 0; i < small.size(); ++i) {
    for (std::size_t j = i; j < small.size(); ++j) {
      if (small[i].p() * small[j].p() > pair_pmax) continue;
      ++pairs;
      const std::vector<Fraction> s{small[i], small[j]};
      if (!test(s)) failures.push_back(s);
    }
  }
  if (g.json) {
    Json fails = Json::array();
    for (const auto& s : failures) {
      Json item = Json::array();
      for (const auto& f : s) item.push_back(f.str());
      fails.push_back(item);
    }
    out << Json{{"direction", converse ? "converse" : "configurations_to_working"},
                {"pmax", g.pmax},
                {"pair_pmax", pair_pmax},
                {"singles", singles},
                {"pairs", pairs},
                {"failures", fails}}
               .dump(2)
        << "\n";
    return;
  }
  out << (converse ? "converse" : "bridge") << " sweep: " << singles
      << " single lens spaces (p <= " << g.pmax << "), " << pairs
      << " two-summand sums (p1*p2 <= " << pair_pmax << ")\n";
  out << failures.size() << " failures\n";
  for (const auto& s : failures) {
    out << " ";
    for (const auto& f : s) out << " " << f.str();
    out << "\n";
  }
}

// embed -------------------------------------------------------------------

const char* status_name(SearchStatus s) {
  return s == SearchStatus::complete ? "complete" : "budget_exceeded";
}

void enumerate_cmd(const Globals& g, const Plumbing& p, std::size_t n,
                   std::ostream& out) {
  if (n == 0) throw InputError("--n must be at least 1");
  const auto r = enumerate_embeddings(p, n, g.search());
  if (g.json) {
    Json list = Json::array();
    for (const auto& e : r.embeddings) {
      list.push_back({{"matrix", to_json(e.matrix())},
                      {"standard", is_standard(e.matrix(), p)}});
    }
    out << Json{{"graph", to_json(p)},
                {"n", n},
                {"status", status_name(r.status)},
                {"nodes", r.nodes},
                {"embeddings", list}}
               .dump(2)
        << "\n";
    return;
  }
  out << p.str() << " into Z^" << n << ": " << r.embeddings.size()
      << " embeddings (" << status_name(r.status) << ", " << r.nodes
      << " nodes)\n";
  for (std::size_t i = 0; i < r.embeddings.size(); ++i) {
    const auto& m = r.embeddings[i].matrix();
    out << "#" << i + 1 << (is_standard(m, p) ? " standard" : " non-standard")
        << ", " << m.cols() << " columns\n";
    print_matrix(out, m);
  }
}

void rigid_cmd(const Globals& g, const Plumbing& p, const std::string& marked,
               std::ostream& out) {
  const RigidityVerdict v =
      marked.empty() ? is_rigid(p, g.search())
                     : is_subgraph_rigid(p, parse_marked(marked), g.search());
  if (g.json) {
    Json j = to_json(v);
    j["graph"] = to_json(p);
    out << j.dump(2) << "\n";
    return;
  }
  out << p.str() << ": " << to_string(v.kind) << " (" << v.embeddings
      << " embeddings, " << v.nodes << " nodes)\n";
  if (v.witness) {
    out << "non-standard witness:\n";
    print_matrix(out, v.witness->matrix());
  }
}

void appendix_cmd(const Globals& g, const std::string& dir, std::ostream& out) {
  Json results = Json::array();
  for (int k = 1; k <= 5; ++k) {
    const auto path =
        (std::filesystem::path(dir) / ("graph" + std::to_string(k) + ".json")).string();
    const Json doc = read_json(path);
    const Plumbing p = plumbing_from_json(doc);
    const auto marked = marked_from_json(doc.at("marked"));
    std::vector<CanonicalForm> golden;
    for (const auto& m : doc.at("embeddings")) {
      golden.push_back(CanonicalForm::of(matrix_from_json(m)));
    }
    std::sort(golden.begin(), golden.end());

    const auto r = enumerate_embeddings(p, max_ambient_dimension(p), g.search());
    std::vector<std::size_t> idx;
    for (const auto& v : marked) idx.push_back(p.index(v));
    bool restricts = true;
    for (const auto& e : r.embeddings) {
      restricts = restricts && restricts_standardly(e.matrix(), p, idx);
    }
    const bool matches = r.embeddings == golden;

    if (g.json) {
      Json list = Json::array();
      for (const auto& e : r.embeddings) list.push_back(to_json(e.matrix()));
      results.push_back({{"graph", to_json(p)},
                         {"status", status_name(r.status)},
                         {"count", r.embeddings.size()},
                         {"matches_golden", matches},
                         {"restricts_standardly", restricts},
                         {"embeddings", list}});
      continue;
    }
    out << "graph " << k << " " << p.str() << ": " << r.embeddings.size()
        << " embeddings, golden " << (matches ? "match" : "MISMATCH")
        << ", marked subchain " << (restricts ? "standard" : "NOT standard")
        << "\n";
    for (const auto& e : r.embeddings) {
      print_matrix(out, e.matrix());
      out << "\n";
    }
  }
  if (g.json) out << results.dump(2) << "\n";
}

// bounds ------------------------------------------------------------------

void lmn_cmd(const Globals& g, const LmnSpec& s, bool certify, std::int64_t max_m,
             std::ostream& out) {
  const LmnData data = build_lmn(s);
  const BoundReport r = lower_bounds(s);
  std::optional<SubchainCertificate> cert;
  if (certify) cert = rigid_subchain_certificate(s.m, g.search(), max_m);

  if (g.json) {
    Json j = to_json(r);
    j["m"] = s.m;
    j["n"] = s.n;
    j["cf"] = to_json(data.cf);
    j["dual_cf"] = to_json(data.dual_cf);
    if (cert) {
      j["certificate"] = {{"working_conditions", cert->working_conditions},
                          {"rigidity", to_string(cert->rigidity)},
                          {"minimal_dimension", cert->minimal_dimension},
                          {"expected_dimension", cert->expected_dimension},
                          {"ok", cert->ok()}};
    }
    out << j.dump(2) << "\n";
    return;
  }
  out << "L_{" << s.m << "," << s.n << "} = L(" << r.p << ", " << r.q << ")\n"
      << "  cf       " << data.cf.str() << "\n"
      << "  dual cf  " << data.dual_cf.str() << "\n"
      << "  b2 X(p,q) = " << r.b2_canonical << ", b2 X(p,p-q) = " << r.b2_dual
      << "\n"
      << "  fillings of -L: b2 >= " << r.bound_reversed << "\n"
      << "  fillings of  L: b2 >= " << r.bound_same << "\n";
  if (r.k) out << "  k = " << *r.k << "\n";
  if (cert) {
    out << "  subchain [3,2,2,2,2]^" << s.m << ": working conditions "
        << (cert->working_conditions ? "pass" : "fail") << ", "
        << to_string(cert->rigidity) << ", minimal N = "
        << cert->minimal_dimension << " (expected " << cert->expected_dimension
        << ")\n";
  }
}

// classify ----------------------------------------------------------------

void classify_cmd(const Globals& g, const std::vector<std::string>& tokens,
                  std::ostream& out) {
  if (tokens.empty()) throw InputError("classify needs at least one p/q");
  const auto fs = parse_fractions(tokens);
  const Plumbing canonical = from_lens_sum(fs);
  const Plumbing dual_p = dual(canonical);
  const ConditionReport configs = check_configurations(canonical);
  const ConditionReport working = check_working_conditions(dual_p);
  const RigidityVerdict rigidity = is_rigid(dual_p, g.search());

  if (g.json) {
    Json summands = Json::array();
    for (const auto& f : fs) {
      const NegCF cf = cf_expand(f);
      summands.push_back({{"fraction", to_json(f)},
                          {"cf", to_json(cf)},
                          {"dual_cf", to_json(riemenschneider_dual(cf))}});
    }
    out << Json{{"summands", summands},
                {"canonical", to_json(canonical)},
                {"dual", to_json(dual_p)},
                {"configurations", to_json(configs)},
                {"working_conditions", to_json(working)},
                {"rigidity", to_json(rigidity)},
                {"minimal", configs.pass()}}
               .dump(2)
        << "\n";
    return;
  }
  for (const auto& f : fs) {
    const NegCF cf = cf_expand(f);
    out << f.str() << " = " << cf.str() << ", dual "
        << riemenschneider_dual(cf).str() << "\n";
  }
  out << "canonical plumbing " << canonical.str() << "\n"
      << "dual plumbing      " << dual_p.str() << "\n";
  print_report(out, "configurations", configs);
  print_report(out, "working conditions on dual", working);
  out << "dual lattice: " << to_string(rigidity.kind) << " ("
      << rigidity.embeddings << " embeddings, " << rigidity.nodes << " nodes)\n";
  if (rigidity.witness) {
    out << "non-standard embedding of the dual:\n";
    print_matrix(out, rigidity.witness->matrix());
  }
  out << "canonical filling is " << (configs.pass() ? "minimal" : "not minimal")
      << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lens space plumbings, dual graphs and lattice embeddings",
               "plumb-lattice"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--budget", g.budget, "search node budget")
      ->check(CLI::Range(std::uint64_t{10'000},
                         std::numeric_limits<std::uint64_t>::max()));
  app.add_option("--workers", g.workers, "search threads")
      ->check(CLI::Range(1u, 256u));
  app.add_option("--pmax", g.pmax, "sweep bound on p")
      ->check(CLI::Range(std::int64_t{2}, std::numeric_limits<std::int64_t>::max()));

  std::function<void()> action;

  // cf
  auto* cf = app.add_subcommand("cf", "negative continued fractions");
  cf->require_subcommand(1);
  std::string cf_token;
  auto* cf_expand_sc = cf->add_subcommand("expand", "p/q -> [a1,...,an]");
  cf_expand_sc->add_option("fraction", cf_token)->required();
  cf_expand_sc->final_callback([&] { action = [&] { cf_expand_cmd(g, cf_token, out); }; });
  auto* cf_eval_sc = cf->add_subcommand("eval", "a1,...,an -> p/q");
  cf_eval_sc->add_option("cf", cf_token)->required();
  cf_eval_sc->final_callback([&] { action = [&] { cf_eval_cmd(g, cf_token, out); }; });
  auto* cf_dual_sc = cf->add_subcommand("dual", "dual expansion of p/q or a1,...,an");
  cf_dual_sc->add_option("input", cf_token)->required();
  cf_dual_sc->final_callback([&] { action = [&] { cf_dual_cmd(g, cf_token, out); }; });

  // plumb
  GraphInput graph;
  auto* plumb = app.add_subcommand("plumb", "plumbing graphs");
  plumb->require_subcommand(1);
  auto* from_lens = plumb->add_subcommand("from-lens", "canonical plumbing of a sum");
  graph.attach(from_lens);
  from_lens->final_callback(
      [&] { action = [&] { plumb_show(g, load_plumbing(graph), out); }; });
  auto* plumb_dual = plumb->add_subcommand("dual", "dual plumbing");
  graph.attach(plumb_dual);
  plumb_dual->final_callback(
      [&] { action = [&] { plumb_show(g, dual(load_plumbing(graph)), out); }; });
  auto* plumb_gram = plumb->add_subcommand("gram", "Gram matrix and determinant");
  graph.attach(plumb_gram);
  plumb_gram->final_callback(
      [&] { action = [&] { plumb_gram_cmd(g, load_plumbing(graph), out); }; });
  auto* plumb_adj = plumb->add_subcommand("adjusted", "adjusted weights w - deg");
  graph.attach(plumb_adj);
  plumb_adj->final_callback(
      [&] { action = [&] { plumb_adjusted_cmd(g, load_plumbing(graph), out); }; });

  // check
  auto* check = app.add_subcommand("check", "minimality criteria");
  check->require_subcommand(1);
  auto* configs = check->add_subcommand(
      "configs", "configurations (a)-(j) in the canonical plumbing");
  graph.attach(configs);
  configs->final_callback(
      [&] { action = [&] { check_cmd(g, load_plumbing(graph), false, out); }; });
  auto* working = check->add_subcommand(
      "working",
      "Working Conditions; fractions are replaced by their dual plumbing, "
      "--graph is checked as given");
  graph.attach(working);
  working->final_callback([&] {
    action = [&] {
      const Plumbing p = load_plumbing(graph);
      check_cmd(g, graph.from_file() ? p : dual(p), true, out);
    };
  });
  auto* bridge = check->add_subcommand(
      "bridge", "sweep: configurations pass implies the dual passes the conditions");
  std::int64_t pair_pmax = 0;
  bool converse = false;
  bridge->add_option("--pair-pmax", pair_pmax,
                     "bound on p1*p2 for two-summand sums (default 2*pmax)");
  bridge->add_flag("--converse", converse, "sweep the converse direction instead");
  bridge->final_callback([&] {
    action = [&] { bridge_cmd(g, pair_pmax ? pair_pmax : 2 * g.pmax, converse, out); };
  });

  // embed
  auto* embed = app.add_subcommand("embed", "embeddings into Z^N");
  embed->require_subcommand(1);
  std::size_t n = 0;
  auto* enumerate = embed->add_subcommand("enumerate", "all embeddings into Z^N");
  graph.attach(enumerate);
  enumerate->add_option("--n", n, "ambient dimension")->required();
  enumerate->final_callback(
      [&] { action = [&] { enumerate_cmd(g, load_plumbing(graph), n, out); }; });
  auto* rigid = embed->add_subcommand("rigid", "is every embedding standard");
  graph.attach(rigid);
  std::string marked;
  rigid->add_option("--marked", marked,
                    "only test these vertices, as pos or chain:pos, comma separated");
  rigid->final_callback(
      [&] { action = [&] { rigid_cmd(g, load_plumbing(graph), marked, out); }; });
  auto* appendix = embed->add_subcommand("appendix", "reproduce the five golden cases");
  std::string appendix_dir = PLUMBLAT_APPENDIX_DIR;
  appendix->add_option("--dir", appendix_dir, "directory holding graph1..5.json");
  appendix->final_callback(
      [&] { action = [&] { appendix_cmd(g, appendix_dir, out); }; });

  // bounds
  auto* bounds = app.add_subcommand("bounds", "filling lower bounds");
  bounds->require_subcommand(1);
  LmnSpec spec;
  bool certify = false;
  std::int64_t max_m = 2;
  auto* lmn = bounds->add_subcommand("lmn", "the family L_{m,n}");
  lmn->add_option("--m", spec.m)->required();
  lmn->add_option("--n", spec.n)->required();
  lmn->add_flag("--certify", certify, "certify the rigid [3,2,2,2,2]^m subchain");
  lmn->add_option("--max-m", max_m, "largest m attempted by --certify");
  lmn->final_callback(
      [&] { action = [&] { lmn_cmd(g, spec, certify, max_m, out); }; });

  // classify
  std::vector<std::string> summands;
  auto* classify = app.add_subcommand("classify", "full report for a connected sum");
  classify->add_option("fractions", summands, "p/q summands")->required();
  classify->final_callback([&] { action = [&] { classify_cmd(g, summands, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (action) action();
    return 0;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace plumblat::cli
