#include "plumblat/forbidden.hpp"

#include <algorithm>
#include <string_view>

namespace plumblat {
namespace {

using Run = std::vector<std::size_t>;  // flat vertex indices

// Every consecutive run of `values` (indexed like plumbing vertices) equal to
// `pattern` read in either direction. Runs are reported left to right in the
// chain, one entry per distinct vertex set and reading.
std::vector<Run> find_runs(const Plumbing& plumbing,
                           const std::vector<Weight>& values,
                           const Chain& pattern) {
  std::vector<Run> out;
  Chain reversed(pattern.rbegin(), pattern.rend());
  const bool palindrome = reversed == pattern;
  const std::size_t len = pattern.size();
  for (std::size_t c = 0; c < plumbing.chains().size(); ++c) {
    const std::size_t chain_len = plumbing.chains()[c].size();
    if (chain_len < len) continue;
    const std::size_t base = plumbing.index({c, 0});
    for (std::size_t s = 0; s + len <= chain_len; ++s) {
      bool forward = true;
      bool backward = !palindrome;
      for (std::size_t i = 0; i < len; ++i) {
        const Weight v = values[base + s + i];
        forward = forward && v == pattern[i];
        backward = backward && v == reversed[i];
      }
      if (forward || backward) {
        Run run(len);
        for (std::size_t i = 0; i < len; ++i) run[i] = base + s + i;
        if (backward && !forward) std::reverse(run.begin(), run.end());
        out.push_back(std::move(run));
      }
    }
  }
  return out;
}

bool separated(const Plumbing& plumbing, const Run& a, const Run& b) {
  for (std::size_t u : a) {
    for (std::size_t v : b) {
      if (u == v || plumbing.adjacent(u, v)) return false;
    }
  }
  return true;
}

std::vector<VertexRef> refs_of(const Plumbing& plumbing, const Run& run) {
  std::vector<VertexRef> out;
  out.reserve(run.size());
  for (std::size_t v : run) out.push_back(plumbing.ref(v));
  return out;
}

std::string describe(const std::vector<Weight>& values, const Run& run) {
  std::string s;
  for (std::size_t i = 0; i < run.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(values[run[i]]);
  }
  return s;
}

std::vector<Weight> weights_of(const Plumbing& plumbing) {
  std::vector<Weight> w(plumbing.vertex_count());
  for (std::size_t v = 0; v < w.size(); ++v) w[v] = plumbing.weight(v);
  return w;
}

}  // namespace

const std::vector<ForbiddenConfig>& forbidden_configs() {
  static const std::vector<ForbiddenConfig> configs = {
      {'a', {{4}}},
      {'b', {{5, 2}}},
      {'c', {{6, 2, 2}}},
      {'d', {{2}, {2}}},
      {'e', {{3}, {2, 2}}},
      {'f', {{3, 3}}},
      {'g', {{3, 2, 3}}},
      {'h', {{3, 2, 2, 3}}},
      {'i', {{3, 5, 3, 2}}},
      {'j', {{2, 2, 3, 5}}},
  };
  return configs;
}

bool ConditionReport::fired(std::string_view rule) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.rule == rule; });
}

ConditionReport check_configurations(const Plumbing& plumbing) {
  ConditionReport report;
  const auto weights = weights_of(plumbing);
  for (const auto& config : forbidden_configs()) {
    const std::string rule(1, config.id);
    if (config.parts.size() == 1) {
      for (const auto& run : find_runs(plumbing, weights, config.parts[0])) {
        report.violations.push_back(
            {rule, refs_of(plumbing, run), describe(weights, run)});
      }
      continue;
    }
    const auto first = find_runs(plumbing, weights, config.parts[0]);
    const auto second = find_runs(plumbing, weights, config.parts[1]);
    const bool same_part = config.parts[0] == config.parts[1];
    for (std::size_t i = 0; i < first.size(); ++i) {
      for (std::size_t j = same_part ? i + 1 : 0; j < second.size(); ++j) {
        if (!separated(plumbing, first[i], second[j])) continue;
        Run both = first[i];
        both.insert(both.end(), second[j].begin(), second[j].end());
        report.violations.push_back(
            {rule, refs_of(plumbing, both),
             describe(weights, first[i]) + " | " + describe(weights, second[j])});
      }
    }
  }
  return report;
}

ConditionReport check_working_conditions(const Plumbing& plumbing) {
  ConditionReport report;
  const auto adj = adjusted_weights(plumbing);
  const std::size_t n = plumbing.vertex_count();

  // I
  for (std::size_t v = 0; v < n; ++v) {
    if (plumbing.weight(v) < 2) {
      report.violations.push_back({"I", {plumbing.ref(v)}, "weight below 2"});
    }
  }

  // II
  Run large;
  for (std::size_t v = 0; v < n; ++v) {
    if (adj[v] > 3) {
      report.violations.push_back(
          {"II", {plumbing.ref(v)}, "adjusted weight " + std::to_string(adj[v])});
    }
    if (adj[v] > 1) large.push_back(v);
  }
  if (large.size() > 1) {
    report.violations.push_back({"II", refs_of(plumbing, large),
                                 "several vertices with adjusted weight > 1"});
  }

  // III
  for (std::size_t c = 0; c < plumbing.chains().size(); ++c) {
    const std::size_t base = plumbing.index({c, 0});
    const std::size_t len = plumbing.chains()[c].size();
    for (std::size_t s = 0; s + 3 <= len; ++s) {
      if (adj[base + s] > 0 && adj[base + s + 1] > 0 && adj[base + s + 2] > 0) {
        Run run{base + s, base + s + 1, base + s + 2};
        report.violations.push_back(
            {"III", refs_of(plumbing, run), describe(adj, run)});
      }
    }
  }

  // IV
  for (std::size_t v = 0; v < n; ++v) {
    if (adj[v] != 3) continue;
    for (const auto& run : find_runs(plumbing, adj, {1, 1})) {
      Run witness{v};
      witness.insert(witness.end(), run.begin(), run.end());
      report.violations.push_back({"IV", refs_of(plumbing, witness),
                                   "adjusted 3 together with adjacent 1 1"});
    }
  }

  // V
  for (std::size_t v0 = 0; v0 < n; ++v0) {
    if (adj[v0] < 1) continue;
    const VertexRef start = plumbing.ref(v0);
    const std::size_t len = plumbing.chains()[start.chain].size();
    for (int dir : {-1, 1}) {
      Run run{v0};
      std::ptrdiff_t pos = static_cast<std::ptrdiff_t>(start.pos) + dir;
      while (pos >= 0 && pos < static_cast<std::ptrdiff_t>(len)) {
        const std::size_t u =
            plumbing.index({start.chain, static_cast<std::size_t>(pos)});
        run.push_back(u);
        if (adj[u] != 0) break;
        pos += dir;
      }
      const std::size_t end = run.back();
      if (run.size() < 3 || adj[end] != 1) continue;
      // A run with 1 at both ends is seen from each end; report it once.
      if (adj[v0] == 1 && end < v0) continue;
      const auto k = static_cast<Weight>(run.size() - 2);
      if (k < adj[v0] + 1) {
        report.violations.push_back(
            {"V", refs_of(plumbing, run),
             "k=" + std::to_string(k) + " < w'(v0)+1=" +
                 std::to_string(adj[v0] + 1)});
      }
    }
  }

  // VI
  for (const Chain& pattern : {Chain{1, 1, 0, 0, 1, 2}, Chain{3, 1, 0, 0, 1}}) {
    for (const auto& run : find_runs(plumbing, adj, pattern)) {
      report.violations.push_back(
          {"VI", refs_of(plumbing, run), describe(adj, run)});
    }
  }
  return report;
}

bool duality_bridge_test(std::span<const Fraction> summands) {
  const Plumbing p = from_lens_sum(summands);
  if (!check_configurations(p).pass()) return true;
  return check_working_conditions(dual(p)).pass();
}

bool converse_bridge_test(std::span<const Fraction> summands) {
  const Plumbing p = from_lens_sum(summands);
  if (!check_working_conditions(dual(p)).pass()) return true;
  return check_configurations(p).pass();
}

}  // namespace plumblat
