#ifndef DSG_VERIFY_HPP
#define DSG_VERIFY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dsg/augmented.hpp"
#include "dsg/bounds.hpp"
#include "dsg/exact.hpp"
#include "dsg/graph.hpp"
#include "dsg/peeling.hpp"
#include "dsg/predictor_io.hpp"
#include "dsg/random.hpp"

namespace dsg {

struct VerifyConfig {
  std::size_t trials = 50;
  std::size_t min_nodes = 4;
  std::size_t max_nodes = 12;
  std::vector<double> eps_grid{0.05, 0.1, 0.2};
  std::vector<double> edge_probabilities{0.2, 0.4, 0.7};
  std::uint64_t seed = 0;
  /// Directed instances are capped at this many nodes (exhaustive pair search).
  std::size_t max_directed_nodes = 10;
};

struct CheckTally {
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct VerifyFailure {
  std::string check;
  std::size_t trial = 0;
  std::uint64_t instance_seed = 0;
  bool directed = false;
  std::string instance;  // canonical edge list
  std::string detail;
};

struct VerifyReport {
  std::map<std::string, CheckTally> checks;
  std::size_t instances = 0;
  std::size_t edgeless = 0;
  std::optional<VerifyFailure> failure;
  bool ok() const { return !failure; }
};

namespace detail {

inline std::string serialize(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

struct VerifyContext {
  VerifyReport& report;
  std::size_t trial;
  std::uint64_t seed;

  // Records one check outcome; returns false (and keeps the first failure) on violation.
  bool record(const std::string& name, bool ok, const Graph& g, const std::string& what) {
    auto& tally = report.checks[name];
    if (ok) {
      ++tally.passed;
      return true;
    }
    ++tally.failed;
    if (!report.failure)
      report.failure = VerifyFailure{name, trial, seed, g.directed(), serialize(g), what};
    return false;
  }
};

inline std::string eps_tag(double eps) { return format_double(eps); }

}  // namespace detail

/// Seeded random-instance verification of every solver against its oracle
/// and every approximation bound. Stops at the first violated check.
inline VerifyReport run_verify(const VerifyConfig& cfg) {
  detail::require(cfg.min_nodes >= 1 && cfg.min_nodes <= cfg.max_nodes, "bad node range");
  detail::require(cfg.max_nodes <= 16, "verify uses exhaustive oracles; keep n <= 16");
  detail::require(!cfg.edge_probabilities.empty(), "need at least one edge probability");
  VerifyReport report;
  for (std::size_t trial = 0; trial < cfg.trials && report.ok(); ++trial) {
    const std::uint64_t seed = sub_seed(cfg.seed, trial);
    Rng rng(seed);
    const std::size_t n = cfg.min_nodes + uniform_below(rng, cfg.max_nodes - cfg.min_nodes + 1);
    const double p = cfg.edge_probabilities[uniform_below(rng, cfg.edge_probabilities.size())];
    const Graph g = erdos_renyi(n, p, false, rng());
    ++report.instances;
    detail::VerifyContext ctx{report, trial, seed};

    if (g.edge_count() > 0) {
      const NodeSet brute = brute_force_densest(g, Objective::standard);
      const Density best = density(g, brute);
      const Density exact = density(g, exact_densest_subgraph(g));
      if (!ctx.record("exact_equals_brute_force", exact == best, g, "exact solver density differs"))
        break;
      const Density peel = density(g, charikar_peel(g).nodes);
      if (!ctx.record("peel_half_approximation", peel >= Density::ratio(best.numerator(), 2 * best.denominator()),
                      g, "peeling below half of optimum"))
        break;

      const NodeSet clique_best = brute_force_densest(g, Objective::clique);
      const Density clique_value = clique_density(g, clique_best);
      for (double eps : cfg.eps_grid) {
        if (eps <= 0.0 || eps >= 1.0) continue;
        const Ratio r = ratio_from_double(eps);
        const std::uint64_t corruption_seed = sub_seed(seed, 100 + static_cast<std::uint64_t>(eps * 1e6));
        const NodeSet s = corrupt_solution(g, brute, eps, corruption_seed).nodes;
        const NodeSet missing = set_difference(brute, s);
        const std::uint64_t missing_edges = missing.empty() ? 0 : induced_edge_count(g, missing);
        if (!ctx.record("missing_edges_bound", missing_edges_bound_holds(missing_edges, best.numerator(), r), g,
                        "eps=" + detail::eps_tag(eps)))
          break;
        const Density aug = density(g, augment_undirected(g, s, eps));
        if (!ctx.record("augmented_undirected_bound", undirected_bound_holds(aug, best, r), g,
                        "eps=" + detail::eps_tag(eps)))
          break;

        if (eps <= 0.5 && 9 * r.num < r.den) {
          const NodeSet sc = corrupt_solution(g, clique_best, eps, corruption_seed).nodes;
          const Density aug_clique = clique_density(g, augment_clique(g, sc, eps));
          if (!ctx.record("augmented_clique_bound", clique_bound_holds(aug_clique, clique_value, r), g,
                          "eps=" + detail::eps_tag(eps)))
            break;
        }
      }
      if (!report.ok()) break;
    } else {
      ++report.edgeless;
    }

    const std::size_t dn = std::min(n, cfg.max_directed_nodes);
    const Graph dg = erdos_renyi(dn, p, true, rng());
    if (dg.edge_count() == 0) continue;
    const auto [s1_star, s2_star] = brute_force_directed_densest(dg);
    const Density dbest = directed_density(dg, s1_star, s2_star);
    for (double eps1 : cfg.eps_grid) {
      for (double eps2 : cfg.eps_grid) {
        if (eps1 <= 0.0 || eps1 >= 0.5 || eps2 <= 0.0 || eps2 >= 0.5) continue;
        const Ratio r1 = ratio_from_double(eps1), r2 = ratio_from_double(eps2);
        const auto [p1, p2] = corrupt_directed_solution(dg, s1_star, s2_star, eps1, eps2,
                                                        sub_seed(seed, 7 + static_cast<std::uint64_t>(
                                                                                 eps1 * 1e6 + eps2 * 1e3)));
        const NodeSet m1 = set_difference(s1_star, p1.nodes), m2 = set_difference(s2_star, p2.nodes);
        const std::uint64_t missing = (m1.empty() || m2.empty()) ? 0 : cross_edge_count(dg, m1, m2);
        const std::string tag = "eps1=" + detail::eps_tag(eps1) + " eps2=" + detail::eps_tag(eps2);
        if (!ctx.record("missing_arcs_bound", missing_arcs_bound_holds(missing, dbest.numerator(), r1, r2), dg,
                        tag))
          break;
        const auto [o1, o2] = augment_directed(dg, p1.nodes, p2.nodes, eps1, eps2);
        if (!ctx.record("augmented_directed_bound",
                        directed_bound_holds(directed_density(dg, o1, o2), dbest, r1, r2), dg, tag))
          break;
      }
      if (!report.ok()) break;
    }
  }
  return report;
}

}  // namespace dsg

#endif
