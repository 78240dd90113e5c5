#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace ucf {

/// One verification record: a named claim checked at specific parameters,
/// with the expected and computed values and a pass flag.
struct Report {
    std::string claim_id;
    nlohmann::json parameters;
    nlohmann::json expected;
    nlohmann::json computed;
    bool pass = false;
    double runtime_ms = 0.0;
    std::string notes;
};

nlohmann::json to_json(const Report& r);

/// Header + reports, as written by the CLI `verify` subcommand.
nlohmann::json reports_to_json(const std::vector<Report>& reports, std::uint64_t seed, double wall_ms);

/// Closure sizes of the max-lex/colex length-7 pair of 3-set families; the
/// expected sizes are exactly (12, 13).
Report check_counterexample();

/// For each n <= n_max: exhaustive f(n,2) against 2^t - 2^r - t, with the
/// colex segment among the witnesses, its class unique where observed, and a
/// star complement for every ground-[t] witness.
std::vector<Report> check_theorem2(int n_max = 8);

/// f(C(t,k),k) against |[t]^(>=k)|, with all k-sets of [t] among the optima.
Report check_conjecture7(int k, int t);

/// For each n <= n_max: closure of the max-lex segment against f(n,k); a
/// strictly better family is reported as a refutation witness, not an error.
std::vector<Report> check_conjecture8(int k, int n_max);

/// For every l < C(k+1,2) and every family of l k-sets on a bounded ground
/// (every isomorphism class is covered), checks l >= b*k - C(b,2) where b
/// counts (k+1)-sets with at least k of their k-subsets present.
/// ground_cap_override = 0 uses the standard min(l*k, 2k+3) window.
Report check_prop9(int k, int ground_cap_override = 0);

/// Seeded randomized suite: closure growth from ground size (with the
/// distinguishing-set witness), blocker-count bounds, union-extension
/// growth, and the shadow-minimality inequality with equality on lex
/// segments. Returns one report per block.
std::vector<Report> check_lemma_properties(std::uint64_t trials, std::uint64_t seed,
                                           std::uint64_t kk_trials = 0 /* 0: 2*trials */);

}  // namespace ucf
