#include "ucf/harness.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "ucf/binomial.hpp"
#include "ucf/canonical.hpp"
#include "ucf/closure.hpp"
#include "ucf/constructions.hpp"
#include "ucf/orders.hpp"
#include "ucf/search.hpp"
#include "ucf/shadows.hpp"

namespace ucf {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

nlohmann::json family_json(const Family& f) {
    nlohmann::json sets = nlohmann::json::array();
    for (const ElementSet& s : f.sets()) sets.push_back(s.elements());
    return sets;
}

bool witnesses_contain(const SearchOutcome& out, const Family& f) {
    const std::vector<std::uint64_t> key = canonical_key(canonicalize(f, std::max(12, f.ground().cardinality())));
    for (const Family& w : out.witnesses)
        if (canonical_key(canonicalize(w, std::max(12, w.ground().cardinality()))) == key) return true;
    return false;
}

// All 2-sets of the witness ground missing from the family share a vertex.
bool complement_is_star(const Family& f) {
    const int m = f.ground().cardinality();
    std::vector<ElementSet> missing;
    const Family level = all_ksets(m, 2);
    for (const ElementSet& e : level.sets())
        if (!f.contains_member(e)) missing.push_back(e);
    if (missing.size() <= 1) return true;
    ElementSet common = missing.front();
    for (const ElementSet& e : missing) common &= e;
    return !common.empty();
}

std::uint64_t gosper(std::uint64_t w) {
    const std::uint64_t u = w & (~w + 1);
    const std::uint64_t v = w + u;
    return v | (((w ^ v) / u) >> 2);
}

// Valid-path enumeration of all families of `count` k-sets over at most
// `cap` labels: ascending colex lists whose fresh labels always form the
// next block. Every isomorphism class appears at least once.
template <typename Fn>
void enumerate_families(int k, std::size_t count, int cap, Fn&& fn) {
    if (count == 0 || cap < k) return;
    std::vector<std::uint64_t> members{(std::uint64_t{1} << k) - 1};
    auto rec = [&](auto&& self, int m) -> void {
        if (members.size() == count) {
            fn(members);
            return;
        }
        const std::uint64_t last = members.back();
        const std::uint64_t ground_mask = (std::uint64_t{1} << m) - 1;
        std::uint64_t prev = last;
        for (std::uint64_t w = gosper(last); w > prev && (w & ~ground_mask) == 0; prev = w, w = gosper(w)) {
            members.push_back(w);
            self(self, m);
            members.pop_back();
        }
        const int jmax = std::min(k, cap - m);
        for (int j = 1; j <= jmax; ++j) {
            const std::uint64_t block = ((std::uint64_t{1} << j) - 1) << m;
            if (k - j == 0) {
                members.push_back(block);
                self(self, m + j);
                members.pop_back();
                continue;
            }
            std::uint64_t sub = (std::uint64_t{1} << (k - j)) - 1;
            while ((sub & ~ground_mask) == 0) {
                members.push_back(sub | block);
                self(self, m + j);
                members.pop_back();
                sub = gosper(sub);
            }
        }
    };
    rec(rec, k);
}

// Distinct random k-subsets of [g].
Family random_family(std::mt19937_64& rng, int k, int g, std::size_t n) {
    std::vector<std::uint64_t> level;
    std::uint64_t w = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << g;
    while (w < limit) {
        level.push_back(w);
        w = gosper(w);
    }
    std::shuffle(level.begin(), level.end(), rng);
    Family f(k);
    for (std::size_t i = 0; i < n && i < level.size(); ++i) f.push_back_checked(ElementSet::from_bits(level[i]));
    return f;
}

}  // namespace

nlohmann::json to_json(const Report& r) {
    return nlohmann::json{{"claim_id", r.claim_id}, {"parameters", r.parameters}, {"expected", r.expected},
                          {"computed", r.computed}, {"pass", r.pass},           {"runtime_ms", r.runtime_ms},
                          {"notes", r.notes}};
}

nlohmann::json reports_to_json(const std::vector<Report>& reports, std::uint64_t seed, double wall_ms) {
    nlohmann::json arr = nlohmann::json::array();
    bool all_pass = true;
    for (const Report& r : reports) {
        arr.push_back(to_json(r));
        all_pass = all_pass && r.pass;
    }
    return nlohmann::json{
        {"run", {{"seed", seed}, {"version", "0.1.0"}, {"wall_ms", wall_ms}, {"all_pass", all_pass}}},
        {"reports", arr}};
}

Report check_counterexample() {
    const auto start = Clock::now();
    Report r;
    r.claim_id = "counterexample";
    r.parameters = {{"k", 3}, {"n", 7}};
    r.expected = {{"maxlex_closure", 12}, {"colex_closure", 13}};
    const auto [maxlex_fam, colex_fam] = counterexample_pair();
    const std::uint64_t a = close_size(maxlex_fam);
    const std::uint64_t b = close_size(colex_fam);
    r.computed = {{"maxlex_closure", a}, {"colex_closure", b}};
    r.pass = (a == 12 && b == 13);
    r.notes = "max-lex beats colex at seven 3-sets";
    r.runtime_ms = ms_since(start);
    return r;
}

std::vector<Report> check_theorem2(int n_max) {
    std::vector<Report> out;
    for (int n = 1; n <= n_max; ++n) {
        const auto start = Clock::now();
        Report r;
        r.claim_id = "theorem2";
        const Theorem2Values v = theorem2_values(static_cast<std::uint64_t>(n));
        r.parameters = {{"n", n}, {"t", v.t}, {"r", v.r}};
        r.expected = {{"f", *v.f}};

        SearchConfig cfg;
        cfg.n = static_cast<std::uint64_t>(n);
        cfg.k = 2;
        cfg.seed_kind = SeedKind::ColexSegment;
        const SearchOutcome res = f_min(cfg);

        const Family colex_seg = initial_segment(OrderKind::Colex, 2, static_cast<std::uint64_t>(n));
        const bool colex_among = witnesses_contain(res, colex_seg);
        bool stars_ok = true;
        for (const Family& w : res.witnesses)
            if (w.ground().cardinality() == v.t && !complement_is_star(w)) stars_ok = false;

        r.computed = {{"f", res.minimum},
                      {"complete", res.complete},
                      {"witness_classes", res.witnesses.size()},
                      {"colex_class_among_witnesses", colex_among},
                      {"ground_t_witnesses_star_complement", stars_ok},
                      {"nodes", res.nodes_explored}};
        r.pass = res.complete && res.minimum == *v.f && colex_among && stars_ok;
        r.notes = res.witnesses.size() == 1 ? "unique extremal class (the colex segment)"
                                            : std::to_string(res.witnesses.size()) + " extremal classes";
        r.runtime_ms = ms_since(start);
        out.push_back(std::move(r));
    }
    return out;
}

Report check_conjecture7(int k, int t) {
    const auto start = Clock::now();
    Report r;
    r.claim_id = "conj7";
    r.parameters = {{"k", k}, {"t", t}};
    const std::uint64_t n = binom(t, k);
    const std::uint64_t expected = up_set_size(t, k);
    r.expected = {{"f", expected}};

    SearchConfig cfg;
    cfg.n = n;
    cfg.k = k;
    const SearchOutcome res = f_min(cfg);
    const bool level_among = witnesses_contain(res, all_ksets(t, k));
    r.computed = {{"f", res.minimum},
                  {"complete", res.complete},
                  {"witness_classes", res.witnesses.size()},
                  {"full_level_among_witnesses", level_among},
                  {"nodes", res.nodes_explored}};
    r.pass = res.complete && res.minimum == expected && level_among;
    if (k == 1) r.notes = "trivial: any n singletons generate exactly 2^n - 1 sets";
    r.runtime_ms = ms_since(start);
    return r;
}

std::vector<Report> check_conjecture8(int k, int n_max) {
    std::vector<Report> out;
    for (int n = 1; n <= n_max; ++n) {
        const auto start = Clock::now();
        Report r;
        r.claim_id = "conj8";
        r.parameters = {{"k", k}, {"n", n}};
        const Family seg = initial_segment(OrderKind::MaxLex, k, static_cast<std::uint64_t>(n));
        const std::uint64_t expected = close_size(seg);
        r.expected = {{"maxlex_closure", expected}};

        SearchConfig cfg;
        cfg.n = static_cast<std::uint64_t>(n);
        cfg.k = k;
        const SearchOutcome res = f_min(cfg);
        r.computed = {{"f", res.minimum}, {"complete", res.complete}, {"nodes", res.nodes_explored}};
        r.pass = res.complete && res.minimum == expected;
        if (res.complete && res.minimum < expected && !res.witnesses.empty()) {
            r.computed["refutation_witness"] = family_json(res.witnesses.front());
            r.notes = "family below the max-lex segment closure; dumped as witness";
        }
        if (k == 1) r.notes = "trivial: any n singletons generate exactly 2^n - 1 sets";
        r.runtime_ms = ms_since(start);
        out.push_back(std::move(r));
    }
    return out;
}

Report check_prop9(int k, int ground_cap_override) {
    const auto start = Clock::now();
    Report r;
    r.claim_id = "prop9";
    if (k < 1 || k > 4) throw std::domain_error("prop9 enumeration is feasible for k <= 4");

    std::uint64_t families = 0;
    std::uint64_t violations = 0;
    nlohmann::json first_violation;
    int max_b = 0;

    const std::uint64_t l_max = binom(k + 1, 2);  // exclusive
    for (std::uint64_t l = 1; l < l_max; ++l) {
        const int cap = ground_cap_override > 0
                            ? ground_cap_override
                            : std::min<int>(static_cast<int>(l) * k, 2 * k + 3);
        enumerate_families(k, static_cast<std::size_t>(l), cap, [&](const std::vector<std::uint64_t>& members) {
            ++families;
            // b: (k+1)-sets with at least k of their k-subsets present; every
            // such set is a union of two members.
            std::vector<std::uint64_t> candidates;
            for (std::size_t i = 0; i < members.size(); ++i)
                for (std::size_t j = i + 1; j < members.size(); ++j) {
                    const std::uint64_t u = members[i] | members[j];
                    if (std::popcount(u) == k + 1 &&
                        std::find(candidates.begin(), candidates.end(), u) == candidates.end())
                        candidates.push_back(u);
                }
            int b = 0;
            for (std::uint64_t cset : candidates) {
                int inside = 0;
                for (std::uint64_t mem : members)
                    if ((mem & ~cset) == 0) ++inside;
                if (inside >= k) ++b;
            }
            max_b = std::max(max_b, b);
            const std::int64_t rhs = static_cast<std::int64_t>(b) * k - static_cast<std::int64_t>(binom(b, 2));
            if (static_cast<std::int64_t>(l) < rhs) {
                ++violations;
                if (first_violation.is_null()) {
                    nlohmann::json sets = nlohmann::json::array();
                    for (std::uint64_t w : members) sets.push_back(ElementSet::from_bits(w).elements());
                    first_violation = {{"l", l}, {"b", b}, {"family", sets}};
                }
            }
        });
    }
    r.parameters = {{"k", k},
                    {"l_range", "0.." + std::to_string(l_max - 1)},
                    {"ground_cap", ground_cap_override > 0 ? ground_cap_override : 2 * k + 3}};
    r.expected = {{"violations", 0}};
    r.computed = {{"violations", violations}, {"families_checked", families}, {"max_b", max_b}};
    if (!first_violation.is_null()) r.computed["first_violation"] = first_violation;
    r.pass = violations == 0;
    r.notes = "l = 0 holds trivially (b = 0); labeled enumeration covers every isomorphism class";
    r.runtime_ms = ms_since(start);
    return r;
}

std::vector<Report> check_lemma_properties(std::uint64_t trials, std::uint64_t seed, std::uint64_t kk_trials) {
    if (trials < 1) throw std::domain_error("lemma property suite needs at least one trial");
    if (kk_trials == 0) kk_trials = 2 * trials;
    std::vector<Report> out;

    // Closure growth from ground size, plus the distinguishing-set witness.
    {
        const auto start = Clock::now();
        std::mt19937_64 rng(seed);
        std::uint64_t violations = 0;
        std::string first;
        for (std::uint64_t trial = 0; trial < trials; ++trial) {
            const int k = std::uniform_int_distribution<int>(1, 4)(rng);
            const int g = std::uniform_int_distribution<int>(k, 12)(rng);
            const std::uint64_t max_n = std::min<std::uint64_t>(binom(g, k), 10);
            const std::size_t n =
                static_cast<std::size_t>(std::uniform_int_distribution<std::uint64_t>(1, max_n)(rng));
            const Family f = random_family(rng, k, g, n);
            const int ground = f.ground().cardinality();
            const int s = ground / k;
            if (s < 1) continue;
            bool ok = close_size(f) >= pow2(s) - 1;
            if (ok) {
                const ElementSet witness = distinguishing_set(f, s);
                // Every nonempty subset of the witness must be a closure trace.
                const ClosureFamily cl = close(f);
                std::vector<bool> seen(static_cast<std::size_t>(pow2(witness.cardinality())), false);
                for (const ElementSet& member : cl.members) {
                    std::uint64_t packed = 0;
                    int bit = 0;
                    for (int x : witness.elements()) {
                        if (member.contains(x)) packed |= std::uint64_t{1} << bit;
                        ++bit;
                    }
                    seen[static_cast<std::size_t>(packed)] = true;
                }
                for (std::size_t i = 1; i < seen.size() && ok; ++i) ok = seen[i];
            }
            if (!ok) {
                ++violations;
                if (first.empty()) first = "trial " + std::to_string(trial) + ": " + f.format();
            }
        }
        Report r;
        r.claim_id = "lemma3";
        r.parameters = {{"trials", trials}, {"seed", seed}};
        r.expected = {{"violations", 0}};
        r.computed = {{"violations", violations}};
        r.pass = violations == 0;
        r.notes = first;
        r.runtime_ms = ms_since(start);
        out.push_back(std::move(r));
    }

    // Blocker-count bound from element degree.
    {
        const auto start = Clock::now();
        std::mt19937_64 rng(seed + 1);
        std::uint64_t violations = 0, applicable = 0;
        std::string first;
        for (std::uint64_t trial = 0; trial < trials; ++trial) {
            const int k = std::uniform_int_distribution<int>(2, 4)(rng);
            const int g = std::uniform_int_distribution<int>(k, 12)(rng);
            const std::uint64_t max_n = std::min<std::uint64_t>(binom(g, k), 12);
            const std::size_t n =
                static_cast<std::size_t>(std::uniform_int_distribution<std::uint64_t>(1, max_n)(rng));
            const Family f = random_family(rng, k, g, n);
            const std::vector<int> ground = f.ground().elements();
            const int x = ground[std::uniform_int_distribution<std::size_t>(0, ground.size() - 1)(rng)];
            const int gsize = f.ground().cardinality();
            const std::uint64_t denom = binom(gsize, k - 2);
            const std::uint64_t s = f.degree(x) / denom;
            if (s < 1) continue;
            ++applicable;
            const std::uint64_t bound = pow2(gsize - static_cast<int>(std::min<std::uint64_t>(s, 63)));
            if (blockers(f, x).count > bound) {
                ++violations;
                if (first.empty()) first = "trial " + std::to_string(trial) + " x=" + std::to_string(x) + ": " + f.format();
            }
        }
        Report r;
        r.claim_id = "lemma4";
        r.parameters = {{"trials", trials}, {"seed", seed}};
        r.expected = {{"violations", 0}};
        r.computed = {{"violations", violations}, {"applicable", applicable}};
        r.pass = violations == 0;
        r.notes = first;
        r.runtime_ms = ms_since(start);
        out.push_back(std::move(r));
    }

    // Union-extension growth factor.
    {
        const auto start = Clock::now();
        std::mt19937_64 rng(seed + 2);
        std::uint64_t violations = 0;
        std::string first;
        for (std::uint64_t trial = 0; trial < trials; ++trial) {
            const int k = std::uniform_int_distribution<int>(1, 4)(rng);
            const int g = std::uniform_int_distribution<int>(k, 10)(rng);
            const std::uint64_t max_n = std::min<std::uint64_t>(binom(g, k), 8);
            const std::size_t n =
                static_cast<std::size_t>(std::uniform_int_distribution<std::uint64_t>(1, max_n)(rng));
            const Family f = random_family(rng, k, g, n);
            const std::vector<ElementSet> h = close(f).members;
            // A set with one label beyond the ground is never inside the union.
            ElementSet a{g + 1};
            for (int x = 1; x <= g; ++x)
                if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) a.add(x);
            try {
                extend_count(h, a);
            } catch (const std::logic_error&) {
                ++violations;
                if (first.empty()) first = "trial " + std::to_string(trial) + " A=" + a.to_string() + ": " + f.format();
            }
        }
        Report r;
        r.claim_id = "lemma5";
        r.parameters = {{"trials", trials}, {"seed", seed}};
        r.expected = {{"violations", 0}};
        r.computed = {{"violations", violations}};
        r.pass = violations == 0;
        r.notes = first;
        r.runtime_ms = ms_since(start);
        out.push_back(std::move(r));
    }

    // Shadow minimality of lex segments, with equality on the segments.
    {
        const auto start = Clock::now();
        std::mt19937_64 rng(seed + 3);
        std::uint64_t violations = 0, segment_trials = 0;
        std::string first;
        for (std::uint64_t trial = 0; trial < kk_trials; ++trial) {
            const int p = std::uniform_int_distribution<int>(2, 10)(rng);
            const int rr = std::uniform_int_distribution<int>(1, std::min(4, p - 1))(rng);
            const std::uint64_t m = std::uniform_int_distribution<std::uint64_t>(1, binom(p, rr))(rng);
            const std::uint64_t floor_val = kk_min_upper_shadow(m, rr, p);
            bool ok = true;
            if (trial % 4 == 0) {
                ++segment_trials;
                const Family seg = initial_segment(OrderKind::Lex, rr, m, p);
                ok = upper_shadow(UniformFamily::from_family(seg, p)).size() == floor_val;
            } else {
                const Family f = random_family(rng, rr, p, static_cast<std::size_t>(m));
                ok = upper_shadow(UniformFamily::from_family(f, p)).size() >= floor_val;
            }
            if (!ok) {
                ++violations;
                if (first.empty())
                    first = "trial " + std::to_string(trial) + " p=" + std::to_string(p) + " r=" + std::to_string(rr) +
                            " m=" + std::to_string(m);
            }
        }
        Report r;
        r.claim_id = "kruskal_katona";
        r.parameters = {{"trials", kk_trials}, {"seed", seed}, {"p_max", 10}};
        r.expected = {{"violations", 0}};
        r.computed = {{"violations", violations}, {"segment_equality_trials", segment_trials}};
        r.pass = violations == 0;
        r.notes = first;
        r.runtime_ms = ms_since(start);
        out.push_back(std::move(r));
    }

    return out;
}

}  // namespace ucf
