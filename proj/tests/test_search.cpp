#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "oracles.hpp"
#include "ucf/binomial.hpp"
#include "ucf/closure.hpp"
#include "ucf/constructions.hpp"
#include "ucf/search.hpp"

using namespace ucf;

namespace {

SearchConfig base(std::uint64_t n, int k) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.k = k;
    return cfg;
}

std::set<std::vector<std::uint64_t>> witness_keys(const SearchOutcome& out) {
    std::set<std::vector<std::uint64_t>> keys;
    for (const Family& w : out.witnesses)
        keys.insert(canonical_key(canonicalize(w, std::max(12, w.ground().cardinality()))));
    return keys;
}

struct TempPath {
    std::string path;
    explicit TempPath(const std::string& name) : path(name) { std::remove(path.c_str()); }
    ~TempPath() { std::remove(path.c_str()); }
};

}  // namespace

TEST_SUITE_BEGIN("search");

TEST_CASE("named small minima") {
    SUBCASE("single set") {
        const SearchOutcome out = f_min(base(1, 4));
        CHECK(out.minimum == 1);
        REQUIRE(out.witnesses.size() == 1);
        CHECK(out.witnesses[0] == Family(4, {ElementSet::full(4)}));
    }
    SUBCASE("three 2-sets: the triangle") {
        const SearchOutcome out = f_min(base(3, 2));
        CHECK(out.minimum == 4);
        REQUIRE(out.witnesses.size() == 1);
        CHECK(is_isomorphic(out.witnesses[0], all_ksets(3, 2)));
    }
    SUBCASE("four 3-sets: the full level on [4]") {
        const SearchOutcome out = f_min(base(4, 3));
        CHECK(out.minimum == 5);
        REQUIRE(out.witnesses.size() == 1);
        CHECK(is_isomorphic(out.witnesses[0], all_ksets(4, 3)));
    }
    SUBCASE("infeasible parameters") {
        SearchConfig cfg = base(7, 2);
        cfg.ground_cap = 4;  // C(4,2) = 6 < 7
        CHECK_THROWS_AS(f_min(cfg), std::domain_error);
    }
}

TEST_CASE("search equals plain enumeration over a fixed ground") {
    for (int k = 1; k <= 3; ++k)
        for (std::size_t n = 1; n <= 6; ++n) {
            if (binom(5, k) < n) continue;
            const oracle::NaiveMin expect = oracle::naive_fmin(n, k, 5);
            const SearchOutcome got = f_min(base(n, k));
            CHECK(got.complete);
            CHECK(got.minimum == expect.minimum);
            // The oracle only sees families inside [5]; every optimal class it
            // finds must be among the search's witnesses.
            const auto keys = witness_keys(got);
            for (const auto& key : expect.witness_classes) CHECK(keys.count(key) == 1);
        }

    SUBCASE("wider ground for k = 2") {
        for (std::size_t n = 7; n <= 8; ++n) {
            const oracle::NaiveMin expect = oracle::naive_fmin(n, 2, 6);
            const SearchOutcome got = f_min(base(n, 2));
            CHECK(got.minimum == expect.minimum);
            const auto keys = witness_keys(got);
            for (const auto& key : expect.witness_classes) CHECK(keys.count(key) == 1);
        }
    }
}

TEST_CASE("every witness reproduces the minimum") {
    for (const auto& [n, k] : std::vector<std::pair<std::uint64_t, int>>{{5, 2}, {6, 2}, {5, 3}, {6, 3}}) {
        const SearchOutcome out = f_min(base(n, k));
        CHECK(!out.witnesses.empty());
        for (const Family& w : out.witnesses) {
            CHECK(w.size() == n);
            CHECK(w.k() == k);
            CHECK(close_size(w) == out.minimum);
        }
    }
}

TEST_CASE("pruning rules only change node counts") {
    for (int k = 1; k <= 3; ++k)
        for (std::uint64_t n = 1; n <= 5; ++n) {
            const SearchOutcome reference = f_min(base(n, k));
            const auto ref_keys = witness_keys(reference);

            SearchConfig no_bound = base(n, k);
            no_bound.prune_bound = false;
            SearchConfig no_ground = base(n, k);
            no_ground.prune_ground = false;
            SearchConfig nothing = base(n, k);
            nothing.prune_bound = false;
            nothing.prune_ground = false;
            SearchConfig canon = base(n, k);
            canon.canonicity_interval = 1;

            for (const SearchConfig& cfg : {no_bound, no_ground, nothing, canon}) {
                const SearchOutcome out = f_min(cfg);
                CHECK(out.complete);
                CHECK(out.minimum == reference.minimum);
                CHECK(witness_keys(out) == ref_keys);
            }
        }
}

TEST_CASE("colex seeding matches max-lex seeding") {
    for (std::uint64_t n = 1; n <= 6; ++n) {
        SearchConfig cfg = base(n, 2);
        cfg.seed_kind = SeedKind::ColexSegment;
        CHECK(f_min(cfg).minimum == f_min(base(n, 2)).minimum);
    }
}

TEST_CASE("closed form agreement for k = 2") {
    for (std::uint64_t n = 1; n <= 6; ++n)
        CHECK(f_min(base(n, 2)).minimum == *theorem2_values(n).f);
}

TEST_CASE("explicit seed below the minimum is refused at the end") {
    SearchConfig cfg = base(3, 2);
    cfg.seed_kind = SeedKind::ExplicitValue;
    cfg.seed_value = 3;  // true minimum is 4
    CHECK_THROWS_AS(f_min(cfg), std::domain_error);
    cfg.seed_value = 4;
    CHECK(f_min(cfg).minimum == 4);
}

TEST_CASE("witness cap truncates the list but keeps the class count") {
    SearchConfig cfg = base(6, 3);
    cfg.witness_cap = 1;
    const SearchOutcome out = f_min(cfg);
    CHECK(out.witnesses.size() == 1);
    CHECK(out.witness_classes == 3);
    CHECK(out.witness_truncated);
    const SearchOutcome full = f_min(base(6, 3));
    CHECK(full.witness_classes == 3);
    CHECK(!full.witness_truncated);
}

TEST_CASE("node budget yields an explicit incomplete outcome") {
    SearchConfig cfg = base(6, 3);
    cfg.node_budget = 50;
    const SearchOutcome out = f_min(cfg);
    CHECK(!out.complete);
    CHECK(out.nodes_explored <= 50);
}

TEST_CASE("parallel run matches serial") {
    for (int workers : {2, 4}) {
        SearchConfig cfg = base(6, 3);
        cfg.parallel_width = workers;
        const SearchOutcome par = f_min(cfg);
        const SearchOutcome ser = f_min(base(6, 3));
        CHECK(par.minimum == ser.minimum);
        CHECK(witness_keys(par) == witness_keys(ser));
    }
}

TEST_CASE("checkpointing") {
    SUBCASE("interrupt and resume reproduce the uninterrupted outcome") {
        TempPath tmp("test_ckpt_resume.txt");
        SearchConfig interrupted = base(6, 3);
        interrupted.node_budget = 300;
        interrupted.checkpoint_path = tmp.path;
        const SearchOutcome partial = f_min(interrupted);
        CHECK(!partial.complete);

        SearchConfig resumed = base(6, 3);
        resumed.checkpoint_path = tmp.path;
        const SearchOutcome final_run = f_min(resumed);
        const SearchOutcome reference = f_min(base(6, 3));
        CHECK(final_run.complete);
        CHECK(final_run.minimum == reference.minimum);
        CHECK(witness_keys(final_run) == witness_keys(reference));
    }
    SUBCASE("completed branches are skipped on resume") {
        TempPath tmp("test_ckpt_skip.txt");
        SearchConfig cfg = base(5, 2);
        cfg.checkpoint_path = tmp.path;
        const SearchOutcome first = f_min(cfg);
        const SearchOutcome second = f_min(cfg);  // everything already done
        CHECK(second.minimum == first.minimum);
        CHECK(witness_keys(second) == witness_keys(first));
        CHECK(second.nodes_explored < first.nodes_explored);
    }
    SUBCASE("config mismatch is refused with a diff") {
        TempPath tmp("test_ckpt_mismatch.txt");
        SearchConfig cfg = base(4, 2);
        cfg.checkpoint_path = tmp.path;
        f_min(cfg);
        SearchConfig other = base(5, 2);
        other.checkpoint_path = tmp.path;
        CHECK_THROWS_WITH_AS(f_min(other), doctest::Contains("mismatch"), std::domain_error);
    }
    SUBCASE("an empty checkpoint file starts fresh") {
        TempPath tmp("test_ckpt_empty.txt");
        std::ofstream(tmp.path).close();
        SearchConfig cfg = base(3, 2);
        cfg.checkpoint_path = tmp.path;
        CHECK(f_min(cfg).minimum == 4);
    }
}

TEST_SUITE_END();
