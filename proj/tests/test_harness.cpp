#include <doctest.h>

#include "oracles.hpp"
#include "ucf/closure.hpp"
#include "ucf/constructions.hpp"
#include "ucf/harness.hpp"
#include "ucf/orders.hpp"

using namespace ucf;

TEST_SUITE_BEGIN("harness");

TEST_CASE("counterexample check") {
    const Report r = check_counterexample();
    CHECK(r.pass);
    CHECK(r.computed["maxlex_closure"] == 12);
    CHECK(r.computed["colex_closure"] == 13);

    SUBCASE("negative control: a perturbed right half changes the count") {
        Family perturbed = all_ksets(4, 3);
        perturbed.push_back_checked(ElementSet{1, 2, 5});
        perturbed.push_back_checked(ElementSet{1, 3, 5});
        perturbed.push_back_checked(ElementSet{2, 3, 5});
        const std::uint64_t size = close_size(perturbed);
        CHECK(size != 12);
        CHECK(size == oracle::brute_closure(perturbed).size());
    }
    SUBCASE("singletons below k are never closure members") {
        const auto [a, b] = counterexample_pair();
        CHECK(!closure_contains(b, ElementSet{5}));
        CHECK(!closure_contains(a, ElementSet{5}));
    }
}

TEST_CASE("theorem2 suite passes through n = 5") {
    const std::vector<Report> rs = check_theorem2(5);
    REQUIRE(rs.size() == 5);
    for (const Report& r : rs) {
        CAPTURE(r.parameters.dump());
        CHECK(r.pass);
    }
    // n = 2 is the known non-unique point: a perfect matching ties the path.
    const int expected_classes[] = {1, 2, 1, 1, 1};
    for (int n = 1; n <= 5; ++n)
        CHECK(rs[static_cast<std::size_t>(n - 1)].computed["witness_classes"] == expected_classes[n - 1]);
}

TEST_CASE("conjecture 7 smallest case") {
    const Report r = check_conjecture7(3, 4);
    CHECK(r.pass);
    CHECK(r.computed["f"] == 5);
}

TEST_CASE("conjecture 7 holds at every searchable corner") {
    // (k,t) pairs whose complete search stays in the millisecond range.
    for (const auto& [k, t] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 5}, {4, 5}}) {
        const Report r = check_conjecture7(k, t);
        CAPTURE(k);
        CAPTURE(t);
        CHECK(r.pass);
        CHECK(r.computed["f"] == up_set_size(t, k));
    }
}

TEST_CASE("conjecture 8 small grid") {
    for (const Report& r : check_conjecture8(2, 5)) CHECK(r.pass);
    const std::vector<Report> k3 = check_conjecture8(3, 7);
    for (const Report& r : k3) CHECK(r.pass);
    // at seven 3-sets the max-lex closure (12) is the exact minimum
    CHECK(k3.back().expected["maxlex_closure"] == 12);
    CHECK(k3.back().computed["f"] == 12);
}

TEST_CASE("proposition 9") {
    const Report r2 = check_prop9(2);
    CHECK(r2.pass);
    CHECK(r2.computed["violations"] == 0);

    SUBCASE("window widening leaves the verdict alone") {
        const Report wide = check_prop9(2, 2 * 2 + 4);
        CHECK(wide.pass == r2.pass);
        CHECK(wide.computed["violations"] == r2.computed["violations"]);
    }
}

TEST_CASE("lemma property suite") {
    const std::vector<Report> rs = check_lemma_properties(150, 2024);
    REQUIRE(rs.size() == 4);
    for (const Report& r : rs) {
        CAPTURE(r.claim_id);
        CHECK(r.pass);
        CHECK(r.computed["violations"] == 0);
    }

    SUBCASE("reports are reproducible from the seed") {
        const std::vector<Report> again = check_lemma_properties(150, 2024);
        for (std::size_t i = 0; i < rs.size(); ++i) {
            CHECK(rs[i].claim_id == again[i].claim_id);
            CHECK(rs[i].computed == again[i].computed);
            CHECK(rs[i].pass == again[i].pass);
        }
    }
    SUBCASE("different seeds still pass") {
        for (const Report& r : check_lemma_properties(60, 99)) CHECK(r.pass);
    }
}

TEST_CASE("report JSON shape") {
    const Report r = check_counterexample();
    const nlohmann::json j = to_json(r);
    CHECK(j.contains("claim_id"));
    CHECK(j.contains("parameters"));
    CHECK(j.contains("expected"));
    CHECK(j.contains("computed"));
    CHECK(j.contains("pass"));
    CHECK(j.contains("runtime_ms"));
    CHECK(j.contains("notes"));

    const nlohmann::json doc = reports_to_json({r}, 7, 1.5);
    CHECK(doc["run"]["seed"] == 7);
    CHECK(doc["run"]["all_pass"] == true);
    CHECK(doc["reports"].size() == 1);
}

TEST_SUITE_END();
