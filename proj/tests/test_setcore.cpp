#include <doctest.h>

#include <random>
#include <sstream>

#include "ucf/canonical.hpp"
#include "ucf/constructions.hpp"
#include "ucf/family.hpp"

using namespace ucf;

TEST_SUITE_BEGIN("setcore");

TEST_CASE("element set basics") {
    ElementSet s{2, 5, 64};
    CHECK(s.cardinality() == 3);
    CHECK(s.contains(5));
    CHECK(!s.contains(3));
    CHECK(s.min_element() == 2);
    CHECK(s.max_element() == 64);
    CHECK(s.elements() == std::vector<int>{2, 5, 64});
    CHECK(s.to_string() == "{2,5,64}");

    CHECK_THROWS_AS(s.add(0), std::out_of_range);
    CHECK_THROWS_AS(s.add(65), std::out_of_range);
    CHECK_THROWS_AS(static_cast<void>(ElementSet{}.min_element()), std::domain_error);

    CHECK(ElementSet::full(4) == ElementSet{1, 2, 3, 4});
    CHECK((ElementSet{1, 2} | ElementSet{2, 3}) == ElementSet{1, 2, 3});
    CHECK((ElementSet{1, 2} & ElementSet{2, 3}) == ElementSet{2});
    CHECK((ElementSet{1, 2} - ElementSet{2, 3}) == ElementSet{1});
    CHECK((ElementSet{1, 2} ^ ElementSet{2, 3}) == ElementSet{1, 3});
    CHECK(ElementSet{1, 2}.subset_of(ElementSet{1, 2, 3}));
    CHECK(!ElementSet{1, 4}.subset_of(ElementSet{1, 2, 3}));
}

TEST_CASE("family construction invariants") {
    CHECK_THROWS_AS(Family(0), std::domain_error);
    Family f(2);
    f.push_back_checked(ElementSet{1, 2});
    CHECK_THROWS_AS(f.push_back_checked(ElementSet{1, 2}), std::domain_error);  // duplicate
    CHECK_THROWS_AS(f.push_back_checked(ElementSet{1, 2, 3}), std::domain_error);  // wrong size
    f.push_back_checked(ElementSet{2, 7});
    CHECK(f.ground() == ElementSet{1, 2, 7});
}

TEST_CASE("family text format") {
    const std::string text = "# comment\n1 2\n\n2 3\n3 4\n";
    const Family f = Family::parse_string(text);
    CHECK(f.k() == 2);
    CHECK(f.size() == 3);
    CHECK(f.ground() == ElementSet{1, 2, 3, 4});

    // round-trip
    CHECK(Family::parse_string(f.format()) == f);

    SUBCASE("duplicate line is an error with its line number") {
        try {
            Family::parse_string("1 2\n2 3\n1 2\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 3);
        }
    }
    SUBCASE("nonuniform sizes rejected") {
        CHECK_THROWS_AS(Family::parse_string("1 2\n1 2 3\n"), ParseError);
    }
    SUBCASE("labels outside [1,64] rejected") {
        CHECK_THROWS_AS(Family::parse_string("0 2\n"), ParseError);
        CHECK_THROWS_AS(Family::parse_string("1 65\n"), ParseError);
    }
    SUBCASE("non-numeric junk rejected") {
        CHECK_THROWS_AS(Family::parse_string("1 x\n"), ParseError);
    }
    SUBCASE("empty input rejected") {
        CHECK_THROWS_AS(Family::parse_string("# nothing\n"), ParseError);
    }
}

TEST_CASE("degree") {
    const Family level43 = all_ksets(4, 3);
    CHECK(level43.degree(1) == 3);  // C(3,2) members of [4]^(3) contain 1

    const Family single(2, {ElementSet{1, 2}});
    CHECK(single.degree(1) == 1);

    const Family chain(2, {ElementSet{1, 2}, ElementSet{2, 3}, ElementSet{3, 4}});
    CHECK(chain.degree(2) == 2);
    CHECK_THROWS_AS(static_cast<void>(chain.degree(9)), std::domain_error);
}

TEST_CASE("degree sums to n*k") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const int k = std::uniform_int_distribution<int>(1, 4)(rng);
        const int g = std::uniform_int_distribution<int>(k, 10)(rng);
        Family f(k);
        for (int tries = 0; tries < 12 && f.size() < 6; ++tries) {
            ElementSet s;
            while (s.cardinality() < k) s.add(std::uniform_int_distribution<int>(1, g)(rng));
            if (!f.contains_member(s)) f.push_back_checked(s);
        }
        std::uint64_t total = 0;
        for (int x : f.ground().elements()) total += f.degree(x);
        CHECK(total == f.size() * static_cast<std::size_t>(k));
    }
}

TEST_CASE("canonicalize") {
    SUBCASE("relabels to an initial segment") {
        const Family f(2, {ElementSet{2, 5}});
        CHECK(canonicalize(f).family == Family(2, {ElementSet{1, 2}}));
    }
    SUBCASE("two-edge paths coincide") {
        const Family a(2, {ElementSet{1, 2}, ElementSet{2, 3}});
        const Family b(2, {ElementSet{4, 7}, ElementSet{7, 9}});
        CHECK(canonicalize(a) == canonicalize(b));
        CHECK(is_isomorphic(a, b));
    }
    SUBCASE("matching and path differ") {
        const Family a(2, {ElementSet{1, 2}, ElementSet{3, 4}});
        const Family b(2, {ElementSet{1, 2}, ElementSet{2, 3}});
        CHECK(canonicalize(a) != canonicalize(b));
        CHECK(!is_isomorphic(a, b));
    }
    SUBCASE("ground over the cap is a capacity error") {
        Family f(1);
        for (int i = 1; i <= 13; ++i) f.push_back_checked(ElementSet{i});
        CHECK_THROWS_AS(canonicalize(f), CapacityError);
        CHECK(canonicalize(f, 13).family.size() == 13);
    }
}

TEST_CASE("canonical form is relabeling-invariant") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        const int k = std::uniform_int_distribution<int>(1, 3)(rng);
        const int g = std::uniform_int_distribution<int>(k, 7)(rng);
        Family f(k);
        for (int tries = 0; tries < 10 && f.size() < 5; ++tries) {
            ElementSet s;
            while (s.cardinality() < k) s.add(std::uniform_int_distribution<int>(1, g)(rng));
            if (!f.contains_member(s)) f.push_back_checked(s);
        }
        // random relabeling into [1,12]
        std::vector<int> fresh(12);
        for (int i = 0; i < 12; ++i) fresh[static_cast<std::size_t>(i)] = i + 1;
        std::shuffle(fresh.begin(), fresh.end(), rng);
        Family g2(k);
        for (const ElementSet& s : f.sets()) {
            ElementSet t;
            for (int x : s.elements()) t.add(fresh[static_cast<std::size_t>(x - 1)]);
            g2.push_back_checked(t);
        }
        CHECK(canonicalize(f) == canonicalize(g2));
    }
}

TEST_SUITE_END();
