#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ucf/binomial.hpp"
#include "ucf/orders.hpp"
#include "ucf/shadows.hpp"

using namespace ucf;

namespace {

UniformFamily make(int r, int p, std::vector<ElementSet> members) {
    return UniformFamily(r, p, std::move(members));
}

UniformFamily random_uniform(std::mt19937_64& rng, int r, int p, std::size_t m) {
    std::vector<std::uint64_t> level = oracle::level_masks(p, r);
    std::shuffle(level.begin(), level.end(), rng);
    level.resize(std::min(m, level.size()));
    std::vector<ElementSet> members;
    for (std::uint64_t w : level) members.push_back(ElementSet::from_bits(w));
    return UniformFamily(r, p, std::move(members));
}

}  // namespace

TEST_SUITE_BEGIN("shadows");

TEST_CASE("lower shadow") {
    CHECK(lower_shadow(make(3, 3, {ElementSet{1, 2, 3}})).members ==
          std::vector<ElementSet>{ElementSet{1, 2}, ElementSet{1, 3}, ElementSet{2, 3}});
    CHECK(lower_shadow(make(2, 3, {ElementSet{1, 2}, ElementSet{1, 3}})).members ==
          std::vector<ElementSet>{ElementSet{1}, ElementSet{2}, ElementSet{3}});
    CHECK(lower_shadow(make(2, 4, {})).members.empty());
    CHECK_THROWS_AS(lower_shadow(make(0, 3, {})), std::domain_error);
}

TEST_CASE("upper shadow") {
    CHECK(upper_shadow(make(1, 3, {ElementSet{1}})).members ==
          std::vector<ElementSet>{ElementSet{1, 2}, ElementSet{1, 3}});
    CHECK(iterated_upper_shadow(make(2, 4, {ElementSet{1, 2}}), 2).members ==
          std::vector<ElementSet>{ElementSet{1, 2, 3, 4}});
    SUBCASE("full level maps to full level") {
        const Family level = initial_segment(OrderKind::Colex, 2, binom(4, 2), 4);
        const UniformFamily shadow = upper_shadow(UniformFamily::from_family(level, 4));
        CHECK(shadow.size() == binom(4, 3));
    }
    CHECK_THROWS_AS(upper_shadow(make(3, 3, {ElementSet{1, 2, 3}})), std::domain_error);
}

TEST_CASE("total upper shadow counts") {
    CHECK(total_upper_shadow_count(make(2, 4, {ElementSet{1, 2}})) == 4);
    CHECK(total_upper_shadow_count(make(1, 3, {ElementSet{1}, ElementSet{2}})) == 6);
    CHECK(total_upper_shadow_count(make(2, 4, {})) == 0);

    SUBCASE("counting modes agree") {
        std::mt19937_64 rng(41);
        for (int trial = 0; trial < 200; ++trial) {
            const int p = std::uniform_int_distribution<int>(2, 10)(rng);
            const int r = std::uniform_int_distribution<int>(1, p)(rng);
            const std::size_t m = std::uniform_int_distribution<std::size_t>(0, 12)(rng);
            const UniformFamily f = random_uniform(rng, r, p, m);
            if (f.members.size() > 20) continue;
            CHECK(total_upper_shadow_count(f, CountMode::InclusionExclusion) ==
                  total_upper_shadow_count(f, CountMode::Direct));
        }
    }
    SUBCASE("count matches the materialized members") {
        std::mt19937_64 rng(43);
        for (int trial = 0; trial < 50; ++trial) {
            const int p = std::uniform_int_distribution<int>(2, 8)(rng);
            const int r = std::uniform_int_distribution<int>(1, p)(rng);
            const UniformFamily f = random_uniform(rng, r, p, 5);
            CHECK(total_upper_shadow_count(f) == total_upper_shadow_members(f).size());
        }
    }
    SUBCASE("monotone under family inclusion") {
        std::mt19937_64 rng(47);
        for (int trial = 0; trial < 100; ++trial) {
            const int p = std::uniform_int_distribution<int>(3, 9)(rng);
            const int r = std::uniform_int_distribution<int>(1, p - 1)(rng);
            UniformFamily big = random_uniform(rng, r, p, 8);
            if (big.members.empty()) continue;
            std::vector<ElementSet> sub(big.members.begin(),
                                        big.members.begin() + static_cast<std::ptrdiff_t>(big.members.size() / 2));
            CHECK(total_upper_shadow_count(UniformFamily(r, p, sub)) <= total_upper_shadow_count(big));
        }
    }
}

TEST_CASE("complement transform") {
    CHECK(complement_transform_set(ElementSet{1, 2}, 4) == ElementSet{1, 2});
    CHECK(complement_transform_set(ElementSet{1}, 3) == ElementSet{1, 2});

    SUBCASE("involution") {
        std::mt19937_64 rng(53);
        for (int trial = 0; trial < 100; ++trial) {
            const int p = std::uniform_int_distribution<int>(1, 10)(rng);
            const int r = std::uniform_int_distribution<int>(0, p)(rng);
            const UniformFamily f = random_uniform(rng, r, p, 6);
            CHECK(complement_transform(complement_transform(f)) == f);
        }
    }
    SUBCASE("lex segments map to colex segments of the complement level") {
        for (int p = 2; p <= 8; ++p)
            for (int r = 1; r < p; ++r)
                for (std::uint64_t m = 1; m <= binom(p, r); ++m) {
                    const Family lexseg = initial_segment(OrderKind::Lex, r, m, p);
                    const UniformFamily image = complement_transform(UniformFamily::from_family(lexseg, p));
                    const Family colexseg = initial_segment(OrderKind::Colex, p - r, m, p);
                    UniformFamily expected = UniformFamily::from_family(colexseg, p);
                    CHECK(image == expected);
                }
    }
}

TEST_CASE("upper shadows of lex segments are lex segments") {
    for (int p = 2; p <= 9; ++p)
        for (int r = 1; r < p; ++r)
            for (std::uint64_t m = 1; m <= binom(p, r); ++m) {
                const Family seg = initial_segment(OrderKind::Lex, r, m, p);
                const UniformFamily up = upper_shadow(UniformFamily::from_family(seg, p));
                const Family expected = initial_segment(OrderKind::Lex, r + 1, up.size(), p);
                CHECK(up == UniformFamily::from_family(expected, p));
            }
}

TEST_CASE("shadow duality through the complement transform") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 150; ++trial) {
        const int p = std::uniform_int_distribution<int>(2, 9)(rng);
        const int r = std::uniform_int_distribution<int>(1, p - 1)(rng);
        const UniformFamily f = random_uniform(rng, r, p, 6);
        if (f.members.empty()) continue;
        CHECK(complement_transform(upper_shadow(f)) == lower_shadow(complement_transform(f)));
    }
}

TEST_CASE("kk_min_upper_shadow") {
    CHECK(kk_min_upper_shadow(1, 1, 4) == 3);
    CHECK(kk_min_upper_shadow(binom(6, 2), 2, 6) == binom(6, 3));
    CHECK(kk_min_upper_shadow(2, 2, 4) == 3);
    CHECK(kk_min_upper_shadow(0, 2, 5) == 0);
    CHECK_THROWS_AS(kk_min_upper_shadow(7, 2, 4), std::domain_error);

    SUBCASE("is a lower bound, exact on lex segments") {
        std::mt19937_64 rng(61);
        for (int trial = 0; trial < 300; ++trial) {
            const int p = std::uniform_int_distribution<int>(2, 10)(rng);
            const int r = std::uniform_int_distribution<int>(1, std::min(4, p - 1))(rng);
            const std::uint64_t m = std::uniform_int_distribution<std::uint64_t>(1, binom(p, r))(rng);
            const std::uint64_t floor_val = kk_min_upper_shadow(m, r, p);
            if (trial % 3 == 0) {
                const Family seg = initial_segment(OrderKind::Lex, r, m, p);
                CHECK(upper_shadow(UniformFamily::from_family(seg, p)).size() == floor_val);
            } else {
                const UniformFamily f = random_uniform(rng, r, p, static_cast<std::size_t>(m));
                CHECK(upper_shadow(f).size() >= floor_val);
            }
        }
    }
}

TEST_CASE("delta proportions") {
    for (int t = 2; t <= 10; ++t) CHECK(delta_proportion(1, 3, t) == Rational(1, 4));
    CHECK(delta_proportion(0, 3, 6) == Rational(0, 1));

    SUBCASE("full segment covers everything of size >= k-1") {
        for (int t = 3; t <= 8; ++t) {
            std::uint64_t expect = 0;
            for (int i = 2; i <= t; ++i) expect += binom(t, i);
            CHECK(delta_proportion(binom(t, 2), 3, t) == Rational(expect, pow2(t)));
        }
    }
    SUBCASE("monotone in the segment length") {
        const int t = 7, k = 3;
        Rational prev(0, 1);
        for (std::uint64_t s = 1; s <= binom(t, k - 1); ++s) {
            const Rational cur = delta_proportion(s, k, t);
            CHECK(prev < cur);
            prev = cur;
        }
    }
}

TEST_SUITE_END();
