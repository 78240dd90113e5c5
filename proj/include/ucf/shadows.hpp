#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "ucf/element_set.hpp"
#include "ucf/family.hpp"

namespace ucf {

/// Exact nonnegative rational, always stored reduced.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    Rational() = default;
    Rational(std::uint64_t n, std::uint64_t d) : num(n), den(d) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        const std::uint64_t g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    bool operator==(const Rational&) const = default;
    [[nodiscard]] bool operator<(const Rational& o) const {
        return static_cast<unsigned __int128>(num) * o.den < static_cast<unsigned __int128>(o.num) * den;
    }
    [[nodiscard]] bool operator>(const Rational& o) const { return o < *this; }

    [[nodiscard]] std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }
};

/// An r-uniform family inside the universe [p]. Members are kept deduplicated
/// and sorted by bit pattern (equivalently, colex).
struct UniformFamily {
    int r = 0;
    int universe = 0;
    std::vector<ElementSet> members;

    UniformFamily(int r_, int universe_, std::vector<ElementSet> members_);

    [[nodiscard]] std::size_t size() const noexcept { return members.size(); }
    bool operator==(const UniformFamily&) const = default;

    /// View of a uniform Family as a UniformFamily in [p].
    static UniformFamily from_family(const Family& f, int universe);
};

/// All (r-1)-sets obtained by deleting one element from a member.
UniformFamily lower_shadow(const UniformFamily& f);

/// All (r+1)-sets obtained by adding one universe element to a member.
UniformFamily upper_shadow(const UniformFamily& f);

/// upper_shadow applied `times` times (0 returns the input).
UniformFamily iterated_upper_shadow(const UniformFamily& f, int times);

enum class CountMode { Auto, InclusionExclusion, Direct };

/// |U_F|: the number of subsets of [p], of any size, containing some member.
/// InclusionExclusion sums signed superset counts over the minimal members
/// (needs few members); Direct scans all 2^p subsets (needs small p).
std::uint64_t total_upper_shadow_count(const UniformFamily& f, CountMode mode = CountMode::Auto);

/// Materialized U_F; requires p small enough to enumerate.
std::vector<ElementSet> total_upper_shadow_members(const UniformFamily& f);

/// A -> g(A^c) with g(i) = p+1-i: an involution of P([p]) exchanging lex and
/// colex initial segments (of complementary cardinalities).
UniformFamily complement_transform(const UniformFamily& f);
ElementSet complement_transform_set(ElementSet a, int p);

/// |upper_shadow(I)| for I the size-m lex initial segment of [p]^(r): the
/// exact minimum of |upper_shadow| over all m-member r-uniform families.
std::uint64_t kk_min_upper_shadow(std::uint64_t m, int r, int p);

/// Proportion of P([t]) lying in the total upper shadow of the length-s lex
/// initial segment of [t]^(k-1), as an exact rational.
Rational delta_proportion(std::uint64_t s, int k, int t);

}  // namespace ucf
