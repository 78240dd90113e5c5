#include "ucf/constructions.hpp"

#include <cmath>
#include <stdexcept>

#include "ucf/binomial.hpp"
#include "ucf/orders.hpp"
#include "ucf/shadows.hpp"

namespace ucf {

std::string to_string(ConstructionKind k) {
    switch (k) {
        case ConstructionKind::AllKSets: return "all";
        case ConstructionKind::ColexSegment: return "colex";
        case ConstructionKind::MaxLexSegment: return "maxlex";
        case ConstructionKind::MinusColexStar: return "minus";
        case ConstructionKind::PlusPencil: return "plus";
    }
    return "?";
}

Family all_ksets(int t, int k) {
    if (k < 1 || t < k || t > ElementSet::max_label)
        throw std::domain_error("all_ksets needs 1 <= k <= t <= 64");
    return initial_segment(OrderKind::Colex, k, binom(t, k), t);
}

std::uint64_t up_set_size(int t, int k) {
    if (k < 1 || t < k || t > 63) throw std::domain_error("up_set_size needs 1 <= k <= t <= 63");
    std::uint64_t below = 0;
    for (int i = 0; i < k; ++i) below += binom(t, i);
    return pow2(t) - below;
}

Theorem2Values theorem2_values(std::uint64_t n) {
    if (n == 0) throw std::domain_error("theorem2_values needs n >= 1");
    // Least t with n <= C(t,2), seeded from the square root and adjusted.
    const auto pairs = [](std::uint64_t t) { return t * (t - 1) / 2; };
    std::uint64_t t = std::max<std::uint64_t>(
        2, static_cast<std::uint64_t>(std::sqrt(2.0 * static_cast<double>(n))));
    while (pairs(t) < n) ++t;
    while (t > 2 && pairs(t - 1) >= n) --t;
    const std::uint64_t r = pairs(t) - n;
    Theorem2Values out;
    out.t = static_cast<int>(t);
    out.r = r;
    if (t <= 63) out.f = pow2(static_cast<int>(t)) - pow2(static_cast<int>(r)) - t;
    return out;
}

int s_l(std::uint64_t l, int k) {
    if (k < 1) throw std::domain_error("s_l needs k >= 1");
    if (l >= binom(k + 1, 2))
        throw std::domain_error("s_l needs l < C(k+1,2) = " + std::to_string(binom(k + 1, 2)));
    int s = 0;
    while (l >= static_cast<std::uint64_t>(s + 1) * static_cast<std::uint64_t>(k) - binom(s + 1, 2)) ++s;
    return s;
}

namespace {

// Smallest t at which predicted = up_set_size - l - s_l holds and keeps
// holding up to t = 8 (brute-force closures; recomputed and asserted by the
// construction tests). At these parameters that is simply the smallest valid
// t, i.e. the accounting never missed in the tested window.
struct SafeT {
    int k;
    std::uint64_t l;
    int t0;
};
constexpr SafeT kMinusSafeT[] = {
    {2, 1, 3}, {2, 2, 3},
    {3, 1, 4}, {3, 2, 4}, {3, 3, 4}, {3, 4, 5}, {3, 5, 5},
    {4, 1, 5}, {4, 2, 5}, {4, 3, 5}, {4, 4, 5}, {4, 5, 6},
    {4, 6, 6}, {4, 7, 6}, {4, 8, 6}, {4, 9, 6},
};

}  // namespace

std::optional<int> minus_safe_t(int k, std::uint64_t l) {
    if (l == 0) return k;  // removing nothing: the formula is the up-set size
    for (const SafeT& e : kMinusSafeT)
        if (e.k == k && e.l == l) return e.t0;
    return std::nullopt;
}

Construction minus_construction(int t, int k, std::uint64_t l) {
    if (k < 1 || t < k || t > ElementSet::max_label)
        throw std::domain_error("minus construction needs 1 <= k <= t <= 64");
    if (l >= binom(k + 1, 2))
        throw std::domain_error("minus construction needs l < C(k+1,2) = " + std::to_string(binom(k + 1, 2)));
    if (l > binom(t - 1, k - 1))
        throw std::domain_error("minus construction needs l <= C(t-1,k-1) = " + std::to_string(binom(t - 1, k - 1)));
    if (l >= binom(t, k)) throw std::domain_error("minus construction would remove every set");

    ElementSet removed_mark;
    std::vector<ElementSet> removed;
    if (l > 0) {
        const Family lifted_base = initial_segment(OrderKind::Colex, k >= 2 ? k - 1 : 1, k >= 2 ? l : 0, t - 1);
        for (const ElementSet& s : lifted_base.sets()) {
            ElementSet lift = s;
            lift.add(t);
            removed.push_back(lift);
        }
    }
    Family fam(k);
    const Family level = all_ksets(t, k);
    for (const ElementSet& s : level.sets()) {
        bool drop = false;
        for (const ElementSet& r : removed)
            if (r == s) {
                drop = true;
                break;
            }
        if (drop) continue;
        fam.push_back_checked(s);
    }

    Construction out{ConstructionKind::MinusColexStar, t, k, l, std::move(fam), std::nullopt};
    if (t <= 63) {
        const std::optional<int> t0 = minus_safe_t(k, l);
        if (t0 && t >= *t0)
            out.predicted_size = up_set_size(t, k) - l - static_cast<std::uint64_t>(s_l(l, k));
    }
    return out;
}

Construction plus_construction(int t, int k, std::uint64_t l) {
    if (k < 2) throw std::domain_error("plus construction needs k >= 2");
    if (t < k || t + 1 > ElementSet::max_label)
        throw std::domain_error("plus construction needs k <= t and t+1 <= 64");
    if (l < 1 || l > static_cast<std::uint64_t>(t - k + 2))
        throw std::domain_error("plus construction needs 1 <= l <= t-k+2");

    Family fam = all_ksets(t, k);
    std::vector<ElementSet> stubs;
    for (std::uint64_t i = 1; i <= l; ++i) {
        ElementSet y = k >= 3 ? ElementSet::full(k - 2) : ElementSet();
        y.add(k - 2 + static_cast<int>(i));
        stubs.push_back(y);
        y.add(t + 1);
        fam.push_back_checked(y);
    }

    Construction out{ConstructionKind::PlusPencil, t, k, l, std::move(fam), std::nullopt};
    if (t <= 62)
        out.predicted_size =
            up_set_size(t, k) + total_upper_shadow_count(UniformFamily(k - 1, t, stubs));
    return out;
}

Construction segment_construction(ConstructionKind kind, int k, std::uint64_t n) {
    if (kind == ConstructionKind::ColexSegment)
        return Construction{kind, 0, k, 0, initial_segment(OrderKind::Colex, k, n), std::nullopt};
    if (kind == ConstructionKind::MaxLexSegment)
        return Construction{kind, 0, k, 0, initial_segment(OrderKind::MaxLex, k, n), std::nullopt};
    throw std::domain_error("segment_construction handles colex and maxlex kinds only");
}

std::pair<Family, Family> counterexample_pair() {
    return {initial_segment(OrderKind::MaxLex, 3, 7), initial_segment(OrderKind::Colex, 3, 7)};
}

}  // namespace ucf
