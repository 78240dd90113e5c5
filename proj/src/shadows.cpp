#include "ucf/shadows.hpp"

#include <algorithm>
#include <stdexcept>

#include "ucf/binomial.hpp"
#include "ucf/canonical.hpp"
#include "ucf/orders.hpp"

namespace ucf {

namespace {

std::vector<ElementSet> sorted_dedup(std::vector<ElementSet> v) {
    std::sort(v.begin(), v.end(), [](ElementSet a, ElementSet b) { return a.bits() < b.bits(); });
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Members with no proper subset among the others; supersets contribute
// nothing to a total upper shadow.
std::vector<ElementSet> minimal_members(const std::vector<ElementSet>& v) {
    std::vector<ElementSet> out;
    for (const ElementSet& a : v) {
        bool dominated = false;
        for (const ElementSet& b : v)
            if (b != a && b.subset_of(a)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(a);
    }
    return out;
}

}  // namespace

UniformFamily::UniformFamily(int r_, int universe_, std::vector<ElementSet> members_)
    : r(r_), universe(universe_), members(sorted_dedup(std::move(members_))) {
    if (universe < 0 || universe > ElementSet::max_label)
        throw std::domain_error("universe size outside [0,64]");
    if (r < 0 || r > universe) throw std::domain_error("uniform cardinality outside [0,universe]");
    const ElementSet full = ElementSet::full(universe);
    for (const ElementSet& m : members) {
        if (m.cardinality() != r)
            throw std::domain_error("member " + m.to_string() + " is not an " + std::to_string(r) + "-set");
        if (!m.subset_of(full))
            throw std::domain_error("member " + m.to_string() + " outside universe [" + std::to_string(universe) + "]");
    }
}

UniformFamily UniformFamily::from_family(const Family& f, int universe) {
    return UniformFamily(f.k(), universe, f.sets());
}

UniformFamily lower_shadow(const UniformFamily& f) {
    if (f.r < 1) throw std::domain_error("lower shadow requires r >= 1");
    std::vector<ElementSet> out;
    out.reserve(f.members.size() * static_cast<std::size_t>(f.r));
    for (const ElementSet& m : f.members)
        for (int x : m.elements()) {
            ElementSet s = m;
            s.remove(x);
            out.push_back(s);
        }
    return UniformFamily(f.r - 1, f.universe, std::move(out));
}

UniformFamily upper_shadow(const UniformFamily& f) {
    if (f.r >= f.universe) throw std::domain_error("upper shadow requires r <= p-1");
    const ElementSet full = ElementSet::full(f.universe);
    std::vector<ElementSet> out;
    for (const ElementSet& m : f.members)
        for (int x : (full - m).elements()) {
            ElementSet s = m;
            s.add(x);
            out.push_back(s);
        }
    return UniformFamily(f.r + 1, f.universe, std::move(out));
}

UniformFamily iterated_upper_shadow(const UniformFamily& f, int times) {
    if (times < 0) throw std::domain_error("iteration count must be nonnegative");
    UniformFamily cur = f;
    for (int i = 0; i < times; ++i) cur = upper_shadow(cur);
    return cur;
}

std::uint64_t total_upper_shadow_count(const UniformFamily& f, CountMode mode) {
    if (f.members.empty()) return 0;
    const std::vector<ElementSet> mins = minimal_members(f.members);

    const bool ie_ok = mins.size() <= 20;
    const bool direct_ok = f.universe <= 24;
    if (mode == CountMode::Auto) mode = ie_ok ? CountMode::InclusionExclusion : CountMode::Direct;

    if (mode == CountMode::InclusionExclusion) {
        if (!ie_ok)
            throw CapacityError("inclusion-exclusion over " + std::to_string(mins.size()) +
                                " minimal members is out of reach (cap 20)");
        if (f.universe > 62) throw CapacityError("total-upper-shadow counts need universe <= 62");
        // Signed sum of 2^(p - |union|) over nonempty member subsets.
        __int128 total = 0;
        const std::size_t n = mins.size();
        for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << n); ++pick) {
            std::uint64_t un = 0;
            for (std::uint64_t w = pick; w != 0; w &= w - 1)
                un |= mins[static_cast<std::size_t>(std::countr_zero(w))].bits();
            const int sign = (std::popcount(pick) % 2 == 1) ? 1 : -1;
            const int free = f.universe - std::popcount(un);
            total += sign * static_cast<__int128>(std::uint64_t{1} << free);
        }
        return static_cast<std::uint64_t>(total);
    }

    if (!direct_ok)
        throw CapacityError("direct total-upper-shadow scan needs universe <= 24, got " +
                            std::to_string(f.universe));
    std::uint64_t count = 0;
    const std::uint64_t limit = std::uint64_t{1} << f.universe;
    for (std::uint64_t sub = 0; sub < limit; ++sub) {
        for (const ElementSet& m : mins)
            if ((m.bits() & ~sub) == 0) {
                ++count;
                break;
            }
    }
    return count;
}

std::vector<ElementSet> total_upper_shadow_members(const UniformFamily& f) {
    if (f.universe > 24) throw CapacityError("materializing a total upper shadow needs universe <= 24");
    std::vector<ElementSet> out;
    if (f.members.empty()) return out;
    const std::vector<ElementSet> mins = minimal_members(f.members);
    const std::uint64_t limit = std::uint64_t{1} << f.universe;
    for (std::uint64_t sub = 0; sub < limit; ++sub)
        for (const ElementSet& m : mins)
            if ((m.bits() & ~sub) == 0) {
                out.push_back(ElementSet::from_bits(sub));
                break;
            }
    return out;
}

ElementSet complement_transform_set(ElementSet a, int p) {
    const ElementSet comp = ElementSet::full(p) - a;
    ElementSet out;
    for (int x : comp.elements()) out.add(p + 1 - x);
    return out;
}

UniformFamily complement_transform(const UniformFamily& f) {
    std::vector<ElementSet> out;
    out.reserve(f.members.size());
    for (const ElementSet& m : f.members) out.push_back(complement_transform_set(m, f.universe));
    return UniformFamily(f.universe - f.r, f.universe, std::move(out));
}

std::uint64_t kk_min_upper_shadow(std::uint64_t m, int r, int p) {
    if (r < 1 || r >= p) throw std::domain_error("kk_min_upper_shadow needs 1 <= r <= p-1");
    if (p > 20) throw CapacityError("kk_min_upper_shadow materializes segments; needs p <= 20");
    if (m > binom(p, r))
        throw std::domain_error("requested " + std::to_string(m) + " members but [" + std::to_string(p) +
                                "]^(" + std::to_string(r) + ") holds only " + std::to_string(binom(p, r)));
    if (m == 0) return 0;
    const Family seg = initial_segment(OrderKind::Lex, r, m, p);
    return upper_shadow(UniformFamily::from_family(seg, p)).size();
}

Rational delta_proportion(std::uint64_t s, int k, int t) {
    if (k < 2) throw std::domain_error("delta proportion needs k >= 2");
    if (t < k - 1) throw std::domain_error("universe [" + std::to_string(t) + "] holds no (k-1)-sets");
    if (t > 30) throw CapacityError("delta proportion needs t <= 30");
    if (s > binom(t, k - 1))
        throw std::domain_error("segment length " + std::to_string(s) + " exceeds C(t,k-1) = " +
                                std::to_string(binom(t, k - 1)));
    if (s == 0) return Rational(0, 1);
    const Family seg = initial_segment(OrderKind::Lex, k - 1, s, t);
    const std::uint64_t u = total_upper_shadow_count(UniformFamily::from_family(seg, t));
    return Rational(u, std::uint64_t{1} << t);
}

}  // namespace ucf
