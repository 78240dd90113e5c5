#include "ucf/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>

#include "ucf/binomial.hpp"

namespace ucf {

namespace {

// Order-preserving relabeling of the ground set onto {1,...,m}.
Family compact_labels(const Family& f) {
    std::vector<int> ground = f.ground().elements();
    std::array<int, 65> to_new{};
    for (std::size_t i = 0; i < ground.size(); ++i) to_new[static_cast<std::size_t>(ground[i])] = static_cast<int>(i) + 1;
    std::vector<ElementSet> sets;
    sets.reserve(f.size());
    for (const ElementSet& s : f.sets()) {
        ElementSet t;
        for (int x : s.elements()) t.add(to_new[static_cast<std::size_t>(x)]);
        sets.push_back(t);
    }
    return Family(f.k(), std::move(sets));
}

// Iterated refinement of element colors. Colors start from degrees; each
// round an element's signature is its color plus the sorted color profiles of
// the members containing it. Signatures are permutation-invariant, so equal
// inputs up to relabeling end with equal color sequences.
std::vector<int> refine_colors(const Family& f, int m) {
    std::vector<int> color(static_cast<std::size_t>(m));
    for (int x = 1; x <= m; ++x) color[static_cast<std::size_t>(x - 1)] = static_cast<int>(f.degree(x));

    using Signature = std::vector<int>;
    for (int round = 0; round < m; ++round) {
        std::vector<Signature> sig(static_cast<std::size_t>(m));
        for (int x = 1; x <= m; ++x) {
            Signature& s = sig[static_cast<std::size_t>(x - 1)];
            s.push_back(color[static_cast<std::size_t>(x - 1)]);
            std::vector<Signature> profiles;
            for (const ElementSet& mem : f.sets()) {
                if (!mem.contains(x)) continue;
                Signature prof;
                for (int y : mem.elements()) prof.push_back(color[static_cast<std::size_t>(y - 1)]);
                std::sort(prof.begin(), prof.end());
                profiles.push_back(std::move(prof));
            }
            std::sort(profiles.begin(), profiles.end());
            for (const Signature& p : profiles) {
                s.push_back(-1);  // separator
                s.insert(s.end(), p.begin(), p.end());
            }
        }
        std::map<Signature, int> rank;
        for (const Signature& s : sig) rank.emplace(s, 0);
        int next = 0;
        for (auto& [k, v] : rank) v = next++;
        std::vector<int> fresh(static_cast<std::size_t>(m));
        for (int x = 0; x < m; ++x) fresh[static_cast<std::size_t>(x)] = rank[sig[static_cast<std::size_t>(x)]];
        if (fresh == color) break;
        color = std::move(fresh);
    }
    return color;
}

std::vector<std::uint64_t> apply_perm_key(const Family& f, const std::vector<int>& perm) {
    std::vector<std::uint64_t> key;
    key.reserve(f.size());
    for (const ElementSet& s : f.sets()) {
        std::uint64_t w = 0;
        for (int x : s.elements()) w |= std::uint64_t{1} << (perm[static_cast<std::size_t>(x - 1)] - 1);
        key.push_back(w);
    }
    std::sort(key.begin(), key.end());
    return key;
}

}  // namespace

CanonicalForm canonicalize(const Family& f, int permutation_cap) {
    const int m = f.ground().cardinality();
    if (m > permutation_cap)
        throw CapacityError("ground set of " + std::to_string(m) + " elements exceeds the relabeling cap of " +
                            std::to_string(permutation_cap) +
                            "; use the search module's incremental canonicity path for larger grounds");

    Family g = compact_labels(f);
    if (f.size() == binom(m, f.k())) {
        // Complete level: fixed setwise by every relabeling.
        std::vector<ElementSet> sets = g.sets();
        std::sort(sets.begin(), sets.end(),
                  [](ElementSet a, ElementSet b) { return a.bits() < b.bits(); });
        return CanonicalForm{Family(f.k(), std::move(sets))};
    }

    std::vector<int> color = refine_colors(g, m);

    // Elements grouped by color class; target labels are handed out class by
    // class, so only within-class permutations need enumerating.
    std::map<int, std::vector<int>> classes;
    for (int x = 1; x <= m; ++x) classes[color[static_cast<std::size_t>(x - 1)]].push_back(x);

    std::uint64_t perm_count = 1;
    for (const auto& [c, elems] : classes) {
        for (std::size_t i = 2; i <= elems.size(); ++i) perm_count *= i;
        if (perm_count > 40'000'000)
            throw CapacityError("family too symmetric for brute-force canonicalization (over 4e7 relabelings)");
    }

    std::vector<std::vector<int>> class_elems;
    class_elems.reserve(classes.size());
    for (auto& [c, elems] : classes) class_elems.push_back(std::move(elems));

    std::vector<int> perm(static_cast<std::size_t>(m), 0);
    std::vector<std::uint64_t> best;
    auto consider = [&] {
        std::vector<std::uint64_t> key = apply_perm_key(g, perm);
        if (best.empty() || key < best) best = std::move(key);
    };

    // DFS over products of within-class permutations.
    int next_label = 1;
    std::vector<int> base(static_cast<std::size_t>(class_elems.size()));
    for (std::size_t i = 0; i < class_elems.size(); ++i) {
        base[i] = next_label;
        next_label += static_cast<int>(class_elems[i].size());
    }
    auto rec = [&](auto&& self, std::size_t ci) -> void {
        if (ci == class_elems.size()) {
            consider();
            return;
        }
        std::vector<int>& elems = class_elems[ci];
        std::sort(elems.begin(), elems.end());
        do {
            for (std::size_t i = 0; i < elems.size(); ++i)
                perm[static_cast<std::size_t>(elems[i] - 1)] = base[ci] + static_cast<int>(i);
            self(self, ci + 1);
        } while (std::next_permutation(elems.begin(), elems.end()));
    };
    rec(rec, 0);

    std::vector<ElementSet> sets;
    sets.reserve(best.size());
    for (std::uint64_t w : best) sets.push_back(ElementSet::from_bits(w));
    return CanonicalForm{Family(f.k(), std::move(sets))};
}

bool is_isomorphic(const Family& a, const Family& b, int permutation_cap) {
    if (a.k() != b.k() || a.size() != b.size()) return false;
    if (a.ground().cardinality() != b.ground().cardinality()) return false;
    return canonicalize(a, permutation_cap) == canonicalize(b, permutation_cap);
}

std::vector<std::uint64_t> canonical_key(const CanonicalForm& c) {
    std::vector<std::uint64_t> key;
    key.reserve(c.family.size());
    for (const ElementSet& s : c.family.sets()) key.push_back(s.bits());
    return key;
}

}  // namespace ucf
