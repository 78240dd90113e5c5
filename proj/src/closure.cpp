#include "ucf/closure.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

#include "ucf/binomial.hpp"
#include "ucf/canonical.hpp"

namespace ucf {

namespace {

std::vector<std::uint64_t> closure_bits_of(const Family& f) {
    if (f.empty()) throw std::domain_error("closure of an empty family is undefined");
    std::vector<std::uint64_t> gens;
    gens.reserve(f.size());
    for (const ElementSet& s : f.sets()) gens.push_back(s.bits());

    std::unordered_set<std::uint64_t> seen(gens.begin(), gens.end());
    std::vector<std::uint64_t> work(gens.begin(), gens.end());
    while (!work.empty()) {
        const std::uint64_t cur = work.back();
        work.pop_back();
        for (std::uint64_t g : gens) {
            const std::uint64_t u = cur | g;
            if (seen.insert(u).second) work.push_back(u);
        }
    }
    std::vector<std::uint64_t> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool ClosureFamily::contains(ElementSet s) const {
    return std::binary_search(members.begin(), members.end(), s,
                              [](ElementSet a, ElementSet b) { return a.bits() < b.bits(); });
}

ClosureFamily close(const Family& f) {
    std::vector<ElementSet> members;
    for (std::uint64_t w : closure_bits_of(f)) members.push_back(ElementSet::from_bits(w));
    return ClosureFamily{std::move(members), f};
}

std::uint64_t close_size(const Family& f) { return closure_bits_of(f).size(); }

bool closure_contains(const Family& f, ElementSet s) {
    if (f.empty()) throw std::domain_error("closure of an empty family is undefined");
    ElementSet covered;
    bool any = false;
    for (const ElementSet& g : f.sets())
        if (g.subset_of(s)) {
            covered |= g;
            any = true;
        }
    return any && covered == s;
}

std::vector<std::uint64_t> extend_closure(const std::vector<std::uint64_t>& closure_bits, std::uint64_t gen) {
    std::vector<std::uint64_t> fresh;
    fresh.reserve(closure_bits.size() + 1);
    fresh.push_back(gen);
    for (std::uint64_t w : closure_bits) fresh.push_back(w | gen);
    std::sort(fresh.begin(), fresh.end());
    fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());

    std::vector<std::uint64_t> merged;
    merged.reserve(closure_bits.size() + fresh.size());
    std::set_union(closure_bits.begin(), closure_bits.end(), fresh.begin(), fresh.end(),
                   std::back_inserter(merged));
    return merged;
}

BlockerFamily blockers(const Family& f, int x, std::optional<ElementSet> restrict_to, bool with_members) {
    if (!f.ground().contains(x))
        throw std::domain_error("element " + std::to_string(x) + " outside ground set " + f.ground().to_string());
    ElementSet domain = restrict_to.value_or(f.ground());
    if (!domain.subset_of(f.ground()))
        throw std::domain_error("restriction " + domain.to_string() + " not contained in ground set");
    if (!domain.contains(x))
        throw std::domain_error("restriction " + domain.to_string() + " does not contain " + std::to_string(x));
    if (domain.cardinality() > 24)
        throw CapacityError("blocker enumeration needs a domain of at most 24 elements");

    std::vector<std::uint64_t> xgens;
    for (const ElementSet& g : f.sets())
        if (g.contains(x)) xgens.push_back(g.bits());

    BlockerFamily out;
    out.x = x;
    const std::uint64_t base = (domain - ElementSet{x}).bits();
    const std::uint64_t xbit = ElementSet{x}.bits();
    const int k = f.k();
    std::uint64_t sub = 0;
    while (true) {
        const std::uint64_t a = sub | xbit;
        if (std::popcount(a) >= k) {
            bool blocked_by_other = false;
            for (std::uint64_t g : xgens)
                if ((g & ~a) == 0) {
                    blocked_by_other = true;
                    break;
                }
            if (!blocked_by_other) {
                ++out.count;
                if (with_members) out.members.push_back(ElementSet::from_bits(a));
            }
        }
        if (sub == base) break;
        sub = (sub - base) & base;
    }
    return out;
}

namespace {

// Induction step behind distinguishing_set, on collections of sets of size
// at most k (the restricted intersections are no longer uniform).
ElementSet distinguishing_rec(const std::vector<ElementSet>& sets, int s) {
    ElementSet t;
    for (const ElementSet& b : sets) t |= b;
    if (s == 1) return ElementSet{t.min_element()};

    int best_x = 0;
    std::size_t best_deg = sets.size() + 1;
    for (int x : t.elements()) {
        std::size_t deg = 0;
        for (const ElementSet& b : sets)
            if (b.contains(x)) ++deg;
        if (deg < best_deg) {
            best_deg = deg;
            best_x = x;
        }
    }
    ElementSet b1;
    for (const ElementSet& b : sets)
        if (b.contains(best_x)) {
            b1 = b;
            break;
        }
    const ElementSet tp = t - b1;
    std::vector<ElementSet> rest;
    for (const ElementSet& b : sets) {
        if (b.contains(best_x)) continue;
        const ElementSet c = b & tp;
        if (!c.empty()) rest.push_back(c);
    }
    ElementSet sp = distinguishing_rec(rest, s - 1);
    sp.add(best_x);
    return sp;
}

}  // namespace

ElementSet distinguishing_set(const Family& f, int s) {
    if (f.empty()) throw std::domain_error("distinguishing set of an empty family is undefined");
    if (s < 1) throw std::domain_error("distinguishing set size must be >= 1");
    if (f.ground().cardinality() < s * f.k())
        throw std::domain_error("ground set of " + std::to_string(f.ground().cardinality()) +
                                " elements is below the s*k = " + std::to_string(s * f.k()) + " hypothesis");
    return distinguishing_rec(f.sets(), s);
}

std::uint64_t extend_count(const std::vector<ElementSet>& h, ElementSet a) {
    std::vector<std::uint64_t> bits;
    bits.reserve(h.size());
    ElementSet covered;
    for (const ElementSet& s : h) {
        bits.push_back(s.bits());
        covered |= s;
    }
    std::sort(bits.begin(), bits.end());
    if (std::adjacent_find(bits.begin(), bits.end()) != bits.end())
        throw std::invalid_argument("collection contains duplicate sets");
    if (a.subset_of(covered))
        throw std::domain_error("set " + a.to_string() + " is contained in the union of the collection");

    std::unordered_set<std::uint64_t> all(bits.begin(), bits.end());
    for (std::uint64_t w : bits) all.insert(w | a.bits());
    const std::uint64_t count = all.size();

    // |H ∪ {A∪S}| * 2^(|A|-1) >= |H| * (2^(|A|-1) + 1)
    const unsigned __int128 scale = static_cast<unsigned __int128>(1) << (a.cardinality() - 1);
    if (static_cast<unsigned __int128>(count) * scale <
        static_cast<unsigned __int128>(bits.size()) * (scale + 1))
        throw std::logic_error("extension growth bound violated");
    return count;
}

}  // namespace ucf
