#include "ucf/orders.hpp"

#include <bit>
#include <stdexcept>

#include "ucf/binomial.hpp"

namespace ucf {

namespace {

void check_same_cardinality(ElementSet a, ElementSet b) {
    if (a.cardinality() != b.cardinality())
        throw std::domain_error("order comparison requires equal cardinalities (" +
                                std::to_string(a.cardinality()) + " vs " + std::to_string(b.cardinality()) + ")");
}

void check_universe(ElementSet a, int p) {
    if (p < 1 || p > ElementSet::max_label) throw std::domain_error("universe size outside [1,64]");
    if (!a.subset_of(ElementSet::full(p)))
        throw std::domain_error("set " + a.to_string() + " not contained in universe [" + std::to_string(p) + "]");
}

// Lex successor of the ascending tuple `a` inside [p]; false when `a` is the
// lex-last set (the top k labels are maximal in lex only at the very end).
bool lex_advance(std::vector<int>& a, int p) {
    const int k = static_cast<int>(a.size());
    for (int i = k - 1; i >= 0; --i) {
        const int limit = p - (k - 1 - i);
        if (a[static_cast<std::size_t>(i)] < limit) {
            ++a[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                a[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

std::uint64_t lex_rank_in(const std::vector<int>& a, int p) {
    const int k = static_cast<int>(a.size());
    std::uint64_t r = 0;
    int prev = 0;
    for (int i = 0; i < k; ++i) {
        for (int j = prev + 1; j < a[static_cast<std::size_t>(i)]; ++j)
            r += binom(p - j, k - 1 - i);
        prev = a[static_cast<std::size_t>(i)];
    }
    return r;
}

}  // namespace

std::string to_string(OrderKind o) {
    switch (o) {
        case OrderKind::Colex: return "colex";
        case OrderKind::Lex: return "lex";
        case OrderKind::MaxLex: return "maxlex";
    }
    return "?";
}

OrderKind order_from_string(const std::string& name) {
    if (name == "colex") return OrderKind::Colex;
    if (name == "lex") return OrderKind::Lex;
    if (name == "maxlex" || name == "max-lex") return OrderKind::MaxLex;
    throw std::domain_error("unknown order '" + name + "' (expected colex|lex|maxlex)");
}

std::strong_ordering compare(OrderKind order, ElementSet a, ElementSet b, std::optional<int> universe) {
    check_same_cardinality(a, b);
    if (universe) {
        check_universe(a, *universe);
        check_universe(b, *universe);
    }
    if (a == b) return std::strong_ordering::equal;
    const ElementSet diff = a ^ b;
    switch (order) {
        case OrderKind::Colex:
            return b.contains(diff.max_element()) ? std::strong_ordering::less : std::strong_ordering::greater;
        case OrderKind::Lex:
            return a.contains(diff.min_element()) ? std::strong_ordering::less : std::strong_ordering::greater;
        case OrderKind::MaxLex: {
            const int ma = a.max_element();
            const int mb = b.max_element();
            if (ma != mb) return ma < mb ? std::strong_ordering::less : std::strong_ordering::greater;
            return a.contains(diff.min_element()) ? std::strong_ordering::less : std::strong_ordering::greater;
        }
    }
    throw std::logic_error("unreachable order kind");
}

ElementSet successor(OrderKind order, ElementSet a, std::optional<int> universe) {
    const int k = a.cardinality();
    if (k == 0) throw std::domain_error("successor of the empty set is undefined");
    if (universe) check_universe(a, *universe);

    switch (order) {
        case OrderKind::Colex: {
            // Gosper's hack: next-larger word with the same popcount.
            const std::uint64_t w = a.bits();
            const std::uint64_t u = w & (~w + 1);
            const std::uint64_t v = w + u;
            if (v < w) throw std::out_of_range("colex successor exceeds label 64");
            const ElementSet next = ElementSet::from_bits(v | (((w ^ v) / u) >> 2));
            if (universe && !next.subset_of(ElementSet::full(*universe)))
                throw std::domain_error("colex successor leaves universe [" + std::to_string(*universe) + "]");
            return next;
        }
        case OrderKind::Lex: {
            if (!universe) throw std::domain_error("lex successor requires a universe");
            std::vector<int> t = a.elements();
            if (!lex_advance(t, *universe))
                throw std::domain_error("set is lex-last in universe [" + std::to_string(*universe) + "]");
            return ElementSet::from_labels(t);
        }
        case OrderKind::MaxLex: {
            const int m = a.max_element();
            ElementSet rest = a;
            rest.remove(m);
            std::vector<int> t = rest.elements();
            if (m > 1 && lex_advance(t, m - 1)) {
                ElementSet next = ElementSet::from_labels(t);
                next.add(m);
                return next;
            }
            if (m + 1 > ElementSet::max_label) throw std::out_of_range("max-lex successor exceeds label 64");
            if (universe && m + 1 > *universe)
                throw std::domain_error("max-lex successor leaves universe [" + std::to_string(*universe) + "]");
            ElementSet next = k >= 2 ? ElementSet::full(k - 1) : ElementSet();
            next.add(m + 1);
            return next;
        }
    }
    throw std::logic_error("unreachable order kind");
}

Family initial_segment(OrderKind order, int k, std::uint64_t n, std::optional<int> universe) {
    if (k < 1 || k > ElementSet::max_label) throw std::domain_error("set size k outside [1,64]");
    if (order == OrderKind::Lex && !universe)
        throw std::domain_error("lex initial segments require a finite universe");
    if (universe) {
        const int p = *universe;
        if (p < k) throw std::domain_error("universe [" + std::to_string(p) + "] holds no " + std::to_string(k) + "-sets");
        if (n > binom(p, k))
            throw std::domain_error("requested " + std::to_string(n) + " sets but universe [" + std::to_string(p) +
                                    "] holds only " + std::to_string(binom(p, k)));
    }
    Family out(k);
    if (n == 0) return out;
    ElementSet cur = ElementSet::full(k);
    out.push_back_checked(cur);
    for (std::uint64_t i = 1; i < n; ++i) {
        cur = successor(order, cur, universe);
        out.push_back_checked(cur);
    }
    return out;
}

std::uint64_t rank(OrderKind order, ElementSet a, std::optional<int> universe) {
    const int k = a.cardinality();
    if (k == 0) throw std::domain_error("rank of the empty set is undefined");
    if (universe) check_universe(a, *universe);
    switch (order) {
        case OrderKind::Colex: {
            std::uint64_t r = 0;
            int i = 1;
            for (int x : a.elements()) r += binom(x - 1, i++);
            return r;
        }
        case OrderKind::Lex: {
            if (!universe) throw std::domain_error("lex rank requires a universe");
            return lex_rank_in(a.elements(), *universe);
        }
        case OrderKind::MaxLex: {
            const int m = a.max_element();
            ElementSet rest = a;
            rest.remove(m);
            return binom(m - 1, k) + (k >= 2 ? lex_rank_in(rest.elements(), m - 1) : 0);
        }
    }
    throw std::logic_error("unreachable order kind");
}

}  // namespace ucf
