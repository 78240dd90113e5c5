#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "ucf/family.hpp"

namespace ucf {

/// The three total orders on k-sets.
///   colex:   A < B iff max(A\B) < max(B\A); equals numeric order of the bit
///            patterns, a well-order on all k-subsets of N.
///   lex:     A < B iff min(A\B) < min(B\A); only used inside a finite
///            universe [p] (its initial segments of N^(k) are infinite).
///   max-lex: A < B iff max A < max B, or the maxima tie and min(A Δ B) ∈ A;
///            a well-order on all k-subsets of N.
enum class OrderKind { Colex, Lex, MaxLex };

std::string to_string(OrderKind o);
OrderKind order_from_string(const std::string& name);

/// Three-way comparison of equal-cardinality sets. For Lex a universe may be
/// supplied and is then enforced as a bound on both operands.
std::strong_ordering compare(OrderKind order, ElementSet a, ElementSet b,
                             std::optional<int> universe = std::nullopt);

/// The next k-set after `a` in the order; for Lex, within universe [p].
/// Throws when `a` is the last set of the universe (Lex only; Colex and
/// MaxLex never run out but do respect a universe when one is given).
ElementSet successor(OrderKind order, ElementSet a, std::optional<int> universe = std::nullopt);

/// First n k-sets of the order, ascending. Lex requires the universe; for
/// Colex/MaxLex a universe, when given, bounds the segment (n <= C(p,k)).
Family initial_segment(OrderKind order, int k, std::uint64_t n,
                       std::optional<int> universe = std::nullopt);

/// 0-based position of `a` in the order (within [p] for Lex).
std::uint64_t rank(OrderKind order, ElementSet a, std::optional<int> universe = std::nullopt);

}  // namespace ucf
