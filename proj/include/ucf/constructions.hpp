#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "ucf/family.hpp"

namespace ucf {

enum class ConstructionKind { AllKSets, ColexSegment, MaxLexSegment, MinusColexStar, PlusPencil };

std::string to_string(ConstructionKind k);

/// A named candidate-extremal family together with the closure size the
/// closed-form accounting predicts for it (absent where the accounting is
/// not known to be exact at these parameters).
struct Construction {
    ConstructionKind kind;
    int t = 0;
    int k = 0;
    std::uint64_t l = 0;
    Family family;
    std::optional<std::uint64_t> predicted_size;
};

/// All C(t,k) k-subsets of [t], ascending in colex.
Family all_ksets(int t, int k);

/// |[t]^(>=k)| = 2^t - sum_{i<k} C(t,i): the closure size of all_ksets(t,k).
std::uint64_t up_set_size(int t, int k);

/// For n 2-sets: t = least integer with n <= C(t,2) (equals
/// floor(sqrt(2n) + 3/2)), r = C(t,2) - n, and the closed-form minimum
/// f = 2^t - 2^r - t (absent when 2^t overflows 64 bits).
struct Theorem2Values {
    int t = 0;
    std::uint64_t r = 0;
    std::optional<std::uint64_t> f;
};
Theorem2Values theorem2_values(std::uint64_t n);

/// Largest s >= 0 with l >= s*k - C(s,2); the number of (k+1)-sets the
/// minus construction removes from the closure. Requires l < C(k+1,2).
int s_l(std::uint64_t l, int k);

/// [t]^(k) minus the l colex-first (k-1)-sets of [t-1] lifted by t.
/// Predicted closure: up_set_size(t,k) - l - s_l(l,k), quoted only from the
/// empirically recorded safe t upward.
Construction minus_construction(int t, int k, std::uint64_t l);

/// Smallest t at which the minus-construction size formula is known to be
/// exact (verified against brute-force closure for all t <= 8); nullopt when
/// no such t <= 8 exists.
std::optional<int> minus_safe_t(int k, std::uint64_t l);

/// [t]^(k) plus the pencil Y_i = {1,...,k-2, k-2+i, t+1}, i = 1..l.
/// Predicted closure: up_set_size(t,k) + |total upper shadow of the pencil
/// stubs within [t]| (exact for every valid t).
Construction plus_construction(int t, int k, std::uint64_t l);

/// Colex and max-lex segments as Construction records (no size prediction).
Construction segment_construction(ConstructionKind kind, int k, std::uint64_t n);

/// The order-comparison pair: the max-lex segment of length 7 on 3-sets and
/// the colex segment of the same length. Their closures have sizes 12 and 13.
std::pair<Family, Family> counterexample_pair();

}  // namespace ucf
