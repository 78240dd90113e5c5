#pragma once

#include <stdexcept>
#include <vector>

#include "ucf/family.hpp"

namespace ucf {

/// Raised when an input exceeds a configured capacity; the message names the
/// way forward (tighter parameters or the search module's incremental path).
class CapacityError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A family relabeled onto {1,...,m} and minimal, among all relabelings of
/// its ground set, under the ascending member-list order. Two families have
/// equal canonical forms exactly when some ground-set bijection maps one onto
/// the other.
struct CanonicalForm {
    Family family;
    bool operator==(const CanonicalForm&) const = default;
};

/// Brute-force minimization over relabelings, with iterated degree-class
/// refinement to cut the permutation space. Ground sets above the cap are
/// rejected; the search module avoids this path via incremental generation.
CanonicalForm canonicalize(const Family& f, int permutation_cap = 12);

bool is_isomorphic(const Family& a, const Family& b, int permutation_cap = 12);

/// Sorting key of a canonical form: the member bit patterns in ascending
/// order. Handy as a hash/dedup key.
std::vector<std::uint64_t> canonical_key(const CanonicalForm& c);

}  // namespace ucf
