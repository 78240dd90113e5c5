#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ucf/element_set.hpp"
#include "ucf/family.hpp"

namespace ucf {

/// The union-closed family generated by a source family: every union of a
/// nonempty subfamily, deduplicated and sorted by bit pattern.
struct ClosureFamily {
    std::vector<ElementSet> members;
    Family source;

    [[nodiscard]] std::size_t size() const noexcept { return members.size(); }
    [[nodiscard]] bool contains(ElementSet s) const;
};

/// Generates the closure by a worklist fixpoint: every popped set is unioned
/// against each generator; new results are enqueued. Any subfamily union is
/// reachable by adding generators one at a time, so this is exact.
ClosureFamily close(const Family& f);

/// Closure cardinality without the source bookkeeping.
std::uint64_t close_size(const Family& f);

/// Membership in the closure without materializing it: S is a union of
/// generators iff the generators contained in S cover S and at least one
/// generator fits inside.
bool closure_contains(const Family& f, ElementSet s);

/// Appends one generator to an existing closure member list (sorted by bit
/// pattern), returning the extended sorted list. The incremental step behind
/// both close() and the exhaustive search.
std::vector<std::uint64_t> extend_closure(const std::vector<std::uint64_t>& closure_bits, std::uint64_t gen);

/// Subsets of the ground set (or of restrict_to) of size >= k that contain x
/// but no x-containing generator: the sets x blocks from the closure.
struct BlockerFamily {
    int x = 0;
    std::uint64_t count = 0;
    std::vector<ElementSet> members;  // filled only when requested
};

BlockerFamily blockers(const Family& f, int x, std::optional<ElementSet> restrict_to = std::nullopt,
                       bool with_members = false);

/// A set S of the requested size such that every nonempty X inside S arises
/// as B ∩ S for some closure member B. Requires |ground| >= s*k; built by
/// peeling a minimum-degree element and recursing on the rest.
ElementSet distinguishing_set(const Family& f, int s);

/// |H ∪ {A ∪ S : S ∈ H}| for a collection H and a set A not contained in the
/// union of H; checks the (1 + 2^(1-|A|)) growth bound before returning.
std::uint64_t extend_count(const std::vector<ElementSet>& h, ElementSet a);

}  // namespace ucf
