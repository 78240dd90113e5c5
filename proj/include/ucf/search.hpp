#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ucf/family.hpp"

namespace ucf {

enum class SeedKind { MaxLexSegment, ColexSegment, ExplicitValue };

struct SearchConfig {
    std::uint64_t n = 1;
    int k = 1;
    /// Hard cap on ground-set size; 0 means min(n*k, 64). Tightened online
    /// while the incumbent improves.
    int ground_cap = 0;
    SeedKind seed_kind = SeedKind::MaxLexSegment;
    std::uint64_t seed_value = 0;  // used with SeedKind::ExplicitValue
    int parallel_width = 1;
    std::string checkpoint_path;
    std::uint64_t node_budget = 0;  // 0 = unlimited
    /// Prune branches whose partial closure already exceeds the incumbent.
    bool prune_bound = true;
    /// Cap the ground set from the incumbent: a ground of s*k elements forces
    /// closure >= 2^s - 1. For k = 2 additionally caps at 2t-1 while the
    /// incumbent is below 2^t - 1.
    bool prune_ground = true;
    /// Reject non-canonical partial families every `canonicity_interval`
    /// levels. 0 (the default) checks complete families only, which is
    /// always exact; positive intervals are opt-in and cross-checked by the
    /// pruning-soundness tests.
    int canonicity_interval = 0;
    std::uint64_t witness_cap = 64;
};

struct SearchOutcome {
    std::uint64_t minimum = 0;
    /// All optimal families up to isomorphism (canonical forms, sorted),
    /// truncated at witness_cap; witness_classes counts every class found.
    std::vector<Family> witnesses;
    std::uint64_t witness_classes = 0;
    bool witness_truncated = false;
    std::uint64_t nodes_explored = 0;
    std::uint64_t pruned_by_bound = 0;
    std::uint64_t pruned_by_canonicity = 0;
    std::uint64_t pruned_by_lemma3 = 0;
    /// False when the node budget ran out; the minimum is then only the best
    /// value seen, never silently presented as exact.
    bool complete = true;
};

/// Exact minimum of the closure size over all families of n distinct k-sets,
/// by depth-first extension of colex-ascending member lists whose labels are
/// used in first-appearance order (every isomorphism class is reached).
SearchOutcome f_min(const SearchConfig& config);

}  // namespace ucf
