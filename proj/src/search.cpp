#include "ucf/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "ucf/binomial.hpp"
#include "ucf/canonical.hpp"
#include "ucf/closure.hpp"
#include "ucf/constructions.hpp"
#include "ucf/orders.hpp"

namespace ucf {

namespace {

constexpr std::uint64_t kNoIncumbent = ~std::uint64_t{0};
constexpr std::size_t kLabeledCap = 4096;

inline std::uint64_t gosper_next(std::uint64_t w) {
    const std::uint64_t u = w & (~w + 1);
    const std::uint64_t v = w + u;
    return v | (((w ^ v) / u) >> 2);
}

inline std::uint64_t colex_rank_mask(std::uint64_t w) {
    std::uint64_t r = 0;
    int i = 1;
    while (w != 0) {
        r += binom(std::countr_zero(w), i++);
        w &= w - 1;
    }
    return r;
}

// Labels of each set introduced in first-use order, list ascending by value.
bool valid_sequence(const std::vector<std::uint64_t>& members) {
    std::uint64_t used = 0;
    std::uint64_t prev = 0;
    for (std::uint64_t w : members) {
        if (w <= prev) return false;
        const std::uint64_t fresh = w & ~used;
        if (fresh != 0) {
            const int u = std::popcount(used);
            const int c = std::popcount(fresh);
            const std::uint64_t expect = ((u + c >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << (u + c)) - 1)) & ~((std::uint64_t{1} << u) - 1);
            if (fresh != expect) return false;
        }
        used |= w;
        prev = w;
    }
    return true;
}

struct Ctx {
    SearchConfig cfg;
    int cap = 0;  // resolved static ground cap
    int t2 = 0;   // least t with n <= C(t,2), used for the k = 2 cap
    std::atomic<std::uint64_t> incumbent{kNoIncumbent};
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<std::uint64_t> pruned_bound{0};
    std::atomic<std::uint64_t> pruned_canon{0};
    std::atomic<std::uint64_t> pruned_ground{0};
    std::atomic<bool> budget_hit{false};

    std::mutex mu;
    std::set<std::vector<std::uint64_t>> labeled;  // sorted member masks of current optima
    bool labeled_overflow = false;
    std::set<std::uint64_t> done_branches;         // second members fully explored
};

int effective_cap(const Ctx& c) {
    int cap = c.cap;
    if (!c.cfg.prune_ground) return cap;
    const std::uint64_t inc = c.incumbent.load(std::memory_order_relaxed);
    if (inc == kNoIncumbent) return cap;
    int s = 64;
    for (int i = 1; i < 64; ++i)
        if (((std::uint64_t{1} << i) - 1) > inc) {
            s = i;
            break;
        }
    cap = std::min(cap, s * c.cfg.k - 1);
    if (c.cfg.k == 2 && c.t2 <= 63 && inc < pow2(c.t2) - 1) cap = std::min(cap, 2 * c.t2 - 1);
    return cap;
}

void record(Ctx& c, std::vector<std::uint64_t> members_sorted, std::uint64_t size) {
    std::scoped_lock lk(c.mu);
    const std::uint64_t inc = c.incumbent.load();
    if (size > inc) return;
    if (size < inc) {
        c.incumbent.store(size);
        c.labeled.clear();
        c.labeled_overflow = false;
    }
    if (c.labeled.size() >= kLabeledCap) {
        c.labeled_overflow = true;
        return;
    }
    c.labeled.insert(std::move(members_sorted));
}

// Opt-in partial-depth test: reject a prefix unless its member sequence is
// the least valid sequence over all relabelings of its own ground set. Only
// attempted on small grounds; larger ones pass unexamined.
bool path_canonical(const std::vector<std::uint64_t>& members, int m) {
    if (m > 9) return true;
    std::vector<int> perm(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::vector<std::uint64_t> mapped(members.size());
    do {
        for (std::size_t i = 0; i < members.size(); ++i) {
            std::uint64_t w = members[i];
            std::uint64_t out = 0;
            while (w != 0) {
                out |= std::uint64_t{1} << perm[static_cast<std::size_t>(std::countr_zero(w))];
                w &= w - 1;
            }
            mapped[i] = out;
        }
        std::sort(mapped.begin(), mapped.end());
        if (mapped < members && valid_sequence(mapped)) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

struct Node {
    std::vector<std::uint64_t> members;
    std::vector<std::uint64_t> closure;
    int m = 0;  // ground is [m]
};

void dfs(Ctx& c, Node& node) {
    if (c.budget_hit.load(std::memory_order_relaxed)) return;
    if (c.cfg.node_budget != 0 && c.nodes.load(std::memory_order_relaxed) >= c.cfg.node_budget) {
        c.budget_hit.store(true);
        return;
    }
    c.nodes.fetch_add(1, std::memory_order_relaxed);

    const int depth = static_cast<int>(node.members.size());
    const int cap_eff = effective_cap(c);
    if (c.cfg.prune_ground && node.m > cap_eff) {
        c.pruned_ground.fetch_add(1, std::memory_order_relaxed);
        return;
    }
    if (depth == static_cast<int>(c.cfg.n)) {
        record(c, node.members, node.closure.size());
        return;
    }
    if (c.cfg.canonicity_interval > 0 && depth % c.cfg.canonicity_interval == 0 &&
        !path_canonical(node.members, node.m)) {
        c.pruned_canon.fetch_add(1, std::memory_order_relaxed);
        return;
    }

    const std::uint64_t last = node.members.back();
    const std::uint64_t remaining_needed = c.cfg.n - static_cast<std::uint64_t>(depth) - 1;
    const int k = c.cfg.k;

    auto try_child = [&](std::uint64_t set_bits, int new_m) -> bool {
        // Enough colex-larger sets must remain inside the cap to finish.
        if (binom(cap_eff, k) < colex_rank_mask(set_bits) + 1 + remaining_needed) return false;
        const std::uint64_t inc = c.incumbent.load(std::memory_order_relaxed);
        std::vector<std::uint64_t> child_closure = extend_closure(node.closure, set_bits);
        if (c.cfg.prune_bound && child_closure.size() > inc) {
            c.pruned_bound.fetch_add(1, std::memory_order_relaxed);
            return true;
        }
        Node child;
        child.members = node.members;
        child.members.push_back(set_bits);
        child.closure = std::move(child_closure);
        child.m = new_m;
        dfs(c, child);
        return true;
    };

    // Reuse of present labels only: colex successors of `last` within [m].
    // The ascending check stops a Gosper wrap past the 64-label roof.
    const std::uint64_t ground_mask = node.m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << node.m) - 1;
    std::uint64_t prev = last;
    for (std::uint64_t w = gosper_next(last); w > prev && (w & ~ground_mask) == 0;
         prev = w, w = gosper_next(w))
        if (!try_child(w, node.m)) break;

    // Sets introducing j fresh labels, forced to be the next block m+1..m+j.
    const int jmax = std::min(k, (c.cfg.prune_ground ? cap_eff : c.cap) - node.m);
    for (int j = 1; j <= jmax; ++j) {
        const std::uint64_t block = (((std::uint64_t{1} << j) - 1) << node.m);
        if (k - j == 0) {
            try_child(block, node.m + j);
            continue;
        }
        // (k-j)-subsets of [m], ascending.
        std::uint64_t sub = (std::uint64_t{1} << (k - j)) - 1;
        while ((sub & ~ground_mask) == 0) {
            if (!try_child(sub | block, node.m + j)) break;
            sub = gosper_next(sub);
        }
    }
}

struct CheckpointData {
    bool present = false;
    std::uint64_t incumbent = kNoIncumbent;
    std::vector<std::vector<std::uint64_t>> witnesses;
    std::set<std::uint64_t> done;
};

std::string config_line(const Ctx& c) {
    std::ostringstream os;
    os << "config n=" << c.cfg.n << " k=" << c.cfg.k << " cap=" << c.cap
       << " prune_bound=" << (c.cfg.prune_bound ? 1 : 0) << " prune_ground=" << (c.cfg.prune_ground ? 1 : 0)
       << " canon=" << c.cfg.canonicity_interval;
    return os.str();
}

std::string masks_to_line(const std::vector<std::uint64_t>& masks) {
    std::string out;
    for (std::size_t i = 0; i < masks.size(); ++i) {
        if (i) out += "|";
        const std::vector<int> labels = ElementSet::from_bits(masks[i]).elements();
        for (std::size_t j = 0; j < labels.size(); ++j) {
            if (j) out += " ";
            out += std::to_string(labels[j]);
        }
    }
    return out;
}

std::vector<std::uint64_t> line_to_masks(const std::string& line) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(line);
    std::string part;
    while (std::getline(ss, part, '|')) {
        std::istringstream ps(part);
        ElementSet s;
        int label = 0;
        while (ps >> label) s.add(label);
        out.push_back(s.bits());
    }
    return out;
}

CheckpointData load_checkpoint(const Ctx& c) {
    CheckpointData data;
    std::ifstream in(c.cfg.checkpoint_path);
    if (!in) return data;
    std::string line;
    if (!std::getline(in, line) || line.empty()) return data;  // empty file: fresh search
    if (line != "ucf-fmin-checkpoint v1")
        throw std::domain_error("unrecognized checkpoint header: " + line);
    if (!std::getline(in, line)) throw std::domain_error("checkpoint missing config line");
    const std::string expect = config_line(c);
    if (line != expect)
        throw std::domain_error("checkpoint config mismatch:\n  file:    " + line + "\n  request: " + expect);
    data.present = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "incumbent") {
            ls >> data.incumbent;
        } else if (tag == "witness") {
            std::string rest;
            std::getline(ls, rest);
            data.witnesses.push_back(line_to_masks(rest));
        } else if (tag == "done") {
            std::string rest;
            std::getline(ls, rest);
            const std::vector<std::uint64_t> masks = line_to_masks(rest);
            if (masks.size() == 1) data.done.insert(masks[0]);
        } else {
            throw std::domain_error("checkpoint line not understood: " + line);
        }
    }
    return data;
}

void write_checkpoint(Ctx& c) {
    if (c.cfg.checkpoint_path.empty()) return;
    const std::string tmp = c.cfg.checkpoint_path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << "ucf-fmin-checkpoint v1\n" << config_line(c) << "\n";
        out << "incumbent " << c.incumbent.load() << "\n";
        for (const std::vector<std::uint64_t>& w : c.labeled) out << "witness " << masks_to_line(w) << "\n";
        for (std::uint64_t b : c.done_branches) out << "done " << masks_to_line({b}) << "\n";
    }
    std::rename(tmp.c_str(), c.cfg.checkpoint_path.c_str());
}

Family family_from_masks(const std::vector<std::uint64_t>& masks, int k) {
    Family f(k);
    for (std::uint64_t w : masks) f.push_back_checked(ElementSet::from_bits(w));
    return f;
}

}  // namespace

SearchOutcome f_min(const SearchConfig& config) {
    if (config.n < 1 || config.k < 1 || config.k > ElementSet::max_label)
        throw std::domain_error("search needs n >= 1 and 1 <= k <= 64");

    Ctx c;
    c.cfg = config;
    const std::uint64_t natural_cap = std::min<std::uint64_t>(config.n * static_cast<std::uint64_t>(config.k), 64);
    c.cap = config.ground_cap > 0 ? std::min(config.ground_cap, 64) : static_cast<int>(natural_cap);
    if (c.cap < config.k || binom(c.cap, config.k) < config.n)
        throw std::domain_error("infeasible: [" + std::to_string(c.cap) + "] holds only " +
                                std::to_string(binom(c.cap, config.k)) + " " + std::to_string(config.k) +
                                "-sets, need " + std::to_string(config.n));
    if (config.k == 2) c.t2 = theorem2_values(config.n).t;
    if (config.canonicity_interval < 0) throw std::domain_error("canonicity interval must be >= 0");

    // Incumbent seeding.
    if (config.seed_kind == SeedKind::ExplicitValue) {
        c.incumbent.store(config.seed_value);
    } else {
        const OrderKind kind = config.seed_kind == SeedKind::MaxLexSegment ? OrderKind::MaxLex : OrderKind::Colex;
        const Family seed = initial_segment(kind, config.k, config.n);
        std::vector<std::uint64_t> masks;
        for (const ElementSet& s : seed.sets()) masks.push_back(s.bits());
        std::sort(masks.begin(), masks.end());
        record(c, std::move(masks), close_size(seed));
    }

    CheckpointData resume;
    if (!config.checkpoint_path.empty()) {
        resume = load_checkpoint(c);
        for (const std::vector<std::uint64_t>& masks : resume.witnesses) {
            std::vector<std::uint64_t> sorted = masks;
            std::sort(sorted.begin(), sorted.end());
            record(c, sorted, close_size(family_from_masks(sorted, config.k)));
        }
        if (resume.incumbent < c.incumbent.load()) c.incumbent.store(resume.incumbent);
        c.done_branches = resume.done;
    }

    // Root: the first member is forced to {1,...,k}.
    const std::uint64_t root_mask = (config.k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << config.k) - 1);
    Node root;
    root.members = {root_mask};
    root.closure = {root_mask};
    root.m = config.k;

    if (config.n == 1) {
        c.nodes.fetch_add(1);
        record(c, root.members, 1);
    } else {
        // Top-level branches: every admissible second member.
        struct Branch {
            std::uint64_t set_bits;
            int m;
        };
        std::vector<Branch> branches;
        const int jmax = std::min(config.k, c.cap - config.k);
        for (int j = 1; j <= jmax; ++j) {
            const std::uint64_t block = ((std::uint64_t{1} << j) - 1) << config.k;
            if (config.k - j == 0) {
                branches.push_back({block, config.k + j});
                continue;
            }
            std::uint64_t sub = (std::uint64_t{1} << (config.k - j)) - 1;
            while ((sub & ~root_mask) == 0) {
                branches.push_back({sub | block, config.k + j});
                sub = gosper_next(sub);
            }
        }
        std::sort(branches.begin(), branches.end(),
                  [](const Branch& a, const Branch& b) { return a.set_bits < b.set_bits; });

        c.nodes.fetch_add(1);  // the root itself

        std::atomic<std::size_t> next{0};
        auto run_branches = [&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= branches.size()) return;
                if (c.budget_hit.load()) return;
                const Branch& b = branches[i];
                {
                    std::scoped_lock lk(c.mu);
                    if (c.done_branches.count(b.set_bits)) continue;
                }
                Node node;
                node.members = {root_mask, b.set_bits};
                node.closure = extend_closure(root.closure, b.set_bits);
                node.m = b.m;
                const std::uint64_t inc = c.incumbent.load(std::memory_order_relaxed);
                if (c.cfg.prune_bound && node.closure.size() > inc) {
                    c.pruned_bound.fetch_add(1, std::memory_order_relaxed);
                } else {
                    dfs(c, node);
                }
                if (!c.budget_hit.load()) {
                    std::scoped_lock lk(c.mu);
                    c.done_branches.insert(b.set_bits);
                    write_checkpoint(c);
                }
            }
        };

        const int width = std::max(1, config.parallel_width);
        if (width == 1) {
            run_branches();
        } else {
            std::vector<std::thread> workers;
            workers.reserve(static_cast<std::size_t>(width));
            for (int i = 0; i < width; ++i) workers.emplace_back(run_branches);
            for (std::thread& t : workers) t.join();
        }
    }

    if (!config.checkpoint_path.empty()) {
        std::scoped_lock lk(c.mu);
        write_checkpoint(c);
    }

    SearchOutcome out;
    out.complete = !c.budget_hit.load();
    out.nodes_explored = c.nodes.load();
    out.pruned_by_bound = c.pruned_bound.load();
    out.pruned_by_lemma3 = c.pruned_ground.load();
    out.minimum = c.incumbent.load();
    out.witness_truncated = c.labeled_overflow;

    if (c.labeled.empty()) {
        if (out.complete)
            throw std::domain_error("no family attained the seeded upper bound " + std::to_string(out.minimum) +
                                    "; the true minimum exceeds it");
    } else {
        // Collapse labeled optima to isomorphism classes.
        std::map<std::vector<std::uint64_t>, Family> classes;
        std::uint64_t duplicate_classes = 0;
        for (const std::vector<std::uint64_t>& masks : c.labeled) {
            Family f = family_from_masks(masks, config.k);
            const int m = f.ground().cardinality();
            CanonicalForm cf = canonicalize(f, std::max(12, m));
            auto [it, inserted] = classes.emplace(canonical_key(cf), cf.family);
            if (!inserted) ++duplicate_classes;
        }
        c.pruned_canon.fetch_add(duplicate_classes);
        out.witness_classes = classes.size();
        for (auto& [key, fam] : classes) {
            if (out.witnesses.size() >= config.witness_cap) {
                out.witness_truncated = true;
                break;
            }
            out.witnesses.push_back(fam);
        }
    }
    out.pruned_by_canonicity = c.pruned_canon.load();
    return out;
}

}  // namespace ucf
