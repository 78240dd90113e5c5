#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ucf/binomial.hpp"
#include "ucf/canonical.hpp"
#include "ucf/closure.hpp"
#include "ucf/constructions.hpp"
#include "ucf/family.hpp"
#include "ucf/harness.hpp"
#include "ucf/orders.hpp"
#include "ucf/search.hpp"
#include "ucf/shadows.hpp"

namespace {

using nlohmann::json;

ucf::Family read_family(const std::string& path) {
    if (path == "-") return ucf::Family::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open family file: " + path);
    return ucf::Family::parse(in);
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

json family_json(const ucf::Family& f) {
    json sets = json::array();
    for (const ucf::ElementSet& s : f.sets()) sets.push_back(s.elements());
    return sets;
}

ucf::ElementSet parse_set_arg(const std::string& arg) {
    std::istringstream ss(arg);
    ucf::ElementSet s;
    int label = 0;
    while (ss >> label) s.add(label);
    if (!ss.eof()) throw std::runtime_error("malformed set '" + arg + "' (expected space-separated labels)");
    if (s.empty()) throw std::runtime_error("empty set argument");
    return s;
}

int default_workers() {
    if (const char* env = std::getenv("UCF_WORKERS")) {
        const int w = std::atoi(env);
        if (w >= 1) return w;
    }
    return 1;
}

struct VerifyArgs {
    std::string claim;
    int n_max = 8;
    int k = 3;
    int t = 4;
    std::uint64_t trials = 1000;
    std::uint64_t kk_trials = 2000;
    std::uint64_t seed = 12345;
    std::string out_path;
    bool json_out = false;
};

int run_verify(const VerifyArgs& a) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<ucf::Report> reports;
    auto add = [&](std::vector<ucf::Report> more) {
        for (auto& r : more) reports.push_back(std::move(r));
    };

    if (a.claim == "counterexample" || a.claim == "all") reports.push_back(ucf::check_counterexample());
    if (a.claim == "theorem2" || a.claim == "all") add(ucf::check_theorem2(a.n_max));
    if (a.claim == "conj7" || a.claim == "all") reports.push_back(ucf::check_conjecture7(a.k, a.t));
    if (a.claim == "conj8" || a.claim == "all")
        add(ucf::check_conjecture8(a.k, a.claim == "all" ? std::min(a.n_max, 6) : a.n_max));
    if (a.claim == "prop9" || a.claim == "all") {
        if (a.claim == "all") {
            reports.push_back(ucf::check_prop9(2));
            reports.push_back(ucf::check_prop9(3));
        } else {
            reports.push_back(ucf::check_prop9(a.k));
        }
    }
    if (a.claim == "lemmas" || a.claim == "all")
        add(ucf::check_lemma_properties(a.trials, a.seed, a.kk_trials));
    if (reports.empty()) throw std::runtime_error("unknown claim '" + a.claim + "'");

    const double wall =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const json doc = ucf::reports_to_json(reports, a.seed, wall);

    bool all_pass = true;
    for (const ucf::Report& r : reports) all_pass = all_pass && r.pass;
    if (a.json_out) {
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const ucf::Report& r : reports)
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.claim_id << " " << r.parameters.dump()
                      << "  computed=" << r.computed.dump() << "\n";
        std::cout << "seed " << a.seed << "; " << reports.size() << " checks, "
                  << (all_pass ? "all passed" : "FAILURES PRESENT") << "\n";
    }
    if (!a.out_path.empty()) write_text(a.out_path, doc.dump(2) + "\n");
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"union-closed set family toolkit: closures, set orders, shadows, extremal "
                 "constructions, and an exact minimizer for the smallest closure generated by n k-sets"};
    app.require_subcommand(1);

    // closure
    std::string cl_input;
    bool cl_members = false, cl_json = false;
    CLI::App* cl = app.add_subcommand("closure", "closure size (and members) of a family file");
    cl->add_option("--input,-i", cl_input, "family file ('-' for stdin)")->required();
    cl->add_flag("--members", cl_members, "list the closure members");
    cl->add_flag("--json", cl_json, "JSON output");

    // order
    std::string or_kind = "colex", or_rank_of, or_out;
    int or_k = 0;
    std::uint64_t or_n = 0;
    int or_universe = 0;
    bool or_json = false;
    CLI::App* od = app.add_subcommand("order", "initial segments and ranks of colex/lex/max-lex");
    od->add_option("--kind", or_kind, "colex|lex|maxlex")->required();
    od->add_option("--k", or_k, "set size")->required();
    od->add_option("--n", or_n, "segment length");
    od->add_option("--universe,-p", or_universe, "universe size (required for lex)");
    od->add_option("--rank-of", or_rank_of, "set whose rank to print, e.g. '1 2 5'");
    od->add_option("--out,-o", or_out, "write the segment to this file");
    od->add_flag("--json", or_json, "JSON output");

    // shadow
    std::string sh_op, sh_input;
    int sh_universe = 0, sh_iterations = 1, sh_r = 0, sh_k = 0, sh_t = 0;
    std::uint64_t sh_m = 0, sh_s = 0;
    bool sh_json = false;
    CLI::App* sh = app.add_subcommand("shadow", "shadow computations over a uniform family");
    sh->add_option("--op", sh_op, "lower|upper|total-count|total-members|complement|kkmin|delta")->required();
    sh->add_option("--input,-i", sh_input, "family file (lower/upper/total/complement)");
    sh->add_option("--universe,-p", sh_universe, "universe size");
    sh->add_option("--iterations", sh_iterations, "repeat count for --op upper");
    sh->add_option("--m", sh_m, "family size for kkmin");
    sh->add_option("--r", sh_r, "uniform cardinality for kkmin");
    sh->add_option("--s", sh_s, "lex segment length for delta");
    sh->add_option("--k", sh_k, "set size for delta");
    sh->add_option("--t", sh_t, "universe size for delta");
    sh->add_flag("--json", sh_json, "JSON output");

    // construct
    std::string co_kind, co_out;
    int co_t = 0, co_k = 0;
    std::uint64_t co_l = 0, co_n = 0;
    CLI::App* co = app.add_subcommand("construct", "named candidate-extremal families");
    co->add_option("--kind", co_kind, "all|colex|maxlex|minus|plus")->required();
    co->add_option("--t", co_t, "ground size parameter");
    co->add_option("--k", co_k, "set size")->required();
    co->add_option("--l", co_l, "removed/added set count (minus/plus)");
    co->add_option("--n", co_n, "segment length (colex/maxlex)");
    co->add_option("--out,-o", co_out, "write the family to this file");

    // fmin
    ucf::SearchConfig fm_cfg;
    std::string fm_seed_kind = "maxlex", fm_checkpoint;
    bool fm_no_bound = false, fm_no_ground = false;
    CLI::App* fm = app.add_subcommand("fmin", "exact minimum closure size over families of n k-sets");
    fm->add_option("--n", fm_cfg.n, "number of sets")->required();
    fm->add_option("--k", fm_cfg.k, "set size")->required();
    fm->add_option("--ground-cap", fm_cfg.ground_cap, "hard ground-set cap (default n*k)");
    fm->add_option("--budget", fm_cfg.node_budget, "node budget (0 = unlimited)");
    fm->add_option("--checkpoint", fm_checkpoint, "checkpoint file to write/resume");
    fm->add_option("--workers", fm_cfg.parallel_width, "worker threads (default $UCF_WORKERS or 1)");
    fm->add_option("--seed-kind", fm_seed_kind, "maxlex|colex|value: incumbent seed");
    fm->add_option("--seed-value", fm_cfg.seed_value, "explicit incumbent (with --seed-kind value)");
    fm->add_flag("--no-prune-bound", fm_no_bound, "disable closure-size pruning");
    fm->add_flag("--no-prune-ground", fm_no_ground, "disable ground-size pruning");
    fm->add_option("--canonicity-interval", fm_cfg.canonicity_interval,
                   "check partial canonicity every D levels (0 = complete families only)");
    fm->add_option("--witness-cap", fm_cfg.witness_cap, "max optimal classes to return");

    // verify
    VerifyArgs va;
    CLI::App* ve = app.add_subcommand("verify", "named verification suites with JSON reports");
    ve->add_option("claim", va.claim, "counterexample|theorem2|conj7|conj8|prop9|lemmas|all")->required();
    ve->add_option("--n-max", va.n_max, "largest n (theorem2/conj8)");
    ve->add_option("--k", va.k, "set size (conj7/conj8/prop9)");
    ve->add_option("--t", va.t, "ground size (conj7)");
    ve->add_option("--trials", va.trials, "trials per lemma block");
    ve->add_option("--kk-trials", va.kk_trials, "trials for the shadow-minimality block");
    ve->add_option("--seed", va.seed, "RNG seed (printed in the report header)");
    ve->add_option("--out,-o", va.out_path, "write the JSON report here");
    ve->add_flag("--json", va.json_out, "print the JSON report to stdout");

    fm_cfg.parallel_width = default_workers();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cl->parsed()) {
            const ucf::Family fam = read_family(cl_input);
            const ucf::ClosureFamily c = ucf::close(fam);
            if (cl_json) {
                json doc{{"k", fam.k()}, {"n", fam.size()}, {"closure_size", c.size()}};
                if (cl_members) {
                    json members = json::array();
                    for (const ucf::ElementSet& s : c.members) members.push_back(s.elements());
                    doc["members"] = members;
                }
                std::cout << doc.dump(2) << "\n";
            } else {
                std::cout << "closure size: " << c.size() << "\n";
                if (cl_members)
                    for (const ucf::ElementSet& s : c.members) {
                        const std::vector<int> e = s.elements();
                        for (std::size_t i = 0; i < e.size(); ++i)
                            std::cout << (i ? " " : "") << e[i];
                        std::cout << "\n";
                    }
            }
            return 0;
        }

        if (od->parsed()) {
            const ucf::OrderKind kind = ucf::order_from_string(or_kind);
            const std::optional<int> universe =
                or_universe > 0 ? std::optional<int>(or_universe) : std::nullopt;
            if (!or_rank_of.empty()) {
                const ucf::ElementSet s = parse_set_arg(or_rank_of);
                const std::uint64_t rk = ucf::rank(kind, s, universe);
                if (or_json)
                    std::cout << json{{"order", or_kind}, {"set", s.elements()}, {"rank", rk}}.dump(2) << "\n";
                else
                    std::cout << rk << "\n";
                return 0;
            }
            if (or_n == 0) throw std::runtime_error("order needs --n (segment) or --rank-of");
            const ucf::Family seg = ucf::initial_segment(kind, or_k, or_n, universe);
            if (or_json)
                std::cout << json{{"order", or_kind}, {"k", or_k}, {"n", or_n}, {"sets", family_json(seg)}}.dump(2)
                          << "\n";
            else
                write_text(or_out, seg.format());
            return 0;
        }

        if (sh->parsed()) {
            json doc;
            std::string plain;
            if (sh_op == "kkmin") {
                if (sh_universe == 0 && sh_t > 0) sh_universe = sh_t;
                const std::uint64_t v = ucf::kk_min_upper_shadow(sh_m, sh_r, sh_universe);
                doc = {{"op", sh_op}, {"m", sh_m}, {"r", sh_r}, {"p", sh_universe}, {"count", v}};
                plain = std::to_string(v) + "\n";
            } else if (sh_op == "delta") {
                const ucf::Rational d = ucf::delta_proportion(sh_s, sh_k, sh_t);
                doc = {{"op", sh_op}, {"s", sh_s}, {"k", sh_k}, {"t", sh_t},
                       {"num", d.num},  {"den", d.den}, {"value", d.to_string()}};
                plain = d.to_string() + "\n";
            } else {
                if (sh_universe == 0) throw std::runtime_error("shadow needs --universe");
                const ucf::Family fam = read_family(sh_input);
                const ucf::UniformFamily uf = ucf::UniformFamily::from_family(fam, sh_universe);
                auto family_text = [](const ucf::UniformFamily& u) {
                    std::string out;
                    for (const ucf::ElementSet& s : u.members) {
                        const std::vector<int> e = s.elements();
                        for (std::size_t i = 0; i < e.size(); ++i)
                            out += (i ? " " : "") + std::to_string(e[i]);
                        out += "\n";
                    }
                    return out;
                };
                if (sh_op == "lower") {
                    const ucf::UniformFamily res = ucf::lower_shadow(uf);
                    doc = {{"op", sh_op}, {"size", res.size()}};
                    plain = family_text(res);
                } else if (sh_op == "upper") {
                    const ucf::UniformFamily res = ucf::iterated_upper_shadow(uf, sh_iterations);
                    doc = {{"op", sh_op}, {"iterations", sh_iterations}, {"size", res.size()}};
                    plain = family_text(res);
                } else if (sh_op == "total-count") {
                    const std::uint64_t v = ucf::total_upper_shadow_count(uf);
                    doc = {{"op", sh_op}, {"count", v}};
                    plain = std::to_string(v) + "\n";
                } else if (sh_op == "total-members") {
                    std::string out;
                    for (const ucf::ElementSet& s : ucf::total_upper_shadow_members(uf)) {
                        const std::vector<int> e = s.elements();
                        for (std::size_t i = 0; i < e.size(); ++i)
                            out += (i ? " " : "") + std::to_string(e[i]);
                        out += "\n";
                    }
                    doc = {{"op", sh_op}, {"count", ucf::total_upper_shadow_count(uf)}};
                    plain = out;
                } else if (sh_op == "complement") {
                    const ucf::UniformFamily res = ucf::complement_transform(uf);
                    doc = {{"op", sh_op}, {"size", res.size()}};
                    plain = family_text(res);
                } else {
                    throw std::runtime_error("unknown shadow op '" + sh_op + "'");
                }
            }
            if (sh_json)
                std::cout << doc.dump(2) << "\n";
            else
                std::cout << plain;
            return 0;
        }

        if (co->parsed()) {
            ucf::Construction c = [&] {
                if (co_kind == "all") return ucf::Construction{ucf::ConstructionKind::AllKSets, co_t, co_k, 0,
                                                               ucf::all_ksets(co_t, co_k),
                                                               ucf::up_set_size(co_t, co_k)};
                if (co_kind == "minus") return ucf::minus_construction(co_t, co_k, co_l);
                if (co_kind == "plus") return ucf::plus_construction(co_t, co_k, co_l);
                if (co_kind == "colex")
                    return ucf::segment_construction(ucf::ConstructionKind::ColexSegment, co_k, co_n);
                if (co_kind == "maxlex")
                    return ucf::segment_construction(ucf::ConstructionKind::MaxLexSegment, co_k, co_n);
                throw std::runtime_error("unknown construction kind '" + co_kind + "'");
            }();
            json doc{{"kind", ucf::to_string(c.kind)},
                     {"t", c.t},
                     {"k", c.k},
                     {"l", c.l},
                     {"n", c.family.size()},
                     {"predicted_size", c.predicted_size ? json(*c.predicted_size) : json(nullptr)}};
            std::cout << doc.dump(2) << "\n";
            if (!co_out.empty()) write_text(co_out, c.family.format());
            return 0;
        }

        if (fm->parsed()) {
            fm_cfg.prune_bound = !fm_no_bound;
            fm_cfg.prune_ground = !fm_no_ground;
            fm_cfg.checkpoint_path = fm_checkpoint;
            if (fm_seed_kind == "maxlex")
                fm_cfg.seed_kind = ucf::SeedKind::MaxLexSegment;
            else if (fm_seed_kind == "colex")
                fm_cfg.seed_kind = ucf::SeedKind::ColexSegment;
            else if (fm_seed_kind == "value")
                fm_cfg.seed_kind = ucf::SeedKind::ExplicitValue;
            else
                throw std::runtime_error("unknown seed kind '" + fm_seed_kind + "'");

            const ucf::SearchOutcome res = ucf::f_min(fm_cfg);
            json witnesses = json::array();
            for (const ucf::Family& w : res.witnesses) witnesses.push_back(family_json(w));
            json doc{{"n", fm_cfg.n},
                     {"k", fm_cfg.k},
                     {"minimum", res.minimum},
                     {"complete", res.complete},
                     {"witnesses", witnesses},
                     {"witness_classes", res.witness_classes},
                     {"witness_truncated", res.witness_truncated},
                     {"nodes_explored", res.nodes_explored},
                     {"pruned_by_bound", res.pruned_by_bound},
                     {"pruned_by_canonicity", res.pruned_by_canonicity},
                     {"pruned_by_lemma3", res.pruned_by_lemma3}};
            std::cout << doc.dump(2) << "\n";
            return 0;
        }

        if (ve->parsed()) return run_verify(va);
    } catch (const ucf::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
