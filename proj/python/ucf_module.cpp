#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "ucf/canonical.hpp"
#include "ucf/closure.hpp"
#include "ucf/constructions.hpp"
#include "ucf/harness.hpp"
#include "ucf/orders.hpp"
#include "ucf/search.hpp"
#include "ucf/shadows.hpp"

namespace py = pybind11;

namespace {

using IntSet = std::vector<int>;
using IntSets = std::vector<std::vector<int>>;

ucf::ElementSet to_set(const IntSet& labels) { return ucf::ElementSet::from_labels(labels); }

ucf::Family to_family(const IntSets& sets) {
    if (sets.empty()) throw std::domain_error("family needs at least one set");
    ucf::Family f(static_cast<int>(sets.front().size()));
    for (const IntSet& s : sets) f.push_back_checked(to_set(s));
    return f;
}

IntSets from_family(const ucf::Family& f) {
    IntSets out;
    out.reserve(f.size());
    for (const ucf::ElementSet& s : f.sets()) out.push_back(s.elements());
    return out;
}

IntSets from_sets(const std::vector<ucf::ElementSet>& v) {
    IntSets out;
    out.reserve(v.size());
    for (const ucf::ElementSet& s : v) out.push_back(s.elements());
    return out;
}

py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

ucf::OrderKind kind_of(const std::string& name) { return ucf::order_from_string(name); }

std::optional<int> opt_universe(int universe) {
    return universe > 0 ? std::optional<int>(universe) : std::nullopt;
}

}  // namespace

PYBIND11_MODULE(_ucf, m) {
    m.doc() = "union-closed set family toolkit (closures, set orders, shadows, exact minimizer)";

    // closures
    m.def("close", [](const IntSets& sets) { return from_sets(ucf::close(to_family(sets)).members); },
          py::arg("sets"), "members of the union-closed family generated by the sets");
    m.def("close_size", [](const IntSets& sets) { return ucf::close_size(to_family(sets)); }, py::arg("sets"));
    m.def("closure_contains",
          [](const IntSets& sets, const IntSet& s) { return ucf::closure_contains(to_family(sets), to_set(s)); },
          py::arg("sets"), py::arg("candidate"));
    m.def("blockers",
          [](const IntSets& sets, int x) { return ucf::blockers(to_family(sets), x).count; },
          py::arg("sets"), py::arg("x"), "count of size->=k subsets of the ground set blocked at x");
    m.def("distinguishing_set",
          [](const IntSets& sets, int s) { return ucf::distinguishing_set(to_family(sets), s).elements(); },
          py::arg("sets"), py::arg("s"));
    m.def("extend_count",
          [](const IntSets& h, const IntSet& a) {
              std::vector<ucf::ElementSet> hh;
              hh.reserve(h.size());
              for (const IntSet& s : h) hh.push_back(to_set(s));
              return ucf::extend_count(hh, to_set(a));
          },
          py::arg("collection"), py::arg("a"));

    // isomorphism
    m.def("canonicalize",
          [](const IntSets& sets) { return from_family(ucf::canonicalize(to_family(sets)).family); },
          py::arg("sets"));
    m.def("is_isomorphic",
          [](const IntSets& a, const IntSets& b) { return ucf::is_isomorphic(to_family(a), to_family(b)); },
          py::arg("a"), py::arg("b"));

    // orders
    m.def("compare",
          [](const std::string& order, const IntSet& a, const IntSet& b, int universe) {
              const auto c = ucf::compare(kind_of(order), to_set(a), to_set(b), opt_universe(universe));
              return c < 0 ? -1 : (c > 0 ? 1 : 0);
          },
          py::arg("order"), py::arg("a"), py::arg("b"), py::arg("universe") = 0);
    m.def("initial_segment",
          [](const std::string& order, int k, std::uint64_t n, int universe) {
              return from_family(ucf::initial_segment(kind_of(order), k, n, opt_universe(universe)));
          },
          py::arg("order"), py::arg("k"), py::arg("n"), py::arg("universe") = 0);
    m.def("rank",
          [](const std::string& order, const IntSet& a, int universe) {
              return ucf::rank(kind_of(order), to_set(a), opt_universe(universe));
          },
          py::arg("order"), py::arg("set"), py::arg("universe") = 0);

    // shadows
    m.def("lower_shadow",
          [](const IntSets& sets, int r, int p) {
              std::vector<ucf::ElementSet> v;
              for (const IntSet& s : sets) v.push_back(to_set(s));
              return from_sets(ucf::lower_shadow(ucf::UniformFamily(r, p, v)).members);
          },
          py::arg("sets"), py::arg("r"), py::arg("universe"));
    m.def("upper_shadow",
          [](const IntSets& sets, int r, int p, int times) {
              std::vector<ucf::ElementSet> v;
              for (const IntSet& s : sets) v.push_back(to_set(s));
              return from_sets(ucf::iterated_upper_shadow(ucf::UniformFamily(r, p, v), times).members);
          },
          py::arg("sets"), py::arg("r"), py::arg("universe"), py::arg("times") = 1);
    m.def("total_upper_shadow_count",
          [](const IntSets& sets, int r, int p) {
              std::vector<ucf::ElementSet> v;
              for (const IntSet& s : sets) v.push_back(to_set(s));
              return ucf::total_upper_shadow_count(ucf::UniformFamily(r, p, v));
          },
          py::arg("sets"), py::arg("r"), py::arg("universe"));
    m.def("complement_transform",
          [](const IntSets& sets, int r, int p) {
              std::vector<ucf::ElementSet> v;
              for (const IntSet& s : sets) v.push_back(to_set(s));
              return from_sets(ucf::complement_transform(ucf::UniformFamily(r, p, v)).members);
          },
          py::arg("sets"), py::arg("r"), py::arg("universe"));
    m.def("kk_min_upper_shadow", &ucf::kk_min_upper_shadow, py::arg("m"), py::arg("r"), py::arg("p"));
    m.def("delta_proportion",
          [](std::uint64_t s, int k, int t) {
              const ucf::Rational d = ucf::delta_proportion(s, k, t);
              return py::make_tuple(d.num, d.den);
          },
          py::arg("s"), py::arg("k"), py::arg("t"), "exact (numerator, denominator)");

    // constructions
    m.def("all_ksets", [](int t, int k) { return from_family(ucf::all_ksets(t, k)); }, py::arg("t"), py::arg("k"));
    m.def("up_set_size", &ucf::up_set_size, py::arg("t"), py::arg("k"));
    m.def("theorem2_values",
          [](std::uint64_t n) {
              const ucf::Theorem2Values v = ucf::theorem2_values(n);
              py::dict d;
              d["t"] = v.t;
              d["r"] = v.r;
              d["f"] = v.f ? py::cast(*v.f) : py::none().cast<py::object>();
              return d;
          },
          py::arg("n"));
    m.def("s_l", &ucf::s_l, py::arg("l"), py::arg("k"));
    auto construction_dict = [](const ucf::Construction& c) {
        py::dict d;
        d["kind"] = ucf::to_string(c.kind);
        d["t"] = c.t;
        d["k"] = c.k;
        d["l"] = c.l;
        d["family"] = from_family(c.family);
        d["predicted_size"] = c.predicted_size ? py::cast(*c.predicted_size) : py::none().cast<py::object>();
        return d;
    };
    m.def("minus_construction",
          [construction_dict](int t, int k, std::uint64_t l) { return construction_dict(ucf::minus_construction(t, k, l)); },
          py::arg("t"), py::arg("k"), py::arg("l"));
    m.def("plus_construction",
          [construction_dict](int t, int k, std::uint64_t l) { return construction_dict(ucf::plus_construction(t, k, l)); },
          py::arg("t"), py::arg("k"), py::arg("l"));
    m.def("counterexample_pair", [] {
        const auto [a, b] = ucf::counterexample_pair();
        return py::make_tuple(from_family(a), from_family(b));
    });

    // search
    m.def("fmin",
          [](std::uint64_t n, int k, int ground_cap, std::uint64_t node_budget, int workers,
             const std::string& checkpoint, bool prune_bound, bool prune_ground, int canonicity_interval) {
              ucf::SearchConfig cfg;
              cfg.n = n;
              cfg.k = k;
              cfg.ground_cap = ground_cap;
              cfg.node_budget = node_budget;
              cfg.parallel_width = workers;
              cfg.checkpoint_path = checkpoint;
              cfg.prune_bound = prune_bound;
              cfg.prune_ground = prune_ground;
              cfg.canonicity_interval = canonicity_interval;
              const ucf::SearchOutcome res = [&] {
                  py::gil_scoped_release release;
                  return ucf::f_min(cfg);
              }();
              py::dict d;
              d["minimum"] = res.minimum;
              d["complete"] = res.complete;
              py::list wit;
              for (const ucf::Family& w : res.witnesses) wit.append(from_family(w));
              d["witnesses"] = wit;
              d["witness_classes"] = res.witness_classes;
              d["witness_truncated"] = res.witness_truncated;
              d["nodes_explored"] = res.nodes_explored;
              d["pruned_by_bound"] = res.pruned_by_bound;
              d["pruned_by_canonicity"] = res.pruned_by_canonicity;
              d["pruned_by_lemma3"] = res.pruned_by_lemma3;
              return d;
          },
          py::arg("n"), py::arg("k"), py::arg("ground_cap") = 0, py::arg("node_budget") = 0,
          py::arg("workers") = 1, py::arg("checkpoint") = std::string(), py::arg("prune_bound") = true,
          py::arg("prune_ground") = true, py::arg("canonicity_interval") = 0);

    // verification suites
    m.def("check_counterexample", [] { return json_to_py(ucf::to_json(ucf::check_counterexample())); });
    m.def("check_theorem2",
          [](int n_max) {
              nlohmann::json arr = nlohmann::json::array();
              for (const ucf::Report& r : ucf::check_theorem2(n_max)) arr.push_back(ucf::to_json(r));
              return json_to_py(arr);
          },
          py::arg("n_max") = 8);
    m.def("check_conjecture7",
          [](int k, int t) { return json_to_py(ucf::to_json(ucf::check_conjecture7(k, t))); }, py::arg("k"),
          py::arg("t"));
    m.def("check_conjecture8",
          [](int k, int n_max) {
              nlohmann::json arr = nlohmann::json::array();
              for (const ucf::Report& r : ucf::check_conjecture8(k, n_max)) arr.push_back(ucf::to_json(r));
              return json_to_py(arr);
          },
          py::arg("k"), py::arg("n_max"));
    m.def("check_prop9", [](int k) { return json_to_py(ucf::to_json(ucf::check_prop9(k))); }, py::arg("k"));
    m.def("check_lemma_properties",
          [](std::uint64_t trials, std::uint64_t seed, std::uint64_t kk_trials) {
              nlohmann::json arr = nlohmann::json::array();
              for (const ucf::Report& r : ucf::check_lemma_properties(trials, seed, kk_trials))
                  arr.push_back(ucf::to_json(r));
              return json_to_py(arr);
          },
          py::arg("trials") = 200, py::arg("seed") = 12345, py::arg("kk_trials") = 0);

    // family text format round-trip
    m.def("parse_family", [](const std::string& text) { return from_family(ucf::Family::parse_string(text)); },
          py::arg("text"));
    m.def("format_family", [](const IntSets& sets) { return to_family(sets).format(); }, py::arg("sets"));
}
