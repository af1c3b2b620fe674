// Python face of the library. Structured results cross as plain dicts and
// lists; whole constructions cross as JSON text so the Python side and the
// command line tool read the exact same shapes.

#include "orderlab/coloring.hpp"
#include "orderlab/immunity.hpp"
#include "orderlab/instances.hpp"
#include "orderlab/json_io.hpp"
#include "orderlab/opponent_script.hpp"
#include "orderlab/pairing.hpp"
#include "orderlab/partial_order.hpp"
#include "orderlab/priority.hpp"
#include "orderlab/reductions.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace py = pybind11;
using namespace orderlab;
using json = nlohmann::json;

namespace {

py::dict set_property_dict(const SetPropertyResult& r) {
    py::dict d;
    d["ok"] = r.ok;
    d["witness"] = r.witness;
    d["detail"] = r.detail;
    return d;
}

py::dict classification_dict(const ElementClassification& cls) {
    py::dict d;
    d["tailWindow"] = cls.tailWindow;
    py::list kinds;
    for (auto k : cls.kind) kinds.append(std::string(to_string(k)));
    d["kinds"] = kinds;
    py::list stab;
    for (const auto& s : cls.stabilizationStage) {
        if (s) stab.append(*s);
        else stab.append(py::none());
    }
    d["stabilizationStage"] = stab;
    return d;
}

// Same shapes the command line reader takes: a bare array of scripts, or an
// object carrying one under "scripts".
std::vector<OpponentScript> scripts_from_text(const std::string& text) {
    json j = json::parse(text);
    if (j.is_object() && j.contains("scripts")) j = j["scripts"];
    if (!j.is_array()) throw std::invalid_argument("scripts: expected an array");
    std::vector<OpponentScript> out;
    for (const auto& sj : j) out.push_back(io::script_from_json(sj));
    return out;
}

std::string construct_stable(const std::string& opponentsJson, int maxStage) {
    auto run = priority::build_stable_semitransitive(scripts_from_text(opponentsJson), maxStage);
    json out = {{"transcript", io::to_json(run.transcript)},
                {"coloring", io::to_json(run.coloring)},
                {"finalSets", run.finalSets},
                {"stabilizedAt", run.stabilizedAt}};
    return io::dump_stable(out);
}

std::string construct_weakly_stable_order(const std::string& opponentsJson, int maxStage) {
    auto opp = io::order_opponents_from_json(json::parse(opponentsJson));
    auto run = priority::build_weakly_stable_order(opp, maxStage);
    json out = {{"transcript", io::to_json(run.transcript)},
                {"order", io::to_json(run.order)},
                {"finalSets", run.finalSets},
                {"stabilizedAt", run.stabilizedAt}};
    return io::dump_stable(out);
}

std::string construct_ce_set(const std::string& functionalsJson, int maxStage) {
    auto run = priority::build_ce_set(scripts_from_text(functionalsJson), maxStage);
    json out = {{"transcript", io::to_json(run.transcript)},
                {"W", run.W},
                {"enumeratedAt", run.enumeratedAt},
                {"codes", run.codes},
                {"columnFloor", run.columnFloor}};
    return io::dump_stable(out);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "semi-transitive colorings, stable orders, budgeted enumerations";

    py::class_<ColoringPrefix>(m, "ColoringPrefix")
        .def(py::init<int, int, int, std::vector<int>>(), py::arg("size"), py::arg("arity"),
             py::arg("colors"), py::arg("upper"))
        .def_static("constant", &ColoringPrefix::constant, py::arg("size"), py::arg("arity"),
                    py::arg("colors"), py::arg("color"))
        .def("size", &ColoringPrefix::size)
        .def("arity", &ColoringPrefix::arity)
        .def("colors", &ColoringPrefix::colors)
        .def("pair", &ColoringPrefix::pair, py::arg("x"), py::arg("y"))
        .def("upper", &ColoringPrefix::upper)
        .def("__repr__", [](const ColoringPrefix& f) {
            return "<ColoringPrefix size=" + std::to_string(f.size()) + ">";
        });

    py::class_<PartialOrderPrefix>(m, "PartialOrderPrefix")
        .def_static("from_relation", &PartialOrderPrefix::from_relation, py::arg("leq"))
        .def("size", &PartialOrderPrefix::size)
        .def("leq", &PartialOrderPrefix::leq, py::arg("x"), py::arg("y"))
        .def("incomparable", &PartialOrderPrefix::incomparable, py::arg("x"), py::arg("y"))
        .def("relation", &PartialOrderPrefix::relation);

    py::class_<LinearOrderPrefix>(m, "LinearOrderPrefix")
        .def_static("from_relation", &LinearOrderPrefix::from_relation, py::arg("leq"))
        .def("size", &LinearOrderPrefix::size)
        .def("leq", &LinearOrderPrefix::leq, py::arg("x"), py::arg("y"))
        .def("less", &LinearOrderPrefix::less, py::arg("x"), py::arg("y"))
        .def("as_partial", &LinearOrderPrefix::as_partial);

    m.def("pair_encode", &Pairing::encode, py::arg("x"), py::arg("y"));
    m.def("pair_decode", &Pairing::decode, py::arg("code"));
    m.def("column_of", &Pairing::column_of, py::arg("code"));
    m.def("column_floor", &priority::column_floor, py::arg("code"));

    m.def(
        "check_semi_transitive",
        [](const ColoringPrefix& f) -> std::optional<std::tuple<int, int, int>> {
            auto v = check_semi_transitive(f);
            if (!v) return std::nullopt;
            return std::make_tuple(v->x, v->y, v->z);
        },
        py::arg("f"), "Least violating triple, or None when semi-transitive.");
    m.def("close_semitransitive", &reductions::close_semitransitive, py::arg("f"));
    m.def("linearize", &reductions::linearize, py::arg("g"));
    m.def(
        "witness_path",
        [](const ColoringPrefix& f, int x, int y,
           int color) -> std::optional<std::vector<int>> {
            auto w = reductions::witness_path(f, x, y, color);
            if (!w) return std::nullopt;
            return w->points;
        },
        py::arg("f"), py::arg("x"), py::arg("y"), py::arg("color"));
    m.def("induced_linear_order", &reductions::induced_linear_order, py::arg("h"));
    m.def("pullback_h_to_g", &reductions::pullback_h_to_g, py::arg("H"), py::arg("g"),
          py::arg("h"));
    m.def("pullback_g_to_f", &reductions::pullback_g_to_f, py::arg("H"), py::arg("f"),
          py::arg("g"));
    m.def(
        "check_homogeneous",
        [](const std::vector<int>& S, const ColoringPrefix& f) {
            return set_property_dict(check_homogeneous(S, f));
        },
        py::arg("S"), py::arg("f"));
    m.def(
        "check_pseudo_homogeneous",
        [](const std::vector<int>& S, const ColoringPrefix& f) {
            return set_property_dict(check_pseudo_homogeneous(S, f));
        },
        py::arg("S"), py::arg("f"));
    m.def(
        "classify_elements",
        [](const PartialOrderPrefix& p, int tailWindow) {
            return classification_dict(classify_elements(p, tailWindow));
        },
        py::arg("p"), py::arg("tail_window"));
    m.def(
        "solve_stable_linear",
        [](const LinearOrderPrefix& l, int tailWindow) {
            auto sol = reductions::solve_stable_linear(l, classify_elements(l.as_partial(),
                                                                            tailWindow));
            py::dict d;
            d["ascending"] = sol.ascending;
            d["elements"] = sol.elements;
            return d;
        },
        py::arg("l"), py::arg("tail_window"),
        "Longest monotone candidate over the stably classified elements.");

    m.def(
        "kenum_to_subset",
        [](const std::vector<std::vector<std::int64_t>>& blocks, int k,
           const std::vector<std::int64_t>& A, int threshold) {
            immunity::ArrayOfSets arr;
            arr.kind = immunity::ArrayKind::KEnum;
            arr.k = k;
            arr.blocks = blocks;
            return immunity::kenum_to_subset(arr, A, threshold);
        },
        py::arg("blocks"), py::arg("k"), py::arg("A"), py::arg("threshold") = 3);

    m.def("construct_stable", &construct_stable, py::arg("opponents_json"), py::arg("max_stage"),
          "Two-class coloring construction; returns the run as JSON text.");
    m.def("construct_weakly_stable_order", &construct_weakly_stable_order,
          py::arg("opponents_json"), py::arg("max_stage"),
          "Three-class order construction; returns the run as JSON text.");
    m.def("construct_ce_set", &construct_ce_set, py::arg("functionals_json"),
          py::arg("max_stage"), "Column-budgeted enumeration; returns the run as JSON text.");

    m.def("random_coloring", &instances::random_coloring, py::arg("seed"), py::arg("size"),
          py::arg("colors") = 2);
    m.def("random_semitransitive", &instances::random_semitransitive, py::arg("seed"),
          py::arg("size"));
    m.def("random_order", &instances::random_order, py::arg("seed"), py::arg("size"));
    m.def("layered_order", &instances::layered_order, py::arg("seed"), py::arg("size"),
          py::arg("small_percent") = 50);
}
