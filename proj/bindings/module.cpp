// Python bindings for the geometry classification library.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kodim/bundle4.hpp"
#include "kodim/catalog_io.hpp"
#include "kodim/domination.hpp"
#include "kodim/kappa_engine.hpp"
#include "kodim/volume_rules.hpp"

namespace py = pybind11;
using namespace kodim;

namespace {

std::string diagnostics_message(const std::vector<Diagnostic>& diagnostics) {
    std::string msg = "invalid catalog:";
    for (const Diagnostic& d : diagnostics) msg += "\n  " + format_diagnostic(d);
    return msg;
}

Catalog parse_or_throw(std::string_view text) {
    CatalogParseResult result = parse_catalog(text);
    if (!result.ok()) throw InputError(diagnostics_message(result.diagnostics));
    return std::move(*result.catalog);
}

Catalog extend_or_throw(const Catalog& base, std::string_view text) {
    CatalogParseResult result = extend_catalog(base, text);
    if (!result.ok()) throw InputError(diagnostics_message(result.diagnostics));
    return std::move(*result.catalog);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Axiomatic Kodaira-dimension classification of model geometries";

    py::register_exception<NotFoundError>(m, "NotFoundError", PyExc_KeyError);
    py::register_exception<DimensionMismatchError>(m, "DimensionMismatchError", PyExc_ValueError);
    py::register_exception<NoCompactRepresentativeError>(m, "NoCompactRepresentativeError",
                                                         PyExc_ValueError);
    py::register_exception<InconsistentRulesError>(m, "InconsistentRulesError",
                                                   PyExc_RuntimeError);
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

    py::class_<ExtKappa>(m, "ExtKappa")
        .def_static("bottom", &ExtKappa::bottom)
        .def_static("finite", &ExtKappa::finite, py::arg("numerator"))
        .def_static(
            "parse",
            [](const std::string& text) {
                auto v = ExtKappa::parse(text);
                if (!v) throw InputError("cannot parse kappa value '" + text + "'");
                return *v;
            },
            py::arg("text"))
        .def_property_readonly("is_bottom", &ExtKappa::is_bottom)
        .def_property_readonly("is_finite", &ExtKappa::is_finite)
        .def_property_readonly("numerator", &ExtKappa::numerator)
        .def("__str__", &ExtKappa::str)
        .def("__repr__", [](ExtKappa v) { return "ExtKappa(" + v.str() + ")"; })
        .def("__hash__", [](ExtKappa v) { return v.is_bottom() ? -1 : v.numerator(); })
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self < py::self)
        .def(py::self <= py::self)
        .def(py::self > py::self)
        .def(py::self >= py::self)
        .def(py::self + py::self);

    py::class_<Decomposition>(m, "Decomposition")
        .def_readonly("fiber", &Decomposition::fiber)
        .def_readonly("base", &Decomposition::base)
        .def_readonly("note", &Decomposition::note)
        .def_property_readonly("is_product", &Decomposition::is_product)
        .def("__repr__", [](const Decomposition& d) {
            return "Decomposition(" + d.fiber + " | " + d.base + ")";
        });

    py::class_<Geometry>(m, "Geometry")
        .def_readonly("name", &Geometry::name)
        .def_readonly("dim", &Geometry::dim)
        .def_property_readonly(
            "geometry_class",
            [](const Geometry& g) { return std::string(class_tag(g.cls)); })
        .def_readonly("decompositions", &Geometry::decompositions)
        .def_readonly("has_compact_representative", &Geometry::has_compact_representative)
        .def_readonly("aliases", &Geometry::aliases)
        .def_readonly("note", &Geometry::note)
        .def("__repr__", [](const Geometry& g) {
            return "Geometry(" + g.name + ", dim=" + std::to_string(g.dim) + ")";
        });

    py::class_<Catalog>(m, "Catalog")
        .def_static("builtin", &load_builtin)
        .def_static("parse", &parse_or_throw, py::arg("text"))
        .def("extend", &extend_or_throw, py::arg("text"))
        .def("lookup", &Catalog::lookup, py::arg("name"),
             py::return_value_policy::reference_internal)
        .def("find",
             [](const Catalog& c, const std::string& name) -> std::optional<Geometry> {
                 const Geometry* g = c.find(name);
                 if (!g) return std::nullopt;
                 return *g;
             },
             py::arg("name"))
        .def("names_in_dimension",
             [](const Catalog& c, int dim) {
                 std::vector<std::string> names;
                 for (const Geometry* g : c.in_dimension(dim)) names.push_back(g->name);
                 return names;
             },
             py::arg("dim"))
        .def("serialize", [](const Catalog& c) { return serialize_catalog(c); })
        .def_property_readonly("max_dimension", &Catalog::max_dimension)
        .def("__len__", &Catalog::size)
        .def("__contains__",
             [](const Catalog& c, const std::string& name) { return c.find(name) != nullptr; })
        .def("__eq__", [](const Catalog& a, const Catalog& b) { return a == b; });

    py::class_<KappaResult>(m, "KappaResult")
        .def_readonly("value", &KappaResult::value)
        .def_property_readonly(
            "axiom", [](const KappaResult& r) { return std::string(axiom_label(r.axiom)); })
        .def_readonly("witness", &KappaResult::witness)
        .def("__repr__",
             [](const KappaResult& r) { return "KappaResult(" + r.value.str() + ")"; });

    py::class_<ManifoldKappa>(m, "ManifoldKappa")
        .def_readonly("result", &ManifoldKappa::result)
        .def_readonly("chosen", &ManifoldKappa::chosen)
        .def_readonly("chosen_value", &ManifoldKappa::chosen_value);

    py::class_<KappaEngine>(m, "KappaEngine")
        .def(py::init<const Catalog&>(), py::arg("catalog"), py::keep_alive<1, 2>())
        .def("kappa", &KappaEngine::kappa, py::arg("name"))
        .def(
            "kappa_manifold",
            [](const KappaEngine& engine, const std::string& geometry,
               const std::vector<std::string>& cover_chain,
               std::optional<std::size_t> chosen_decomposition) {
                ManifoldSpec spec;
                spec.geometry = geometry;
                spec.cover_chain = cover_chain;
                spec.chosen_decomposition = chosen_decomposition;
                return engine.kappa_manifold(spec);
            },
            py::arg("geometry"), py::arg("cover_chain") = std::vector<std::string>{},
            py::arg("chosen_decomposition") = std::nullopt)
        .def("classify_table", [](const KappaEngine& engine, int dim) {
            py::dict table;
            for (const auto& [kappa, names] : engine.classify_table(dim)) {
                table[py::str(kappa.str())] = names;
            }
            return table;
        }, py::arg("dim"));

    py::enum_<VolumeStatus>(m, "VolumeStatus")
        .value("Zero", VolumeStatus::Zero)
        .value("Positive", VolumeStatus::Positive)
        .value("Unknown", VolumeStatus::Unknown);

    py::class_<RuleMatch>(m, "RuleMatch")
        .def_readonly("rule", &RuleMatch::rule)
        .def_readonly("premise", &RuleMatch::premise)
        .def("__repr__",
             [](const RuleMatch& r) { return "RuleMatch(" + r.rule + ": " + r.premise + ")"; });

    py::class_<VolumeVerdict>(m, "VolumeVerdict")
        .def_readonly("status", &VolumeVerdict::status)
        .def_readonly("trace", &VolumeVerdict::trace);

    py::class_<VolumeClassifier>(m, "VolumeClassifier")
        .def(py::init<const Catalog&>(), py::arg("catalog"), py::keep_alive<1, 2>())
        .def("status", &VolumeClassifier::status, py::arg("name"));

    py::enum_<DominationStatus>(m, "DominationStatus")
        .value("ForbiddenByKappa", DominationStatus::ForbiddenByKappa)
        .value("ForbiddenByVolume", DominationStatus::ForbiddenByVolume)
        .value("NotForbidden", DominationStatus::NotForbidden);

    py::class_<Obstruction>(m, "Obstruction")
        .def_readonly("id", &Obstruction::id)
        .def_readonly("detail", &Obstruction::detail);

    py::class_<DominationVerdict>(m, "DominationVerdict")
        .def_readonly("status", &DominationVerdict::status)
        .def_readonly("reasons", &DominationVerdict::reasons);

    py::class_<PreorderLevel>(m, "PreorderLevel")
        .def_readonly("kappa", &PreorderLevel::kappa)
        .def_readonly("geometries", &PreorderLevel::geometries);

    py::class_<DominationOracle>(m, "DominationOracle")
        .def(py::init<const Catalog&>(), py::arg("catalog"), py::keep_alive<1, 2>())
        .def("check", &DominationOracle::check, py::arg("m"), py::arg("n"))
        .def("preorder_levels", &DominationOracle::preorder_levels, py::arg("dim"))
        .def("preorder_dot", &DominationOracle::preorder_dot, py::arg("dim"))
        .def("preorder_json", &DominationOracle::preorder_json, py::arg("dim"));

    py::class_<CrosscheckFailure>(m, "CrosscheckFailure")
        .def_readonly("name", &CrosscheckFailure::name)
        .def_readonly("kappa", &CrosscheckFailure::kappa)
        .def_readonly("volume", &CrosscheckFailure::volume)
        .def_readonly("problem", &CrosscheckFailure::problem);

    py::class_<CrosscheckReport>(m, "CrosscheckReport")
        .def_readonly("dim", &CrosscheckReport::dim)
        .def_readonly("checked", &CrosscheckReport::checked)
        .def_readonly("failures", &CrosscheckReport::failures)
        .def_property_readonly("ok", &CrosscheckReport::ok);

    m.def("volume_kappa_crosscheck", &volume_kappa_crosscheck, py::arg("catalog"),
          py::arg("dim"));

    py::enum_<PieceTag>(m, "PieceTag")
        .value("H3", PieceTag::H3)
        .value("H2xR", PieceTag::H2xR)
        .value("SL2t", PieceTag::SL2t)
        .value("Other", PieceTag::Other);

    py::class_<BundleFactor>(m, "BundleFactor")
        .def_static("circle", &BundleFactor::circle)
        .def_static("surface", &BundleFactor::surface, py::arg("genus"))
        .def_static("three_manifold", &BundleFactor::three_manifold, py::arg("pieces"),
                    py::arg("virtually_s2xs1_sum") = false)
        .def_static("parse", &BundleFactor::parse, py::arg("text"))
        .def_property_readonly("dim", &BundleFactor::dim)
        .def("__str__", &BundleFactor::str)
        .def("__repr__", [](const BundleFactor& f) { return "BundleFactor(" + f.str() + ")"; })
        .def("__eq__", [](const BundleFactor& a, const BundleFactor& b) { return a == b; });

    m.def("bundle_kappa", &bundle_kappa, py::arg("fiber"), py::arg("base"));
    m.def(
        "bundle_kappa",
        [](const std::string& fiber, const std::string& base) {
            return bundle_kappa(BundleFactor::parse(fiber), BundleFactor::parse(base));
        },
        py::arg("fiber"), py::arg("base"));
    m.def("bundle_volume_positive", &bundle_volume_positive, py::arg("fiber"), py::arg("base"));
    m.def(
        "bundle_volume_positive",
        [](const std::string& fiber, const std::string& base) {
            return bundle_volume_positive(BundleFactor::parse(fiber), BundleFactor::parse(base));
        },
        py::arg("fiber"), py::arg("base"));
}
