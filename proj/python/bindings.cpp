#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hodgechase/branch.hpp"
#include "hodgechase/curve.hpp"
#include "hodgechase/errors.hpp"
#include "hodgechase/exact_chase.hpp"
#include "hodgechase/hodge.hpp"
#include "hodgechase/json_io.hpp"
#include "hodgechase/profiles.hpp"
#include "hodgechase/reports.hpp"
#include "hodgechase/scenario.hpp"
#include "hodgechase/wps.hpp"

namespace py = pybind11;
using namespace hodgechase;

namespace {

py::object to_fraction(const Rational& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(r.num(), r.den());
}

BigradedDims dims_from_dict(const py::dict& d) {
    BigradedDims out;
    for (const auto& item : d) {
        const auto pq = item.first.cast<std::pair<int, int>>();
        out.set(pq.first, pq.second, item.second.cast<long>());
    }
    return out;
}

py::dict dims_to_dict(const BigradedDims& d) {
    py::dict out;
    for (const auto& [pq, dim] : d.entries())
        out[py::make_tuple(pq.p, pq.q)] = dim;
    return out;
}

CurveData curve_from_parts(const std::vector<std::pair<std::string, long>>& components,
                           const std::vector<std::pair<std::string, std::string>>& nodes) {
    CurveData c;
    for (const auto& [label, genus] : components)
        c.components.push_back({label, genus});
    c.nodes = nodes;
    c.validate();
    return c;
}

}  // namespace

PYBIND11_MODULE(_hodgechase, m) {
    m.doc() = "exact dimension chases for degenerations of I-surfaces";

    static py::exception<Error> exc(m, "ChaseError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(exc, e.what());
        }
    });

    py::class_<HodgeType>(m, "HodgeType")
        .def(py::init(&make_hodge_type), py::arg("r"), py::arg("s"))
        .def_readonly("r", &HodgeType::r)
        .def_readonly("s", &HodgeType::s)
        .def("__str__", [](const HodgeType& t) { return to_string(t); })
        .def("__repr__",
             [](const HodgeType& t) {
                 return "HodgeType(" + std::to_string(t.r) + ", " + std::to_string(t.s) + ")";
             })
        .def("__hash__", [](const HodgeType& t) { return t.r * 8 + t.s; })
        .def(py::self == py::self)
        .def("__le__", &polarized_leq);
    m.def("polarized_leq", &polarized_leq, py::arg("a"), py::arg("b"));
    m.def("valid_hodge_type", &valid_hodge_type, py::arg("r"), py::arg("s"));

    py::class_<BigradedDims>(m, "BigradedDims")
        .def(py::init<>())
        .def(py::init(&dims_from_dict), py::arg("entries"))
        .def("at", &BigradedDims::at, py::arg("p"), py::arg("q"))
        .def("set", &BigradedDims::set, py::arg("p"), py::arg("q"), py::arg("dim"))
        .def("total", &BigradedDims::total)
        .def("symmetric", &BigradedDims::symmetric)
        .def("entries", &dims_to_dict)
        .def("__str__", &BigradedDims::str)
        .def("__repr__", [](const BigradedDims& d) { return "BigradedDims(" + d.str() + ")"; })
        .def(py::self == py::self)
        .def(py::self + py::self)
        .def_static("weight_one", &BigradedDims::weight_one, py::arg("genus"))
        .def_static("weight_zero", &BigradedDims::weight_zero, py::arg("dim"));
    m.def("hodge_type_of", &hodge_type_of, py::arg("h2"));
    m.def("format_diamond", &format_diamond, py::arg("h2"));

    py::class_<HodgePoset>(m, "HodgePoset")
        .def_readonly("elements", &HodgePoset::elements)
        .def_readonly("covers", &HodgePoset::covers)
        .def("leq", &HodgePoset::leq, py::arg("a"), py::arg("b"));
    m.def("build_poset", &build_poset);
    m.def("poset_dot", [] { return poset_dot(build_poset()); });

    py::class_<CurveData>(m, "CurveData")
        .def(py::init(&curve_from_parts), py::arg("components"),
             py::arg("nodes") = std::vector<std::pair<std::string, std::string>>{})
        .def_property_readonly("components",
                               [](const CurveData& c) {
                                   std::vector<std::pair<std::string, long>> out;
                                   for (const auto& comp : c.components)
                                       out.emplace_back(comp.label, comp.genus);
                                   return out;
                               })
        .def_readonly("nodes", &CurveData::nodes)
        .def("total_genus", &CurveData::total_genus)
        .def("node_count", &CurveData::node_count)
        .def("connected_components", &CurveData::connected_components)
        .def(py::self == py::self)
        .def_static("smooth", &CurveData::smooth, py::arg("label"), py::arg("genus"))
        .def_static("irreducible_nodal", &CurveData::irreducible_nodal, py::arg("label"),
                    py::arg("genus"), py::arg("self_nodes"))
        .def_static("cycle_of_rationals", &CurveData::cycle_of_rationals, py::arg("length"));
    m.def("curve_h1", &curve_h1, py::arg("curve"));
    m.def("curve_h0", &curve_h0, py::arg("curve"));

    py::enum_<CoverTopology>(m, "CoverTopology")
        .value("Connected", CoverTopology::Connected)
        .value("Split", CoverTopology::Split);
    py::class_<CoverGenus>(m, "CoverGenus")
        .def_readonly("genera", &CoverGenus::genera)
        .def("total", &CoverGenus::total)
        .def("split", &CoverGenus::split)
        .def("chi", &CoverGenus::chi)
        .def("__str__", &CoverGenus::display)
        .def(py::self == py::self);
    m.def("riemann_hurwitz_double", &riemann_hurwitz_double, py::arg("g_base"),
          py::arg("branch_points"), py::arg("topology") = std::nullopt);
    m.def("wps_curve_genus", &wps_curve_genus, py::arg("m"));
    m.def(
        "intersection_count",
        [](long a, long b) { return to_fraction(intersection_count(a, b)); }, py::arg("deg_a"),
        py::arg("deg_b"));
    m.def(
        "o1_square", [](long a, long b, long c) { return to_fraction(o1_square({a, b, c})); },
        py::arg("a") = 1, py::arg("b") = 1, py::arg("c") = 2);
    m.def(
        "log_canonical_square",
        [](long deg_g, long deg_d) { return to_fraction(log_canonical_square(deg_g, deg_d)); },
        py::arg("deg_g"), py::arg("deg_d"));
    m.def("chi_condition", &chi_condition, py::arg("chi_xbar"), py::arg("chi_dbar"),
          py::arg("chi_d"));

    py::class_<IsolatedBranchPoint> isolated(m, "IsolatedBranchPoint");
    py::enum_<IsolatedBranchPoint::Kind>(isolated, "Kind")
        .value("DoublePoint", IsolatedBranchPoint::Kind::DoublePoint)
        .value("NegligibleTriple", IsolatedBranchPoint::Kind::NegligibleTriple)
        .value("OrdinaryQuadruple", IsolatedBranchPoint::Kind::OrdinaryQuadruple)
        .value("DegenerateQuadruple", IsolatedBranchPoint::Kind::DegenerateQuadruple)
        .value("TriplePlusInfNearTriple", IsolatedBranchPoint::Kind::TriplePlusInfNearTriple);
    isolated
        .def(py::init([](IsolatedBranchPoint::Kind kind, bool ordinary) {
                 return IsolatedBranchPoint{kind, ordinary};
             }),
             py::arg("kind"), py::arg("ordinary") = true)
        .def_readonly("kind", &IsolatedBranchPoint::kind)
        .def_readonly("ordinary", &IsolatedBranchPoint::ordinary);

    py::class_<B0Contact> contact(m, "B0Contact");
    py::enum_<B0Contact::Kind>(contact, "Kind")
        .value("NoContact", B0Contact::Kind::None)
        .value("Transverse", B0Contact::Kind::Transverse)
        .value("Tangent", B0Contact::Kind::Tangent);
    contact
        .def(py::init([](B0Contact::Kind kind, long tangency) {
                 return B0Contact{kind, tangency};
             }),
             py::arg("kind") = B0Contact::Kind::None, py::arg("tangency") = 0)
        .def_readonly("kind", &B0Contact::kind)
        .def_readonly("tangency", &B0Contact::tangency);

    py::class_<NonReducedBranchPoint> nonreduced(m, "NonReducedBranchPoint");
    py::enum_<NonReducedBranchPoint::DPoint>(nonreduced, "DPoint")
        .value("SmoothPoint", NonReducedBranchPoint::DPoint::SmoothPoint)
        .value("Node", NonReducedBranchPoint::DPoint::Node);
    nonreduced
        .def(py::init([](NonReducedBranchPoint::DPoint d_point, B0Contact c) {
                 return NonReducedBranchPoint{d_point, c};
             }),
             py::arg("d_point"), py::arg("contact") = B0Contact{})
        .def_readonly("d_point", &NonReducedBranchPoint::d_point)
        .def_readonly("contact", &NonReducedBranchPoint::contact);

    py::class_<SingularityClass> sing(m, "SingularityClass");
    py::enum_<SingularityClass::Name>(sing, "Name")
        .value("Canonical", SingularityClass::Name::Canonical)
        .value("EllipticGorenstein", SingularityClass::Name::EllipticGorenstein)
        .value("NormalCrossing", SingularityClass::Name::NormalCrossing)
        .value("PinchPoint", SingularityClass::Name::PinchPoint)
        .value("T2qInf", SingularityClass::Name::T2qInf)
        .value("DegenerateCuspNodePair", SingularityClass::Name::DegenerateCuspNodePair);
    py::enum_<SingularityClass::EffectKind>(sing, "EffectKind")
        .value("NoEffect", SingularityClass::EffectKind::NoEffect)
        .value("ExceptionalCurve", SingularityClass::EffectKind::ExceptionalCurve)
        .value("DoubleLocusNode", SingularityClass::EffectKind::DoubleLocusNode);
    sing.def_readonly("name", &SingularityClass::name)
        .def_readonly("degree", &SingularityClass::degree)
        .def_readonly("q", &SingularityClass::q)
        .def_readonly("effect", &SingularityClass::effect)
        .def_readonly("exceptional_curve", &SingularityClass::exceptional_curve)
        .def("__str__", &SingularityClass::str);
    m.def(
        "classify",
        [](const IsolatedBranchPoint& p, long cycle_length) {
            return classify(p, cycle_length);
        },
        py::arg("config"), py::arg("cycle_length") = 2);
    m.def(
        "classify",
        [](const NonReducedBranchPoint& p, long cycle_length) {
            return classify(p, cycle_length);
        },
        py::arg("config"), py::arg("cycle_length") = 2);

    py::class_<Scenario>(m, "Scenario")
        .def_readonly("id", &Scenario::id)
        .def_readonly("citation", &Scenario::citation)
        .def_readonly("expected", &Scenario::expected)
        .def_property_readonly("normal", &Scenario::normal)
        .def("__repr__", [](const Scenario& s) { return "Scenario('" + s.id + "')"; });

    py::class_<Evaluation>(m, "Evaluation")
        .def_readonly("type", &Evaluation::type)
        .def_readonly("h2_edge", &Evaluation::h2_edge);
    m.def("evaluate", &evaluate, py::arg("scenario"));
    m.def("evaluate_unchecked", &evaluate_unchecked, py::arg("scenario"));
    m.def("build_nonnormal_cover", &build_nonnormal_cover, py::arg("deg_d"));
    m.def(
        "run_report", [](const Scenario& s) { return run_report(s).text; }, py::arg("scenario"));

    py::class_<ChainStep>(m, "ChainStep")
        .def_readonly("scenario_id", &ChainStep::scenario_id)
        .def_readonly("type", &ChainStep::type);
    py::class_<ChainReport>(m, "ChainReport")
        .def_readonly("chain_id", &ChainReport::chain_id)
        .def_readonly("steps", &ChainReport::steps)
        .def_readonly("monotone", &ChainReport::monotone)
        .def_readonly("failure", &ChainReport::failure);

    py::class_<RealizationReport>(m, "RealizationReport")
        .def_readonly("realized", &RealizationReport::realized)
        .def_readonly("missing", &RealizationReport::missing)
        .def_readonly("covered_edges", &RealizationReport::covered_edges)
        .def_readonly("missing_edges", &RealizationReport::missing_edges)
        .def("passed", &RealizationReport::passed);

    py::class_<VerifySummary>(m, "VerifySummary")
        .def_readonly("passed", &VerifySummary::passed)
        .def_readonly("failed", &VerifySummary::failed)
        .def_readonly("failures", &VerifySummary::failures)
        .def_readonly("text", &VerifySummary::text);

    py::class_<Catalog>(m, "Catalog")
        .def_property_readonly("scenario_ids",
                               [](const Catalog& c) {
                                   std::vector<std::string> ids;
                                   for (const auto& s : c.scenarios)
                                       ids.push_back(s.id);
                                   return ids;
                               })
        .def_property_readonly("chain_ids",
                               [](const Catalog& c) {
                                   std::vector<std::string> ids;
                                   for (const auto& ch : c.chains)
                                       ids.push_back(ch.id);
                                   return ids;
                               })
        .def("at", &Catalog::at, py::arg("id"), py::return_value_policy::copy)
        .def(
            "verify_chain",
            [](const Catalog& c, const std::string& chain_id) {
                for (const auto& ch : c.chains)
                    if (ch.id == chain_id)
                        return verify_chain(c, ch);
                throw Error("no chain named " + chain_id);
            },
            py::arg("chain_id"))
        .def("__len__", [](const Catalog& c) { return c.scenarios.size(); });
    m.def("builtin_catalog", &builtin_catalog, py::return_value_policy::reference);
    m.def("load_catalog", &load_catalog, py::arg("directory"));
    m.def("realization_report", &realization_report, py::arg("catalog"),
          py::arg("normal_only") = false);
    m.def(
        "verify_all", [](const Catalog& c) { return verify_all(c); }, py::arg("catalog"));
    m.def("table2", [] { return format_table2(computed_table2()); });
    m.def("chains_dot", &chains_dot, py::arg("catalog"));
}
