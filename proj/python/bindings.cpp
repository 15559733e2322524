#include "upq/certificate.hpp"
#include "upq/json_io.hpp"
#include "upq/milnor_wood.hpp"
#include "upq/oracle.hpp"
#include "upq/slope.hpp"
#include "upq/walls.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

namespace py = pybind11;

// Rational <-> fractions.Fraction. Python ints and "n/d" strings are accepted too.
namespace pybind11::detail {

template <>
struct type_caster<upq::Rational> {
    PYBIND11_TYPE_CASTER(upq::Rational, const_name("fractions.Fraction"));

    bool load(handle src, bool) {
        if (!src) return false;
        try {
            if (py::isinstance<py::str>(src)) {
                value = upq::Rational::parse(src.cast<std::string>());
                return true;
            }
            if (PyBool_Check(src.ptr())) return false;
            if (py::isinstance<py::int_>(src)) {
                value = upq::Rational::parse(py::str(src).cast<std::string>());
                return true;
            }
            const auto fraction = py::module_::import("fractions").attr("Fraction");
            if (py::isinstance(src, fraction)) {
                const auto num = py::str(src.attr("numerator")).cast<std::string>();
                const auto den = py::str(src.attr("denominator")).cast<std::string>();
                value = upq::Rational::parse(num + "/" + den);
                return true;
            }
        } catch (const std::invalid_argument&) {
            throw py::value_error("not a rational: " + py::str(src).cast<std::string>());
        }
        return false;
    }

    static handle cast(const upq::Rational& r, return_value_policy, handle) {
        const auto fraction = py::module_::import("fractions").attr("Fraction");
        return fraction(py::int_(py::str(r.numerator_string())), py::int_(py::str(r.denominator_string())))
            .release();
    }
};

}  // namespace pybind11::detail

namespace {

template <typename T>
std::string dump(const T& value) {
    return upq::json(value).dump();
}

upq::HitchinPairType type_from_tuple(const py::tuple& t) {
    if (t.size() != 4) throw py::value_error("type must be (p, q, a, b)");
    upq::HitchinPairType out{t[0].cast<std::int64_t>(), t[1].cast<std::int64_t>(), t[2].cast<std::int64_t>(),
                             t[3].cast<std::int64_t>()};
    out.validate();
    return out;
}

upq::AlphaInterval interval_from(const upq::Rational& lo, const upq::Rational& hi) {
    upq::AlphaInterval iv{lo, hi};
    iv.validate();
    return iv;
}

upq::WallOptions wall_options(bool mw_filter, std::optional<std::int64_t> genus, std::optional<std::int64_t> deg_l,
                              unsigned threads) {
    upq::WallOptions opts;
    opts.mw_filter = mw_filter;
    opts.threads = threads;
    if (deg_l) {
        opts.ctx = upq::GeometryContext::twisted(genus.value_or(0), *deg_l);
    } else if (genus) {
        opts.ctx = upq::GeometryContext::canonical(*genus);
    }
    return opts;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    using namespace upq;
    m.doc() = "Exact wall and Toledo-bound computations for U(p,q)-Hitchin pairs";

    py::class_<HitchinPairType>(m, "HitchinPairType")
        .def(py::init([](std::int64_t p, std::int64_t q, std::int64_t a, std::int64_t b) {
                 HitchinPairType t{p, q, a, b};
                 t.validate();
                 return t;
             }),
             py::arg("p"), py::arg("q"), py::arg("a"), py::arg("b"))
        .def(py::init(&type_from_tuple))
        .def_readonly("p", &HitchinPairType::p)
        .def_readonly("q", &HitchinPairType::q)
        .def_readonly("a", &HitchinPairType::a)
        .def_readonly("b", &HitchinPairType::b)
        .def_property_readonly("rank", &HitchinPairType::rank)
        .def_property_readonly("degree", &HitchinPairType::degree)
        .def(py::self == py::self)
        .def("__repr__", [](const HitchinPairType& t) {
            return "HitchinPairType(" + std::to_string(t.p) + ", " + std::to_string(t.q) + ", " +
                   std::to_string(t.a) + ", " + std::to_string(t.b) + ")";
        });
    py::implicitly_convertible<py::tuple, HitchinPairType>();

    py::class_<BoundInterval>(m, "BoundInterval")
        .def_property_readonly("feasible", &BoundInterval::feasible)
        .def_property_readonly("lower", &BoundInterval::raw_lower)
        .def_property_readonly("upper", &BoundInterval::raw_upper)
        .def_property_readonly("regime",
                               [](const BoundInterval& b) -> std::optional<std::string> {
                                   if (!b.regime()) return std::nullopt;
                                   return regime_label(*b.regime());
                               })
        .def("__contains__", &BoundInterval::contains)
        .def("to_json", &dump<BoundInterval>);

    py::class_<MwVerdict>(m, "MwVerdict")
        .def_readonly("tau", &MwVerdict::tau)
        .def_readonly("bounds", &MwVerdict::interval)
        .def_readonly("passed", &MwVerdict::pass)
        .def_property_readonly("side",
                               [](const MwVerdict& v) -> std::optional<std::string> {
                                   if (!v.violated) return std::nullopt;
                                   return side_label(*v.violated);
                               })
        .def_readonly("margin", &MwVerdict::margin)
        .def("to_json", &dump<MwVerdict>);

    py::class_<Wall>(m, "Wall")
        .def_readonly("alpha", &Wall::alpha)
        .def_property_readonly("witnesses",
                               [](const Wall& w) {
                                   py::list out;
                                   for (const auto& x : w.witnesses) out.append(py::make_tuple(x.p_sub, x.q_sub, x.d_sub));
                                   return out;
                               })
        .def("to_json", &dump<Wall>);

    py::class_<Chamber>(m, "Chamber")
        .def_readonly("lo", &Chamber::lo)
        .def_readonly("hi", &Chamber::hi)
        .def_readonly("lo_closed", &Chamber::lo_closed)
        .def_readonly("hi_closed", &Chamber::hi_closed)
        .def("to_json", &dump<Chamber>);

    py::class_<ChamberReport>(m, "ChamberReport")
        .def_readonly("type", &ChamberReport::type)
        .def_readonly("walls", &ChamberReport::walls)
        .def_readonly("chambers", &ChamberReport::chambers)
        .def("to_json", &dump<ChamberReport>);

    py::class_<AlphaWindow>(m, "AlphaWindow")
        .def_readonly("lower", &AlphaWindow::lower)
        .def_readonly("upper", &AlphaWindow::upper)
        .def_readonly("lower_closed", &AlphaWindow::lower_closed)
        .def_readonly("upper_closed", &AlphaWindow::upper_closed)
        .def_property_readonly("empty", &AlphaWindow::empty)
        .def("__contains__", &AlphaWindow::contains);

    py::class_<IrreducibilityCondition>(m, "IrreducibilityCondition")
        .def_readonly("degree_ok", &IrreducibilityCondition::degree_ok)
        .def_readonly("rank_ok", &IrreducibilityCondition::rank_ok)
        .def_readonly("window", &IrreducibilityCondition::window)
        .def_readonly("alpha_in_window", &IrreducibilityCondition::alpha_in_window)
        .def_readonly("holds", &IrreducibilityCondition::holds);

    py::class_<IrreducibilityCertificate>(m, "IrreducibilityCertificate")
        .def_readonly("type", &IrreducibilityCertificate::type)
        .def_readonly("genus", &IrreducibilityCertificate::genus)
        .def_readonly("alpha", &IrreducibilityCertificate::alpha)
        .def_readonly("tau", &IrreducibilityCertificate::tau)
        .def_readonly("tau_bound", &IrreducibilityCertificate::tau_bound)
        .def_readonly("tau_bound_ok", &IrreducibilityCertificate::tau_bound_ok)
        .def_readonly("condition1", &IrreducibilityCertificate::condition1)
        .def_readonly("condition2", &IrreducibilityCertificate::condition2)
        .def_readonly("closure_irreducible", &IrreducibilityCertificate::closure_irreducible)
        .def_readonly("fully_irreducible", &IrreducibilityCertificate::fully_irreducible)
        .def("to_json", &dump<IrreducibilityCertificate>);

    m.def("toledo", &toledo, py::arg("type"));
    m.def("alpha_slope", py::overload_cast<const HitchinPairType&, const Rational&>(&alpha_slope), py::arg("type"),
          py::arg("alpha"));
    m.def(
        "c_pair",
        [](const HitchinPairType& t, const Rational& alpha) {
            const auto c = alpha_to_c_pair(t, alpha);
            return py::make_tuple(c.c1, c.c2);
        },
        py::arg("type"), py::arg("alpha"));

    m.def("toledo_bounds", &toledo_bounds, py::arg("p"), py::arg("q"), py::arg("deg_l"), py::arg("alpha"));
    m.def(
        "higgs_rank_bounds",
        [](const HitchinPairType& t, std::int64_t deg_l, const Rational& alpha, std::int64_t rk_beta,
           std::int64_t rk_gamma) { return higgs_rank_bounds(t, deg_l, alpha, HiggsRankPair{rk_beta, rk_gamma}); },
        py::arg("type"), py::arg("deg_l"), py::arg("alpha"), py::arg("rk_beta"), py::arg("rk_gamma"));
    m.def(
        "mw_check",
        [](const HitchinPairType& t, std::int64_t deg_l, const Rational& alpha,
           std::optional<std::pair<std::int64_t, std::int64_t>> ranks) {
            std::optional<HiggsRankPair> r;
            if (ranks) r = HiggsRankPair{ranks->first, ranks->second};
            return mw_check(t, deg_l, alpha, r);
        },
        py::arg("type"), py::arg("deg_l"), py::arg("alpha"), py::arg("ranks") = py::none());

    m.def(
        "enumerate_walls",
        [](const HitchinPairType& t, const Rational& lo, const Rational& hi, bool mw_filter,
           std::optional<std::int64_t> genus, std::optional<std::int64_t> deg_l, unsigned threads) {
            const auto opts = wall_options(mw_filter, genus, deg_l, threads);
            py::gil_scoped_release release;
            return enumerate_walls(t, interval_from(lo, hi), opts);
        },
        py::arg("type"), py::arg("lo"), py::arg("hi"), py::kw_only(), py::arg("mw_filter") = false,
        py::arg("genus") = py::none(), py::arg("deg_l") = py::none(), py::arg("threads") = 0);
    m.def(
        "chamber_report",
        [](const HitchinPairType& t, const Rational& lo, const Rational& hi, bool mw_filter,
           std::optional<std::int64_t> genus, std::optional<std::int64_t> deg_l, unsigned threads) {
            const auto opts = wall_options(mw_filter, genus, deg_l, threads);
            py::gil_scoped_release release;
            return chamber_report(t, interval_from(lo, hi), opts);
        },
        py::arg("type"), py::arg("lo"), py::arg("hi"), py::kw_only(), py::arg("mw_filter") = false,
        py::arg("genus") = py::none(), py::arg("deg_l") = py::none(), py::arg("threads") = 0);
    m.def(
        "brute_force_walls",
        [](const HitchinPairType& t, const Rational& lo, const Rational& hi, std::optional<std::int64_t> bound) {
            const auto iv = interval_from(lo, hi);
            return oracle::brute_force_walls(t, iv, bound.value_or(oracle::required_degree_bound(t, iv)));
        },
        py::arg("type"), py::arg("lo"), py::arg("hi"), py::arg("degree_bound") = py::none());

    m.def("certify_irreducibility", &certify_irreducibility, py::arg("type"), py::arg("genus"), py::arg("alpha"));
    m.def(
        "selftest",
        [](std::uint64_t seed, std::size_t trials, unsigned threads) {
            oracle::SelfTestReport report;
            {
                py::gil_scoped_release release;
                report = oracle::property_driver(seed, trials, threads);
            }
            return py::module_::import("json").attr("loads")(dump(report));
        },
        py::arg("seed") = 0, py::arg("trials") = 1000, py::arg("threads") = 0);
}
