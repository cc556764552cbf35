// Python bindings for the core operations: exact rationals cross the boundary
// as fractions.Fraction (str "p/q" and int are accepted on input).

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "epp/branching.hpp"
#include "epp/ewens_pitman.hpp"
#include "epp/exp_series.hpp"
#include "epp/riordan.hpp"
#include "epp/verify.hpp"

namespace py = pybind11;

namespace pybind11::detail {

template <>
struct type_caster<epp::Rational> {
    PYBIND11_TYPE_CASTER(epp::Rational, const_name("Fraction"));

    bool load(handle src, bool) {
        if (src.is_none()) return false;
        try {
            if (PyLong_Check(src.ptr())) {
                value = epp::Rational(epp::Integer(py::str(src).cast<std::string>()));
                return true;
            }
            if (py::isinstance<py::str>(src)) {
                value = epp::Rational::parse(src.cast<std::string>());
                return true;
            }
            if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator")) {
                const auto num = py::str(src.attr("numerator")).cast<std::string>();
                const auto den = py::str(src.attr("denominator")).cast<std::string>();
                value = epp::Rational(epp::Integer(num), epp::Integer(den));
                return true;
            }
        } catch (const std::exception&) {
            return false;
        }
        return false;
    }

    static handle cast(const epp::Rational& src, return_value_policy, handle) {
        static py::object fraction = py::module_::import("fractions").attr("Fraction");
        py::object num = py::reinterpret_steal<py::object>(
            PyLong_FromString(src.num().get_str().c_str(), nullptr, 10));
        py::object den = py::reinterpret_steal<py::object>(
            PyLong_FromString(src.den().get_str().c_str(), nullptr, 10));
        return fraction(num, den).release();
    }
};

} // namespace pybind11::detail

namespace {

epp::IntegerPartition to_partition(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return epp::IntegerPartition::parse(obj.cast<std::string>());
    return epp::IntegerPartition(obj.cast<std::vector<int>>());
}

py::tuple partition_tuple(const epp::IntegerPartition& lam) {
    py::tuple t(lam.length());
    for (int i = 0; i < lam.length(); ++i) t[static_cast<size_t>(i)] = lam.part(i);
    return t;
}

py::int_ big_int(const epp::Integer& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

epp::PmfRoute pmf_route(const std::string& name) {
    if (name == "closed") return epp::PmfRoute::Closed;
    if (name == "newton") return epp::PmfRoute::Newton;
    if (name == "altrep") return epp::PmfRoute::AltRep;
    throw epp::ParseError("unknown route '" + name + "'");
}

epp::StatRoute stat_route(const std::string& name) {
    if (name == "closed" || name == "ftra") return epp::StatRoute::ClosedForm;
    if (name == "bruteforce") return epp::StatRoute::BruteForce;
    throw epp::ParseError("unknown route '" + name + "'");
}

epp::ExpSeries series_from(const std::vector<epp::Rational>& coeffs) {
    return epp::ExpSeries(coeffs);
}

} // namespace

PYBIND11_MODULE(epp, m) {
    m.doc() = "Exact Ewens-Pitman partition structure via Riordan arrays and umbral "
              "interpolation; all values are fractions.Fraction";

    py::register_exception<epp::Error>(m, "Error");

    // partitions and graphs
    m.def(
        "enumerate_partitions",
        [](int n) {
            py::list out;
            for (const auto& lam : epp::enumerate_partitions(n)) out.append(partition_tuple(lam));
            return out;
        },
        py::arg("n"), "All partitions of n in reverse-lexicographic order, as tuples.");
    m.def(
        "kingman_dim", [](const py::object& lam) { return big_int(epp::kingman_dim(to_partition(lam))); },
        py::arg("partition"), "Number of weighted growth paths: the multinomial n!/prod(parts!).");
    m.def(
        "kingman_multiplicity",
        [](const py::object& mu, const py::object& lam) {
            return epp::kingman_multiplicity(to_partition(mu), to_partition(lam));
        },
        py::arg("mu"), py::arg("lam"));
    m.def(
        "covers",
        [](const py::object& mu, const py::object& lam) {
            return epp::covers(to_partition(mu), to_partition(lam));
        },
        py::arg("mu"), py::arg("lam"));
    m.def(
        "pascal_dim",
        [](int a, int b, int h, int t) { return big_int(epp::pascal_dim({a, b}, {h, t})); },
        py::arg("a"), py::arg("b"), py::arg("h"), py::arg("t"));
    m.def(
        "pascal_boundary_ratio",
        [](int a, int b, const epp::Rational& p, long n) {
            return epp::pascal_boundary_ratio({a, b}, p, n);
        },
        py::arg("a"), py::arg("b"), py::arg("p"), py::arg("n"));

    // symmetric functions and the interpolation polynomial
    m.def(
        "monomial_sym",
        [](const py::object& lam, const std::vector<epp::Rational>& point) {
            return epp::monomial_sym(to_partition(lam), point);
        },
        py::arg("partition"), py::arg("point"));
    m.def(
        "factorial_monomial_sym",
        [](const py::object& lam, const std::vector<epp::Rational>& point) {
            return epp::factorial_monomial_sym(to_partition(lam), point);
        },
        py::arg("partition"), py::arg("point"));
    m.def(
        "mstar_repeated_alpha",
        [](const py::object& lam, int k, const epp::Rational& alpha) {
            return epp::mstar_repeated_alpha(to_partition(lam), k, alpha);
        },
        py::arg("partition"), py::arg("k"), py::arg("alpha"));
    m.def(
        "f_lambda",
        [](const py::object& lam, const epp::Rational& alpha, const std::string& route) {
            return epp::f_lambda(to_partition(lam), alpha, pmf_route(route)).poly.coeffs();
        },
        py::arg("partition"), py::arg("alpha"), py::arg("route") = "closed",
        "Coefficients (ascending powers of theta) of the interpolation polynomial f_lambda.");

    // Riordan arrays and generalized Stirling numbers
    m.def(
        "riordan_entry",
        [](const std::vector<epp::Rational>& d, const std::vector<epp::Rational>& h, int n, int k) {
            return epp::ExpRiordan(series_from(d), series_from(h)).entry(n, k);
        },
        py::arg("d"), py::arg("h"), py::arg("n"), py::arg("k"),
        "Entry (n,k) of the exponential Riordan array with the given exponential coefficients.");
    m.def(
        "ftra",
        [](const std::vector<epp::Rational>& d, const std::vector<epp::Rational>& h,
           const std::vector<epp::Rational>& c, int n) {
            return epp::ftra(epp::ExpRiordan(series_from(d), series_from(h)), series_from(c), n);
        },
        py::arg("d"), py::arg("h"), py::arg("c"), py::arg("n"),
        "Row-sum functional sum_k d_{n,k} c_k evaluated as one coefficient extraction.");
    m.def(
        "gstirling",
        [](const epp::Rational& a, const epp::Rational& b, const epp::Rational& c, int n, int l,
           const std::string& route) {
            return epp::gstirling({a, b, c}, n, l,
                                  route == "bell" ? epp::StirlingRoute::BellSum
                                                  : epp::StirlingRoute::Riordan);
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("n"), py::arg("l"),
        py::arg("route") = "riordan");
    m.def("laguerre_row", &epp::laguerre_row, py::arg("l"), py::arg("j"));

    // Ewens-Pitman statistics
    m.def(
        "pmf",
        [](const py::object& lam, const epp::Rational& alpha, const epp::Rational& theta,
           const std::string& route, bool verify) {
            return epp::pmf(epp::EPParams(alpha, theta), to_partition(lam), pmf_route(route), verify);
        },
        py::arg("partition"), py::arg("alpha"), py::arg("theta"), py::arg("route") = "closed",
        py::arg("verify") = false);
    m.def(
        "phi_harmonic",
        [](const py::object& lam, const epp::Rational& alpha, const epp::Rational& theta,
           const std::string& route) {
            return epp::phi_harmonic(epp::EPParams(alpha, theta), to_partition(lam), pmf_route(route));
        },
        py::arg("partition"), py::arg("alpha"), py::arg("theta"), py::arg("route") = "closed");
    m.def(
        "eppf",
        [](const py::object& lam, const epp::Rational& alpha, const epp::Rational& theta) {
            return epp::eppf(epp::EPParams(alpha, theta), to_partition(lam));
        },
        py::arg("partition"), py::arg("alpha"), py::arg("theta"));
    m.def(
        "normalization",
        [](int n, const epp::Rational& alpha, const epp::Rational& theta) {
            return epp::normalization(epp::EPParams(alpha, theta), n);
        },
        py::arg("n"), py::arg("alpha"), py::arg("theta"));
    m.def(
        "marginal_length",
        [](int n, int l, const epp::Rational& alpha, const epp::Rational& theta,
           const std::string& route, bool verify, int oracle_bound) {
            return epp::marginal_length(epp::EPParams(alpha, theta), n, l, stat_route(route), verify,
                                        oracle_bound);
        },
        py::arg("n"), py::arg("l"), py::arg("alpha"), py::arg("theta"), py::arg("route") = "ftra",
        py::arg("verify") = false, py::arg("oracle_bound") = epp::kDefaultOracleBound);
    m.def(
        "moment_length",
        [](int n, int k, const epp::Rational& alpha, const epp::Rational& theta,
           const std::string& route, bool verify, int oracle_bound) {
            return epp::moment_length(epp::EPParams(alpha, theta), n, k, stat_route(route), verify,
                                      oracle_bound);
        },
        py::arg("n"), py::arg("k"), py::arg("alpha"), py::arg("theta"), py::arg("route") = "closed",
        py::arg("verify") = false, py::arg("oracle_bound") = epp::kDefaultOracleBound);
    m.def(
        "moment_length_expansion",
        [](int n, int k, const epp::Rational& alpha, const epp::Rational& theta, bool step_alpha) {
            return epp::moment_length_expansion(epp::EPParams(alpha, theta), n, k, step_alpha);
        },
        py::arg("n"), py::arg("k"), py::arg("alpha"), py::arg("theta"),
        py::arg("step_alpha") = false);
    m.def(
        "joint_moment_sizes",
        [](int n, const std::vector<int>& orders, const epp::Rational& alpha,
           const epp::Rational& theta, const std::string& route, bool verify, int oracle_bound) {
            return epp::joint_moment_sizes(epp::EPParams(alpha, theta), n, orders, stat_route(route),
                                           verify, oracle_bound);
        },
        py::arg("n"), py::arg("orders"), py::arg("alpha"), py::arg("theta"),
        py::arg("route") = "closed", py::arg("verify") = false,
        py::arg("oracle_bound") = epp::kDefaultOracleBound);
    m.def(
        "conditional_moment",
        [](const py::object& mu, int m_extra, const std::vector<int>& orders,
           const epp::Rational& alpha, const epp::Rational& theta, const std::string& route,
           bool verify, int oracle_bound) {
            const epp::ConditionalQuery q{to_partition(mu), m_extra, orders};
            return epp::conditional_moment(epp::EPParams(alpha, theta), q, stat_route(route), verify,
                                           oracle_bound);
        },
        py::arg("mu"), py::arg("m"), py::arg("orders"), py::arg("alpha"), py::arg("theta"),
        py::arg("route") = "closed", py::arg("verify") = false,
        py::arg("oracle_bound") = epp::kDefaultOracleBound);
    m.def(
        "bruteforce_expectation",
        [](int n, const std::function<epp::Rational(py::tuple)>& g, const epp::Rational& alpha,
           const epp::Rational& theta, int oracle_bound) {
            return epp::bruteforce_expectation(
                epp::EPParams(alpha, theta), n,
                [&g](const epp::IntegerPartition& lam) { return g(partition_tuple(lam)); },
                oracle_bound);
        },
        py::arg("n"), py::arg("g"), py::arg("alpha"), py::arg("theta"),
        py::arg("oracle_bound") = epp::kDefaultOracleBound,
        "Exact expectation of a Python function of the partition (as a tuple of parts).");

    // verification suite
    m.def(
        "verify_run",
        [](int max_n) {
            py::list out;
            epp::verify::Options opts;
            opts.max_n = max_n;
            for (const auto& r : epp::verify::run_all(opts)) {
                py::dict d;
                d["name"] = r.name;
                d["passed"] = r.passed;
                d["millis"] = r.millis;
                d["detail"] = r.detail;
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("max_n") = 10, "Run every exact invariant check; returns one dict per check.");
}
