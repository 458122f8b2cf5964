// Python bindings for the cubeprog core. Exact values cross the boundary
// as int / fractions.Fraction built from decimal strings, never floats.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cubeprog/analytic.hpp"
#include "cubeprog/elliptic.hpp"
#include "cubeprog/progression.hpp"
#include "cubeprog/table.hpp"

namespace py = pybind11;
using namespace cubeprog;

namespace {

py::object py_int(const Integer& n) {
    PyObject* obj = PyLong_FromString(to_string(n).c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(obj);
}

py::object py_fraction(const Rational& q) {
    static py::object ctor = py::module_::import("fractions").attr("Fraction");
    return ctor(to_string(q));
}

Integer integer_in(py::handle h) {
    std::string s = py::str(h);
    auto v = parse_integer(s);
    if (!v) throw py::value_error("expected an exact integer, got '" + s + "'");
    return *v;
}

Rational rational_in(py::handle h) {
    std::string s = py::str(h);
    auto v = parse_rational(s);
    if (!v) {
        throw py::value_error("expected an exact rational (int, Fraction or 'p/q'), got '" + s +
                              "'");
    }
    return *v;
}

py::dict quad_out(const QuadElem& v) {
    py::dict d;
    d["a"] = py_fraction(v.a());
    d["b"] = py_fraction(v.b());
    d["d"] = py_int(v.d());
    d["text"] = v.str();
    return d;
}

py::dict triple_out(const APTriple<QuadElem>& t) {
    py::dict d;
    d["x0"] = quad_out(t.x0);
    d["x1"] = quad_out(t.x1);
    d["x2"] = quad_out(t.x2);
    d["is_ap"] = is_ap(t);
    d["is_trivial"] = is_trivial_ap(t);
    return d;
}

py::dict verdict_out(const Verdict& v) {
    py::dict d;
    d["D"] = py_int(v.D);
    d["status"] = to_string(v.status);
    py::list crits;
    for (const auto& c : v.criteria) {
        py::dict e;
        e["tag"] = c.tag;
        e["direction"] = to_string(c.direction);
        e["detail"] = c.detail;
        crits.append(e);
    }
    d["criteria"] = crits;
    d["witness"] = v.witness ? py::object(triple_out(*v.witness)) : py::none();
    return d;
}

py::object rational_point_out(const Point<Rational>& p) {
    if (p.is_infinity()) return py::none();
    return py::make_tuple(py_fraction(p.x()), py_fraction(p.y()));
}

py::object quad_point_out(const Point<QuadElem>& p) {
    if (p.is_infinity()) return py::none();
    return py::make_tuple(quad_out(p.x()), quad_out(p.y()));
}

py::list poly_out(const Polynomial& f) {
    py::list coeffs;
    for (const auto& c : f.coeffs()) coeffs.append(py_fraction(c));
    return coeffs;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact arithmetic progressions of three cubes over quadratic fields";

    m.def("is_prime", [](py::handle n) { return is_prime(integer_in(n)); }, py::arg("n"));

    m.def("factorize", [](py::handle n) {
        Factorization f = factorize(integer_in(n));
        py::list factors;
        for (const auto& [p, e] : f.factors) factors.append(py::make_tuple(py_int(p), e));
        py::dict d;
        d["sign"] = f.sign;
        d["factors"] = factors;
        return d;
    }, py::arg("n"));

    m.def("squarefree_decompose", [](py::handle n) {
        auto s = squarefree_decompose(integer_in(n));
        return py::make_tuple(py_int(s.core), py_int(s.cofactor));
    }, py::arg("n"));

    m.def("sqrt_in_field", [](py::handle r, py::handle d) -> py::object {
        auto s = sqrt_in_field(rational_in(r), integer_in(d));
        return s ? py::object(quad_out(*s)) : py::none();
    }, py::arg("r"), py::arg("d"));

    m.def("a_d", [](py::handle d) {
        ADResult r = a_d(integer_in(d));
        py::list sols;
        for (const auto& s : r.solutions) {
            sols.append(py::make_tuple(py_int(s.m), py_int(s.n), py_int(s.k)));
        }
        py::dict out;
        out["d"] = py_int(r.d);
        out["value"] = py_int(r.value);
        out["triple_count"] = static_cast<long>(r.triple_count());
        out["solutions"] = sols;
        return out;
    }, py::arg("d"));

    m.def("quartic_minus3_has_root",
          [](py::handle p) { return quartic_minus3_has_root(integer_in(p)); }, py::arg("p"));

    m.def("classify", [](py::handle D) { return verdict_out(classify(integer_in(D))); },
          py::arg("D"));

    m.def("classify_with_witness", [](py::handle D, py::handle x, py::handle y) {
        Verdict v = classify(integer_in(D));
        Point<Rational> p(rational_in(x), rational_in(y));
        return verdict_out(upgrade_with_witness(v, p));
    }, py::arg("D"), py::arg("x"), py::arg("y"));

    m.def("torsion_over_quadratic", [](py::handle D) {
        TorsionGroup<QuadElem> g = torsion_over_quadratic(integer_in(D));
        py::dict out;
        out["invariant_factors"] = g.invariant_factors;
        py::list gens;
        for (const auto& p : g.generators) gens.append(quad_point_out(p));
        out["generators"] = gens;
        return out;
    }, py::arg("D"));

    m.def("torsion_over_q", [](py::handle A, py::handle B) {
        TorsionGroup<Rational> g = torsion_over_Q(Curve(rational_in(A), rational_in(B)));
        py::dict out;
        out["invariant_factors"] = g.invariant_factors;
        py::list gens;
        for (const auto& p : g.generators) gens.append(rational_point_out(p));
        out["generators"] = gens;
        return out;
    }, py::arg("A"), py::arg("B"));

    m.def("point_order", [](py::handle A, py::handle B, py::handle x, py::handle y) -> py::object {
        Curve c(rational_in(A), rational_in(B));
        Point<Rational> p(rational_in(x), rational_in(y));
        if (!is_on_curve(c, p)) throw py::value_error("point is not on the curve");
        auto n = point_order(c, p);
        return n ? py::object(py::int_(*n)) : py::none();
    }, py::arg("A"), py::arg("B"), py::arg("x"), py::arg("y"));

    m.def("twist_point_to_e", [](py::handle D, py::handle x, py::handle y) {
        return quad_point_out(
            twist_point_to_E(integer_in(D), Point<Rational>(rational_in(x), rational_in(y))));
    }, py::arg("D"), py::arg("x"), py::arg("y"));

    m.def("ap_from_twist_point", [](py::handle D, py::handle x, py::handle y) {
        return triple_out(
            ap_from_twist_point(integer_in(D), Point<Rational>(rational_in(x), rational_in(y))));
    }, py::arg("D"), py::arg("x"), py::arg("y"));

    m.def("isogeny_f_to_e", [](py::handle D, py::handle x, py::handle y) {
        return rational_point_out(
            isogeny_F_to_E(integer_in(D), Point<Rational>(rational_in(x), rational_in(y))));
    }, py::arg("D"), py::arg("x"), py::arg("y"));

    m.def("division_polynomial", [](int n, py::handle A, py::handle B) {
        return poly_out(division_polynomial(Curve(rational_in(A), rational_in(B)), n));
    }, py::arg("n"), py::arg("A"), py::arg("B"));

    m.def("rational_roots", [](const std::vector<py::object>& coeffs) {
        std::vector<Rational> c;
        c.reserve(coeffs.size());
        for (const auto& v : coeffs) c.push_back(rational_in(v));
        py::list out;
        for (const auto& r : rational_roots(Polynomial(std::move(c)))) out.append(py_fraction(r));
        return out;
    }, py::arg("coeffs"));

    m.def("kamienny_factor_scan", [] {
        py::list out;
        for (const auto& sf : kamienny_factor_scan()) {
            py::dict d;
            d["factor"] = sf.factor.str();
            d["coeffs"] = poly_out(sf.factor);
            d["sources"] = sf.sources;
            out.append(d);
        }
        return out;
    });

    m.def("witness_table", [] {
        py::list out;
        for (const auto& row : witness_table()) {
            py::dict d;
            d["D"] = py_int(row.D);
            d["x"] = py_fraction(row.x);
            d["y"] = py_fraction(row.y);
            out.append(d);
        }
        return out;
    });

    m.def("verify_table", [](int threads) {
        py::list out;
        for (const auto& c : verify_table(threads)) {
            py::dict d;
            d["D"] = py_int(c.D);
            d["on_curve"] = c.on_curve;
            d["infinite_order"] = c.infinite_order;
            d["ap_valid"] = c.ap_valid;
            d["nontrivial"] = c.nontrivial;
            d["pass"] = c.pass();
            out.append(d);
        }
        return out;
    }, py::arg("threads") = 0);

    m.attr("__version__") = "0.1.0";
}
