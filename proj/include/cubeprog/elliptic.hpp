#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubeprog/arith.hpp"
#include "cubeprog/polynomial.hpp"
#include "cubeprog/quadelem.hpp"

namespace cubeprog {

/// Short Weierstrass curve y^2 = x^3 + A x + B over Q. Nonsingular.
class Curve {
public:
    Curve(Rational A, Rational B);

    const Rational& A() const { return A_; }
    const Rational& B() const { return B_; }
    Rational discriminant() const;   // -16 (4A^3 + 27B^2)
    bool is_integral() const { return A_.get_den() == 1 && B_.get_den() == 1; }

    bool operator==(const Curve& o) const { return A_ == o.A_ && B_ == o.B_; }

    std::string str() const;   // "y^2 = x^3 - 216" style

private:
    Rational A_, B_;
};

Curve curve_E();                              // y^2 = x^3 - 27
Curve curve_E_twist(const Integer& D);        // y^2 = x^3 - 27 D^3
Curve curve_F_twist(const Integer& D);        // y^2 = x^3 + D^3

/// Affine point or the point at infinity; coordinates in Q or one Q(sqrt(d)).
template <class F>
class Point {
public:
    Point(F x, F y) : xy_(std::in_place, std::move(x), std::move(y)) {}
    static Point infinity() { return Point(); }

    bool is_infinity() const { return !xy_.has_value(); }
    const F& x() const { return xy_->first; }
    const F& y() const { return xy_->second; }

    bool operator==(const Point& o) const {
        if (is_infinity() || o.is_infinity()) return is_infinity() == o.is_infinity();
        return x() == o.x() && y() == o.y();
    }
    bool operator!=(const Point& o) const { return !(*this == o); }

    std::string str() const {
        if (is_infinity()) return "infinity";
        return "(" + field_str(x()) + ", " + field_str(y()) + ")";
    }

private:
    Point() = default;
    std::optional<std::pair<F, F>> xy_;
};

template <class F>
bool is_on_curve(const Curve& c, const Point<F>& p) {
    if (p.is_infinity()) return true;
    F rhs = p.x() * p.x() * p.x() + field_embed(c.A(), p.x()) * p.x() + field_embed(c.B(), p.x());
    return p.y() * p.y() == rhs;
}

template <class F>
Point<F> neg(const Point<F>& p) {
    if (p.is_infinity()) return p;
    return Point<F>(p.x(), -p.y());
}

// Chord-tangent group law; inputs assumed on the curve.
template <class F>
Point<F> add(const Curve& c, const Point<F>& p, const Point<F>& q) {
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    if (p.x() == q.x() && field_is_zero(p.y() + q.y())) return Point<F>::infinity();
    F lambda = [&]() -> F {
        if (p.x() == q.x()) {
            if (p.y() != q.y()) {
                throw std::invalid_argument("add: points share x but are not opposite; not on one curve");
            }
            F three_x2 = field_embed(Rational(3), p.x()) * p.x() * p.x();
            return (three_x2 + field_embed(c.A(), p.x())) / (p.y() + p.y());
        }
        return (q.y() - p.y()) / (q.x() - p.x());
    }();
    F x3 = lambda * lambda - p.x() - q.x();
    F y3 = lambda * (p.x() - x3) - p.y();
    return Point<F>(std::move(x3), std::move(y3));
}

template <class F>
Point<F> scalar_mul(const Curve& c, const Integer& n, const Point<F>& p) {
    if (n == 0 || p.is_infinity()) return Point<F>::infinity();
    Point<F> base = (n < 0) ? neg(p) : p;
    Integer m = abs(n);
    Point<F> acc = Point<F>::infinity();
    for (long i = static_cast<long>(mpz_sizeinbase(m.get_mpz_t(), 2)) - 1; i >= 0; --i) {
        acc = add(c, acc, acc);
        if (mpz_tstbit(m.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) acc = add(c, acc, base);
    }
    return acc;
}

namespace detail {
template <class F>
inline constexpr int torsion_order_bound = 12;     // Mazur, over Q
template <>
inline constexpr int torsion_order_bound<QuadElem> = 18;   // quadratic fields
}  // namespace detail

// Least n <= bound with nP = infinity (12 over Q, 18 over quadratic
// fields, the maximal torsion orders there); nothing means infinite order.
template <class F>
std::optional<int> point_order(const Curve& c, const Point<F>& p) {
    Point<F> q = p;
    for (int n = 1; n <= detail::torsion_order_bound<F>; ++n) {
        if (q.is_infinity()) return n;
        q = add(c, q, p);
    }
    return std::nullopt;
}

template <class F>
struct TorsionGroup {
    std::vector<int> invariant_factors;   // e.g. {2}, {6}, {2, 6}; empty = trivial
    std::vector<Point<F>> generators;     // one per invariant factor

    int order() const {
        int n = 1;
        for (int f : invariant_factors) n *= f;
        return n;
    }
};

// All points of the group spanned by the generators (includes infinity).
template <class F>
std::vector<Point<F>> torsion_points(const Curve& c, const TorsionGroup<F>& g) {
    std::vector<Point<F>> pts{Point<F>::infinity()};
    for (std::size_t i = 0; i < g.generators.size(); ++i) {
        std::vector<Point<F>> next = pts;
        Point<F> acc = Point<F>::infinity();
        for (int k = 1; k < g.invariant_factors[i]; ++k) {
            acc = add(c, acc, g.generators[i]);
            for (const auto& p : pts) next.push_back(add(c, acc, p));
        }
        pts = std::move(next);
    }
    return pts;
}

// Torsion subgroup over Q by Nagell-Lutz enumeration on the minimal
// (u^4, u^6)-scaled integral model.
TorsionGroup<Rational> torsion_over_Q(const Curve& c);

// Torsion of E: y^2 = x^3 - 27 over Q(sqrt(D)).
TorsionGroup<QuadElem> torsion_over_quadratic(const Integer& D);

// Division polynomial of an integral curve in the y-eliminated convention:
// n = 2 gives x^3 + Ax + B; odd n the standard psi_n; even n > 2 the
// primitive factor carrying the points of exact 2-power-free order
// (psi_n / (2y), content removed).
Polynomial division_polynomial(const Curve& c, int n);

struct ScanFactor {
    Polynomial factor;            // monic, irreducible, degree <= 2
    std::vector<int> sources;     // division polynomial levels it divides
};

// Monic irreducible factors of degree <= 2 of the n-division polynomials
// of E for n in {2,3,4,5,7,11,13}, each certified by exact division.
std::vector<ScanFactor> kamienny_factor_scan();

}  // namespace cubeprog
