#pragma once

#include <stdexcept>
#include <string>

#include "cubeprog/arith.hpp"
#include "cubeprog/elliptic.hpp"
#include "cubeprog/quadelem.hpp"

namespace cubeprog {

/// Candidate three-term progression of cubes: the cube roots x0, x1, x2.
/// The cubes themselves are never stored; every check is polynomial in
/// the roots.
template <class F>
struct APTriple {
    F x0, x1, x2;

    APTriple(F a, F b, F c) : x0(std::move(a)), x1(std::move(b)), x2(std::move(c)) {
        if (field_is_zero(x0) && field_is_zero(x1) && field_is_zero(x2)) {
            throw std::invalid_argument("APTriple: all three terms are zero");
        }
    }

    std::string str() const {
        return "(" + field_str(x0) + ", " + field_str(x1) + ", " + field_str(x2) + ")";
    }
};

/// Projective coordinate triple; equality is proportionality.
template <class F>
struct ProjectiveTriple {
    F c0, c1, c2;

    ProjectiveTriple(F a, F b, F c) : c0(std::move(a)), c1(std::move(b)), c2(std::move(c)) {
        if (field_is_zero(c0) && field_is_zero(c1) && field_is_zero(c2)) {
            throw std::invalid_argument("ProjectiveTriple: zero triple");
        }
    }

    bool proportional_to(const ProjectiveTriple& o) const {
        return field_is_zero(c0 * o.c1 - c1 * o.c0) && field_is_zero(c0 * o.c2 - c2 * o.c0) &&
               field_is_zero(c1 * o.c2 - c2 * o.c1);
    }

    std::string str() const {
        return "[" + field_str(c0) + " : " + field_str(c1) + " : " + field_str(c2) + "]";
    }
};

// x0^3, x1^3, x2^3 form an arithmetic progression, i.e. the triple lies
// on the cubic X0^3 - 2 X1^3 + X2^3 = 0. The two predicates agree on all
// inputs; both are provided because callers think in both vocabularies.
template <class F>
bool is_ap(const APTriple<F>& t) {
    F sum = t.x0 * t.x0 * t.x0 - field_embed(Rational(2), t.x1) * t.x1 * t.x1 * t.x1 +
            t.x2 * t.x2 * t.x2;
    return field_is_zero(sum);
}

template <class F>
bool is_on_C(const APTriple<F>& t) {
    return is_ap(t);
}

// Trivial means the cube triple is a single nonzero multiple of (1,1,1)
// or of (-1,0,1). Cubes, not roots: cube roots of unity make root-level
// proportionality too strict.
template <class F>
bool is_trivial_ap(const APTriple<F>& t) {
    F c0 = t.x0 * t.x0 * t.x0;
    F c1 = t.x1 * t.x1 * t.x1;
    F c2 = t.x2 * t.x2 * t.x2;
    if (c0 == c1 && c1 == c2) return true;            // lambda * (1,1,1)
    return field_is_zero(c1) && field_is_zero(c0 + c2);   // lambda * (-1,0,1)
}

// The curve-E identity z y^2 = x^3 - 27 z^3 on a projective triple [x:y:z].
template <class F>
bool is_on_E_projective(const ProjectiveTriple<F>& p) {
    F lhs = p.c2 * p.c1 * p.c1;
    F rhs = p.c0 * p.c0 * p.c0 -
            field_embed(Rational(27), p.c2) * p.c2 * p.c2 * p.c2;
    return field_is_zero(lhs - rhs);
}

// AP triple -> point of E: [6 x1 : 9(x0 - x2) : x0 + x2].
template <class F>
ProjectiveTriple<F> point_from_ap(const APTriple<F>& t) {
    if (!is_ap(t)) {
        throw std::invalid_argument("point_from_ap: cubes are not in arithmetic progression");
    }
    return ProjectiveTriple<F>(field_embed(Rational(6), t.x1) * t.x1,
                               field_embed(Rational(9), t.x1) * (t.x0 - t.x2), t.x0 + t.x2);
}

// Point of E -> AP triple: (9z + y, 3x, 9z - y).
template <class F>
APTriple<F> ap_from_point(const ProjectiveTriple<F>& p) {
    if (!is_on_E_projective(p)) {
        throw std::invalid_argument("ap_from_point: point does not satisfy z*y^2 = x^3 - 27*z^3");
    }
    F nine_z = field_embed(Rational(9), p.c2) * p.c2;
    return APTriple<F>(nine_z + p.c1, field_embed(Rational(3), p.c0) * p.c0, nine_z - p.c1);
}

template <class F>
ProjectiveTriple<F> projectivize(const Point<F>& p, const F& field_like) {
    if (p.is_infinity()) {
        return ProjectiveTriple<F>(field_embed(Rational(0), field_like),
                                   field_embed(Rational(1), field_like),
                                   field_embed(Rational(0), field_like));
    }
    return ProjectiveTriple<F>(p.x(), p.y(), field_embed(Rational(1), field_like));
}

// Rational point of E^D -> point of E over Q(sqrt(D)): (x/D, y/D^2 * sqrt(D)).
Point<QuadElem> twist_point_to_E(const Integer& D, const Point<Rational>& p);

// Rational point (x, y) of E^D -> the progression roots
// (9D^2 + y sqrt(D), 3xD, 9D^2 - y sqrt(D)).
APTriple<QuadElem> ap_from_twist_point(const Integer& D, const Point<Rational>& p);

// The degree-3 isogeny F^D -> E^D,
// (x, y) -> ((x^3 + 4D^3)/x^2, y (x^3 - 8D^3)/x^3); the fiber over the
// kernel (x = 0) goes to infinity.
Point<Rational> isogeny_F_to_E(const Integer& D, const Point<Rational>& p);

}  // namespace cubeprog
