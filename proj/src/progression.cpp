#include "cubeprog/progression.hpp"

namespace cubeprog {

namespace {

Integer check_twist_radicand(const Integer& D) {
    if (D == 0 || D == 1 || !is_squarefree(D)) {
        throw std::invalid_argument("twist radicand must be squarefree, not 0 or 1; got " +
                                    to_string(D));
    }
    return D;
}

}  // namespace

Point<QuadElem> twist_point_to_E(const Integer& D, const Point<Rational>& p) {
    check_twist_radicand(D);
    if (p.is_infinity()) return Point<QuadElem>::infinity();
    if (!is_on_curve(curve_E_twist(D), p)) {
        throw std::invalid_argument("twist_point_to_E: point is not on y^2 = x^3 - 27*" +
                                    to_string(D) + "^3");
    }
    Rational d(D);
    return Point<QuadElem>(QuadElem(p.x() / d, Rational(0), D),
                           QuadElem(Rational(0), p.y() / (d * d), D));
}

APTriple<QuadElem> ap_from_twist_point(const Integer& D, const Point<Rational>& p) {
    check_twist_radicand(D);
    if (p.is_infinity()) {
        throw std::invalid_argument("ap_from_twist_point: the point at infinity has no affine data");
    }
    if (!is_on_curve(curve_E_twist(D), p)) {
        throw std::invalid_argument("ap_from_twist_point: point is not on y^2 = x^3 - 27*" +
                                    to_string(D) + "^3");
    }
    Rational nine_d2 = Rational(9) * Rational(D * D);
    return APTriple<QuadElem>(QuadElem(nine_d2, p.y(), D),
                              QuadElem(Rational(3) * p.x() * Rational(D), Rational(0), D),
                              QuadElem(nine_d2, -p.y(), D));
}

Point<Rational> isogeny_F_to_E(const Integer& D, const Point<Rational>& p) {
    // D = 1 is legitimate here: F^1 -> E^1 is the untwisted isogeny.
    if (p.is_infinity()) return Point<Rational>::infinity();
    if (!is_on_curve(curve_F_twist(D), p)) {
        throw std::invalid_argument("isogeny_F_to_E: point is not on y^2 = x^3 + " +
                                    to_string(D) + "^3");
    }
    if (p.x() == 0) return Point<Rational>::infinity();   // fiber over the kernel
    Rational d3(D * D * D);
    Rational x3 = p.x() * p.x() * p.x();
    Rational xq = (x3 + 4 * d3) / (p.x() * p.x());
    Rational yq = p.y() * (x3 - 8 * d3) / x3;
    return Point<Rational>(xq, yq);
}

}  // namespace cubeprog
