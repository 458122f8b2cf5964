#include <doctest.h>

#include "cubeprog/progression.hpp"
#include "cubeprog/table.hpp"
#include "test_util.hpp"

using namespace cubeprog;

namespace {

APTriple<Rational> rat_triple(long a, long b, long c) {
    return APTriple<Rational>(Rational(a), Rational(b), Rational(c));
}

QuadElem q(long a, long b, long d) { return QuadElem(Rational(a), Rational(b), Integer(d)); }

}  // namespace

TEST_CASE("ap predicates") {
    CHECK(is_ap(rat_triple(1, 1, 1)));
    CHECK(is_ap(rat_triple(-1, 0, 1)));
    CHECK_FALSE(is_ap(rat_triple(1, 2, 3)));   // 1 - 16 + 27 = 12

    APTriple<QuadElem> worked(q(9, 7, 2), q(15, 0, 2), q(9, -7, 2));
    CHECK(is_ap(worked));
    CHECK(is_on_C(worked));
    CHECK_FALSE(is_trivial_ap(worked));

    CHECK(is_trivial_ap(rat_triple(9, 9, 9)));
    CHECK(is_trivial_ap(rat_triple(-5, 0, 5)));
    CHECK(is_trivial_ap(rat_triple(5, 0, -5)));    // reversed sign of the scalar

    // Cube-level triviality: (81 + 27 sqrt(-3))^3 = -(81 - 27 sqrt(-3))^3.
    APTriple<QuadElem> omega(q(81, 27, -3), q(0, 0, -3), q(81, -27, -3));
    CHECK(is_ap(omega));
    CHECK(is_trivial_ap(omega));

    CHECK_THROWS_AS(rat_triple(0, 0, 0), std::invalid_argument);
}

TEST_CASE("parametrization maps") {
    // (1,1,1) -> [6 : 0 : 2], the affine point (3, 0).
    auto p = point_from_ap(rat_triple(1, 1, 1));
    CHECK(p.proportional_to(ProjectiveTriple<Rational>(Rational(3), Rational(0), Rational(1))));

    // (-1,0,1) -> [0 : -18 : 0], the point at infinity.
    auto inf = point_from_ap(rat_triple(-1, 0, 1));
    CHECK(inf.proportional_to(ProjectiveTriple<Rational>(Rational(0), Rational(1), Rational(0))));

    APTriple<QuadElem> worked(q(9, 7, 2), q(15, 0, 2), q(9, -7, 2));
    auto lifted = point_from_ap(worked);
    CHECK(lifted.proportional_to(ProjectiveTriple<QuadElem>(q(5, 0, 2), q(0, 7, 2), q(1, 0, 2))));

    // Inverse direction, exact values.
    auto back = ap_from_point(ProjectiveTriple<Rational>(Rational(3), Rational(0), Rational(1)));
    CHECK(back.x0 == 9);
    CHECK(back.x1 == 9);
    CHECK(back.x2 == 9);

    back = ap_from_point(ProjectiveTriple<Rational>(Rational(0), Rational(1), Rational(0)));
    CHECK(back.x0 == 1);
    CHECK(back.x1 == 0);
    CHECK(back.x2 == -1);

    auto worked_back =
        ap_from_point(ProjectiveTriple<QuadElem>(q(5, 0, 2), q(0, 7, 2), q(1, 0, 2)));
    CHECK(worked_back.x0 == q(9, 7, 2));
    CHECK(worked_back.x1 == q(15, 0, 2));
    CHECK(worked_back.x2 == q(9, -7, 2));

    CHECK_THROWS_AS(point_from_ap(rat_triple(1, 2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(ap_from_point(ProjectiveTriple<Rational>(Rational(1), Rational(1), Rational(1))),
                    std::invalid_argument);
}

TEST_CASE("round trips through the parametrization") {
    testutil::RationalGen gen(23);
    const Curve E = curve_E();
    int done = 0;
    for (const TableRow& row : witness_table()) {
        Point<QuadElem> base = twist_point_to_E(row.D, row.point());
        for (int k = 1; k <= 3; ++k) {
            Point<QuadElem> p = scalar_mul(E, Integer(gen.next_long(1, 6)), base);
            QuadElem like = q(0, 1, 2);
            auto proj = projectivize(p, p.is_infinity() ? like : p.x());
            APTriple<QuadElem> t = ap_from_point(proj);
            CHECK(is_ap(t));
            CHECK(point_from_ap(t).proportional_to(proj));
            ++done;
        }
    }
    CHECK(done == 54);
}

TEST_CASE("twist map") {
    auto lifted = twist_point_to_E(Integer(2), Point<Rational>(Rational(10), Rational(28)));
    CHECK(lifted == Point<QuadElem>(q(5, 0, 2), q(0, 7, 2)));
    CHECK(is_on_curve(curve_E(), lifted));

    for (long D : {2L, -7L, 10L}) {
        auto two = twist_point_to_E(Integer(D), Point<Rational>(Rational(3 * D), Rational(0)));
        CHECK(two == Point<QuadElem>(q(3, 0, D), q(0, 0, D)));
    }

    auto tri = twist_point_to_E(Integer(-3), Point<Rational>(Rational(0), Rational(27)));
    CHECK(tri == Point<QuadElem>(q(0, 0, -3), q(0, 3, -3)));

    CHECK(twist_point_to_E(Integer(2), Point<Rational>::infinity()).is_infinity());
    CHECK_THROWS_AS(twist_point_to_E(Integer(2), Point<Rational>(Rational(1), Rational(1))),
                    std::invalid_argument);
    CHECK_THROWS_AS(twist_point_to_E(Integer(1), Point<Rational>(Rational(4), Rational(6))),
                    std::invalid_argument);

    // Group embedding on table data: the lift of a sum is the sum of lifts.
    const Curve E = curve_E();
    for (const TableRow& row : witness_table()) {
        Curve twist = curve_E_twist(row.D);
        Point<Rational> p = row.point();
        Point<Rational> p2 = add(twist, p, p);
        CHECK(twist_point_to_E(row.D, p2) ==
              add(E, twist_point_to_E(row.D, p), twist_point_to_E(row.D, p)));
    }
}

TEST_CASE("progressions from twist points") {
    auto t = ap_from_twist_point(Integer(2), Point<Rational>(Rational(10), Rational(28)));
    CHECK(t.x0 == q(36, 28, 2));
    CHECK(t.x1 == q(60, 0, 2));
    CHECK(t.x2 == q(36, -28, 2));
    CHECK(is_ap(t));
    CHECK_FALSE(is_trivial_ap(t));

    // ... and it matches the composite map projectively (up to the 18 D^2 scale).
    auto composite = ap_from_point(
        projectivize(twist_point_to_E(Integer(2), Point<Rational>(Rational(10), Rational(28))),
                     q(0, 1, 2)));
    auto as_proj = [](const APTriple<QuadElem>& a) {
        return ProjectiveTriple<QuadElem>(a.x0, a.x1, a.x2);
    };
    CHECK(as_proj(t).proportional_to(as_proj(composite)));

    auto trivial = ap_from_twist_point(Integer(2), Point<Rational>(Rational(6), Rational(0)));
    CHECK(trivial.x0 == q(36, 0, 2));
    CHECK(trivial.x1 == q(36, 0, 2));
    CHECK(trivial.x2 == q(36, 0, 2));
    CHECK(is_trivial_ap(trivial));

    auto neg7 = ap_from_twist_point(Integer(-7), Point<Rational>(Rational(7), Rational(98)));
    CHECK(neg7.x0 == q(441, 98, -7));
    CHECK(neg7.x1 == q(-147, 0, -7));
    CHECK(neg7.x2 == q(441, -98, -7));
    CHECK(is_ap(neg7));
    CHECK_FALSE(is_trivial_ap(neg7));

    CHECK_THROWS_AS(ap_from_twist_point(Integer(2), Point<Rational>::infinity()),
                    std::invalid_argument);

    // Finite-order points only ever produce trivial progressions.
    for (long D = -30; D <= 30; ++D) {
        if (D == 0 || D == 1 || !is_squarefree(Integer(D))) continue;
        Curve twist = curve_E_twist(Integer(D));
        auto tors = torsion_over_Q(twist);
        for (const auto& p : torsion_points(twist, tors)) {
            if (p.is_infinity()) continue;
            auto ap = ap_from_twist_point(Integer(D), p);
            CHECK(is_ap(ap));
            CHECK(is_trivial_ap(ap));
        }
    }
}

TEST_CASE("isogeny from the X0(36) twist") {
    CHECK(isogeny_F_to_E(Integer(1), Point<Rational>(Rational(2), Rational(3))) ==
          Point<Rational>(Rational(3), Rational(0)));
    CHECK(isogeny_F_to_E(Integer(1), Point<Rational>(Rational(0), Rational(1))).is_infinity());
    CHECK(isogeny_F_to_E(Integer(2), Point<Rational>(Rational(2), Rational(4))) ==
          Point<Rational>(Rational(10), Rational(-28)));
    CHECK(isogeny_F_to_E(Integer(2), Point<Rational>::infinity()).is_infinity());
    CHECK_THROWS_AS(isogeny_F_to_E(Integer(2), Point<Rational>(Rational(1), Rational(1))),
                    std::invalid_argument);

    // (x^3 + 4D^3)^3 - 27 D^3 x^6 = (x^3 + D^3)(x^3 - 8D^3)^2 as rational
    // functions; checked on random rational pairs.
    testutil::RationalGen gen(29);
    for (int i = 0; i < 200; ++i) {
        Rational x = gen.next();
        Rational d = gen.next();
        Rational x3 = x * x * x, d3 = d * d * d;
        Rational lhs = (x3 + 4 * d3) * (x3 + 4 * d3) * (x3 + 4 * d3) - 27 * d3 * x3 * x3;
        Rational rhs = (x3 + d3) * (x3 - 8 * d3) * (x3 - 8 * d3);
        CHECK(lhs == rhs);
    }

    // Image points stay on the target curve; negation commutes.
    for (long D : {1L, 2L, -3L, 5L}) {
        Curve F = curve_F_twist(Integer(D));
        Curve E2 = curve_E_twist(Integer(D));
        std::vector<Point<Rational>> samples;
        if (D == 1) samples = {Point<Rational>(Rational(2), Rational(3))};
        if (D == 2) samples = {Point<Rational>(Rational(2), Rational(4)),
                               Point<Rational>(Rational(46), Rational(312))};
        if (D == -3) samples = {Point<Rational>(Rational(3), Rational(0))};
        if (D == 5) samples = {Point<Rational>(Rational(-5), Rational(0))};
        for (const auto& p : samples) {
            REQUIRE(is_on_curve(F, p));
            auto img = isogeny_F_to_E(Integer(D), p);
            CHECK(is_on_curve(E2, img));
            CHECK(isogeny_F_to_E(Integer(D), neg(p)) == neg(img));
        }
    }
}
