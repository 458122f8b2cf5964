#include "cubeprog/elliptic.hpp"

#include <algorithm>
#include <map>

#include "cubeprog/progression.hpp"
#include "rootfind.hpp"

namespace cubeprog {

Curve::Curve(Rational A, Rational B) : A_(std::move(A)), B_(std::move(B)) {
    if (discriminant() == 0) {
        throw std::invalid_argument("Curve: singular (4A^3 + 27B^2 = 0)");
    }
}

Rational Curve::discriminant() const {
    return Rational(-16) * (4 * A_ * A_ * A_ + 27 * B_ * B_);
}

std::string Curve::str() const {
    std::string s = "y^2 = x^3";
    if (A_ != 0) s += (A_ < 0 ? " - " : " + ") + to_string(abs(A_)) + "*x";
    if (B_ != 0) s += (B_ < 0 ? " - " : " + ") + to_string(abs(B_));
    return s;
}

namespace {

Integer require_twist_radicand(const Integer& D) {
    if (D == 0 || !is_squarefree(D)) {
        throw std::invalid_argument("twist parameter must be a nonzero squarefree integer, got " +
                                    to_string(D));
    }
    return D;
}

}  // namespace

Curve curve_E() { return Curve(Rational(0), Rational(-27)); }

Curve curve_E_twist(const Integer& D) {
    require_twist_radicand(D);
    return Curve(Rational(0), Rational(-27) * Rational(D * D * D));
}

Curve curve_F_twist(const Integer& D) {
    require_twist_radicand(D);
    return Curve(Rational(0), Rational(D * D * D));
}

// ---------------------------------------------------------------------------
// Torsion over Q (Nagell-Lutz)

namespace {

// Minimal u > 0 with u^4 A and u^6 B integral.
Integer integral_scale(const Rational& A, const Rational& B) {
    std::map<Integer, int> need;
    auto account = [&need](const Integer& den, int k) {
        if (den == 1) return;
        for (const auto& [p, e] : factorize(den).factors) {
            int v = (e + k - 1) / k;
            auto it = need.find(p);
            if (it == need.end() || it->second < v) need[p] = v;
        }
    };
    account(A.get_den(), 4);
    account(B.get_den(), 6);
    Integer u(1);
    for (const auto& [p, v] : need) {
        Integer pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(v));
        u *= pe;
    }
    return u;
}

std::vector<Integer> integer_cubic_roots(const Integer& A, const Integer& c0) {
    // x^3 + A x + c0 with A possibly zero.
    std::vector<Integer> out;
    if (A == 0) {
        if (auto r = integer_cbrt_exact(-c0)) out.push_back(*r);
        return out;
    }
    Polynomial cubic({Rational(c0), Rational(A), Rational(0), Rational(1)});
    for (const Rational& r : rational_roots(cubic)) {
        if (r.get_den() == 1) out.push_back(r.get_num());
    }
    return out;
}

template <class F>
Point<F> element_of_order(const Curve& c, const std::vector<Point<F>>& pts, int target) {
    for (const auto& p : pts) {
        auto n = point_order(c, p);
        if (n && *n == target) return p;
    }
    throw std::logic_error("torsion assembly: no element of order " + std::to_string(target));
}

template <class F>
bool contains_point(const std::vector<Point<F>>& pts, const Point<F>& p) {
    return std::find(pts.begin(), pts.end(), p) != pts.end();
}

template <class F>
std::vector<Point<F>> cyclic_span(const Curve& c, const Point<F>& g) {
    std::vector<Point<F>> out{Point<F>::infinity()};
    Point<F> acc = g;
    while (!acc.is_infinity()) {
        out.push_back(acc);
        acc = add(c, acc, g);
    }
    return out;
}

// Build the invariant-factor presentation from the full list of affine
// torsion points.
TorsionGroup<Rational> assemble_from_points(const Curve& c,
                                            const std::vector<Point<Rational>>& affine) {
    TorsionGroup<Rational> g;
    int n = static_cast<int>(affine.size()) + 1;
    if (n == 1) return g;
    int two_tors = 0;
    for (const auto& p : affine) {
        if (p.y() == 0) ++two_tors;
    }
    if (two_tors == 3) {
        int half = n / 2;
        Point<Rational> gmax = element_of_order(c, affine, half);
        auto span = cyclic_span(c, gmax);
        for (const auto& p : affine) {
            if (p.y() == 0 && !contains_point(span, p)) {
                g.invariant_factors = {2, half};
                g.generators = {p, gmax};
                return g;
            }
        }
        throw std::logic_error("torsion assembly: full 2-torsion without independent generator");
    }
    g.invariant_factors = {n};
    g.generators = {element_of_order(c, affine, n)};
    return g;
}

}  // namespace

TorsionGroup<Rational> torsion_over_Q(const Curve& c) {
    Integer u = integral_scale(c.A(), c.B());
    Rational scaled_A = c.A() * Rational(u * u * u * u);
    Rational scaled_B = c.B() * Rational(u * u * u * u * u * u);
    Integer A = scaled_A.get_num();
    Integer B = scaled_B.get_num();
    Curve model{Rational(A), Rational(B)};

    std::vector<Point<Rational>> affine;
    auto consider = [&](const Integer& x, const Integer& y) {
        Point<Rational> p{Rational(x), Rational(y)};
        if (contains_point(affine, p)) return;
        if (!point_order(model, p)) return;   // integral but infinite order
        affine.push_back(std::move(p));
    };

    for (const Integer& x : integer_cubic_roots(A, B)) consider(x, Integer(0));

    // y != 0 candidates: Nagell-Lutz bounds y^2 by the discriminant.
    Integer disc = (model.discriminant()).get_num();
    Integer half_square_part(1);
    for (const auto& [p, e] : factorize(disc).factors) {
        Integer pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e / 2));
        half_square_part *= pe;
    }
    for (const Integer& y : positive_divisors(half_square_part)) {
        for (const Integer& x : integer_cubic_roots(A, B - y * y)) {
            consider(x, y);
            consider(x, -y);
        }
    }

    TorsionGroup<Rational> g = assemble_from_points(model, affine);
    if (u != 1) {
        Rational u2(u * u), u3(u * u * u);
        for (auto& p : g.generators) {
            p = Point<Rational>(p.x() / u2, p.y() / u3);
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// Torsion over Q(sqrt(D)) for the fixed curve E: y^2 = x^3 - 27.
//
// The prime-to-2 part is the odd torsion of E(Q) plus the odd torsion of
// the twist E^D(Q) carried through the twist map; the 2-primary part is
// read off the factorization of x^3 - 27 directly, with an exact probe
// confirming that no point of order 4 appears.

namespace {

// Largest odd-order element of a torsion group, with its order.
std::optional<std::pair<Point<Rational>, int>> odd_part_generator(
    const Curve& c, const TorsionGroup<Rational>& g) {
    std::optional<std::pair<Point<Rational>, int>> best;
    for (const auto& p : torsion_points(c, g)) {
        auto n = point_order(c, p);
        if (!n || *n % 2 == 0) continue;
        if (!best || best->second < *n) best = {p, *n};
    }
    if (best && best->second > 1) return best;
    return std::nullopt;
}

// Roots of x^2 + px + q inside Q(sqrt(D)), if any.
std::vector<QuadElem> quadratic_roots_in(const Rational& p, const Rational& q, const Integer& D) {
    Rational disc = p * p - 4 * q;
    std::vector<QuadElem> out;
    if (disc == 0) {
        out.push_back(QuadElem::from_rational(-p / 2, D));
        return out;
    }
    if (auto root = sqrt_in_field(disc, D)) {
        QuadElem half = QuadElem::from_rational(Rational(1, 2), D);
        QuadElem minus_p = QuadElem::from_rational(-p, D);
        out.push_back((minus_p + *root) * half);
        out.push_back((minus_p - *root) * half);
    }
    return out;
}

}  // namespace

TorsionGroup<QuadElem> torsion_over_quadratic(const Integer& D) {
    if (D == 0 || D == 1 || !is_squarefree(D)) {
        throw std::invalid_argument("torsion_over_quadratic: D must be squarefree, not 0 or 1");
    }
    const Curve E = curve_E();

    // 2-torsion: x^3 - 27 = (x - 3)(x^2 + 3x + 9).
    std::vector<Point<QuadElem>> two_torsion;
    QuadElem zero = QuadElem::from_rational(Rational(0), D);
    two_torsion.emplace_back(QuadElem::from_rational(Rational(3), D), zero);
    for (const QuadElem& x : quadratic_roots_in(Rational(3), Rational(9), D)) {
        two_torsion.emplace_back(x, zero);
    }

    // Order-4 probe: x-coordinates of order-4 points are roots of
    // x^2 - 6x - 18 (the degree-2 factor of the 4-division polynomial),
    // which lie in Q(sqrt(3)); none of them lifts to a point.
    for (const QuadElem& x : quadratic_roots_in(Rational(-6), Rational(-18), D)) {
        QuadElem rhs = x * x * x - Rational(27);
        if (sqrt_in_quad(rhs)) {
            throw std::logic_error("torsion_over_quadratic: unexpected point of order 4");
        }
    }

    // Odd part, from E(Q) and from the twist.
    std::optional<std::pair<Point<QuadElem>, int>> odd;
    auto merge_odd = [&](const Point<QuadElem>& p, int order) {
        if (!odd) {
            odd = {p, order};
            return;
        }
        Integer g;
        Integer a(odd->second), b(order);
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        if (g != 1) {
            throw std::logic_error("torsion_over_quadratic: overlapping odd components");
        }
        odd = {add(E, odd->first, p), odd->second * order};
    };

    if (auto base = odd_part_generator(E, torsion_over_Q(E))) {
        Point<QuadElem> lifted{QuadElem::from_rational(base->first.x(), D),
                               QuadElem::from_rational(base->first.y(), D)};
        merge_odd(lifted, base->second);
    }
    Curve twisted = curve_E_twist(D);
    if (auto tw = odd_part_generator(twisted, torsion_over_Q(twisted))) {
        merge_odd(twist_point_to_E(D, tw->first), tw->second);
    }

    int odd_order = odd ? odd->second : 1;
    TorsionGroup<QuadElem> g;
    if (two_torsion.size() == 1) {
        Point<QuadElem> gen = odd ? add(E, two_torsion[0], odd->first) : two_torsion[0];
        g.invariant_factors = {2 * odd_order};
        g.generators = {gen};
    } else {
        // Full 2-torsion: Z/2 x Z/(2 * odd_order).
        Point<QuadElem> gmax = odd ? add(E, two_torsion[0], odd->first) : two_torsion[0];
        g.invariant_factors = {2, 2 * odd_order};
        g.generators = {two_torsion[1], gmax};
    }
    for (std::size_t i = 0; i < g.generators.size(); ++i) {
        auto n = point_order(E, g.generators[i]);
        if (!n || *n != g.invariant_factors[i]) {
            throw std::logic_error("torsion_over_quadratic: generator order mismatch");
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// Division polynomials

Polynomial division_polynomial(const Curve& c, int n) {
    if (n < 2) throw std::invalid_argument("division_polynomial: n >= 2 required");
    if (!c.is_integral()) {
        throw std::invalid_argument("division_polynomial: integral model required");
    }
    const Rational A = c.A(), B = c.B();
    const Polynomial f({B, A, Rational(0), Rational(1)});
    if (n == 2) return f;

    // Psi[k] = psi_k for odd k, psi_k / (2y) for even k.
    std::vector<Polynomial> psi(static_cast<std::size_t>(n) + 1);
    psi[0] = Polynomial();
    psi[1] = Polynomial::constant(Rational(1));
    psi[2] = Polynomial::constant(Rational(1));
    psi[3] = Polynomial({-A * A, 12 * B, 6 * A, Rational(0), Rational(3)});
    if (n >= 4) {
        psi[4] = Polynomial({-8 * B * B - A * A * A, -4 * A * B, -5 * A * A, 20 * B, 5 * A,
                             Rational(0), Rational(1)}) *
                 Rational(2);
    }
    const Polynomial f2_16 = f * f * Rational(16);
    for (int k = 5; k <= n; ++k) {
        auto& P = psi;
        std::size_t K = static_cast<std::size_t>(k);
        if (k % 2 == 1) {
            int m = (k - 1) / 2;
            std::size_t M = static_cast<std::size_t>(m);
            Polynomial lead = P[M + 2] * P[M] * P[M] * P[M];
            Polynomial tail = P[M - 1] * P[M + 1] * P[M + 1] * P[M + 1];
            P[K] = (m % 2 == 0) ? f2_16 * lead - tail : lead - f2_16 * tail;
        } else {
            int m = k / 2;
            std::size_t M = static_cast<std::size_t>(m);
            P[K] = P[M] * (P[M + 2] * P[M - 1] * P[M - 1] - P[M - 2] * P[M + 1] * P[M + 1]);
        }
    }
    const Polynomial& out = psi[static_cast<std::size_t>(n)];
    return (n % 2 == 1) ? out : out.primitive();
}

// ---------------------------------------------------------------------------
// Degree <= 2 factor scan

namespace {

constexpr unsigned kScanPrecision = 320;
constexpr long kScanImagBits = 100;    // |Im| below 2^-100 counts as real
constexpr long kScanReconstructBits = 140;

// Monic irreducible factors of degree <= 2, certified by exact division.
std::vector<Polynomial> small_factors(const Polynomial& input) {
    std::vector<Polynomial> out;
    Polynomial g = input.primitive();
    int shift = 0;
    while (g.coeff(shift) == 0) ++shift;
    if (shift > 0) {
        out.push_back(Polynomial::x());
        std::vector<Rational> rest(g.coeffs().begin() + shift, g.coeffs().end());
        g = Polynomial(std::move(rest));
    }
    if (g.degree() < 1) return out;
    if (g.degree() == 1) {
        out.push_back(g.monic());
        return out;
    }

    mpf_set_default_prec(kScanPrecision);
    auto roots = detail::complex_roots(g.integer_coeffs(), kScanPrecision);

    mpf_class imag_eps(0, kScanPrecision);
    mpf_div_2exp(imag_eps.get_mpf_t(), mpf_class(1, kScanPrecision).get_mpf_t(), kScanImagBits);
    Integer max_den;
    mpz_ui_pow_ui(max_den.get_mpz_t(), 2, 60);

    auto push_unique = [&out](Polynomial p) {
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    };

    // Linear factors: real roots whose reconstruction verifies exactly.
    for (const auto& z : roots) {
        if (abs(z.im) > imag_eps) continue;
        auto r = detail::reconstruct_rational(z.re, max_den, kScanReconstructBits);
        if (!r || g.eval(*r) != 0) continue;
        push_unique(Polynomial({-*r, Rational(1)}));
    }

    // Quadratic factors: root pairs with rational sum and product. The
    // numeric pairing only nominates candidates; exact division decides.
    for (std::size_t i = 0; i < roots.size(); ++i) {
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            mpf_class s_im = roots[i].im + roots[j].im;
            if (abs(s_im) > imag_eps) continue;
            mpf_class p_im = roots[i].re * roots[j].im + roots[i].im * roots[j].re;
            if (abs(p_im) > imag_eps) continue;
            mpf_class s_re = roots[i].re + roots[j].re;
            mpf_class p_re = roots[i].re * roots[j].re - roots[i].im * roots[j].im;
            auto s = detail::reconstruct_rational(s_re, max_den, kScanReconstructBits);
            if (!s) continue;
            auto p = detail::reconstruct_rational(p_re, max_den, kScanReconstructBits);
            if (!p) continue;
            Rational disc = *s * *s - 4 * *p;
            if (rational_sqrt_exact(disc)) continue;   // splits over Q
            Polynomial cand({*p, -*s, Rational(1)});
            if (cand.divides(g)) push_unique(std::move(cand));
        }
    }
    return out;
}

}  // namespace

std::vector<ScanFactor> kamienny_factor_scan() {
    const Curve E = curve_E();
    std::vector<ScanFactor> found;
    for (int n : {2, 3, 4, 5, 7, 11, 13}) {
        Polynomial dp = division_polynomial(E, n);
        for (Polynomial& f : small_factors(dp)) {
            auto it = std::find_if(found.begin(), found.end(),
                                   [&](const ScanFactor& s) { return s.factor == f; });
            if (it == found.end()) {
                found.push_back(ScanFactor{std::move(f), {n}});
            } else {
                it->sources.push_back(n);
            }
        }
    }
    std::sort(found.begin(), found.end(),
              [](const ScanFactor& a, const ScanFactor& b) { return a.factor < b.factor; });
    return found;
}

}  // namespace cubeprog
