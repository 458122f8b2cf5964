#include "rootfind.hpp"

#include <cmath>
#include <stdexcept>

namespace cubeprog::detail {

namespace {

Cplx cmul(const Cplx& a, const Cplx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Cplx csub(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }

Cplx cdiv(const Cplx& a, const Cplx& b) {
    mpf_class n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

mpf_class cabs2(const Cplx& a) { return a.re * a.re + a.im * a.im; }

}  // namespace

std::vector<Cplx> complex_roots(const std::vector<Integer>& coeffs, unsigned prec_bits) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    if (n < 1 || coeffs.back() == 0) {
        throw std::invalid_argument("complex_roots: need degree >= 1 with nonzero leading coefficient");
    }

    std::vector<mpf_class> c(coeffs.size(), mpf_class(0, prec_bits));
    for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = mpf_class(coeffs[i], prec_bits);

    // Fujiwara-style inclusion radius, computed on bit lengths so huge
    // coefficients cannot overflow a double.
    double lc_bits = static_cast<double>(mpz_sizeinbase(coeffs.back().get_mpz_t(), 2));
    double radius = 1.0;
    for (int k = 0; k < n; ++k) {
        if (coeffs[static_cast<std::size_t>(k)] == 0) continue;
        double bits = static_cast<double>(
            mpz_sizeinbase(coeffs[static_cast<std::size_t>(k)].get_mpz_t(), 2));
        double r = std::exp2((bits - lc_bits) / static_cast<double>(n - k));
        if (r > radius) radius = r;
    }
    radius *= 2.0;

    std::vector<Cplx> z;
    z.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        double ang = 2.0 * M_PI * k / n + 0.7;   // offset breaks symmetry with real axes
        z.push_back({mpf_class(radius * std::cos(ang), prec_bits),
                     mpf_class(radius * std::sin(ang), prec_bits)});
    }

    const long tol_bits = static_cast<long>(prec_bits) - 56;
    mpf_class tol(0, prec_bits);
    mpf_div_2exp(tol.get_mpf_t(), mpf_class(1, prec_bits).get_mpf_t(),
                 static_cast<mp_bitcnt_t>(tol_bits));
    mpf_class tol2 = tol * tol;

    auto eval = [&](const Cplx& at) {
        Cplx acc{mpf_class(0, prec_bits), mpf_class(0, prec_bits)};
        for (std::size_t i = coeffs.size(); i-- > 0;) {
            acc = cmul(acc, at);
            acc.re += c[i];
        }
        return acc;
    };

    const int max_sweeps = 4000;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        mpf_class worst2(0, prec_bits);
        for (int i = 0; i < n; ++i) {
            Cplx nume = eval(z[static_cast<std::size_t>(i)]);
            Cplx deno{c.back(), mpf_class(0, prec_bits)};
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                deno = cmul(deno, csub(z[static_cast<std::size_t>(i)], z[static_cast<std::size_t>(j)]));
            }
            Cplx step = cdiv(nume, deno);
            z[static_cast<std::size_t>(i)].re -= step.re;
            z[static_cast<std::size_t>(i)].im -= step.im;
            mpf_class s2 = cabs2(step);
            if (s2 > worst2) worst2 = s2;
        }
        if (worst2 < tol2) return z;
    }
    throw std::runtime_error("complex_roots: Durand-Kerner did not converge");
}

std::optional<Rational> reconstruct_rational(const mpf_class& v, const Integer& max_den,
                                             long tol_bits) {
    mpf_class tol(0, v.get_prec());
    mpf_div_2exp(tol.get_mpf_t(), mpf_class(1, v.get_prec()).get_mpf_t(),
                 static_cast<mp_bitcnt_t>(tol_bits));

    auto close_enough = [&](const Rational& cand) {
        mpf_class approx(cand, v.get_prec());
        return abs(approx - v) <= tol;
    };

    // Convergents of the continued fraction of v.
    Integer p_prev(1), q_prev(0), p_cur, q_cur;
    mpf_class rem = v;
    bool first = true;
    for (int step = 0; step < 300; ++step) {
        mpf_class fl(0, v.get_prec());
        mpf_floor(fl.get_mpf_t(), rem.get_mpf_t());
        Integer a;
        mpz_set_f(a.get_mpz_t(), fl.get_mpf_t());
        if (first) {
            p_cur = a;
            q_cur = 1;
            first = false;
        } else {
            Integer p_next = a * p_cur + p_prev;
            Integer q_next = a * q_cur + q_prev;
            p_prev = p_cur;
            q_prev = q_cur;
            p_cur = p_next;
            q_cur = q_next;
        }
        if (q_cur > max_den) return std::nullopt;
        Rational cand = make_rational(p_cur, q_cur);
        if (close_enough(cand)) return cand;
        mpf_class frac = rem - fl;
        if (frac <= tol) return std::nullopt;    // exhausted the precision
        rem = 1 / frac;
    }
    return std::nullopt;
}

}  // namespace cubeprog::detail
