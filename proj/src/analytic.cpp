#include "cubeprog/analytic.hpp"

#include <stdexcept>

namespace cubeprog {

ADResult a_d(const Integer& d) {
    if (d <= 0) {
        throw std::invalid_argument("a_d: d must be positive, got " + to_string(d));
    }
    Integer g;
    Integer six(6);
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), six.get_mpz_t());
    if (g != 1) {
        throw std::invalid_argument("a_d: d must be coprime with 6, got " + to_string(d) +
                                    " (gcd " + to_string(g) + ")");
    }
    if (!is_squarefree(d)) {
        throw std::invalid_argument("a_d: d must be squarefree, got " + to_string(d));
    }

    ADResult out{d, Integer(0), {}};
    Integer M;
    mpz_sqrt(M.get_mpz_t(), d.get_mpz_t());
    for (Integer m = -M; m <= M; ++m) {
        if (mod_floor(m, Integer(3)) != 1) continue;
        Integer rem_m = d - m * m;
        for (Integer n = -M; n <= M; ++n) {
            if (mod_floor(n, Integer(3)) != 0) continue;
            if (mod_floor(m + n, Integer(2)) != 1) continue;
            Integer kk = rem_m - n * n;
            if (kk < 0) continue;
            auto k = integer_sqrt_exact(kk);
            if (!k) continue;
            int term = (mod_floor(n, Integer(2)) == 0) ? 1 : -1;
            out.solutions.push_back({m, n, *k});
            out.value += term;
            if (*k != 0) {
                out.solutions.push_back({m, n, -*k});
                out.value += term;
            }
        }
    }
    return out;
}

bool quartic_minus3_has_root(const Integer& p) {
    if (!is_prime(p)) {
        throw std::invalid_argument("quartic_minus3_has_root: " + to_string(p) + " is not prime");
    }
    if (p < 1000000) {
        // x^4 fits in 64 bits after one reduction: (10^6)^2 < 2^40.
        unsigned long pl = p.get_ui();
        for (unsigned long x = 0; x < pl; ++x) {
            unsigned long v = (x * x) % pl;
            v = (v * v) % pl;
            if ((v + 3) % pl == 0) return true;
        }
        return false;
    }
    // -3 is a 4th power mod p iff (-3)^((p-1)/g) = 1 with g = gcd(4, p-1):
    // the 4th powers form the index-g subgroup of the cyclic group mod p.
    Integer g = (mod_floor(p - 1, Integer(4)) == 0) ? Integer(4) : Integer(2);
    Integer e = (p - 1) / g;
    Integer base = mod_floor(Integer(-3), p);
    Integer r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return r == 1;
}

std::string to_string(Status s) {
    switch (s) {
        case Status::Exists: return "Exists";
        case Status::ExistsUnderBSD: return "ExistsUnderBSD";
        case Status::NotExists: return "NotExists";
        case Status::Unknown: return "Unknown";
    }
    return "?";
}

bool Verdict::has_criterion(const std::string& tag) const {
    for (const auto& c : criteria) {
        if (c.tag == tag) return true;
    }
    return false;
}

Verdict classify(const Integer& D) {
    if (D == 0) {
        throw std::invalid_argument("classify: D = 0 is not a quadratic field");
    }
    if (!is_squarefree(D)) {
        throw std::invalid_argument("classify: D = " + to_string(D) +
                                    " is not squarefree; its squarefree core is " +
                                    to_string(squarefree_decompose(D).core));
    }

    Verdict v;
    v.D = D;
    const Integer absD = abs(D);

    if (D == 1) {
        v.criteria.push_back({"legendre", Status::NotExists,
                              "Q(sqrt(1)) = Q, and there is no non-trivial progression of "
                              "three rational cubes (Legendre)"});
    }

    // b.i - every prime divisor of |D| is 5 (mod 12) or 3. The criterion
    // constrains the primes of D, not its sign (the rank-zero argument
    // covers F^D, F^3D and F^-D alike); it is vacuous for D = +-1.
    {
        bool all_match = true;
        std::string primes;
        if (absD != 1) {
            for (const auto& [p, e] : factorize(absD).factors) {
                bool ok = (p == 3) || (mod_floor(p, Integer(12)) == 5);
                if (!ok) {
                    all_match = false;
                    break;
                }
                if (!primes.empty()) primes += ", ";
                primes += to_string(p);
            }
        }
        if (all_match) {
            std::string detail =
                (absD == 1)
                    ? "no prime divides " + to_string(D) +
                          " (vacuous case); the twist of x^3 + 1 by " + to_string(D) +
                          " has rank 0"
                    : "every prime divisor of " + to_string(D) + " (" + primes +
                          ") is 5 (mod 12) or equals 3, so the twist of x^3 + 1 by " +
                          to_string(D) + " has rank 0 (sign-independent)";
            v.criteria.push_back({"b.i", Status::NotExists, detail});
        }
    }

    // b.ii - D = -p, p = 1 (mod 12), and x^4 + 3 has no root mod p.
    if (D < 0 && is_prime(absD) && mod_floor(absD, Integer(12)) == 1 &&
        !quartic_minus3_has_root(absD)) {
        v.criteria.push_back({"b.ii", Status::NotExists,
                              "D = -" + to_string(absD) + " with " + to_string(absD) +
                                  " = 1 (mod 12) prime and x^4 + 3 = 0 unsolvable mod " +
                                  to_string(absD) + ": the lattice sum A_" + to_string(absD) +
                                  " is nonzero, forcing rank 0"});
    }

    // Lattice-sum criterion for negative D with |D| coprime to 6.
    if (D < 0) {
        Integer d = absD;
        Integer g;
        Integer six(6);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), six.get_mpz_t());
        if (g == 1) {
            ADResult ad = a_d(d);
            if (ad.value != 0) {
                v.criteria.push_back({"lattice.nonzero", Status::NotExists,
                                      "A_" + to_string(d) + " = " + to_string(ad.value) +
                                          " != 0: L(F^" + to_string(D) +
                                          ", 1) != 0, so the twist has rank 0 (Kolyvagin)"});
            } else {
                v.criteria.push_back({"lattice.zero", Status::ExistsUnderBSD,
                                      "A_" + to_string(d) + " = 0: L(F^" + to_string(D) +
                                          ", 1) = 0, so the twist has positive rank under BSD"});
            }
        }
    }

    // a.i - |D| an odd prime p > 3 with p = 3 (mod 4), either sign.
    if (absD > 3 && is_prime(absD) && mod_floor(absD, Integer(4)) == 3) {
        v.criteria.push_back({"a.i", Status::Exists,
                              "|D| = " + to_string(absD) + " is prime with " + to_string(absD) +
                                  " = 3 (mod 4): the twist of x^3 + 1 by " + to_string(D) +
                                  " has rank 1 (Frey), either sign"});
    }

    // a.ii - functional-equation sign forces L(F^D, 1) = 0.
    if (D > 1 && mod_floor(D, Integer(2)) == 0 && mod_floor(D, Integer(3)) != 0) {
        v.criteria.push_back({"a.ii", Status::ExistsUnderBSD,
                              "D = " + to_string(D) +
                                  " positive, even and coprime to 3: L(F^D, 1) = 0 by the "
                                  "functional equation; positive rank under BSD"});
    }
    if (D < 0) {
        Integer r = mod_floor(D, Integer(12));
        if (r == 1 || r == 5) {
            v.criteria.push_back({"a.ii", Status::ExistsUnderBSD,
                                  "D = " + to_string(D) + " negative with D = " + to_string(r) +
                                      " (mod 12): L(F^D, 1) = 0 by the functional equation; "
                                      "positive rank under BSD"});
        }
    }

    bool has_no = false, has_yes = false, has_yes_uncond = false;
    for (const auto& c : v.criteria) {
        switch (c.direction) {
            case Status::NotExists: has_no = true; break;
            case Status::Exists: has_yes = has_yes_uncond = true; break;
            case Status::ExistsUnderBSD: has_yes = true; break;
            default: break;
        }
    }
    if (has_no && has_yes) {
        throw std::logic_error("classify: contradictory criteria for D = " + to_string(D) +
                               "; this is an implementation bug");
    }
    if (has_no) {
        v.status = Status::NotExists;
    } else if (has_yes_uncond) {
        v.status = Status::Exists;
    } else if (has_yes) {
        v.status = Status::ExistsUnderBSD;
    } else {
        v.status = Status::Unknown;
    }
    return v;
}

Verdict upgrade_with_witness(const Verdict& v, const Point<Rational>& p) {
    Curve twist = curve_E_twist(v.D);
    if (p.is_infinity() || !is_on_curve(twist, p)) {
        throw std::invalid_argument("upgrade_with_witness: point " + p.str() + " is not on " +
                                    twist.str());
    }
    if (auto n = point_order(twist, p)) {
        throw std::invalid_argument("upgrade_with_witness: point " + p.str() +
                                    " has finite order " + std::to_string(*n) +
                                    "; it certifies nothing");
    }
    APTriple<QuadElem> ap = ap_from_twist_point(v.D, p);
    if (!is_ap(ap) || is_trivial_ap(ap)) {
        throw std::logic_error("upgrade_with_witness: infinite-order point produced a "
                               "trivial or invalid progression; this is an implementation bug");
    }
    if (v.status == Status::NotExists) {
        throw std::logic_error("upgrade_with_witness: verified witness contradicts a NotExists "
                               "verdict for D = " + to_string(v.D) +
                               "; this is an implementation bug");
    }
    Verdict out = v;
    out.status = Status::Exists;
    out.witness = ap;
    out.criteria.push_back({"witness", Status::Exists,
                            "point " + p.str() + " on " + twist.str() +
                                " has infinite order; its progression is non-trivial"});
    return out;
}

}  // namespace cubeprog
