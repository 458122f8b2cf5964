#include "cubeprog/arith.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace cubeprog {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw std::invalid_argument("make_rational: zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer num(const Rational& q) { return q.get_num(); }
Integer den(const Rational& q) { return q.get_den(); }

namespace {

bool valid_decimal(const std::string& s, bool allow_slash) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    bool seen_digit = false;
    bool seen_slash = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c >= '0' && c <= '9') {
            seen_digit = true;
        } else if (c == '/' && allow_slash && !seen_slash && seen_digit) {
            seen_slash = true;
            if (i + 1 == s.size()) return false;
            if (s[i + 1] == '-') ++i;   // allow p/-q, canonicalized later
        } else {
            return false;
        }
    }
    return seen_digit;
}

}  // namespace

std::optional<Integer> parse_integer(const std::string& s) {
    std::string t = (!s.empty() && s[0] == '+') ? s.substr(1) : s;
    if (!valid_decimal(t, false)) return std::nullopt;
    return Integer(t, 10);
}

std::optional<Rational> parse_rational(const std::string& s) {
    std::string t = (!s.empty() && s[0] == '+') ? s.substr(1) : s;
    if (!valid_decimal(t, true)) return std::nullopt;
    Rational q(t, 10);
    if (q.get_den() == 0) return std::nullopt;
    q.canonicalize();
    return q;
}

std::string to_string(const Integer& n) { return n.get_str(10); }

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str(10);
    return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

Integer mod_floor(const Integer& a, const Integer& m) {
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

std::optional<Integer> integer_sqrt_exact(const Integer& n) {
    if (n < 0) return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<Integer> integer_cbrt_exact(const Integer& n) {
    Integer r;
    int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), 3);
    if (!exact) return std::nullopt;
    return r;
}

std::optional<Rational> rational_sqrt_exact(const Rational& q) {
    if (q < 0) return std::nullopt;
    auto rn = integer_sqrt_exact(q.get_num());
    if (!rn) return std::nullopt;
    auto rd = integer_sqrt_exact(q.get_den());
    if (!rd) return std::nullopt;
    return make_rational(*rn, *rd);   // already canonical
}

namespace {

const unsigned long kSmallPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                      23, 29, 31, 37, 41, 43, 47};

// One Miller-Rabin round, n odd > 2, base reduced mod n.
bool mr_round(const Integer& n, const Integer& base, const Integer& d, unsigned long s) {
    if (base % n == 0) return true;
    Integer x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
        if (x == 1) return false;
    }
    return false;
}

}  // namespace

bool is_prime(const Integer& n_in) {
    Integer n = abs(n_in);
    if (n < 2) return false;
    for (unsigned long p : kSmallPrimes) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    Integer d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    // {2,...,37} is a deterministic witness set for n < 3.3 * 10^24,
    // comfortably past 2^64.
    for (unsigned long w : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul,
                            23ul, 29ul, 31ul, 37ul}) {
        if (!mr_round(n, Integer(w), d, s)) return false;
    }
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) return true;

    // Beyond 64 bits: 40 extra rounds with bases from a fixed LCG, so
    // results stay reproducible run to run.
    std::uint64_t state = 0x5eed5eed5eed5eedULL;
    for (int i = 0; i < 40; ++i) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        Integer base = Integer(static_cast<unsigned long>(state >> 16)) % (n - 3) + 2;
        if (!mr_round(n, base, d, s)) return false;
    }
    return true;
}

namespace {

Integer rho_brent(const Integer& n) {
    // n odd composite, not a prime power of a small prime.
    for (unsigned long c = 1;; ++c) {
        Integer x(2), y(2), d(1);
        Integer ys, q(1);
        unsigned long r = 1, m = 128;
        auto f = [&](const Integer& v) -> Integer { return (v * v + c) % n; };
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            while (k < r && d == 1) {
                ys = y;
                unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = f(y);
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += lim;
            }
            r *= 2;
        }
        if (d == n) {
            // backtrack
            do {
                ys = f(ys);
                Integer diff = abs(x - ys);
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (d == 1);
        }
        if (d != n) return d;
        // cycle degenerated; retry with the next polynomial
    }
}

void factor_into(Integer n, std::vector<Integer>& primes) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    Integer d = rho_brent(n);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

}  // namespace

Integer Factorization::value() const {
    Integer v = sign;
    for (const auto& [p, e] : factors) {
        Integer pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
        v *= pe;
    }
    return v;
}

Factorization factorize(const Integer& n_in) {
    if (n_in == 0) {
        throw std::invalid_argument("factorize: zero input");
    }
    Factorization out;
    out.sign = (n_in < 0) ? -1 : 1;
    Integer n = abs(n_in);

    std::vector<Integer> primes;
    for (unsigned long p = 2; p < 1000000ul && Integer(p) * p <= n; p = (p == 2) ? 3 : p + 2) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            primes.emplace_back(p);
            n /= static_cast<unsigned long>(p);
        }
    }
    if (n > 1) factor_into(n, primes);

    std::sort(primes.begin(), primes.end());
    for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        out.factors.emplace_back(primes[i], static_cast<int>(j - i));
        i = j;
    }
    return out;
}

std::vector<Integer> positive_divisors(const Integer& n) {
    Factorization f = factorize(n);
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [p, e] : f.factors) {
        std::size_t base = divs.size();
        Integer pe(1);
        for (int k = 1; k <= e; ++k) {
            pe *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

SquarefreeDecomposition squarefree_decompose(const Integer& n) {
    if (n == 0) {
        throw std::invalid_argument("squarefree_decompose: zero input");
    }
    Factorization f = factorize(n);
    SquarefreeDecomposition out{Integer(f.sign), Integer(1)};
    for (const auto& [p, e] : f.factors) {
        if (e % 2 == 1) out.core *= p;
        Integer ph;
        mpz_pow_ui(ph.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e / 2));
        out.cofactor *= ph;
    }
    return out;
}

bool is_squarefree(const Integer& n) {
    if (n == 0) return false;
    return squarefree_decompose(n).cofactor == 1;
}

}  // namespace cubeprog
