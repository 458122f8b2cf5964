#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cubeprog/arith.hpp"
#include "cubeprog/quadelem.hpp"

namespace cubeprog {

/**
 * Dense univariate polynomial with exact rational coefficients,
 * cleared to a primitive integer form on demand.
 */
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);    // coeffs[i] on x^i
    static Polynomial from_integers(const std::vector<Integer>& coeffs);
    static Polynomial constant(const Rational& c);
    static Polynomial x();

    int degree() const { return static_cast<int>(c_.size()) - 1; }   // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int i) const;
    Rational leading() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& s) const;
    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Euclidean division over Q; divisor must be nonzero.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g);

    bool divides(const Polynomial& f) const;      // this | f exactly over Q
    Polynomial monic() const;

    // Primitive integer form: multiply out denominators, divide by the
    // gcd of coefficients, make the leading coefficient positive.
    Polynomial primitive() const;
    bool has_integer_coeffs() const;
    std::vector<Integer> integer_coeffs() const;  // requires integer coefficients

    Polynomial derivative() const;

    template <class F>
    F eval(const F& at) const {
        F acc = field_embed(Rational(0), at);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * at + field_embed(*it, at);
        }
        return acc;
    }

    std::string str(const std::string& var = "x") const;

    // Total order (degree, then coefficients); for use in sorted sets.
    static int compare(const Polynomial& a, const Polynomial& b);
    bool operator<(const Polynomial& o) const { return compare(*this, o) < 0; }

private:
    void trim();
    std::vector<Rational> c_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);

// All rational roots of f != 0 via the rational root theorem on the
// primitive form, each verified by exact evaluation. Ascending order.
std::vector<Rational> rational_roots(const Polynomial& f);

}  // namespace cubeprog
