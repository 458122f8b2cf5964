#pragma once

#include <optional>
#include <string>

#include "cubeprog/arith.hpp"

namespace cubeprog {

/**
 * Element a + b*sqrt(d) of the quadratic field Q(sqrt(d)).
 *
 * The radicand is squarefree-reduced on construction (a + b*sqrt(12)
 * is stored as a + 2b*sqrt(3)) and must not reduce to 0 or 1; plain
 * rationals are represented by Rational, not by QuadElem. Arithmetic
 * between elements requires matching radicands and is exact.
 */
class QuadElem {
public:
    QuadElem(Rational a, Rational b, const Integer& radicand);

    static QuadElem from_rational(const Rational& a, const Integer& radicand);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Integer& d() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    QuadElem conj() const;
    Rational norm() const;          // a^2 - d b^2
    QuadElem inverse() const;

    QuadElem operator-() const;
    QuadElem& operator+=(const QuadElem& o);
    QuadElem& operator-=(const QuadElem& o);
    QuadElem& operator*=(const QuadElem& o);
    QuadElem& operator/=(const QuadElem& o);

    bool operator==(const QuadElem& o) const;
    bool operator!=(const QuadElem& o) const { return !(*this == o); }

    std::string str() const;        // "a + b*sqrt(d)" with exact fractions

private:
    struct canonical_tag {};
    QuadElem(canonical_tag, Rational a, Rational b, Integer d)
        : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

    void check_same_field(const QuadElem& o) const;

    Rational a_, b_;
    Integer d_;
};

QuadElem operator+(QuadElem x, const QuadElem& y);
QuadElem operator-(QuadElem x, const QuadElem& y);
QuadElem operator*(QuadElem x, const QuadElem& y);
QuadElem operator/(QuadElem x, const QuadElem& y);

QuadElem operator+(QuadElem x, const Rational& r);
QuadElem operator+(const Rational& r, QuadElem x);
QuadElem operator-(QuadElem x, const Rational& r);
QuadElem operator-(const Rational& r, const QuadElem& x);
QuadElem operator*(QuadElem x, const Rational& r);
QuadElem operator*(const Rational& r, QuadElem x);
QuadElem operator/(QuadElem x, const Rational& r);

inline QuadElem conj(const QuadElem& x) { return x.conj(); }
inline Rational norm(const QuadElem& x) { return x.norm(); }

// Square root of a rational inside Q(sqrt(d)): either r = t^2 (returns t)
// or r = d t^2 (returns t*sqrt(d)). Absence is definitive.
std::optional<QuadElem> sqrt_in_field(const Rational& r, const Integer& d);

// Square root of a general field element within its own field.
std::optional<QuadElem> sqrt_in_quad(const QuadElem& x);

// Common radicand for generic code: embed a rational into the field of
// `like`. The Rational overload makes field-generic templates uniform.
inline Rational field_embed(const Rational& r, const Rational&) { return r; }
inline QuadElem field_embed(const Rational& r, const QuadElem& like) {
    return QuadElem::from_rational(r, like.d());
}
inline bool field_is_zero(const Rational& v) { return v == 0; }
inline bool field_is_zero(const QuadElem& v) { return v.is_zero(); }

std::string field_str(const Rational& v);
std::string field_str(const QuadElem& v);

}  // namespace cubeprog
