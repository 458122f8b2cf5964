#include "cubeprog/quadelem.hpp"

#include <stdexcept>

namespace cubeprog {

QuadElem::QuadElem(Rational a, Rational b, const Integer& radicand)
    : a_(std::move(a)), b_(std::move(b)) {
    if (radicand == 0) {
        throw std::invalid_argument("QuadElem: radicand 0 is not a quadratic field");
    }
    SquarefreeDecomposition sq = squarefree_decompose(radicand);
    if (sq.core == 1) {
        throw std::invalid_argument(
            "QuadElem: radicand " + to_string(radicand) +
            " is a perfect square; Q(sqrt(" + to_string(radicand) + ")) = Q");
    }
    b_ *= Rational(sq.cofactor);
    d_ = sq.core;
}

QuadElem QuadElem::from_rational(const Rational& a, const Integer& radicand) {
    return QuadElem(a, Rational(0), radicand);
}

void QuadElem::check_same_field(const QuadElem& o) const {
    if (d_ != o.d_) {
        throw std::invalid_argument("QuadElem: mismatched radicands sqrt(" +
                                    to_string(d_) + ") vs sqrt(" + to_string(o.d_) + ")");
    }
}

QuadElem QuadElem::conj() const { return QuadElem(canonical_tag{}, a_, -b_, d_); }

Rational QuadElem::norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

QuadElem QuadElem::inverse() const {
    if (is_zero()) {
        throw std::domain_error("QuadElem: division by zero");
    }
    Rational n = norm();   // nonzero: d squarefree != 1 admits no zero divisors
    return QuadElem(canonical_tag{}, a_ / n, -b_ / n, d_);
}

QuadElem QuadElem::operator-() const { return QuadElem(canonical_tag{}, -a_, -b_, d_); }

QuadElem& QuadElem::operator+=(const QuadElem& o) {
    check_same_field(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
    check_same_field(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
    check_same_field(o);
    Rational na = a_ * o.a_ + Rational(d_) * b_ * o.b_;
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = na;
    b_ = nb;
    return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& o) {
    check_same_field(o);
    return *this *= o.inverse();
}

bool QuadElem::operator==(const QuadElem& o) const {
    if (d_ == o.d_) return a_ == o.a_ && b_ == o.b_;
    // Distinct fields only intersect in Q.
    return b_ == 0 && o.b_ == 0 && a_ == o.a_;
}

std::string QuadElem::str() const {
    const std::string root = "sqrt(" + to_string(d_) + ")";
    if (b_ == 0) return to_string(a_);
    std::string bpart;
    Rational babs = abs(b_);
    bpart = (babs == 1) ? root : to_string(babs) + "*" + root;
    if (a_ == 0) return (b_ < 0 ? "-" : "") + bpart;
    return to_string(a_) + (b_ < 0 ? " - " : " + ") + bpart;
}

QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
QuadElem operator/(QuadElem x, const QuadElem& y) { return x /= y; }

QuadElem operator+(QuadElem x, const Rational& r) { return x += QuadElem::from_rational(r, x.d()); }
QuadElem operator+(const Rational& r, QuadElem x) { return x + r; }
QuadElem operator-(QuadElem x, const Rational& r) { return x -= QuadElem::from_rational(r, x.d()); }
QuadElem operator-(const Rational& r, const QuadElem& x) { return -(x - r); }
QuadElem operator*(QuadElem x, const Rational& r) { return x *= QuadElem::from_rational(r, x.d()); }
QuadElem operator*(const Rational& r, QuadElem x) { return x * r; }
QuadElem operator/(QuadElem x, const Rational& r) { return x /= QuadElem::from_rational(r, x.d()); }

std::optional<QuadElem> sqrt_in_field(const Rational& r, const Integer& d) {
    if (d == 0 || d == 1 || !is_squarefree(d)) {
        throw std::invalid_argument("sqrt_in_field: radicand must be squarefree, not 0 or 1");
    }
    if (r == 0) return QuadElem(Rational(0), Rational(0), d);
    if (auto t = rational_sqrt_exact(r)) {
        return QuadElem(*t, Rational(0), d);
    }
    if (auto t = rational_sqrt_exact(r / Rational(d))) {
        return QuadElem(Rational(0), *t, d);   // (t*sqrt(d))^2 = d t^2 = r
    }
    return std::nullopt;
}

std::optional<QuadElem> sqrt_in_quad(const QuadElem& x) {
    if (x.is_rational()) return sqrt_in_field(x.a(), x.d());
    // (u + v sqrt(d))^2 = x needs u^2 + d v^2 = a and 2uv = b, so u^2 is a
    // root of 4t^2 - 4at + d b^2, i.e. u^2 = (a +- sqrt(a^2 - d b^2)) / 2.
    auto t = rational_sqrt_exact(x.norm());
    if (!t) return std::nullopt;
    for (const Rational& s : {*t, Rational(-*t)}) {
        Rational u2 = (x.a() + s) / 2;
        if (u2 == 0) continue;
        if (auto u = rational_sqrt_exact(u2)) {
            if (*u == 0) continue;
            Rational v = x.b() / (2 * *u);
            QuadElem root(*u, v, x.d());
            if (root * root == x) return root;
        }
    }
    return std::nullopt;
}

std::string field_str(const Rational& v) { return to_string(v); }
std::string field_str(const QuadElem& v) { return v.str(); }

}  // namespace cubeprog
