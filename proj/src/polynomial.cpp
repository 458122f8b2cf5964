#include "cubeprog/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubeprog {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::from_integers(const std::vector<Integer>& coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (const auto& v : coeffs) c.emplace_back(v);
    return Polynomial(std::move(c));
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::x() { return Polynomial({Rational(0), Rational(1)}); }

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<std::size_t>(i)];
}

Rational Polynomial::leading() const {
    if (is_zero()) throw std::invalid_argument("Polynomial: zero polynomial has no leading coefficient");
    return c_.back();
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            r[i + j] += c_[i] * o.c_[j];
        }
    }
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Rational& s) const {
    Polynomial r = *this;
    for (auto& v : r.c_) v *= s;
    r.trim();
    return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw std::invalid_argument("Polynomial: division by zero polynomial");
    Polynomial r = f;
    std::vector<Rational> q;
    int dg = g.degree();
    if (f.degree() >= dg) q.assign(static_cast<std::size_t>(f.degree() - dg) + 1, Rational(0));
    while (!r.is_zero() && r.degree() >= dg) {
        int k = r.degree() - dg;
        Rational c = r.leading() / g.leading();
        q[static_cast<std::size_t>(k)] = c;
        for (int i = 0; i <= dg; ++i) {
            r.c_[static_cast<std::size_t>(k + i)] -= c * g.c_[static_cast<std::size_t>(i)];
        }
        r.trim();
    }
    return {Polynomial(std::move(q)), r};
}

bool Polynomial::divides(const Polynomial& f) const {
    if (is_zero()) return f.is_zero();
    return divmod(f, *this).second.is_zero();
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw std::invalid_argument("Polynomial: cannot normalize zero polynomial");
    return *this * (Rational(1) / leading());
}

Polynomial Polynomial::primitive() const {
    if (is_zero()) return Polynomial();
    Integer l(1);
    for (const auto& v : c_) {
        Integer d = v.get_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    Integer content(0);
    std::vector<Integer> ints;
    ints.reserve(c_.size());
    for (const auto& v : c_) {
        Integer w = v.get_num() * (l / v.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), w.get_mpz_t());
        ints.push_back(std::move(w));
    }
    if (ints.back() < 0) content = -content;
    std::vector<Rational> out;
    out.reserve(ints.size());
    for (const auto& w : ints) out.emplace_back(w / content);
    return Polynomial(std::move(out));
}

bool Polynomial::has_integer_coeffs() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& v) { return v.get_den() == 1; });
}

std::vector<Integer> Polynomial::integer_coeffs() const {
    if (!has_integer_coeffs()) {
        throw std::invalid_argument("Polynomial: coefficients are not integers");
    }
    std::vector<Integer> out;
    out.reserve(c_.size());
    for (const auto& v : c_) out.push_back(v.get_num());
    return out;
}

Polynomial Polynomial::derivative() const {
    if (degree() < 1) return Polynomial();
    std::vector<Rational> r;
    r.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * Rational(static_cast<long>(i)));
    return Polynomial(std::move(r));
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        Rational c = coeff(i);
        if (c == 0) continue;
        bool first = out.empty();
        if (!first) out += (c < 0) ? " - " : " + ";
        if (first && c < 0) out += "-";
        Rational a = abs(c);
        std::string mag = to_string(a);
        if (i == 0) {
            out += mag;
        } else {
            if (a != 1) out += mag + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

int Polynomial::compare(const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.degree(); i >= 0; --i) {
        int c = cmp(a.coeff(i), b.coeff(i));
        if (c != 0) return c;
    }
    return 0;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

std::vector<Rational> rational_roots(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");

    std::vector<Rational> roots;
    Polynomial g = f.primitive();
    if (g.degree() == 0) return roots;

    // Strip powers of x.
    int shift = 0;
    while (g.coeff(shift) == 0) ++shift;
    if (shift > 0) {
        roots.emplace_back(0);
        std::vector<Rational> rest(g.coeffs().begin() + shift, g.coeffs().end());
        g = Polynomial(std::move(rest));
    }
    if (g.degree() >= 1) {
        Integer a0 = abs(g.coeff(0).get_num());
        Integer an = abs(g.leading().get_num());
        // Cauchy bound keeps the divisor scan focused on plausible roots.
        Rational bound(0);
        for (int i = 0; i < g.degree(); ++i) {
            Rational r = abs(g.coeff(i) / g.leading());
            if (r > bound) bound = r;
        }
        bound += 1;
        for (const Integer& p : positive_divisors(a0)) {
            for (const Integer& q : positive_divisors(an)) {
                Integer gg;
                mpz_gcd(gg.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
                if (gg != 1) continue;
                Rational cand = make_rational(p, q);
                if (cand > bound) continue;
                if (g.eval(cand) == 0) roots.push_back(cand);
                if (g.eval(Rational(-cand)) == 0) roots.emplace_back(-cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace cubeprog
