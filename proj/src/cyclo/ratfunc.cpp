#include "uqrep/core/ratfunc.hpp"

#include <sstream>

namespace uqrep {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
}

Poly Poly::scaled(const Rational& k) const {
    if (k == 0) return Poly();
    Poly r = *this;
    for (auto& x : r.c_) x *= k;
    return r;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw InternalError("polynomial division by zero");
    std::vector<Rational> rem = a.c_;
    int db = b.degree();
    int dq = a.degree() - db;
    std::vector<Rational> quo(dq >= 0 ? dq + 1 : 0);
    Rational inv_lead = 1 / b.lead();
    for (int k = dq; k >= 0; --k) {
        Rational f = rem[k + db] * inv_lead;
        quo[k] = f;
        if (f == 0) continue;
        for (int i = 0; i <= db; ++i) rem[k + i] -= f * b.c_[i];
    }
    q = Poly(std::move(quo));
    r = Poly(std::move(rem));
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
    Poly q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw InternalError("inexact polynomial division");
    return q;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(1 / lead());
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    Poly x = a.monic(), y = b.monic();
    while (!y.is_zero()) {
        Poly q, r;
        divmod(x, y, q, r);
        x = std::move(y);
        y = r.monic();
    }
    return x;
}

Poly Poly::reversed(int deg) const {
    std::vector<Rational> v(deg + 1);
    for (int k = 0; k <= degree(); ++k) v[deg - k] = c_[k];
    return Poly(std::move(v));
}

int Poly::low_degree() const {
    for (int k = 0; k <= degree(); ++k)
        if (c_[k] != 0) return k;
    return -1;
}

Poly Poly::shift_down(int k) const {
    if (k == 0) return *this;
    for (int i = 0; i < k && i <= degree(); ++i)
        if (c_[i] != 0) throw InternalError("inexact shift");
    if (k > degree()) return Poly();
    return Poly(std::vector<Rational>(c_.begin() + k, c_.end()));
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        if (c_[k] == 0) continue;
        Rational c = c_[k];
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        Rational a = abs(c);
        if (k == 0 || a != 1) os << to_string(a) << (k > 0 ? "*" : "");
        if (k > 0) os << var << (k > 1 ? "^" + std::to_string(k) : "");
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    if (den_.degree() > 0) {
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Poly::exact_div(num_, g);
            den_ = Poly::exact_div(den_, g);
        }
    }
    Rational l = den_.lead();
    if (l != 1) {
        num_ = num_.scaled(1 / l);
        den_ = den_.scaled(1 / l);
    }
}

RatFunc RatFunc::var_pow(int k) {
    if (k >= 0) return RatFunc(Poly::monomial(1, k), Poly::constant(1));
    return RatFunc(Poly::constant(1), Poly::monomial(1, -k));
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    if (a.is_polynomial() && b.is_polynomial()) {
        RatFunc r;
        r.num_ = a.num_ * b.num_;
        r.den_ = Poly::constant(1);
        return r;
    }
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero rational function");
    return RatFunc(den_, num_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::bar() const {
    int dn = num_.degree(), dd = den_.degree();
    Poly n = num_.reversed(dn), d = den_.reversed(dd);
    // num(1/s)/den(1/s) = s^{dd-dn} n(s)/d(s)
    int e = dd - dn;
    if (e >= 0) n = n * Poly::monomial(1, e);
    else d = d * Poly::monomial(1, -e);
    return RatFunc(n, d);
}

Rational RatFunc::at(const Rational& s) const {
    Rational one(1);
    Rational d = den_.eval(s, one);
    if (d == 0) throw DomainError("evaluation at a pole");
    return num_.eval(s, one) / d;
}

int RatFunc::valuation(const Poly& f) const {
    auto count = [&](Poly p) {
        int c = 0;
        while (!p.is_zero()) {
            Poly q, r;
            Poly::divmod(p, f, q, r);
            if (!r.is_zero()) break;
            p = q;
            ++c;
        }
        return c;
    };
    if (is_zero()) throw DomainError("valuation of zero");
    return count(num_) - count(den_);
}

std::string RatFunc::str(const std::string& var) const {
    if (is_polynomial()) return num_.scaled(1 / den_.lead()).str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace uqrep
