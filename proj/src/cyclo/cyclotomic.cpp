#include "uqrep/cyclo/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace uqrep::cyclo {

std::vector<long> cyclotomic_polynomial(int order) {
    if (order < 1) throw DomainError("cyclotomic order must be positive");
    // x^N - 1 divided by Phi_d for every proper divisor d.
    std::vector<long> p(order + 1, 0);
    p[0] = -1;
    p[order] = 1;
    for (int d = 1; d < order; ++d) {
        if (order % d) continue;
        std::vector<long> f = cyclotomic_polynomial(d);
        int df = static_cast<int>(f.size()) - 1;
        int dp = static_cast<int>(p.size()) - 1;
        std::vector<long> q(dp - df + 1, 0);
        for (int k = dp - df; k >= 0; --k) {
            long c = p[k + df];  // f is monic
            q[k] = c;
            for (int i = 0; i <= df; ++i) p[k + i] -= c * f[i];
        }
        p = q;
    }
    return p;
}

CyclotomicField::CyclotomicField(int order) : order_(order) {
    modulus_ = cyclotomic_polynomial(order);
    phi_ = static_cast<int>(modulus_.size()) - 1;
    powers_.resize(order);
    std::vector<long> cur(phi_, 0);
    if (phi_ > 0) cur[0] = 1;
    for (int k = 0; k < order; ++k) {
        powers_[k] = cur;
        // multiply by z and reduce
        long top = phi_ > 0 ? cur[phi_ - 1] : 0;
        for (int i = phi_ - 1; i > 0; --i) cur[i] = cur[i - 1];
        if (phi_ > 0) cur[0] = 0;
        for (int i = 0; i < phi_; ++i) cur[i] -= top * modulus_[i];
    }
    if (order == 1) powers_[0] = {1};
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(int order) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
    if (order < 1) throw DomainError("cyclotomic order must be positive");
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    auto f = std::make_shared<const CyclotomicField>(order);
    cache.emplace(order, f);
    return f;
}

// ---------------------------------------------------------------------------

CycloNumber::CycloNumber() : CycloNumber(zero(1)) {}

CycloNumber::CycloNumber(std::shared_ptr<const CyclotomicField> f, std::vector<Integer> num, Integer den)
    : field_(std::move(f)), num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void CycloNumber::normalize() {
    if (den_ < 0) {
        den_ = -den_;
        for (auto& x : num_) x = -x;
    }
    Integer g = den_;
    bool nz = false;
    for (const auto& x : num_) {
        if (x == 0) continue;
        nz = true;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) return;
    }
    if (!nz) {
        den_ = 1;
        return;
    }
    if (g != 1) {
        for (auto& x : num_)
            if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

CycloNumber CycloNumber::zero(int order) {
    auto f = CyclotomicField::get(order);
    return CycloNumber(f, std::vector<Integer>(f->phi()), Integer(1));
}

CycloNumber CycloNumber::one(int order) { return rational(order, 1); }

CycloNumber CycloNumber::rational(int order, const Rational& r) {
    auto f = CyclotomicField::get(order);
    std::vector<Integer> num(f->phi());
    num[0] = r.get_num();
    return CycloNumber(f, std::move(num), r.get_den());
}

CycloNumber CycloNumber::zeta_power(int order, long k) {
    auto f = CyclotomicField::get(order);
    long e = ((k % order) + order) % order;
    const auto& p = f->power(static_cast<int>(e));
    std::vector<Integer> num(f->phi());
    for (int i = 0; i < f->phi(); ++i) num[i] = p[i];
    return CycloNumber(f, std::move(num), Integer(1));
}

CycloNumber CycloNumber::from_coefficients(int order, const std::vector<Rational>& coeffs) {
    auto f = CyclotomicField::get(order);
    if (static_cast<int>(coeffs.size()) > order) throw DomainError("too many cyclotomic coefficients");
    Integer den = 1;
    for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> num(f->phi());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        Integer c = coeffs[k].get_num() * (den / coeffs[k].get_den());
        const auto& p = f->power(static_cast<int>(k));
        for (int i = 0; i < f->phi(); ++i)
            if (p[i]) num[i] += c * p[i];
    }
    return CycloNumber(f, std::move(num), den);
}

Rational CycloNumber::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(num_.size())) return 0;
    Rational r(num_[k], den_);
    r.canonicalize();
    return r;
}

std::vector<Rational> CycloNumber::coefficients() const {
    std::vector<Rational> v(num_.size());
    for (std::size_t k = 0; k < num_.size(); ++k) v[k] = coeff(static_cast<int>(k));
    return v;
}

bool CycloNumber::is_zero() const {
    for (const auto& x : num_)
        if (x != 0) return false;
    return true;
}

bool CycloNumber::is_rational() const {
    for (std::size_t k = 1; k < num_.size(); ++k)
        if (num_[k] != 0) return false;
    return true;
}

Rational CycloNumber::to_rational() const {
    if (!is_rational()) throw DomainError("cyclotomic number is not rational");
    return coeff(0);
}

CycloNumber CycloNumber::lifted(int new_order) const {
    if (new_order == order()) return *this;
    if (new_order % order()) throw DomainError("cannot lift cyclotomic order " + std::to_string(order()) + " to " +
                                               std::to_string(new_order));
    auto f = CyclotomicField::get(new_order);
    int r = new_order / order();
    std::vector<Integer> num(f->phi());
    for (std::size_t k = 0; k < num_.size(); ++k) {
        if (num_[k] == 0) continue;
        const auto& p = f->power(static_cast<int>(k) * r % new_order);
        for (int i = 0; i < f->phi(); ++i)
            if (p[i]) num[i] += num_[k] * p[i];
    }
    return CycloNumber(f, std::move(num), den_);
}

void align(CycloNumber& a, CycloNumber& b) {
    if (a.order() == b.order()) return;
    int l = static_cast<int>(lcm_long(a.order(), b.order()));
    a = a.lifted(l);
    b = b.lifted(l);
}

CycloNumber CycloNumber::conj() const {
    const int n = order();
    std::vector<Integer> num(num_.size());
    for (std::size_t k = 0; k < num_.size(); ++k) {
        if (num_[k] == 0) continue;
        const auto& p = field_->power(static_cast<int>((n - static_cast<int>(k)) % n));
        for (std::size_t i = 0; i < num.size(); ++i)
            if (p[i]) num[i] += num_[k] * p[i];
    }
    return CycloNumber(field_, std::move(num), den_);
}

CycloNumber CycloNumber::operator-() const {
    CycloNumber r = *this;
    for (auto& x : r.num_) x = -x;
    return r;
}

CycloNumber operator+(const CycloNumber& a0, const CycloNumber& b0) {
    if (a0.is_zero() && b0.order() % a0.order() == 0) return b0;
    if (b0.is_zero() && a0.order() % b0.order() == 0) return a0;
    if (a0.order() != b0.order()) {
        CycloNumber a = a0, b = b0;
        align(a, b);
        return a + b;
    }
    const auto& a = a0;
    const auto& b = b0;
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    std::vector<Integer> num(a.num_.size());
    if (a.den_ == b.den_) {
        for (std::size_t i = 0; i < num.size(); ++i) num[i] = a.num_[i] + b.num_[i];
        return CycloNumber(a.field_, std::move(num), a.den_);
    }
    for (std::size_t i = 0; i < num.size(); ++i) num[i] = a.num_[i] * b.den_ + b.num_[i] * a.den_;
    return CycloNumber(a.field_, std::move(num), a.den_ * b.den_);
}

CycloNumber operator-(const CycloNumber& a, const CycloNumber& b) { return a + (-b); }

CycloNumber operator*(const CycloNumber& a0, const CycloNumber& b0) {
    if (a0.is_zero() || b0.is_zero()) return CycloNumber::zero(static_cast<int>(lcm_long(a0.order(), b0.order())));
    if (a0.order() != b0.order()) {
        CycloNumber a = a0, b = b0;
        align(a, b);
        return a * b;
    }
    const auto& a = a0;
    const auto& b = b0;
    const auto& f = *a.field_;
    const int phi = f.phi();
    if (a.is_zero() || b.is_zero()) return CycloNumber::zero(a.order());
    std::vector<Integer> conv(2 * phi - 1);
    for (int i = 0; i < phi; ++i) {
        if (a.num_[i] == 0) continue;
        for (int j = 0; j < phi; ++j)
            if (b.num_[j] != 0) mpz_addmul(conv[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
    std::vector<Integer> num(phi);
    for (int i = 0; i < phi; ++i) num[i] = std::move(conv[i]);
    for (int k = phi; k < 2 * phi - 1; ++k) {
        if (conv[k] == 0) continue;
        const auto& p = f.power(k % f.order());
        for (int i = 0; i < phi; ++i) {
            if (p[i] > 0) mpz_addmul_ui(num[i].get_mpz_t(), conv[k].get_mpz_t(), static_cast<unsigned long>(p[i]));
            else if (p[i] < 0)
                mpz_submul_ui(num[i].get_mpz_t(), conv[k].get_mpz_t(), static_cast<unsigned long>(-p[i]));
        }
    }
    return CycloNumber(a.field_, std::move(num), a.den_ * b.den_);
}

CycloNumber operator*(const CycloNumber& a, const Rational& r) {
    if (r == 0) return CycloNumber::zero(a.order());
    std::vector<Integer> num(a.num_.size());
    for (std::size_t i = 0; i < num.size(); ++i) num[i] = a.num_[i] * r.get_num();
    return CycloNumber(a.field_, std::move(num), a.den_ * r.get_den());
}

CycloNumber CycloNumber::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero cyclotomic number");
    const int phi = field_->phi();
    if (is_rational()) return rational(order(), 1 / to_rational());
    // Solve (multiplication-by-x matrix) y = e_0 over Q.
    std::vector<std::vector<Rational>> a(phi, std::vector<Rational>(phi + 1));
    std::vector<Integer> base = num_;
    for (int j = 0; j < phi; ++j) {
        CycloNumber zj = zeta_power(order(), j);
        CycloNumber prod = CycloNumber(field_, base, Integer(1)) * zj;
        for (int i = 0; i < phi; ++i) a[i][j] = Rational(prod.num_[i], prod.den_);
    }
    a[0][phi] = 1;
    for (int c = 0; c < phi; ++c) {
        int piv = -1;
        for (int r = c; r < phi; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw InternalError("singular multiplication matrix in cyclotomic inverse");
        std::swap(a[piv], a[c]);
        Rational inv = 1 / a[c][c];
        for (int k = c; k <= phi; ++k) a[c][k] *= inv;
        for (int r = 0; r < phi; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational fct = a[r][c];
            for (int k = c; k <= phi; ++k) a[r][k] -= fct * a[c][k];
        }
    }
    std::vector<Rational> y(phi);
    for (int i = 0; i < phi; ++i) y[i] = a[i][phi] * den_;
    return from_coefficients(order(), y);
}

CycloNumber operator/(const CycloNumber& a, const CycloNumber& b) { return a * b.inverse(); }

bool operator==(const CycloNumber& a0, const CycloNumber& b0) {
    if (a0.order() != b0.order()) {
        CycloNumber a = a0, b = b0;
        align(a, b);
        return a == b;
    }
    return a0.den_ == b0.den_ && a0.num_ == b0.num_;
}

std::string CycloNumber::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < num_.size(); ++k) {
        if (num_[k] == 0) continue;
        Rational c = coeff(static_cast<int>(k));
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        Rational a = abs(c);
        if (k == 0) os << to_string(a);
        else {
            if (a != 1) os << to_string(a) << "*";
            os << "z" << (k > 1 ? "^" + std::to_string(k) : "");
        }
        first = false;
    }
    if (first) os << "0";
    os << " (N=" << order() << ")";
    return os.str();
}

}  // namespace uqrep::cyclo
