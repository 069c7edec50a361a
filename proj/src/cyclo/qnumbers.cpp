#include "uqrep/cyclo/qnumbers.hpp"

#include <numeric>

namespace uqrep::cyclo {

QParams QParams::make(int m, int n) {
    if (m < 1 || n < 1) throw DomainError("m and n must be positive");
    if (std::gcd(m, n) != 1) throw DomainError("n must be coprime to m");
    QParams p;
    p.m = m;
    p.n = n;
    p.M = (m % 2) ? m : m / 2;
    return p;
}

int QParams::M_sub(int i) const {
    switch (i) {
        case 1:
        case 4: return M;
        case 2:
        case 3: return m;
        default: throw DomainError("root index must be 1..4");
    }
}

int QParams::order_for_denominator(long den) const {
    return static_cast<int>(lcm_long(2L * m, static_cast<long>(m) * den));
}

CycloNumber QParams::qpow(const Rational& e, int order) const {
    Rational t = e * n * order / m;
    if (!is_integer(t))
        throw DomainError("q^" + to_string(e) + " is not in Q(zeta_" + std::to_string(order) + ")");
    return CycloNumber::zeta_power(order, to_long(t));
}

namespace {

void check_nondegenerate(const Rational& d, const QParams& p) {
    // q^d = q^{-d} iff 2 d n / m is an integer
    if (is_integer(2 * d * p.n / p.m)) throw DomainError("degenerate q-integer: q^d = q^{-d}");
}

}  // namespace

CycloNumber qint(long k, const Rational& d, const QParams& p, int order) {
    check_nondegenerate(d, p);
    if (k < 0) return -qint(-k, d, p, order);
    CycloNumber acc = CycloNumber::zero(order);
    for (long j = 0; j < k; ++j) acc += p.qpow(d * (k - 1 - 2 * j), order);
    return acc;
}

CycloNumber qint(long k, const Rational& d, const QParams& p) {
    return qint(k, d, p, p.order_for_denominator(d.get_den().get_si()));
}

CycloNumber qint_rational(const Rational& x, const Rational& d, const QParams& p, int order) {
    check_nondegenerate(d, p);
    if (is_integer(x)) return qint(to_long(x), d, p, order);
    CycloNumber num = p.qpow(d * x, order) - p.qpow(-d * x, order);
    CycloNumber den = p.qpow(d, order) - p.qpow(-d, order);
    return num / den;
}

CycloNumber qfactorial(long k, const Rational& d, const QParams& p, int order) {
    if (k < 0) throw DomainError("negative q-factorial");
    CycloNumber acc = CycloNumber::one(order);
    for (long j = 1; j <= k; ++j) acc *= qint(j, d, p, order);
    return acc;
}

CycloNumber qfactorial(long k, const Rational& d, const QParams& p) {
    return qfactorial(k, d, p, p.order_for_denominator(d.get_den().get_si()));
}

CycloNumber qbinom(long n, long k, const Rational& d, const QParams& p) {
    int order = p.order_for_denominator(d.get_den().get_si());
    if (k < 0 || k > n) return CycloNumber::zero(order);
    CycloNumber num = CycloNumber::one(order);
    CycloNumber den = CycloNumber::one(order);
    for (long j = 1; j <= k; ++j) {
        num *= qint(n - k + j, d, p, order);
        den *= qint(j, d, p, order);
    }
    if (den.is_zero()) throw DomainError("q-binomial requires divided powers at this root of unity");
    return num / den;
}

}  // namespace uqrep::cyclo
