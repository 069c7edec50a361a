#include "uqrep/so5/ring.hpp"

#include <boost/math/constants/constants.hpp>

namespace uqrep::so5 {

CycloNumber CycloRing::spec(const RatFunc& f) const {
    CycloNumber s = p.qpow(make_rational(1, 2), order);
    return f.eval(s, one());
}

std::string CycloRing::name() const {
    return "q=exp(2 pi i " + std::to_string(p.n) + "/" + std::to_string(p.m) + ")";
}

RatFunc GenericRing::q_pow(const Rational& e) const {
    Rational twice = 2 * e;
    if (!is_integer(twice)) throw DomainError("q^e at generic q needs e in Z/2, got " + to_string(e));
    return RatFunc::var_pow(static_cast<int>(to_long(twice)));
}

Real to_real(const Rational& r) {
    return Real(r.get_num().get_str()) / Real(r.get_den().get_str());
}

ComplexRing ComplexRing::deformed(const QParams& p, const Real& h) {
    return ComplexRing(Real(2 * p.n) / Real(p.m) + h, h);
}

Complex ComplexRing::from_rational(const Rational& r) const { return Complex(to_real(r)); }

Complex ComplexRing::q_pow(const Rational& e) const {
    Real phase = boost::math::constants::pi<Real>() * theta * to_real(e);
    return Complex(cos(phase), sin(phase));
}

Complex ComplexRing::q_weight(const Rational& x, const Rational& xr) const {
    Real phase = boost::math::constants::pi<Real>() * theta * (to_real(x) + h * to_real(xr));
    return Complex(cos(phase), sin(phase));
}

namespace {

Complex horner(const Poly& f, const Complex& x) {
    Complex acc(0);
    for (int k = f.degree(); k >= 0; --k) acc = acc * x + Complex(to_real(f.coeff(k)));
    return acc;
}

}  // namespace

Complex ComplexRing::spec(const RatFunc& f) const {
    Complex s = q_pow(make_rational(1, 2));
    return horner(f.num(), s) / horner(f.den(), s);
}

Complex ComplexRing::conj(const Complex& x) const { return Complex(x.real(), -x.imag()); }

Complex complex_determinant(std::vector<std::vector<Complex>> a) {
    const std::size_t n = a.size();
    Complex det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t best = c;
        for (std::size_t i = c + 1; i < n; ++i)
            if (abs(a[i][c]) > abs(a[best][c])) best = i;
        if (a[best][c] == Complex(0)) return Complex(0);
        if (best != c) {
            std::swap(a[best], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            Complex f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return det;
}

}  // namespace uqrep::so5

namespace uqrep {

so5::Complex FieldOps<so5::Complex>::conj(const so5::Complex& x) { return so5::Complex(x.real(), -x.imag()); }

}  // namespace uqrep
