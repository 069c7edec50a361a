#pragma once

// Scalar rings for the so5 engine. Every ring exposes the same small
// interface so the algebra, Verma and irrep code is written once:
//   CycloRing    exact values at q = exp(2 pi i n/m)
//   GenericRing  rational functions in s = q^{1/2} (q an indeterminate)
//   ComplexRing  high precision floats at q' = exp(i pi (2n/m + h)), with
//                weights shifted by h rho (the deformation used for
//                vanishing orders)

#include "uqrep/core/ratfunc.hpp"
#include "uqrep/cyclo/params.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <string>

namespace uqrep::so5 {

using cyclo::CycloNumber;
using cyclo::QParams;

struct CycloRing {
    using Scalar = CycloNumber;
    QParams p;
    int order = 0;

    CycloRing(const QParams& params, int ambient_order) : p(params), order(ambient_order) {}
    explicit CycloRing(const QParams& params) : CycloRing(params, params.base_order()) {}

    Scalar zero() const { return CycloNumber::zero(order); }
    Scalar one() const { return CycloNumber::one(order); }
    Scalar from_rational(const Rational& r) const { return CycloNumber::rational(order, r); }
    Scalar q_pow(const Rational& e) const { return p.qpow(e, order); }
    /// q^{x}; the deformation part xr is ignored at an exact root of unity.
    Scalar q_weight(const Rational& x, const Rational&) const { return q_pow(x); }
    Scalar spec(const RatFunc& f) const;
    Scalar conj(const Scalar& x) const { return x.conj(); }
    bool is_zero(const Scalar& x) const { return x.is_zero(); }
    std::string name() const;
};

struct GenericRing {
    using Scalar = RatFunc;

    Scalar zero() const { return RatFunc(); }
    Scalar one() const { return RatFunc(1); }
    Scalar from_rational(const Rational& r) const { return RatFunc(r); }
    /// s^{2e}; e must lie in (1/2) Z.
    Scalar q_pow(const Rational& e) const;
    Scalar q_weight(const Rational& x, const Rational&) const { return q_pow(x); }
    Scalar spec(const RatFunc& f) const { return f; }
    Scalar conj(const Scalar& x) const { return x.bar(); }
    bool is_zero(const Scalar& x) const { return x.is_zero(); }
    std::string name() const { return "generic"; }
};

using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<512, boost::multiprecision::digit_base_2>,
                                           boost::multiprecision::et_off>;
using Complex = boost::multiprecision::number<
    boost::multiprecision::complex_adaptor<
        boost::multiprecision::cpp_bin_float<512, boost::multiprecision::digit_base_2>>,
    boost::multiprecision::et_off>;

struct ComplexRing {
    using Scalar = Complex;
    Real theta;  // q = exp(i pi theta)
    Real h;      // weight shift lambda -> lambda + h rho

    ComplexRing(Real theta_, Real h_) : theta(std::move(theta_)), h(std::move(h_)) {}
    /// theta = 2n/m + h.
    static ComplexRing deformed(const QParams& p, const Real& h);

    Scalar zero() const { return Complex(0); }
    Scalar one() const { return Complex(1); }
    Scalar from_rational(const Rational& r) const;
    Scalar q_pow(const Rational& e) const;
    /// q^{x + h xr}: xr is the rho-part of the pairing.
    Scalar q_weight(const Rational& x, const Rational& xr) const;
    Scalar spec(const RatFunc& f) const;
    Scalar conj(const Scalar& x) const;
    /// Exact zero test only; used to prune structurally vanishing terms.
    bool is_zero(const Scalar& x) const { return x == Complex(0); }
    std::string name() const { return "complex"; }
};

Real to_real(const Rational& r);
/// Determinant by partial pivoting (floating point).
Complex complex_determinant(std::vector<std::vector<Complex>> a);

}  // namespace uqrep::so5

namespace uqrep {

template <>
struct FieldOps<so5::Complex> {
    using T = so5::Complex;
    static bool is_zero(const T& x) { return x == T(0); }
    static T inv(const T& x) { return T(1) / x; }
    static T conj(const T& x);
    static T zero_like(const T&) { return T(0); }
    static T one_like(const T&) { return T(1); }
};

}  // namespace uqrep
