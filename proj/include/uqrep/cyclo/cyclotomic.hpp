#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_N).
//
// Elements are stored as integer numerators over the power basis
// 1, z, ..., z^{phi(N)-1} (reduced modulo the N-th cyclotomic polynomial)
// together with one positive common denominator. The representation is
// canonical: gcd(content, den) = 1, so equality is coefficient equality.

#include "uqrep/core/matrix.hpp"
#include "uqrep/core/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace uqrep::cyclo {

/// Reduction tables for one order N. Immutable once built.
class CyclotomicField {
public:
    static std::shared_ptr<const CyclotomicField> get(int order);

    int order() const { return order_; }
    int phi() const { return phi_; }
    /// Coefficients of the cyclotomic polynomial, low degree first (monic).
    const std::vector<long>& modulus() const { return modulus_; }
    /// z^k reduced to the power basis, for 0 <= k < N.
    const std::vector<long>& power(int k) const { return powers_[k]; }

    explicit CyclotomicField(int order);

private:
    int order_;
    int phi_;
    std::vector<long> modulus_;
    std::vector<std::vector<long>> powers_;
};

/// Integer polynomial coefficients of Phi_N, low degree first.
std::vector<long> cyclotomic_polynomial(int order);

class CycloNumber {
public:
    /// Zero of Q(zeta_1) = Q; adapts to any order in mixed arithmetic.
    CycloNumber();
    static CycloNumber zero(int order);
    static CycloNumber one(int order);
    static CycloNumber rational(int order, const Rational& r);
    /// zeta_N^k for any integer k.
    static CycloNumber zeta_power(int order, long k);
    /// From rational coefficients on the power basis (length at most N; reduced).
    static CycloNumber from_coefficients(int order, const std::vector<Rational>& coeffs);

    int order() const { return field_->order(); }
    const CyclotomicField& field() const { return *field_; }
    /// Rational coefficient on z^k of the canonical representative.
    Rational coeff(int k) const;
    std::vector<Rational> coefficients() const;
    const std::vector<Integer>& numerators() const { return num_; }
    const Integer& denominator() const { return den_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Value as a rational; throws DomainError when not rational.
    Rational to_rational() const;

    /// Embedding into Q(zeta_M) for a multiple M of the order.
    CycloNumber lifted(int new_order) const;
    /// Complex conjugation z -> z^{-1}.
    CycloNumber conj() const;
    bool is_real() const { return *this == conj(); }
    CycloNumber inverse() const;

    CycloNumber operator-() const;
    friend CycloNumber operator+(const CycloNumber& a, const CycloNumber& b);
    friend CycloNumber operator-(const CycloNumber& a, const CycloNumber& b);
    friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
    friend CycloNumber operator/(const CycloNumber& a, const CycloNumber& b);
    friend CycloNumber operator*(const CycloNumber& a, const Rational& r);
    friend CycloNumber operator*(const Rational& r, const CycloNumber& a) { return a * r; }
    CycloNumber& operator+=(const CycloNumber& b) { return *this = *this + b; }
    CycloNumber& operator-=(const CycloNumber& b) { return *this = *this - b; }
    CycloNumber& operator*=(const CycloNumber& b) { return *this = *this * b; }
    friend bool operator==(const CycloNumber& a, const CycloNumber& b);
    friend bool operator!=(const CycloNumber& a, const CycloNumber& b) { return !(a == b); }

    /// Human readable form such as "3/2 + z^2 - z^5 (N=16)".
    std::string str() const;

private:
    CycloNumber(std::shared_ptr<const CyclotomicField> f, std::vector<Integer> num, Integer den);
    void normalize();
    friend void align(CycloNumber& a, CycloNumber& b);

    std::shared_ptr<const CyclotomicField> field_;
    std::vector<Integer> num_;
    Integer den_;
};

}  // namespace uqrep::cyclo

namespace uqrep {

template <>
struct FieldOps<cyclo::CycloNumber> {
    using T = cyclo::CycloNumber;
    static bool is_zero(const T& x) { return x.is_zero(); }
    static T inv(const T& x) { return x.inverse(); }
    static T conj(const T& x) { return x.conj(); }
    static T zero_like(const T& x) { return T::zero(x.order()); }
    static T one_like(const T& x) { return T::one(x.order()); }
};

}  // namespace uqrep
