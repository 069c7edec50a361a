#pragma once

// Univariate polynomials and rational functions over Q in one indeterminate.
// The indeterminate plays the role of s = q^{1/2} in generic-q computations.

#include "uqrep/core/matrix.hpp"
#include "uqrep/core/rational.hpp"

#include <string>
#include <vector>

namespace uqrep {

class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& c, int degree);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& lead() const { return c_.back(); }
    Rational coeff(int k) const { return (k >= 0 && k <= degree()) ? c_[k] : Rational(0); }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const Rational& k) const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Quotient and remainder; b must be nonzero.
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
    /// Exact division; throws InternalError if b does not divide a.
    static Poly exact_div(const Poly& a, const Poly& b);
    static Poly gcd(const Poly& a, const Poly& b);  // monic, gcd(0,0)=0

    Poly monic() const;
    /// x^deg p(1/x)
    Poly reversed(int deg) const;
    /// Order of vanishing at x = 0.
    int low_degree() const;
    Poly shift_down(int k) const;  // divide by x^k (must be exact)

    /// Horner evaluation; T needs T*T, T+T and T*Rational.
    template <class T>
    T eval(const T& x, const T& one) const {
        if (c_.empty()) return one * Rational(0);
        T acc = one * c_.back();
        for (int k = degree() - 1; k >= 0; --k) acc = acc * x + one * c_[k];
        return acc;
    }

    std::string str(const std::string& var = "s") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Reduced quotient num/den with monic denominator.
class RatFunc {
public:
    RatFunc() : den_(Poly::constant(1)) {}
    RatFunc(const Rational& c) : num_(Poly::constant(c)), den_(Poly::constant(1)) {}  // NOLINT
    RatFunc(long c) : RatFunc(Rational(c)) {}                                       // NOLINT
    RatFunc(Poly num, Poly den);

    /// s^k for any integer k.
    static RatFunc var_pow(int k);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc inverse() const;
    /// s -> 1/s, the generic-q counterpart of complex conjugation.
    RatFunc bar() const;
    /// Value at a rational point; throws DomainError on a pole.
    Rational at(const Rational& s) const;
    /// Order of zero (positive) or pole (negative) at s = s0 for a root s0 of the polynomial f.
    int valuation(const Poly& f) const;

    /// Evaluation in a field type T (see Poly::eval).
    template <class T>
    T eval(const T& s, const T& one) const {
        return num_.eval(s, one) / den_.eval(s, one);
    }

    std::string str(const std::string& var = "s") const;

private:
    void normalize();
    Poly num_, den_;
};

template <>
struct FieldOps<RatFunc> {
    static bool is_zero(const RatFunc& x) { return x.is_zero(); }
    static RatFunc inv(const RatFunc& x) { return x.inverse(); }
    static RatFunc conj(const RatFunc& x) { return x.bar(); }
    static RatFunc zero_like(const RatFunc&) { return RatFunc(); }
    static RatFunc one_like(const RatFunc&) { return RatFunc(1); }
};

}  // namespace uqrep
