#pragma once

#include "uqrep/core/rational.hpp"
#include "uqrep/cyclo/cyclotomic.hpp"

namespace uqrep::cyclo {

/// Root of unity q = exp(2 pi i n / m).
struct QParams {
    int m = 0;
    int n = 0;
    int M = 0;  // m if m odd, m/2 if m even

    static QParams make(int m, int n);

    /// M_(i) for the root index i in {1,2,3,4} of B2 (beta_1..beta_4).
    int M_sub(int i) const;
    /// m/(2n), the period of q^x in x up to sign: q^{m/(2n)} = -1.
    Rational half_period() const { return make_rational(m, 2 * n); }

    /// Smallest ambient order (a multiple of 2m) in which q^e lies for every e in (1/den) Z.
    int order_for_denominator(long den) const;
    /// Default ambient order 2m, which contains q^{1/2}.
    int base_order() const { return 2 * m; }

    /// q^e in Q(zeta_order); throws DomainError if it does not lie there.
    CycloNumber qpow(const Rational& e, int order) const;

    friend bool operator==(const QParams& a, const QParams& b) { return a.m == b.m && a.n == b.n; }
};

}  // namespace uqrep::cyclo
