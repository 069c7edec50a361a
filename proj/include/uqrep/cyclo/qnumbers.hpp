#pragma once

#include "uqrep/cyclo/params.hpp"

namespace uqrep::cyclo {

/// [k]_{q^d} = (q^{dk} - q^{-dk}) / (q^d - q^{-d}).
CycloNumber qint(long k, const Rational& d, const QParams& p);
CycloNumber qint(long k, const Rational& d, const QParams& p, int order);

/// [x]_{q^d} for a rational argument x (used for shifted weights).
CycloNumber qint_rational(const Rational& x, const Rational& d, const QParams& p, int order);

CycloNumber qfactorial(long k, const Rational& d, const QParams& p);
CycloNumber qfactorial(long k, const Rational& d, const QParams& p, int order);

/// Gaussian binomial; throws DomainError when the product formula divides by zero.
CycloNumber qbinom(long n, long k, const Rational& d, const QParams& p);

}  // namespace uqrep::cyclo
