#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace uqrep {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an input lies outside the domain of an operation.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an internal consistency check fails.
struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p", "p/q" or "-p/q"; whitespace is not allowed.
Rational parse_rational(const std::string& text);

/// Canonical "p/q" text, or "p" when the denominator is one.
std::string to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Exact integer value; throws DomainError when r is not integral.
long to_long(const Rational& r);

/// Floor of a rational as a machine integer.
long floor_long(const Rational& r);

long gcd_long(long a, long b);
long lcm_long(long a, long b);

}  // namespace uqrep
