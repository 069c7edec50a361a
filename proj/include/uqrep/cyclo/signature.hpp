#pragma once

#include "uqrep/core/matrix.hpp"
#include "uqrep/cyclo/cyclotomic.hpp"

#include <complex>
#include <optional>

namespace uqrep::cyclo {

enum class Sign { negative = -1, zero = 0, positive = 1 };

const char* to_string(Sign s);

/// Exact sign of a real cyclotomic number under z -> exp(2 pi i / N).
/// Zero is decided exactly; nonzero values by an error-bounded MPFR
/// evaluation whose precision doubles until the bound separates from 0.
Sign sign_of_real(const CycloNumber& x);

/// Double-precision value under the distinguished embedding (diagnostics only).
std::complex<double> approx(const CycloNumber& x);

struct Signature {
    std::size_t n_plus = 0;
    std::size_t n_zero = 0;
    std::size_t n_minus = 0;
    friend bool operator==(const Signature& a, const Signature& b) {
        return a.n_plus == b.n_plus && a.n_zero == b.n_zero && a.n_minus == b.n_minus;
    }
};

struct SignatureTrace {
    Signature signature;
    /// Index (in elimination order) of the first negative pivot, if any.
    std::optional<std::size_t> first_negative;
};

/// Signature by exact symmetric pivoting (congruence transformations only).
SignatureTrace hermitian_signature_trace(const Matrix<CycloNumber>& g);
Signature hermitian_signature(const Matrix<CycloNumber>& g);

bool is_hermitian(const Matrix<CycloNumber>& g);

}  // namespace uqrep::cyclo
