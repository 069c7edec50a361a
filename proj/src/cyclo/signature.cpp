#include "uqrep/cyclo/signature.hpp"

#include <mpfr.h>

#include <cmath>

namespace uqrep::cyclo {

const char* to_string(Sign s) {
    switch (s) {
        case Sign::negative: return "negative";
        case Sign::zero: return "zero";
        case Sign::positive: return "positive";
    }
    return "?";
}

namespace {

struct MpfrVar {
    mpfr_t v;
    explicit MpfrVar(mpfr_prec_t p) { mpfr_init2(v, p); }
    ~MpfrVar() { mpfr_clear(v); }
    MpfrVar(const MpfrVar&) = delete;
    MpfrVar& operator=(const MpfrVar&) = delete;
};

// Returns +1/-1 if sum_k num_k cos(2 pi k / N) is separated from zero at
// precision p, else 0.
int try_sign(const CycloNumber& x, mpfr_prec_t p) {
    const int n = x.order();
    const auto& num = x.numerators();
    std::size_t bits = 0;
    Integer l1 = 0;
    for (const auto& c : num) {
        bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
        l1 += abs(c);
    }
    mpfr_prec_t acc_prec = p + static_cast<mpfr_prec_t>(bits) + 64;
    MpfrVar pi2(p + 16), arg(p + 16), c(p), term(acc_prec), sum(acc_prec), err(64);
    mpfr_const_pi(pi2.v, MPFR_RNDN);
    mpfr_mul_ui(pi2.v, pi2.v, 2, MPFR_RNDN);
    mpfr_set_zero(sum.v, 1);
    for (std::size_t k = 0; k < num.size(); ++k) {
        if (num[k] == 0) continue;
        mpfr_mul_ui(arg.v, pi2.v, static_cast<unsigned long>(k), MPFR_RNDN);
        mpfr_div_ui(arg.v, arg.v, static_cast<unsigned long>(n), MPFR_RNDN);
        mpfr_cos(c.v, arg.v, MPFR_RNDN);
        mpfr_mul_z(term.v, c.v, num[k].get_mpz_t(), MPFR_RNDN);
        mpfr_add(sum.v, sum.v, term.v, MPFR_RNDN);
    }
    // Each cosine carries absolute error below 2^{-p+6} (argument error
    // included); summation error is negligible at acc_prec but covered by
    // the factor 2.
    mpfr_set_z(err.v, l1.get_mpz_t(), MPFR_RNDU);
    mpfr_mul_2si(err.v, err.v, -static_cast<long>(p) + 7, MPFR_RNDU);
    MpfrVar absval(acc_prec);
    mpfr_abs(absval.v, sum.v, MPFR_RNDN);
    if (mpfr_cmp(absval.v, err.v) > 0) return mpfr_sgn(sum.v) > 0 ? 1 : -1;
    return 0;
}

}  // namespace

Sign sign_of_real(const CycloNumber& x) {
    if (!x.is_real()) throw DomainError("sign_of_real: argument is not real: " + x.str());
    if (x.is_zero()) return Sign::zero;
    for (mpfr_prec_t p = 64; p <= (1 << 20); p *= 2) {
        int s = try_sign(x, p);
        if (s > 0) return Sign::positive;
        if (s < 0) return Sign::negative;
    }
    throw InternalError("sign_of_real: precision exhausted for nonzero value");
}

std::complex<double> approx(const CycloNumber& x) {
    const int n = x.order();
    const double d = x.denominator().get_d();
    std::complex<double> acc = 0;
    const auto& num = x.numerators();
    for (std::size_t k = 0; k < num.size(); ++k) {
        if (num[k] == 0) continue;
        double a = 2 * M_PI * static_cast<double>(k) / n;
        acc += num[k].get_d() / d * std::complex<double>(std::cos(a), std::sin(a));
    }
    return acc;
}

bool is_hermitian(const Matrix<CycloNumber>& g) {
    if (g.rows() != g.cols()) return false;
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = i; j < g.cols(); ++j)
            if (g(i, j) != g(j, i).conj()) return false;
    return true;
}

SignatureTrace hermitian_signature_trace(const Matrix<CycloNumber>& g0) {
    if (!is_hermitian(g0)) throw DomainError("hermitian_signature: matrix is not Hermitian");
    Matrix<CycloNumber> a = g0;
    const std::size_t n = a.rows();
    std::vector<std::size_t> live(n);
    for (std::size_t i = 0; i < n; ++i) live[i] = i;
    SignatureTrace out;
    std::size_t step = 0;
    while (!live.empty()) {
        // prefer a nonzero diagonal entry
        std::size_t pi = live.size();
        for (std::size_t t = 0; t < live.size(); ++t)
            if (!a(live[t], live[t]).is_zero()) {
                pi = t;
                break;
            }
        if (pi == live.size()) {
            // all diagonals vanish: find an off-diagonal entry a_ij != 0
            std::size_t ti = live.size(), tj = live.size();
            for (std::size_t t = 0; t < live.size() && ti == live.size(); ++t)
                for (std::size_t u = 0; u < live.size(); ++u)
                    if (u != t && !a(live[t], live[u]).is_zero()) {
                        ti = t;
                        tj = u;
                        break;
                    }
            if (ti == live.size()) {
                out.signature.n_zero += live.size();
                break;
            }
            // congruence: column i += c col j, row i += conj(c) row j, c = conj(a_ij)
            std::size_t i = live[ti], j = live[tj];
            CycloNumber c = a(i, j).conj();
            CycloNumber cc = c.conj();
            for (std::size_t r : live) a(r, i) = a(r, i) + c * a(r, j);
            for (std::size_t r : live) a(i, r) = a(i, r) + cc * a(j, r);
            pi = ti;
        }
        std::size_t p = live[pi];
        CycloNumber d = a(p, p);
        Sign s = sign_of_real(d);
        if (s == Sign::positive) ++out.signature.n_plus;
        else {
            ++out.signature.n_minus;
            if (!out.first_negative) out.first_negative = step;
        }
        live.erase(live.begin() + static_cast<std::ptrdiff_t>(pi));
        CycloNumber dinv = d.inverse();
        for (std::size_t r : live) {
            if (a(r, p).is_zero()) continue;
            CycloNumber f = a(r, p) * dinv;
            for (std::size_t c : live)
                if (!a(p, c).is_zero()) a(r, c) = a(r, c) - f * a(p, c);
        }
        ++step;
    }
    return out;
}

Signature hermitian_signature(const Matrix<CycloNumber>& g) { return hermitian_signature_trace(g).signature; }

}  // namespace uqrep::cyclo
