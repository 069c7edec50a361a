#pragma once

// U_q(sl2) at q = exp(2 pi i n/m): the irreps V_{d,z}, unitarity under the
// SO(2,1) and SU(2) star structures, constructive fusion with the
// indecomposables I^p_z, the truncated tensor product and the R-matrix.

#include "uqrep/core/matrix.hpp"
#include "uqrep/cyclo/params.hpp"
#include "uqrep/cyclo/signature.hpp"

#include <optional>
#include <string>
#include <vector>

namespace uqrep::sl2 {

using cyclo::CycloNumber;
using cyclo::QParams;
using Mat = Matrix<CycloNumber>;

/// A finite-dimensional weight representation given by explicit matrices.
struct Rep2 {
    QParams params;
    int order = 0;                  // ambient cyclotomic order of all entries
    std::vector<Rational> weights;  // H eigenvalue of each basis vector
    Mat H, Xp, Xm;

    std::size_t dim() const { return weights.size(); }
    /// q^{c H} as a diagonal matrix.
    Mat q_power_H(const Rational& c) const;
};

struct Irrep2 {
    int d = 1;
    long z = 0;
    Rational j;  // highest weight (d-1) + (m/2n) z
    Rep2 rep;    // basis f_k = (X^-)^k e_j, k = 0..d-1
};

Irrep2 build_irrep2(int d, long z, const QParams& p);

/// True when the defining relations hold exactly, including (X^pm)^M = 0.
bool satisfies_relations(const Rep2& r, bool check_nilpotency = true);

enum class Form { SO21, SU2 };
const char* to_string(Form f);

struct Unitarity2 {
    bool verdict = false;
    std::vector<cyclo::Sign> pivot_signs;  // sign(a_k), k = 1..d-1
    cyclo::Signature gram_signature;       // from the independently solved invariant form
    bool formula_verdict = false;          // the sine-product criterion (SO21 only)
};

/// a_k = <(X^-)^k e, (X^-)^k e> with <e,e> = 1.
std::vector<CycloNumber> norm_chain(int d, long z, const QParams& p, Form f);

/// Sign-product criterion (-1)^{z+1} sin(2 pi n k/m) sin(2 pi n (d-k)/m) > 0 for all k.
bool sine_criterion(int d, long z, const QParams& p);

/// The invariant sesquilinear form solved from G rho(x) = rho(x*)^dagger G, G_00 = 1.
Mat invariant_form(const Irrep2& v, Form f);

Unitarity2 unitarity_sl2(int d, long z, const QParams& p, Form f);

/// Coproduct representation on a (x) b.
Rep2 tensor(const Rep2& a, const Rep2& b);
/// Flip map a (x) b -> b (x) a as a permutation matrix.
Mat flip(const Rep2& a, const Rep2& b);

struct VLabel {
    int d = 0;
    long z = 0;
    friend bool operator==(const VLabel& x, const VLabel& y) { return x.d == y.d && x.z == y.z; }
    friend bool operator<(const VLabel& x, const VLabel& y) { return x.d != y.d ? x.d < y.d : x.z < y.z; }
};

struct IBlock {
    int p = 0;
    long z = 0;
    std::size_t dim = 0;
    Rational top, bottom;       // extreme weights
    std::size_t hw_vectors = 0;  // dim of ker X^+ on the block
    std::size_t lw_vectors = 0;  // dim of ker X^- on the block
    bool socle_vector_ok = false;  // (X^-)^{p-1} v_h is a nonzero highest weight vector
    bool head_vector_ok = false;   // (X^+)^{p-1} v_l is a nonzero lowest weight vector
    VLabel low_quotient;           // irreducible quotient kept by the truncated product
};

struct Decomposition2 {
    std::vector<VLabel> v_parts;
    std::vector<IBlock> i_parts;
    std::size_t total_dim = 0;
};

Decomposition2 tensor_decompose2(const Irrep2& a, const Irrep2& b);

/// The index formula, for comparison with the constructive result.
struct FusionClaim {
    std::vector<VLabel> v_parts;
    std::vector<std::pair<int, long>> i_parts;  // (p, z)
};
FusionClaim fusion_formula2(int d, long z, int d2, long z2, const QParams& p);

struct TruncatedResult {
    std::vector<VLabel> parts;  // (dimension, band) of each kept summand
    /// Which index convention the constructive dimensions followed:
    /// "quotient" (p-1) or "definition" (p); "both"/"none" otherwise.
    std::string convention;
};

TruncatedResult truncated_tensor2(const Irrep2& a, const Irrep2& b);

/// R restricted to a (x) b (sum truncated at M-1).
Mat rmatrix2(const Rep2& a, const Rep2& b);
/// R* evaluated with (x (x) y)* = y* (x) x* and the SO(2,1) star.
Mat rmatrix2_star(const Rep2& a, const Rep2& b);

}  // namespace uqrep::sl2
