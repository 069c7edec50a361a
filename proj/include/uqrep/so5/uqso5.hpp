#pragma once

// High level U_q(so5) analyses: Verma weight spaces, the De Concini-Kac
// determinant check, singular and primitive vectors, characters, compact and
// SO(2,3) unitarity, physical (lowest weight) representations and the
// truncated SO(2,3) tensor product.

#include "uqrep/so5/irrep.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace uqrep::so5 {

/// Shared straightening engines, one per (m, n, ambient order).
UMinus<CycloRing>& cyclo_algebra(const QParams& p, int order = 0);
UMinus<GenericRing>& generic_algebra();

struct VermaWeightSpace {
    Weight lambda, eta;
    std::vector<Mono> basis;
    Matrix<CycloNumber> gram;
};

VermaWeightSpace verma_weight_space(const Weight& lambda, const Weight& eta, const QParams& p);

/// The product formula; terms with |Par(eta - m beta)| = 0 are skipped.
template <class Ring>
typename Ring::Scalar shapovalov_det_formula(const Ring& ring, const Weight& lambda, const Weight& eta) {
    using S = typename Ring::Scalar;
    S out = ring.one();
    Weight lr = lambda + b2::rho();
    for (int b = 1; b <= 4; ++b) {
        Weight beta = b2::root(b);
        Rational d = b2::d_root(b);
        S dq = ring.q_pow(d) - ring.q_pow(-d);
        for (long m = 1;; ++m) {
            Weight rest = eta - Rational(m) * beta;
            if (!b2::in_Qplus(rest)) break;
            long mult = b2::par_count(rest);
            if (mult == 0) continue;
            S qm = (ring.q_pow(d * m) - ring.q_pow(-d * m)) / dq;
            Rational x = b2::pairing(lr - make_rational(m, 2) * beta, beta);
            Rational xr = b2::pairing(b2::rho(), beta);
            S f = qm * (ring.q_weight(x, xr) - ring.q_weight(-x, -xr)) / dq;
            for (long k = 0; k < mult; ++k) out = out * f;
        }
    }
    return out;
}

/// det(gram) / formula at a fixed generic reference weight; lambda independent.
const RatFunc& det_calibration(const Weight& eta);

struct DetCheck {
    std::string mode;            // "generic" or the root of unity
    bool match = false;          // value, zero locus and orders all agree
    bool gram_zero = false;
    bool formula_zero = false;
    std::optional<int> gram_order, formula_order;  // h-deformation orders when zero
    std::string calibration;     // the calibrated constant for this eta
};

DetCheck verify_det(const Weight& lambda, const Weight& eta, const QParams& p);
DetCheck verify_det_generic(const Weight& lambda, const Weight& eta);

/// Vanishing order of det(gram) and of the formula under lambda -> lambda + h rho,
/// q -> q exp(i pi h); theta = 2n/m for a root of unity.
std::pair<int, int> deformation_orders(const Weight& lambda, const Weight& eta, const Real& theta);

struct SingularEntry {
    Weight eta;     // depth lambda - weight
    Weight weight;  // lambda - eta
    std::size_t count = 0;
    std::string description;
};

/// Joint kernels of X_1^+, X_2^+ on M(lambda)_eta for all eta of height <= depth.
std::vector<SingularEntry> singular_vectors(const Weight& lambda, const QParams& p, long depth);

struct CharacterEntry {
    Weight eta;
    std::size_t mult = 0;
};

struct UnitarityInfo {
    std::string form;  // "SO5" or "SO23"
    bool verdict = false;
    bool complete = false;   // depth complete (or stopped at a negative layer)
    bool in_domain = true;   // lambda basic (compact test) / mu supported (physical)
    std::optional<Weight> witness_eta;           // layer carrying the first negative pivot
    std::optional<std::size_t> first_negative_pivot;
    std::string special_case = "none";           // "a", "b" or "none"
};

struct IrrepReport {
    Weight lambda;              // highest weight, or lowest weight in the physical picture
    std::string picture = "highest";
    long depth = 0;
    bool complete = false;
    std::vector<CharacterEntry> character;
    std::vector<SingularEntry> singular_vectors;
    std::optional<UnitarityInfo> unitarity;
    std::optional<UnitarityInfo> unitarity_shifted;  // physical reps: the compact test of the shift
    std::optional<std::pair<Weight, std::size_t>> gauge_subspace;
    std::string classification = "generic";  // compact, massless, Di, Rac, generic
    bool all_multiplicities_one = false;
    std::size_t total_dim = 0;
};

/// Character of L(lambda) (multiplicity per depth eta), built until complete
/// or to the given height. Shallow layers are cross-checked against Gram ranks.
IrrepReport irrep_character(const Weight& lambda, const QParams& p, long depth);

IrrepReport unitarity_so5(const Weight& lambda, const QParams& p);

/// Compact structure: singular vectors of M(lambda) / N_cl, N_cl generated by
/// the classical vectors F_1^{a+1} w and F_2^{b+1} w, over the support of the
/// Weyl module (eta <= 2 lambda).
struct CompactStructure {
    Weight lambda;
    std::vector<std::pair<Weight, std::size_t>> extra;      // singular vectors of M / N_cl at Weyl weights
    std::vector<std::pair<Weight, std::size_t>> primitive;  // all primitive vectors beyond N_cl
    bool quotient_matches_irrep = false;  // M modulo every primitive vector found equals L
    bool irrep_matches_weyl = false;      // dim L_eta = classical multiplicity
    std::size_t irrep_dim = 0, weyl_dim = 0;
};
CompactStructure compact_structure(const Weight& lambda, const QParams& p);

/// Classical multiplicity of lambda - eta in the so5 irrep of highest weight lambda.
long weyl_multiplicity(const Weight& lambda, const Weight& eta);

/// The physical representation with lowest weight (E0, s): the highest weight
/// machinery applied to -mu, with the SO(2,3) signs; cross-checked against the
/// compact test of -mu + (m/2n) beta_3.
IrrepReport physical_rep(const Rational& E0, const Rational& s, const QParams& p, long depth = 6);

/// Direct SO(2,3) verdict from Verma Gram signatures of M(-mu) (independent of
/// the irrep builder used by unitarity_so5).
UnitarityInfo physical_direct_verdict(const Rational& E0, const Rational& s, const QParams& p);

struct LowestWeight {
    Rational E0, s;
    friend bool operator<(const LowestWeight& a, const LowestWeight& b) {
        return a.E0 != b.E0 ? a.E0 < b.E0 : a.s < b.s;
    }
    friend bool operator==(const LowestWeight& a, const LowestWeight& b) { return a.E0 == b.E0 && a.s == b.s; }
};

struct TruncatedSO23 {
    std::vector<LowestWeight> parts;      // physical lowest weights with multiplicity
    std::vector<LowestWeight> rejected;   // lowest weight vectors with non-physical weight
    Rational energy_cutoff;
};

/// Lowest weight vectors of the coproduct action on V(mu) (x) V(mu') with
/// energy <= cutoff, kept when their weight is physical.
TruncatedSO23 truncated_tensor_so23(const LowestWeight& a, const LowestWeight& b, const QParams& p,
                                   const Rational& energy_cutoff);

/// Generic-q oracle: character peeling of the product of the generic
/// irreducible lowest weight modules, energies <= cutoff.
std::vector<LowestWeight> classical_two_particle(const LowestWeight& a, const LowestWeight& b,
                                                 const Rational& energy_cutoff);

/// Cached physical verdict used by the truncated product (first cell only).
bool is_physical(const LowestWeight& w, const QParams& p);

}  // namespace uqrep::so5
