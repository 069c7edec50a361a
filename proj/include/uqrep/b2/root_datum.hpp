#pragma once

// The B2 = so(5) root datum: weights, roots, pairing, partition counts,
// affine reflections and strong linkage at a root of unity.

#include "uqrep/core/rational.hpp"
#include "uqrep/cyclo/params.hpp"

#include <array>
#include <set>
#include <string>
#include <vector>

namespace uqrep::b2 {

using cyclo::QParams;

/// A weight stored in simple-root coordinates lambda = a1 alpha_1 + a2 alpha_2.
struct Weight {
    Rational a1 = 0, a2 = 0;

    Weight() = default;
    Weight(Rational x1, Rational x2) : a1(std::move(x1)), a2(std::move(x2)) {}

    /// lambda = E0 beta_3 + s beta_2 = E0 alpha_1 + (E0 + s) alpha_2.
    static Weight from_E0s(const Rational& E0, const Rational& s) { return {E0, E0 + s}; }
    Rational E0() const { return a1; }
    Rational s() const { return a2 - a1; }

    Weight operator-() const { return {-a1, -a2}; }
    friend Weight operator+(const Weight& x, const Weight& y) { return {x.a1 + y.a1, x.a2 + y.a2}; }
    friend Weight operator-(const Weight& x, const Weight& y) { return {x.a1 - y.a1, x.a2 - y.a2}; }
    friend Weight operator*(const Rational& k, const Weight& x) { return {k * x.a1, k * x.a2}; }
    friend bool operator==(const Weight& x, const Weight& y) { return x.a1 == y.a1 && x.a2 == y.a2; }
    friend bool operator!=(const Weight& x, const Weight& y) { return !(x == y); }
    friend bool operator<(const Weight& x, const Weight& y) {
        return x.a1 != y.a1 ? x.a1 < y.a1 : x.a2 < y.a2;
    }

    std::string str() const;        // "(E0,s)"
    std::string simple_str() const;  // "a1*alpha1 + a2*alpha2"
};

/// Lowest weight convention mu = E0 beta_3 - s beta_2, written (E0, s).
Weight lowest_from_E0s(const Rational& E0, const Rational& s);

/// Positive roots are indexed 1..4 as beta_1 = alpha_1, beta_2 = alpha_2,
/// beta_3 = alpha_1 + alpha_2, beta_4 = alpha_1 + 2 alpha_2.
Weight root(int i);
Weight simple_root(int i);
/// Convex order (beta_1, beta_3, beta_4, beta_2).
constexpr std::array<int, 4> convex_order{1, 3, 4, 2};

Rational pairing(const Weight& x, const Weight& y);
/// d_beta = (beta, beta) / 2.
Rational d_root(int i);
/// d_1 = 1, d_2 = 1/2.
Rational d_simple(int i);
int cartan(int i, int j);  // A_ij = 2(alpha_i, alpha_j)/(alpha_j, alpha_j)
Weight rho();

/// H_i eigenvalue (lambda, alpha_i)/d_i.
Rational h_eigenvalue(const Weight& w, int i);

bool in_root_lattice(const Weight& w);
bool in_Qplus(const Weight& w);
/// a1 + a2 for w in Q.
long height(const Weight& w);
/// Energy (w, beta_3) = a1.
inline Rational energy(const Weight& w) { return w.a1; }

/// Number of (k1,k3,k4,k2) with sum k_i beta_i = eta; 0 outside Q+.
long par_count(const Weight& eta);

/// Integrality: (lambda, beta_i) in Z d_{beta_i} for all positive roots.
bool is_integral(const Weight& w);

struct Classification {
    bool basic = false;
    bool compact = false;
    bool integral = false;
};
Classification classify_weight(const Weight& w, const QParams& p);

struct AffineReflection {
    int root = 1;
    long level = 0;
};

/// Reflection about the plane orthogonal to beta through -rho + m/(4 n d_beta) l beta.
Weight reflect(const Weight& w, const AffineReflection& r, const QParams& p);

/// True when the reflection image stays in w + Q (the allowed-level predicate).
bool allowed_level(const Weight& w, const AffineReflection& r, const QParams& p);

/// k in N_beta^T: [k]_{q^{d_beta}} = 0.
bool in_NT(int root_index, long k, const QParams& p);
/// k in N_beta^R(lambda): (lambda + rho - k beta/2, beta) in (m/2n) Z.
bool in_NR(const Weight& w, int root_index, long k, const QParams& p);

/// Weights reachable from w by chains of single steps w -> w - k beta with
/// k in N^T or N^R, within total height depth. Includes w itself.
std::set<Weight> strongly_linked(const Weight& w, const QParams& p, long depth);

/// Weights reachable by exactly one step (excluding w), within depth.
std::set<Weight> single_step_linked(const Weight& w, const QParams& p, long depth);

/// Generators (m/2n) alpha_1, (m/2n) alpha_2 of the one-dimensional weights.
std::array<Weight, 2> one_dim_weights(const QParams& p);

/// mu = -lambda + (m/2n) beta_3, returned as a weight (E0 = mu.E0(), s = -mu.s()).
Weight shift_by_omega(const Weight& lambda, const QParams& p);

/// Default search depth: height of 2 (m/2n)(beta_3 + beta_2), rounded up.
long default_depth(const QParams& p);

}  // namespace uqrep::b2
