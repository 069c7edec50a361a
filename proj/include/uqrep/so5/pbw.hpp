#pragma once

// PBW monomials of U^- for U_q(so5) and the rewriting system that keeps
// products in the convex order (beta_1, beta_3, beta_4, beta_2).
//
// Root vectors in the X normalisation (letters 1, 2 stand for X_1^-, X_2^-):
//   F_3 = q F_1 F_2 - F_2 F_1,   F_4 = F_3 F_2 - F_2 F_3.
// The out-of-order pair relations are not typed in: they are solved once,
// over Q(s) with s = q^{1/2}, from the quantum Serre relations in the free
// algebra, and then specialised to whichever scalar ring is in use.

#include "uqrep/b2/root_datum.hpp"
#include "uqrep/core/ratfunc.hpp"

#include <array>
#include <map>
#include <vector>

namespace uqrep::so5 {

using b2::Weight;

/// Exponents (k_1, k_3, k_4, k_2) indexed by position in the convex order.
using Mono = std::array<int, 4>;

/// Root index (1..4) at each position.
constexpr std::array<int, 4> kPosRoot{1, 3, 4, 2};
/// Position of the simple letters X_1^- and X_2^-.
constexpr int letter_position(int letter) { return letter == 1 ? 0 : 3; }

Weight position_weight(int pos);
Weight mono_weight(const Mono& k);
/// First position with a nonzero exponent, 4 for the empty monomial.
int leading_position(const Mono& k);
std::string mono_str(const Mono& k);

/// All monomials of weight eta, in a fixed deterministic order.
std::vector<Mono> pbw_basis(const Weight& eta);

using Word = std::vector<int>;
using WordVec = std::map<Word, RatFunc>;

/// F at a position, expanded in words of simple letters.
const WordVec& root_word(int pos);
/// Expansion of a PBW monomial in words.
WordVec word_expansion(const Mono& k);

/// F_x F_y = sum c_j mono_j for positions x > y.
using Rule = std::vector<std::pair<Mono, RatFunc>>;

struct RewriteSystem {
    std::map<std::pair<int, int>, Rule> rules;
};

/// Derived on first use; the derivation checks that the ordered monomials
/// form a basis of each relevant weight space modulo the Serre ideal.
const RewriteSystem& rewrite_system();

/// Dimension of the free algebra weight space modulo the Serre ideal.
std::size_t serre_quotient_dim(const Weight& eta);
/// True when a - b lies in the two-sided Serre ideal (at generic q).
bool equal_mod_serre(const WordVec& a, const WordVec& b);

}  // namespace uqrep::so5
