#pragma once

// The irreducible highest weight module L(lambda), built layer by layer
// without a PBW basis. L_eta is spanned by the images F_j b of basis vectors
// b of L_{eta - alpha_j}; a vector of L_eta is zero exactly when both X_i^+
// kill it, so each candidate is recorded through
//   phi(v) = (X_1^+ v, X_2^+ v) in L_{eta - alpha_1} + L_{eta - alpha_2},
// using X_i^+ F_j b = F_j X_i^+ b + delta_ij [H_i] b. The pivot candidates form
// the basis; the form follows from (F_j b, v) = sigma_j (b, X_j^+ v).

#include "uqrep/cyclo/signature.hpp"
#include "uqrep/so5/verma.hpp"

#include <functional>
#include <optional>
#include <type_traits>

namespace uqrep::so5 {

template <class S>
struct IrrepSpace {
    Weight eta;
    std::size_t dim = 0;
    Matrix<S> F[3];  // F[j]: L_{eta - alpha_j} -> L_eta (j = 1, 2)
    Matrix<S> E[3];  // E[i]: L_eta -> L_{eta - alpha_i}
    Matrix<S> gram;
    std::vector<std::pair<int, std::size_t>> origin;  // basis vector r = F_j (basis vector k)
};

struct LayerSignature {
    Weight eta;
    cyclo::Signature sig;
    std::optional<std::size_t> first_negative;
};

template <class Ring>
class IrrepModel {
public:
    using S = typename Ring::Scalar;
    using Mat = Matrix<S>;
    using Space = IrrepSpace<S>;
    using Filter = std::function<bool(const Weight&)>;

    struct Options {
        long max_height = 200;
        Filter keep;                    // restrict the weights built (must be downward closed)
        bool signatures = false;        // exact signatures (root of unity only)
        bool stop_on_negative = false;  // early exit at the first indefinite layer
    };

    IrrepModel(Ring ring, Weight lambda, FormSigns signs) : ring_(std::move(ring)), lambda_(std::move(lambda)), sg_(signs) {}

    const Weight& lambda() const { return lambda_; }
    const Ring& ring() const { return ring_; }

    void build(const Options& opt) {
        Space top;
        top.eta = Weight{};
        top.dim = 1;
        top.gram = Mat(1, 1, ring_.one());
        top.gram(0, 0) = ring_.one();
        spaces_.clear();
        spaces_.emplace(top.eta, top);
        record_signature(top, opt);
        long empty_run = 0;
        complete_ = false;
        for (long h = 1; h <= opt.max_height; ++h) {
            std::size_t layer_dim = 0;
            for (long a = 0; a <= h; ++a) {
                Weight eta{a, h - a};
                if (opt.keep && !opt.keep(eta)) continue;
                Space sp = make_space(eta);
                layer_dim += sp.dim;
                if (sp.dim) {
                    record_signature(sp, opt);
                    spaces_.emplace(eta, std::move(sp));
                }
                if (opt.stop_on_negative && negative_found_) return;
            }
            height_ = h;
            empty_run = layer_dim ? 0 : empty_run + 1;
            if (empty_run >= 2) {
                complete_ = true;
                return;
            }
        }
    }

    const std::map<Weight, Space>& spaces() const { return spaces_; }
    std::size_t dim(const Weight& eta) const {
        auto it = spaces_.find(eta);
        return it == spaces_.end() ? 0 : it->second.dim;
    }
    std::size_t total_dim() const {
        std::size_t n = 0;
        for (const auto& [e, s] : spaces_) n += s.dim;
        return n;
    }
    /// True when two consecutive empty height layers were reached.
    bool complete() const { return complete_; }
    long height_reached() const { return height_; }
    bool negative_found() const { return negative_found_; }
    bool degenerate_found() const { return degenerate_found_; }
    const std::vector<LayerSignature>& signatures() const { return sigs_; }

    /// [H_i] on the weight lambda - eta.
    S bracket_H(int i, const Weight& eta) const {
        Weight mu = lambda_ - eta;
        Rational x = b2::pairing(mu, b2::simple_root(i));
        Rational xr = b2::pairing(b2::rho(), b2::simple_root(i));
        Rational d = b2::d_simple(i);
        return (ring_.q_weight(x, xr) - ring_.q_weight(-x, -xr)) / (ring_.q_pow(d) - ring_.q_pow(-d));
    }

private:
    const Space* find(const Weight& eta) const {
        auto it = spaces_.find(eta);
        return it == spaces_.end() ? nullptr : &it->second;
    }

    Space make_space(const Weight& eta) {
        Space sp;
        sp.eta = eta;
        const Space* src[3] = {nullptr, find(eta - b2::simple_root(1)), find(eta - b2::simple_root(2))};
        const Space* tgt[3] = {nullptr, src[1], src[2]};
        std::size_t rows = (tgt[1] ? tgt[1]->dim : 0) + (tgt[2] ? tgt[2]->dim : 0);
        std::vector<std::pair<int, std::size_t>> cand;
        for (int j = 1; j <= 2; ++j)
            if (src[j])
                for (std::size_t k = 0; k < src[j]->dim; ++k) cand.emplace_back(j, k);
        if (cand.empty() || rows == 0) return sp;
        Mat phi(rows, cand.size(), ring_.zero());
        for (std::size_t c = 0; c < cand.size(); ++c) {
            auto [j, k] = cand[c];
            std::size_t off = 0;
            for (int i = 1; i <= 2; ++i) {
                if (!tgt[i]) continue;
                // F_j X_i^+ b: X_i^+ b lies in L_{eta - alpha_j - alpha_i}
                const Space* mid = find(eta - b2::simple_root(j) - b2::simple_root(i));
                if (mid) {
                    const Mat& Ei = src[j]->E[i];
                    const Mat& Fj = tgt[i]->F[j];
                    for (std::size_t r = 0; r < tgt[i]->dim; ++r) {
                        S acc = ring_.zero();
                        for (std::size_t t = 0; t < mid->dim; ++t)
                            if (!ring_.is_zero(Ei(t, k))) acc = acc + Fj(r, t) * Ei(t, k);
                        phi(off + r, c) = acc;
                    }
                }
                if (i == j) phi(off + k, c) = phi(off + k, c) + bracket_H(i, eta - b2::simple_root(j));
                off += tgt[i]->dim;
            }
        }
        Mat red = phi;
        auto piv = row_reduce(red);
        sp.dim = piv.size();
        if (sp.dim == 0) return sp;
        for (auto p : piv) sp.origin.push_back(cand[p]);
        // F_j matrices: column for candidate c is its coordinate vector
        for (int j = 1; j <= 2; ++j) {
            if (!src[j]) continue;
            sp.F[j] = Mat(sp.dim, src[j]->dim, ring_.zero());
        }
        for (std::size_t c = 0; c < cand.size(); ++c) {
            auto [j, k] = cand[c];
            for (std::size_t r = 0; r < sp.dim; ++r) sp.F[j](r, k) = red(r, c);
        }
        // E_i matrices: phi blocks at the basis vectors
        std::size_t off = 0;
        for (int i = 1; i <= 2; ++i) {
            if (!tgt[i]) continue;
            sp.E[i] = Mat(tgt[i]->dim, sp.dim, ring_.zero());
            for (std::size_t r = 0; r < sp.dim; ++r)
                for (std::size_t t = 0; t < tgt[i]->dim; ++t) sp.E[i](t, r) = phi(off + t, piv[r]);
            off += tgt[i]->dim;
        }
        // Gram: (F_j b, v) = sigma_j (b, X_j^+ v)
        sp.gram = Mat(sp.dim, sp.dim, ring_.zero());
        for (std::size_t r = 0; r < sp.dim; ++r) {
            auto [j, k] = sp.origin[r];
            int sign = j == 1 ? sg_.s1 : sg_.s2;
            const Mat& gl = src[j]->gram;
            for (std::size_t col = 0; col < sp.dim; ++col) {
                S acc = ring_.zero();
                for (std::size_t t = 0; t < src[j]->dim; ++t)
                    if (!ring_.is_zero(sp.E[j](t, col))) acc = acc + gl(k, t) * sp.E[j](t, col);
                sp.gram(r, col) = sign > 0 ? acc : -acc;
            }
        }
        return sp;
    }

    void record_signature(const Space& sp, const Options& opt) {
        if constexpr (std::is_same_v<S, CycloNumber>) {
            if (!opt.signatures) return;
            if (!cyclo::is_hermitian(sp.gram)) throw InternalError("irrep form not Hermitian at " + sp.eta.simple_str());
            auto tr = cyclo::hermitian_signature_trace(sp.gram);
            if (tr.signature.n_minus) negative_found_ = true;
            if (tr.signature.n_zero) degenerate_found_ = true;
            sigs_.push_back({sp.eta, tr.signature, tr.first_negative});
        } else {
            (void)sp;
            (void)opt;
        }
    }

    Ring ring_;
    Weight lambda_;
    FormSigns sg_;
    std::map<Weight, Space> spaces_;
    std::vector<LayerSignature> sigs_;
    bool complete_ = false, negative_found_ = false, degenerate_found_ = false;
    long height_ = 0;
};

}  // namespace uqrep::so5
