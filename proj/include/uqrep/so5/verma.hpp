#pragma once

// Verma modules M(lambda) in the PBW basis F_k w_lambda: raising operators,
// the invariant Hermitian form and singular/primitive vectors.
//
// The form satisfies (u, x v) = (x^* u, v), antilinear in the first slot,
// with (X_i^+)^* = sigma_i X_i^-. sigma = (+1, s2) is the compact form,
// sigma = (-1, s2) the SO(2,3) one; s2 = sign [1/2]_q keeps e_2 = sqrt([1/2]) X_2
// self-adjoint up to the usual sign. The Gram matrix is filled recursively:
// (F_c F_k'' w, v) = (F_k'' w, F_c^* v) with c the leading PBW factor.

#include "uqrep/so5/uminus.hpp"

#include <map>

namespace uqrep::so5 {

struct FormSigns {
    int s1 = 1;
    int s2 = 1;
    /// Sign picked up by F_beta^* for beta = a1 alpha_1 + a2 alpha_2.
    int of(const Weight& beta) const {
        long a = to_long(beta.a1), b = to_long(beta.a2);
        return ((s1 < 0 && (a & 1)) ? -1 : 1) * ((s2 < 0 && (b & 1)) ? -1 : 1);
    }
};

/// sign of [1/2]_q = 1 / (q^{1/2} + q^{-1/2}) at the root of unity.
int half_sign(const QParams& p);
FormSigns compact_signs(const QParams& p);
FormSigns so23_signs(const QParams& p);

template <class Ring>
class Verma {
public:
    using S = typename Ring::Scalar;
    using Mat = Matrix<S>;
    using Vec = typename UMinus<Ring>::Vec;

    Verma(UMinus<Ring>& u, Weight lambda, FormSigns signs) : u_(u), lambda_(std::move(lambda)), sg_(signs) {}

    const Weight& lambda() const { return lambda_; }
    UMinus<Ring>& algebra() { return u_; }
    const Ring& ring() const { return u_.ring(); }

    const std::vector<Mono>& basis(const Weight& eta) {
        auto it = basis_.find(eta);
        if (it == basis_.end()) {
            it = basis_.emplace(eta, pbw_basis(eta)).first;
            auto& idx = index_[eta];
            for (std::size_t j = 0; j < it->second.size(); ++j) idx[it->second[j]] = j;
        }
        return it->second;
    }
    std::size_t index(const Weight& eta, const Mono& k) {
        basis(eta);
        return index_.at(eta).at(k);
    }

    /// Coordinates of a U^- element of weight eta.
    Mat column(const Weight& eta, const Vec& v) {
        Mat c(basis(eta).size(), 1, ring().zero());
        for (const auto& [k, x] : v) c(index(eta, k), 0) = x;
        return c;
    }

    /// X_i^+ : M_eta -> M_{eta - alpha_i}.
    const Mat& E(int i, const Weight& eta) {
        auto key = std::make_pair(i, eta);
        auto it = E_.find(key);
        if (it != E_.end()) return it->second;
        Weight low = eta - b2::simple_root(i);
        const auto& src = basis(eta);
        const auto& dst = basis(low);
        Mat m(dst.size(), src.size(), ring().zero());
        for (std::size_t c = 0; c < src.size(); ++c)
            for (const auto& [k, x] : u_.verma_E(i, src[c], lambda_)) m(index(low, k), c) = x;
        return E_.emplace(key, std::move(m)).first->second;
    }

    /// F at a PBW position: M_eta -> M_{eta + beta}.
    Mat F(int pos, const Weight& eta) {
        Weight high = eta + position_weight(pos);
        const auto& src = basis(eta);
        Mat m(basis(high).size(), src.size(), ring().zero());
        for (std::size_t c = 0; c < src.size(); ++c)
            for (const auto& [k, x] : u_.mul_left(pos, src[c])) m(index(high, k), c) = x;
        return m;
    }

    /// F_pos^* : M_eta -> M_{eta - beta}, from the word of F_pos.
    Mat star_of_F(int pos, const Weight& eta) {
        Weight beta = position_weight(pos);
        Mat total(basis(eta - beta).size(), basis(eta).size(), ring().zero());
        for (const auto& [w, c] : u_.word_of(pos)) {
            // (F_{w1} ... F_{wl})^* = F_{wl}^* ... F_{w1}^*: E_{w1} acts first
            Mat acc = Mat::identity(basis(eta).size(), ring().one());
            Weight cur = eta;
            for (int letter : w) {
                acc = E(letter, cur) * acc;
                cur = cur - b2::simple_root(letter);
            }
            total = total + acc.scaled(ring().conj(c));
        }
        if (sg_.of(beta) < 0) total = total.scaled(-ring().one());
        return total;
    }

    const Mat& gram(const Weight& eta) {
        auto it = gram_.find(eta);
        if (it != gram_.end()) return it->second;
        const auto& b = basis(eta);
        Mat g(b.size(), b.size(), ring().zero());
        if (eta == Weight{}) {
            g(0, 0) = ring().one();
        } else {
            std::map<int, Mat> star;
            for (std::size_t r = 0; r < b.size(); ++r) {
                int c = leading_position(b[r]);
                if (!star.count(c)) star.emplace(c, star_of_F(c, eta));
                Mono rest = b[r];
                --rest[c];
                Weight low = eta - position_weight(c);
                const Mat& gl = gram(low);
                const Mat& y = star.at(c);
                std::size_t rr = index(low, rest);
                for (std::size_t col = 0; col < b.size(); ++col) {
                    S acc = ring().zero();
                    for (std::size_t j = 0; j < gl.cols(); ++j)
                        if (!ring().is_zero(y(j, col))) acc = acc + gl(rr, j) * y(j, col);
                    g(r, col) = acc;
                }
            }
        }
        return gram_.emplace(eta, std::move(g)).first->second;
    }

    /// Joint kernel of X_1^+ and X_2^+ on M_eta, as columns.
    Mat singular_space(const Weight& eta) {
        std::size_t n = basis(eta).size();
        const Mat& e1 = E(1, eta);
        const Mat& e2 = E(2, eta);
        Mat stacked(e1.rows() + e2.rows(), n, ring().zero());
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < e1.rows(); ++i) stacked(i, j) = e1(i, j);
            for (std::size_t i = 0; i < e2.rows(); ++i) stacked(e1.rows() + i, j) = e2(i, j);
        }
        return kernel(stacked, ring().one());
    }

private:
    UMinus<Ring>& u_;
    Weight lambda_;
    FormSigns sg_;
    std::map<Weight, std::vector<Mono>> basis_;
    std::map<Weight, std::map<Mono, std::size_t>> index_;
    std::map<std::pair<int, Weight>, Mat> E_;
    std::map<Weight, Mat> gram_;
};

/// Column basis of the span of the given columns (greedy, keeps order).
template <class T>
Matrix<T> column_basis(const Matrix<T>& a, const T& one) {
    Matrix<T> t = a;
    auto piv = row_reduce(t);
    std::vector<std::size_t> rows(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) rows[i] = i;
    (void)one;
    return a.submatrix(rows, piv);
}

template <class T>
Matrix<T> hcat(const Matrix<T>& a, const Matrix<T>& b, const T& zero) {
    std::size_t rows = a.cols() ? a.rows() : b.rows();
    Matrix<T> r(rows, a.cols() + b.cols(), zero);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

template <class S>
struct PrimitiveLayer {
    Weight eta;
    std::size_t submodule_dim = 0;  // dim N_eta after this layer
    std::size_t quotient_dim = 0;   // dim (M/N)_eta after this layer
    Matrix<S> found;                // new primitive vectors (columns)
};

/// Primitive vectors of M(lambda) relative to the submodule N generated by
/// the seeds and by everything found at shallower weights: vectors v with
/// X_i^+ v in N and v not in N. region must be closed under eta -> eta - alpha_i
/// and listed with nondecreasing height. With relative_to_seeds the test
/// X_i^+ v in N uses only the submodule generated by the seeds, so the vectors
/// found are the singular vectors of M / <seeds> (counted modulo everything
/// found before); otherwise deeper primitive vectors are found as well.
template <class Ring>
std::vector<PrimitiveLayer<typename Ring::Scalar>> primitive_vectors(
    Verma<Ring>& V, const std::vector<std::pair<Weight, Matrix<typename Ring::Scalar>>>& seeds,
    const std::vector<Weight>& region, bool relative_to_seeds = false) {
    using S = typename Ring::Scalar;
    using Mat = Matrix<S>;
    const Ring& ring = V.ring();
    std::map<Weight, Mat> N, Nseed;
    std::vector<PrimitiveLayer<S>> out;
    auto grow = [&](std::map<Weight, Mat>& sub, const Weight& eta, bool with_seeds) {
        Mat span(V.basis(eta).size(), 0, ring.zero());
        for (int j = 1; j <= 2; ++j) {
            auto it = sub.find(eta - b2::simple_root(j));
            if (it == sub.end() || it->second.cols() == 0) continue;
            span = hcat(span, V.F(letter_position(j), eta - b2::simple_root(j)) * it->second, ring.zero());
        }
        if (with_seeds)
            for (const auto& [w, vecs] : seeds)
                if (w == eta) span = hcat(span, vecs, ring.zero());
        return span.cols() ? column_basis(span, ring.one()) : span;
    };
    for (const auto& eta : region) {
        std::size_t n = V.basis(eta).size();
        if (eta == Weight{}) {
            // the generating vector itself never counts
            N[eta] = Nseed[eta] = Mat(1, 0, ring.zero());
            out.push_back({eta, 0, 1, Mat(1, 0, ring.zero())});
            continue;
        }
        Mat basisN = grow(N, eta, true);
        if (relative_to_seeds) Nseed[eta] = grow(Nseed, eta, true);
        const auto& Ncond = relative_to_seeds ? Nseed : N;
        // conditions: X_i^+ v annihilated by the left annihilator of N below
        Mat cond(0, n, ring.zero());
        for (int i = 1; i <= 2; ++i) {
            Weight low = eta - b2::simple_root(i);
            if (!b2::in_Qplus(low)) continue;
            const Mat& e = V.E(i, eta);
            auto it = Ncond.find(low);
            Mat ann;
            if (it == Ncond.end() || it->second.cols() == 0)
                ann = Mat::identity(e.rows(), ring.one());
            else
                ann = kernel(it->second.transpose(), ring.one()).transpose();
            Mat c = ann * e;
            Mat merged(cond.rows() + c.rows(), n, ring.zero());
            for (std::size_t r = 0; r < cond.rows(); ++r)
                for (std::size_t k = 0; k < n; ++k) merged(r, k) = cond(r, k);
            for (std::size_t r = 0; r < c.rows(); ++r)
                for (std::size_t k = 0; k < n; ++k) merged(cond.rows() + r, k) = c(r, k);
            cond = merged;
        }
        Mat sing = cond.rows() ? kernel(cond, ring.one()) : Mat::identity(n, ring.one());
        // extend N by vectors of sing outside it
        Mat all = hcat(basisN, sing, ring.zero());
        Mat red = all;
        auto piv = row_reduce(red);
        std::vector<std::size_t> rows(n), newcols;
        for (std::size_t i = 0; i < n; ++i) rows[i] = i;
        for (auto p : piv)
            if (p >= basisN.cols()) newcols.push_back(p);
        if (piv.size() - newcols.size() != basisN.cols()) throw InternalError("submodule basis not independent");
        Mat found = all.submatrix(rows, newcols);
        Mat full = hcat(basisN, found, ring.zero());
        N[eta] = full;
        out.push_back({eta, full.cols(), n - full.cols(), found});
    }
    return out;
}

}  // namespace uqrep::so5
