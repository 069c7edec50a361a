#include "uqrep/sl2/uqsl2.hpp"

#include "uqrep/cyclo/qnumbers.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace uqrep::sl2 {

using cyclo::Sign;
using cyclo::sign_of_real;
using uqrep::to_string;

namespace {

CycloNumber one_of(int order) { return CycloNumber::one(order); }
CycloNumber zero_of(int order) { return CycloNumber::zero(order); }

Mat zeros(std::size_t r, std::size_t c, int order) { return Mat(r, c, zero_of(order)); }

Mat kron(const Mat& a, const Mat& b, int order) {
    Mat r = zeros(a.rows() * b.rows(), a.cols() * b.cols(), order);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return r;
}

Mat mat_pow(const Mat& a, long k, int order) {
    Mat r = Mat::identity(a.rows(), one_of(order));
    for (long i = 0; i < k; ++i) r = r * a;
    return r;
}

Mat column(const Mat& a, std::size_t j) {
    Mat v(a.rows(), 1);
    for (std::size_t i = 0; i < a.rows(); ++i) v(i, 0) = a(i, j);
    return v;
}

Mat hcat(const std::vector<Mat>& cols, std::size_t rows, int order) {
    std::size_t n = 0;
    for (const auto& c : cols) n += c.cols();
    Mat r = zeros(rows, n, order);
    std::size_t at = 0;
    for (const auto& c : cols)
        for (std::size_t j = 0; j < c.cols(); ++j, ++at)
            for (std::size_t i = 0; i < rows; ++i) r(i, at) = c(i, j);
    return r;
}

long common_denominator(const std::vector<Rational>& xs) {
    long den = 1;
    for (const auto& x : xs) den = lcm_long(den, x.get_den().get_si());
    return den;
}

int order_for_weight_den(const QParams& p, long den) { return p.order_for_denominator(2 * den * den); }

void require_same_params(const Rep2& a, const Rep2& b) {
    if (!(a.params == b.params)) throw DomainError("representations built at different roots of unity");
}

/// Smallest invariant subspace containing the columns of v.
Mat generated_submodule(const Rep2& r, const Mat& v) {
    Mat basis = v;
    std::size_t dim = rank(basis);
    for (;;) {
        Mat grown = hcat({basis, r.Xp * basis, r.Xm * basis}, r.dim(), r.order);
        std::size_t d2 = rank(grown);
        basis = grown;
        if (d2 == dim) break;
        dim = d2;
    }
    // reduced rows of the transpose give a column basis
    Mat tr = basis.transpose();
    auto rows = row_reduce(tr);
    Mat out = zeros(r.dim(), rows.size(), r.order);
    for (std::size_t j = 0; j < rows.size(); ++j)
        for (std::size_t i = 0; i < r.dim(); ++i) out(i, j) = tr(j, i);
    return out;
}

}  // namespace

Mat Rep2::q_power_H(const Rational& c) const {
    Mat r = zeros(dim(), dim(), order);
    for (std::size_t i = 0; i < dim(); ++i) r(i, i) = params.qpow(c * weights[i], order);
    return r;
}

Irrep2 build_irrep2(int d, long z, const QParams& p) {
    if (d < 1 || d > p.M) throw DomainError("dimension d must satisfy 1 <= d <= M");
    Irrep2 v;
    v.d = d;
    v.z = z;
    v.j = Rational(d - 1) + p.half_period() * z;
    Rep2& r = v.rep;
    r.params = p;
    r.order = order_for_weight_den(p, v.j.get_den().get_si());
    r.H = zeros(d, d, r.order);
    r.Xp = zeros(d, d, r.order);
    r.Xm = zeros(d, d, r.order);
    for (int k = 0; k < d; ++k) {
        Rational h = v.j - 2 * k;
        r.weights.push_back(h);
        r.H(k, k) = CycloNumber::rational(r.order, h);
        if (k + 1 < d) r.Xm(k + 1, k) = one_of(r.order);
        if (k > 0)
            r.Xp(k - 1, k) = cyclo::qint(k, 1, p, r.order) *
                             cyclo::qint_rational(v.j - k + 1, 1, p, r.order);
    }
    return v;
}

bool satisfies_relations(const Rep2& r, bool check_nilpotency) {
    const int o = r.order;
    const Mat two_Xp = r.Xp.scaled(CycloNumber::rational(o, 2));
    const Mat two_Xm = r.Xm.scaled(CycloNumber::rational(o, 2));
    if (r.H * r.Xp - r.Xp * r.H != two_Xp) return false;
    if (r.Xm * r.H - r.H * r.Xm != two_Xm) return false;
    // [X+, X-] = (q^H - q^-H)/(q - q^-1)
    const CycloNumber qq = r.params.qpow(1, o) - r.params.qpow(-1, o);
    Mat rhs = (r.q_power_H(1) - r.q_power_H(-1)).scaled(qq.inverse());
    if (r.Xp * r.Xm - r.Xm * r.Xp != rhs) return false;
    if (check_nilpotency) {
        if (!mat_pow(r.Xp, r.params.M, o).is_zero()) return false;
        if (!mat_pow(r.Xm, r.params.M, o).is_zero()) return false;
    }
    return true;
}

const char* to_string(Form f) { return f == Form::SO21 ? "SO21" : "SU2"; }

std::vector<CycloNumber> norm_chain(int d, long z, const QParams& p, Form f) {
    Irrep2 v = build_irrep2(d, z, p);
    const int o = v.rep.order;
    std::vector<CycloNumber> a;
    CycloNumber acc = one_of(o);
    for (int k = 1; k < d; ++k) {
        // a_k = -[k][j-k+1] a_{k-1} (SO21), without the sign for SU2
        CycloNumber step = cyclo::qint(k, 1, p, o) * cyclo::qint_rational(v.j - k + 1, 1, p, o);
        acc = f == Form::SO21 ? -(step * acc) : step * acc;
        a.push_back(acc);
    }
    return a;
}

namespace {

/// Sign of sin(2 pi r) from the fractional part of r.
int sin_turn_sign(const Rational& r) {
    Rational f = r - Rational(floor_long(r));
    if (f == 0 || f == make_rational(1, 2)) return 0;
    return f < make_rational(1, 2) ? 1 : -1;
}

}  // namespace

bool sine_criterion(int d, long z, const QParams& p) {
    const int zs = (z % 2 == 0) ? -1 : 1;  // (-1)^{z+1}
    for (int k = 1; k < d; ++k) {
        int s = zs * sin_turn_sign(make_rational(static_cast<long>(p.n) * k, p.m)) *
                sin_turn_sign(make_rational(static_cast<long>(p.n) * (d - k), p.m));
        if (s <= 0) return false;
    }
    return true;
}

Mat invariant_form(const Irrep2& v, Form f) {
    const Rep2& r = v.rep;
    const int o = r.order;
    const std::size_t d = r.dim();
    // the star of each generator as a matrix: H* = H, X+* = -+X-, X-* = -+X+
    const CycloNumber sg = f == Form::SO21 ? CycloNumber::rational(o, -1) : one_of(o);
    std::vector<std::pair<Mat, Mat>> gens{{r.H, r.H}, {r.Xp, r.Xm.scaled(sg)}, {r.Xm, r.Xp.scaled(sg)}};
    // unknowns G_ab restricted to equal real weights (H-invariance)
    std::vector<std::pair<std::size_t, std::size_t>> unk;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            if (r.weights[a] == r.weights[b]) {
                index[{a, b}] = unk.size();
                unk.push_back({a, b});
            }
    std::vector<std::vector<CycloNumber>> rows;
    for (const auto& [x, xs] : gens) {
        // (G x)_ab - (xs^dagger G)_ab = sum_c G_ac x_cb - sum_c conj(xs_ca) G_cb
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) {
                std::vector<CycloNumber> row(unk.size(), zero_of(o));
                bool any = false;
                for (std::size_t c = 0; c < d; ++c) {
                    if (!x(c, b).is_zero()) {
                        auto it = index.find({a, c});
                        if (it != index.end()) {
                            row[it->second] += x(c, b);
                            any = true;
                        }
                    }
                    if (!xs(c, a).is_zero()) {
                        auto it = index.find({c, b});
                        if (it != index.end()) {
                            row[it->second] -= xs(c, a).conj();
                            any = true;
                        }
                    }
                }
                if (any) rows.push_back(std::move(row));
            }
    }
    Mat sys = zeros(rows.size(), unk.size(), o);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < unk.size(); ++j) sys(i, j) = rows[i][j];
    Mat ker = kernel(sys, one_of(o));
    if (ker.cols() != 1) throw InternalError("invariant form is not unique up to scale");
    const CycloNumber g00 = ker(index.at({0, 0}), 0);
    if (g00.is_zero()) throw InternalError("invariant form vanishes on the highest weight vector");
    const CycloNumber s = g00.inverse();
    Mat g = zeros(d, d, o);
    for (std::size_t u = 0; u < unk.size(); ++u) g(unk[u].first, unk[u].second) = ker(u, 0) * s;
    return g;
}

Unitarity2 unitarity_sl2(int d, long z, const QParams& p, Form f) {
    Unitarity2 u;
    u.verdict = true;
    for (const auto& a : norm_chain(d, z, p, f)) {
        Sign s = sign_of_real(a);
        u.pivot_signs.push_back(s);
        if (s != Sign::positive) u.verdict = false;
    }
    u.gram_signature = cyclo::hermitian_signature(invariant_form(build_irrep2(d, z, p), f));
    u.formula_verdict = f == Form::SO21 ? sine_criterion(d, z, p) : u.verdict;
    return u;
}

Rep2 tensor(const Rep2& a, const Rep2& b) {
    require_same_params(a, b);
    Rep2 r;
    r.params = a.params;
    std::vector<Rational> all = a.weights;
    all.insert(all.end(), b.weights.begin(), b.weights.end());
    r.order = static_cast<int>(
        lcm_long(lcm_long(a.order, b.order), order_for_weight_den(a.params, common_denominator(all))));
    const int o = r.order;
    for (const auto& x : a.weights)
        for (const auto& y : b.weights) r.weights.push_back(x + y);
    const Mat Ia = Mat::identity(a.dim(), one_of(o)), Ib = Mat::identity(b.dim(), one_of(o));
    r.H = kron(a.H, Ib, o) + kron(Ia, b.H, o);
    // Delta(X) = X (x) q^{H/2} + q^{-H/2} (x) X
    Mat Kai = zeros(a.dim(), a.dim(), o);
    for (std::size_t i = 0; i < a.dim(); ++i) Kai(i, i) = a.params.qpow(-a.weights[i] / 2, o);
    Mat Kb2 = zeros(b.dim(), b.dim(), o);
    for (std::size_t i = 0; i < b.dim(); ++i) Kb2(i, i) = b.params.qpow(b.weights[i] / 2, o);
    r.Xp = kron(a.Xp, Kb2, o) + kron(Kai, b.Xp, o);
    r.Xm = kron(a.Xm, Kb2, o) + kron(Kai, b.Xm, o);
    return r;
}

Mat flip(const Rep2& a, const Rep2& b) {
    const int o = static_cast<int>(lcm_long(a.order, b.order));
    Mat s = zeros(a.dim() * b.dim(), a.dim() * b.dim(), o);
    // e_i (x) f_k  ->  f_k (x) e_i
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t k = 0; k < b.dim(); ++k) s(k * a.dim() + i, i * b.dim() + k) = one_of(o);
    return s;
}

namespace {

CycloNumber casimir_value(const Rational& h, const QParams& p, int o) {
    CycloNumber qq = p.qpow(1, o) - p.qpow(-1, o);
    return (p.qpow(h + 1, o) + p.qpow(-h - 1, o)) / (qq * qq);
}

Mat casimir(const Rep2& r) {
    Mat c = r.Xm * r.Xp;
    for (std::size_t i = 0; i < r.dim(); ++i) c(i, i) += casimir_value(r.weights[i], r.params, r.order);
    return c;
}

long band_of(const Rational& center, const QParams& p) {
    Rational z = center / p.half_period();
    if (!is_integer(z)) throw InternalError("summand center " + to_string(center) + " is off the band lattice");
    return to_long(z);
}

struct Block {
    CycloNumber c;
    std::map<Rational, Mat> by_weight;  // columns in the full space
    std::size_t dim() const {
        std::size_t n = 0;
        for (const auto& [h, v] : by_weight) n += v.cols();
        return n;
    }
    Mat all(std::size_t rows, int o) const {
        std::vector<Mat> cols;
        for (const auto& [h, v] : by_weight) cols.push_back(v);
        return hcat(cols, rows, o);
    }
};

std::vector<Block> casimir_blocks(const Rep2& r) {
    const int o = r.order;
    const Mat C = casimir(r);
    std::map<Rational, std::vector<std::size_t>> spaces;
    for (std::size_t i = 0; i < r.dim(); ++i) spaces[r.weights[i]].push_back(i);
    std::vector<Block> blocks;
    for (const auto& [h, idx] : spaces) {
        CycloNumber c = casimir_value(h, r.params, o);
        bool seen = false;
        for (const auto& b : blocks) seen = seen || b.c == c;
        if (!seen) blocks.push_back({c, {}});
    }
    for (const auto& [h, idx] : spaces) {
        const Mat Ch = C.submatrix(idx, idx);
        std::size_t found = 0;
        for (auto& b : blocks) {
            Mat N = Ch - Mat::identity(idx.size(), b.c);
            Mat ker = kernel(mat_pow(N, static_cast<long>(idx.size()), o), one_of(o));
            if (ker.cols() == 0) continue;
            Mat full = zeros(r.dim(), ker.cols(), o);
            for (std::size_t j = 0; j < ker.cols(); ++j)
                for (std::size_t i = 0; i < idx.size(); ++i) full(idx[i], j) = ker(i, j);
            b.by_weight[h] = full;
            found += ker.cols();
        }
        if (found != idx.size()) throw InternalError("Casimir does not split weight space " + to_string(h));
    }
    blocks.erase(std::remove_if(blocks.begin(), blocks.end(), [](const Block& b) { return b.dim() == 0; }),
                 blocks.end());
    return blocks;
}

std::size_t string_length(const Rep2& r, Mat v) {
    std::size_t len = 0;
    while (!v.is_zero()) {
        ++len;
        if (len > r.dim()) throw InternalError("lowering string does not terminate");
        v = r.Xm * v;
    }
    return len;
}

void split_semisimple(const Rep2& r, const Block& b, Decomposition2& out) {
    const int o = r.order;
    std::vector<Mat> strings;
    for (auto it = b.by_weight.rbegin(); it != b.by_weight.rend(); ++it) {
        const Mat& B = it->second;
        Mat k = kernel(r.Xp * B, one_of(o));
        for (std::size_t j = 0; j < k.cols(); ++j) {
            Mat v = B * column(k, j);
            std::size_t len = string_length(r, v);
            Mat w = v;
            for (std::size_t s = 0; s < len; ++s, w = r.Xm * w) strings.push_back(w);
            Rational center = it->first - Rational(static_cast<long>(len) - 1);
            out.v_parts.push_back({static_cast<int>(len), band_of(center, r.params)});
        }
    }
    if (rank(hcat(strings, r.dim(), o)) != b.dim())
        throw InternalError("highest weight strings do not span a semisimple block");
}

void split_indecomposable(const Rep2& r, const Block& b, Decomposition2& out) {
    const int o = r.order;
    const QParams& p = r.params;
    const Rational top = b.by_weight.rbegin()->first, bottom = b.by_weight.begin()->first;
    const Mat& Vh = b.by_weight.rbegin()->second;
    const Mat& Vl = b.by_weight.begin()->second;
    const std::size_t copies = Vh.cols();
    const Rational pr = (top - bottom - make_rational(p.m, p.n)) / 2 + 2;
    if (!is_integer(pr)) throw InternalError("indecomposable block with non-integral p");
    const long pp = to_long(pr);
    if (pp < 2 || pp > p.M) throw InternalError("indecomposable block with p out of range");
    if (b.dim() != 2 * static_cast<std::size_t>(p.M) * copies || Vl.cols() != copies)
        throw InternalError("indecomposable block has the wrong dimension");
    const Mat B = b.all(r.dim(), o);
    IBlock ib;
    ib.p = static_cast<int>(pp);
    ib.z = band_of((top + bottom) / 2, p);
    ib.dim = 2 * p.M;
    ib.top = top;
    ib.bottom = bottom;
    ib.hw_vectors = kernel(r.Xp * B, one_of(o)).cols();
    ib.lw_vectors = kernel(r.Xm * B, one_of(o)).cols();
    bool socle = true, head = true;
    for (std::size_t j = 0; j < copies; ++j) {
        Mat u = mat_pow(r.Xm, pp - 1, o) * column(Vh, j);
        socle = socle && !u.is_zero() && (r.Xp * u).is_zero();
        Mat w = mat_pow(r.Xp, pp - 1, o) * column(Vl, j);
        head = head && !w.is_zero() && (r.Xm * w).is_zero();
    }
    ib.socle_vector_ok = socle;
    ib.head_vector_ok = head;
    if (!socle || !head || ib.hw_vectors != 2 * copies || ib.lw_vectors != 2 * copies)
        throw InternalError("indecomposable block does not have the expected singular vectors");
    // low quotient: U v_l modulo U (X+)^{p-1} v_l
    const Mat vl = column(Vl, 0);
    const std::size_t big = generated_submodule(r, vl).cols();
    const std::size_t small = generated_submodule(r, mat_pow(r.Xp, pp - 1, o) * vl).cols();
    const long dq = static_cast<long>(big - small);
    ib.low_quotient = {static_cast<int>(dq), band_of(bottom + Rational(dq - 1), p)};
    for (std::size_t j = 0; j < copies; ++j) out.i_parts.push_back(ib);
}

Decomposition2 decompose(const Rep2& r) {
    Decomposition2 out;
    out.total_dim = r.dim();
    const Mat C = casimir(r);
    for (const auto& b : casimir_blocks(r)) {
        const Mat B = b.all(r.dim(), r.order);
        if ((C * B - B.scaled(b.c)).is_zero())
            split_semisimple(r, b, out);
        else
            split_indecomposable(r, b, out);
    }
    std::size_t acc = 0;
    for (const auto& v : out.v_parts) acc += static_cast<std::size_t>(v.d);
    for (const auto& i : out.i_parts) acc += i.dim;
    if (acc != out.total_dim) throw InternalError("dimension bookkeeping failed");
    std::sort(out.v_parts.begin(), out.v_parts.end());
    std::sort(out.i_parts.begin(), out.i_parts.end(),
              [](const IBlock& x, const IBlock& y) { return x.p != y.p ? x.p < y.p : x.z < y.z; });
    return out;
}

}  // namespace

Decomposition2 tensor_decompose2(const Irrep2& a, const Irrep2& b) { return decompose(tensor(a.rep, b.rep)); }

FusionClaim fusion_formula2(int d, long z, int d2, long z2, const QParams& p) {
    FusionClaim f;
    const int M = p.M;
    const long Z = z + z2;
    const int hi = std::min(d + d2 - 1, 2 * M - d - d2 - 1);
    for (int dd = std::abs(d - d2) + 1; dd <= hi; dd += 2) f.v_parts.push_back({dd, Z});
    const int top = d + d2 - M;
    const int r0 = (top % 2 != 0) ? 1 : 2;
    for (int p_ = r0; p_ <= top; p_ += 2) {
        // I^1_z is V_{M,z}, of dimension M
        if (p_ == 1) {
            f.v_parts.push_back({M, Z});
        } else {
            f.i_parts.push_back({p_, Z});
        }
    }
    std::sort(f.v_parts.begin(), f.v_parts.end());
    std::sort(f.i_parts.begin(), f.i_parts.end());
    return f;
}

TruncatedResult truncated_tensor2(const Irrep2& a, const Irrep2& b) {
    const QParams& p = a.rep.params;
    if (p.n != 1 || p.m % 2 != 0) throw DomainError("the truncated product needs n = 1 and even m");
    Decomposition2 dec = tensor_decompose2(a, b);
    TruncatedResult t;
    bool quotient = true, definition = true;
    for (const auto& ib : dec.i_parts) {
        if (ib.low_quotient.z != a.z + b.z - 1)
            throw InternalError("kept quotient is outside the lowest band");
        t.parts.push_back(ib.low_quotient);
        quotient = quotient && ib.low_quotient.d == ib.p - 1;
        definition = definition && ib.low_quotient.d == ib.p;
    }
    std::sort(t.parts.begin(), t.parts.end());
    t.convention = dec.i_parts.empty() ? "both" : quotient ? "quotient" : definition ? "definition" : "none";
    return t;
}

namespace {

int rmatrix_order(const Rep2& a, const Rep2& b) {
    long den = 1;
    for (const auto& x : a.weights)
        for (const auto& y : b.weights) den = lcm_long(den, Rational(x * y / 2).get_den().get_si());
    long o = lcm_long(lcm_long(a.order, b.order), a.params.order_for_denominator(den));
    return static_cast<int>(o);
}

Mat diag_qHH(const Rep2& a, const Rep2& b, const Rational& c, int o) {
    Mat r = zeros(a.dim() * b.dim(), a.dim() * b.dim(), o);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t k = 0; k < b.dim(); ++k)
            r(i * b.dim() + k, i * b.dim() + k) = a.params.qpow(c * a.weights[i] * b.weights[k], o);
    return r;
}

Mat qH(const Rep2& r, const Rational& c, int o) {
    Mat d = zeros(r.dim(), r.dim(), o);
    for (std::size_t i = 0; i < r.dim(); ++i) d(i, i) = r.params.qpow(c * r.weights[i], o);
    return d;
}

CycloNumber r_coefficient(long l, const QParams& p, int o) {
    CycloNumber qq = p.qpow(1, o) - p.qpow(-1, o);
    CycloNumber c = p.qpow(make_rational(-l * (l + 1), 2), o);
    for (long i = 0; i < l; ++i) c *= qq;
    return c / cyclo::qfactorial(l, 1, p, o);
}

}  // namespace

Mat rmatrix2(const Rep2& a, const Rep2& b) {
    require_same_params(a, b);
    if (a.dim() > static_cast<std::size_t>(a.params.M) || b.dim() > static_cast<std::size_t>(b.params.M))
        throw DomainError("the restricted R-matrix needs dimensions at most M");
    const int o = rmatrix_order(a, b);
    Mat sum = zeros(a.dim() * b.dim(), a.dim() * b.dim(), o);
    Mat Xpl = Mat::identity(a.dim(), one_of(o)), Xml = Mat::identity(b.dim(), one_of(o));
    for (long l = 0; l < a.params.M; ++l) {
        const Rational h = make_rational(l, 2);
        sum = sum + kron(qH(a, h, o) * Xpl, qH(b, -h, o) * Xml, o).scaled(r_coefficient(l, a.params, o));
        Xpl = Xpl * a.Xp;
        Xml = Xml * b.Xm;
    }
    return diag_qHH(a, b, make_rational(1, 2), o) * sum;
}

Mat rmatrix2_star(const Rep2& a, const Rep2& b) {
    require_same_params(a, b);
    const int o = rmatrix_order(a, b);
    // (c A (x) B)* = conj(c) B* (x) A* with A = q^{lH/2} X+^l, B = q^{-lH/2} X-^l,
    // so B* = (-X+)^l q^{lH/2} and A* = (-X-)^l q^{-lH/2}; (q^{H(x)H/2})* = q^{-H(x)H/2}
    Mat sum = zeros(a.dim() * b.dim(), a.dim() * b.dim(), o);
    Mat Xpl = Mat::identity(a.dim(), one_of(o)), Xml = Mat::identity(b.dim(), one_of(o));
    for (long l = 0; l < a.params.M; ++l) {
        const Rational h = make_rational(l, 2);
        // the (-1)^l from the two factors cancel
        const CycloNumber c = r_coefficient(l, a.params, o).conj();
        sum = sum + kron(Xpl * qH(a, h, o), Xml * qH(b, -h, o), o).scaled(c);
        Xpl = Xpl * a.Xp;
        Xml = Xml * b.Xm;
    }
    return sum * diag_qHH(a, b, make_rational(-1, 2), o);
}

}  // namespace uqrep::sl2
