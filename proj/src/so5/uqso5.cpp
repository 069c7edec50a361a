#include "uqrep/so5/uqso5.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <memory>
#include <set>
#include <sstream>
#include <tuple>

namespace uqrep::so5 {

namespace {

using Mat = Matrix<CycloNumber>;

Rational R(long a, long b = 1) { return make_rational(a, b); }

std::vector<Weight> height_layer(long h) {
    std::vector<Weight> out;
    for (long a = 0; a <= h; ++a) out.push_back(Weight{a, h - a});
    return out;
}

// All eta with 0 <= eta <= top (componentwise), by nondecreasing height.
std::vector<Weight> box_region(const Weight& top) {
    std::vector<Weight> out;
    long t1 = floor_long(top.a1), t2 = floor_long(top.a2);
    for (long h = 0; h <= t1 + t2; ++h)
        for (long a = 0; a <= h; ++a)
            if (a <= t1 && h - a <= t2) out.push_back(Weight{a, h - a});
    return out;
}

std::vector<Weight> height_region(long depth) {
    std::vector<Weight> out;
    for (long h = 0; h <= depth; ++h)
        for (const auto& w : height_layer(h)) out.push_back(w);
    return out;
}

long guard_height(const QParams& p) { return 4 * b2::default_depth(p) + 8; }

Weight lambda0(const QParams& p) { return p.half_period() * b2::root(3); }

std::string vector_text(const std::vector<Mono>& basis, const Mat& v, std::size_t col) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t r = 0; r < basis.size(); ++r) {
        if (v(r, col).is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << v(r, col).str() << ") F" << mono_str(basis[r]);
    }
    return os.str();
}

UnitarityInfo info_from_model(const IrrepModel<CycloRing>& model, const std::string& form) {
    UnitarityInfo u;
    u.form = form;
    u.complete = model.complete() || model.negative_found();
    u.verdict = model.complete() && !model.negative_found() && !model.degenerate_found();
    for (const auto& s : model.signatures())
        if (s.sig.n_minus) {
            u.witness_eta = s.eta;
            u.first_negative_pivot = s.first_negative;
            break;
        }
    return u;
}

std::vector<CharacterEntry> character_of(const IrrepModel<CycloRing>& model) {
    std::vector<CharacterEntry> out;
    for (const auto& [eta, sp] : model.spaces()) out.push_back({eta, sp.dim});
    std::sort(out.begin(), out.end(), [](const CharacterEntry& x, const CharacterEntry& y) {
        long hx = b2::height(x.eta), hy = b2::height(y.eta);
        return hx != hy ? hx < hy : x.eta < y.eta;
    });
    return out;
}

}  // namespace

UMinus<CycloRing>& cyclo_algebra(const QParams& p, int order) {
    if (order == 0) order = p.base_order();
    static std::map<std::tuple<int, int, int>, std::unique_ptr<UMinus<CycloRing>>> cache;
    auto& slot = cache[{p.m, p.n, order}];
    if (!slot) slot = std::make_unique<UMinus<CycloRing>>(CycloRing(p, order));
    return *slot;
}

UMinus<GenericRing>& generic_algebra() {
    static UMinus<GenericRing> u{GenericRing{}};
    return u;
}

VermaWeightSpace verma_weight_space(const Weight& lambda, const Weight& eta, const QParams& p) {
    if (!b2::in_Qplus(eta)) throw DomainError("eta must lie in Q+");
    Verma<CycloRing> V(cyclo_algebra(p), lambda, compact_signs(p));
    return {lambda, eta, V.basis(eta), V.gram(eta)};
}

const RatFunc& det_calibration(const Weight& eta) {
    static std::map<Weight, RatFunc> cache;
    auto it = cache.find(eta);
    if (it != cache.end()) return it->second;
    // (lambda, alpha_1) = -5/2, (lambda, alpha_2) = -1/2: no factor of the formula vanishes
    Weight ref{-3, R(-7, 2)};
    Verma<GenericRing> V(generic_algebra(), ref, FormSigns{1, 1});
    RatFunc det = determinant(V.gram(eta), RatFunc(1));
    RatFunc f = shapovalov_det_formula(GenericRing{}, ref, eta);
    if (f.is_zero() || det.is_zero()) throw InternalError("calibration point is not generic for " + eta.simple_str());
    return cache.emplace(eta, det / f).first->second;
}

std::pair<int, int> deformation_orders(const Weight& lambda, const Weight& eta, const Real& theta) {
    const RatFunc& c = det_calibration(eta);
    auto values = [&](const Real& h) {
        ComplexRing ring(theta + h, h);
        UMinus<ComplexRing> U(ring);
        Verma<ComplexRing> V(U, lambda, FormSigns{1, 1});
        const auto& g = V.gram(eta);
        std::vector<std::vector<Complex>> a(g.rows(), std::vector<Complex>(g.cols()));
        for (std::size_t i = 0; i < g.rows(); ++i)
            for (std::size_t j = 0; j < g.cols(); ++j) a[i][j] = g(i, j);
        Complex det = complex_determinant(a);
        Complex f = shapovalov_det_formula(ring, lambda, eta) * ring.spec(c);
        return std::make_pair(abs(det), abs(f));
    };
    Real h1 = ldexp(Real(1), -40), h2 = ldexp(Real(1), -41);
    auto [g1, f1] = values(h1);
    auto [g2, f2] = values(h2);
    auto order = [](const Real& a, const Real& b) {
        if (a == 0 || b == 0) throw InternalError("deformed value vanished identically");
        Real k = log2(a / b);
        double kd = static_cast<double>(k);
        long r = std::lround(kd);
        if (std::fabs(kd - static_cast<double>(r)) > 0.05) throw InternalError("vanishing order not stable");
        return static_cast<int>(r);
    };
    return {order(g1, g2), order(f1, f2)};
}

DetCheck verify_det(const Weight& lambda, const Weight& eta, const QParams& p) {
    DetCheck out;
    CycloRing ring(p);
    out.mode = ring.name();
    Verma<CycloRing> V(cyclo_algebra(p), lambda, compact_signs(p));
    CycloNumber det = determinant(V.gram(eta), ring.one());
    CycloNumber f = shapovalov_det_formula(ring, lambda, eta);
    const RatFunc& c = det_calibration(eta);
    out.calibration = c.str();
    out.gram_zero = det.is_zero();
    out.formula_zero = f.is_zero();
    out.match = det == ring.spec(c) * f;
    if (out.gram_zero && out.formula_zero) {
        auto [go, fo] = deformation_orders(lambda, eta, Real(2 * p.n) / Real(p.m));
        out.gram_order = go;
        out.formula_order = fo;
        out.match = out.match && go == fo;
    }
    return out;
}

DetCheck verify_det_generic(const Weight& lambda, const Weight& eta) {
    DetCheck out;
    out.mode = "generic";
    Verma<GenericRing> V(generic_algebra(), lambda, FormSigns{1, 1});
    RatFunc det = determinant(V.gram(eta), RatFunc(1));
    RatFunc f = shapovalov_det_formula(GenericRing{}, lambda, eta);
    const RatFunc& c = det_calibration(eta);
    out.calibration = c.str();
    out.gram_zero = det.is_zero();
    out.formula_zero = f.is_zero();
    out.match = det == c * f;
    if (out.gram_zero && out.formula_zero) {
        // a transcendental-looking angle stands in for an indeterminate q
        auto [go, fo] = deformation_orders(lambda, eta, sqrt(Real(2)) / 5);
        out.gram_order = go;
        out.formula_order = fo;
        out.match = out.match && go == fo;
    }
    return out;
}

std::vector<SingularEntry> singular_vectors(const Weight& lambda, const QParams& p, long depth) {
    Verma<CycloRing> V(cyclo_algebra(p), lambda, compact_signs(p));
    std::vector<SingularEntry> out;
    for (long h = 1; h <= depth; ++h)
        for (const auto& eta : height_layer(h)) {
            Mat k = V.singular_space(eta);
            if (k.cols() == 0) continue;
            out.push_back({eta, lambda - eta, k.cols(), vector_text(V.basis(eta), k, 0)});
        }
    return out;
}

long weyl_multiplicity(const Weight& lambda, const Weight& eta) {
    // orbit of lambda + rho with signs, by closure under the simple reflections
    std::map<Weight, int> orbit;
    std::vector<Weight> todo{lambda + b2::rho()};
    orbit[todo[0]] = 1;
    while (!todo.empty()) {
        Weight w = todo.back();
        todo.pop_back();
        for (int i = 1; i <= 2; ++i) {
            Weight a = b2::simple_root(i);
            Weight r = w - (2 * b2::pairing(w, a) / b2::pairing(a, a)) * a;
            if (!orbit.count(r)) {
                orbit[r] = -orbit[w];
                todo.push_back(r);
            }
        }
    }
    if (orbit.size() != 8) throw DomainError("lambda + rho is not regular");
    Weight target = lambda - eta + b2::rho();
    long m = 0;
    for (const auto& [w, sign] : orbit) m += sign * b2::par_count(w - target);
    return m;
}

IrrepReport irrep_character(const Weight& lambda, const QParams& p, long depth) {
    CycloRing ring(p);
    IrrepModel<CycloRing> model(ring, lambda, compact_signs(p));
    IrrepModel<CycloRing>::Options opt;
    opt.max_height = depth;
    model.build(opt);
    IrrepReport rep;
    rep.lambda = lambda;
    rep.depth = depth;
    rep.complete = model.complete();
    rep.character = character_of(model);
    rep.total_dim = model.total_dim();
    // shallow layers: the multiplicity is the rank of the Verma Gram matrix
    Verma<CycloRing> V(cyclo_algebra(p), lambda, compact_signs(p));
    for (long h = 0; h <= std::min(depth, 5L); ++h)
        for (const auto& eta : height_layer(h)) {
            if (b2::par_count(eta) > 10) continue;
            if (rank(V.gram(eta)) != model.dim(eta))
                throw InternalError("irrep multiplicity differs from Gram rank at " + eta.simple_str());
        }
    auto cls = b2::classify_weight(lambda, p);
    rep.classification = cls.compact ? "compact" : "generic";
    rep.all_multiplicities_one = std::all_of(rep.character.begin(), rep.character.end(),
                                             [](const CharacterEntry& c) { return c.mult <= 1; });
    return rep;
}

IrrepReport unitarity_so5(const Weight& lambda, const QParams& p) {
    CycloRing ring(p);
    IrrepModel<CycloRing> model(ring, lambda, compact_signs(p));
    IrrepModel<CycloRing>::Options opt;
    opt.max_height = guard_height(p);
    opt.signatures = true;
    opt.stop_on_negative = true;
    model.build(opt);
    IrrepReport rep;
    rep.lambda = lambda;
    rep.depth = model.height_reached();
    rep.complete = model.complete();
    rep.character = character_of(model);
    rep.total_dim = model.total_dim();
    UnitarityInfo u = info_from_model(model, "SO5");
    auto cls = b2::classify_weight(lambda, p);
    u.in_domain = cls.basic;
    Rational hp = p.half_period();
    if (is_integer(hp) && lambda.s() >= 1 && lambda.E0() == hp - 1 - lambda.s()) u.special_case = "a";
    if (p.n == 1 && lambda.s() == 0 && lambda.E0() == R(p.m - 1, 2)) u.special_case = "b";
    rep.unitarity = u;
    rep.classification = cls.compact ? "compact" : "generic";
    rep.all_multiplicities_one = std::all_of(rep.character.begin(), rep.character.end(),
                                             [](const CharacterEntry& c) { return c.mult <= 1; });
    return rep;
}

CompactStructure compact_structure(const Weight& lambda, const QParams& p) {
    if (!b2::classify_weight(lambda, p).compact) throw DomainError("compact_structure needs a compact weight");
    CompactStructure out;
    out.lambda = lambda;
    long a = to_long(b2::h_eigenvalue(lambda, 1)), b = to_long(b2::h_eigenvalue(lambda, 2));
    Verma<CycloRing> V(cyclo_algebra(p), lambda, compact_signs(p));
    CycloRing ring(p);
    std::vector<std::pair<Weight, Mat>> seeds;
    for (auto [eta, k] : {std::make_pair(Weight{a + 1, 0}, Mono{static_cast<int>(a + 1), 0, 0, 0}),
                          std::make_pair(Weight{0, b + 1}, Mono{0, 0, 0, static_cast<int>(b + 1)})}) {
        Mat v(V.basis(eta).size(), 1, ring.zero());
        v(V.index(eta, k), 0) = ring.one();
        seeds.emplace_back(eta, v);
    }
    Weight top = R(2) * lambda;
    auto region = box_region(top);
    auto layers = primitive_vectors(V, seeds, region);
    // F_i^l w is singular in every Verma module at a root of unity, so M / N_cl
    // is larger than the Weyl module; only weights of the Weyl module count
    for (const auto& layer : primitive_vectors(V, seeds, region, true))
        if (layer.found.cols() && weyl_multiplicity(lambda, layer.eta) > 0)
            out.extra.emplace_back(layer.eta, layer.found.cols());
    IrrepModel<CycloRing> model(ring, lambda, compact_signs(p));
    IrrepModel<CycloRing>::Options opt;
    opt.max_height = guard_height(p);
    model.build(opt);
    out.irrep_dim = model.total_dim();
    bool quotient_ok = model.complete(), weyl_ok = model.complete();
    std::set<Weight> in_region(region.begin(), region.end());
    for (const auto& [eta, sp] : model.spaces())
        if (!in_region.count(eta)) quotient_ok = weyl_ok = false;
    for (const auto& layer : layers) {
        if (layer.found.cols()) out.primitive.emplace_back(layer.eta, layer.found.cols());
        long w = weyl_multiplicity(lambda, layer.eta);
        out.weyl_dim += static_cast<std::size_t>(w);
        if (static_cast<long>(model.dim(layer.eta)) != w) weyl_ok = false;
        if (layer.quotient_dim != model.dim(layer.eta)) quotient_ok = false;
    }
    out.quotient_matches_irrep = quotient_ok;
    out.irrep_matches_weyl = weyl_ok;
    return out;
}

UnitarityInfo physical_direct_verdict(const Rational& E0, const Rational& s, const QParams& p) {
    Weight mu = b2::lowest_from_E0s(E0, s);
    Verma<CycloRing> V(cyclo_algebra(p), -mu, so23_signs(p));
    UnitarityInfo u;
    u.form = "SO23";
    long empty_run = 0;
    for (long h = 0; h <= guard_height(p); ++h) {
        std::size_t layer_rank = 0;
        for (const auto& eta : height_layer(h)) {
            const Mat& g = V.gram(eta);
            auto tr = cyclo::hermitian_signature_trace(g);
            layer_rank += tr.signature.n_plus + tr.signature.n_minus;
            if (tr.signature.n_minus) {
                u.verdict = false;
                u.complete = true;
                u.witness_eta = eta;
                u.first_negative_pivot = tr.first_negative;
                return u;
            }
        }
        empty_run = layer_rank ? 0 : empty_run + 1;
        if (empty_run >= 2) {
            u.verdict = true;
            u.complete = true;
            return u;
        }
    }
    return u;
}

IrrepReport physical_rep(const Rational& E0, const Rational& s, const QParams& p, long depth) {
    Weight mu = b2::lowest_from_E0s(E0, s);
    bool rac = E0 == R(1, 2) && s == 0, di = E0 == 1 && s == R(1, 2);
    bool integral = b2::is_integral(mu);
    if (!integral && !(p.n == 1 && (rac || di)))
        throw DomainError("non-integral lowest weight outside the singleton family: (" + to_string(E0) + "," +
                          to_string(s) + ")");
    if (E0 >= p.half_period() || s < 0) throw DomainError("lowest weight outside the first cell: need 0 <= s, E0 < m/2n");
    CycloRing ring(p);
    Weight hw = -mu;
    IrrepModel<CycloRing> model(ring, hw, so23_signs(p));
    IrrepModel<CycloRing>::Options opt;
    opt.max_height = guard_height(p);
    opt.signatures = true;
    opt.stop_on_negative = true;
    model.build(opt);

    IrrepReport rep;
    rep.lambda = mu;
    rep.picture = "lowest";
    rep.depth = depth;
    rep.complete = model.complete();
    rep.character = character_of(model);
    rep.total_dim = model.total_dim();
    rep.unitarity = info_from_model(model, "SO23");
    IrrepReport shifted = unitarity_so5(hw + lambda0(p), p);
    rep.unitarity_shifted = shifted.unitarity;
    if (rep.unitarity->verdict != shifted.unitarity->verdict)
        throw InternalError("SO(2,3) verdict and the shifted compact verdict disagree");
    rep.all_multiplicities_one = std::all_of(rep.character.begin(), rep.character.end(),
                                             [](const CharacterEntry& c) { return c.mult <= 1; });

    Verma<CycloRing> V(cyclo_algebra(p), hw, so23_signs(p));
    auto region = height_region(depth);
    auto layers = primitive_vectors(V, {}, region);
    bool massless = is_integer(p.half_period()) && s >= 1 && E0 == s + 1;
    for (const auto& layer : layers) {
        if (layer.found.cols() == 0) continue;
        Weight low = mu + layer.eta;
        rep.singular_vectors.push_back(
            {layer.eta, low, layer.found.cols(), vector_text(V.basis(layer.eta), layer.found, 0)});
        if (massless && layer.eta == b2::root(4)) rep.gauge_subspace = std::make_pair(low, layer.found.cols());
    }
    if (massless)
        rep.classification = "massless";
    else if (p.n == 1 && rac)
        rep.classification = "Rac";
    else if (p.n == 1 && di)
        rep.classification = "Di";
    else
        rep.classification = "generic";
    return rep;
}

bool is_physical(const LowestWeight& w, const QParams& p) {
    static std::map<std::tuple<int, int, Rational, Rational>, bool> cache;
    auto key = std::make_tuple(p.m, p.n, w.E0, w.s);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    // the first cell only; at E0 = m/2n the shift lands on one-dimensional weights
    bool v = false;
    if (w.E0 < p.half_period() && w.s >= 0) {
        Weight hw = -b2::lowest_from_E0s(w.E0, w.s) + lambda0(p);
        v = unitarity_so5(hw, p).unitarity->verdict;
    }
    cache.emplace(key, v);
    return v;
}

namespace {

template <class Ring>
IrrepModel<Ring> lowest_model(const Ring& ring, const LowestWeight& w, const QParams* p, const Rational& max_energy) {
    Weight mu = b2::lowest_from_E0s(w.E0, w.s);
    FormSigns sg = p ? so23_signs(*p) : FormSigns{-1, 1};
    IrrepModel<Ring> model(ring, -mu, sg);
    typename IrrepModel<Ring>::Options opt;
    opt.max_height = 400;
    Rational budget = max_energy - w.E0;
    opt.keep = [budget](const Weight& eta) { return eta.a1 <= budget; };
    model.build(opt);
    if (!model.complete()) throw InternalError("energy-truncated module did not close");
    return model;
}

}  // namespace

TruncatedSO23 truncated_tensor_so23(const LowestWeight& a, const LowestWeight& b, const QParams& p,
                                   const Rational& energy_cutoff) {
    TruncatedSO23 out;
    out.energy_cutoff = energy_cutoff;
    Weight ma = b2::lowest_from_E0s(a.E0, a.s), mb = b2::lowest_from_E0s(b.E0, b.s);
    if (!b2::is_integral(ma) || !b2::is_integral(mb))
        throw DomainError("truncated SO(2,3) product needs integral factors");
    if (!is_integer(p.half_period())) return out;
    if (!is_physical(a, p) || !is_physical(b, p)) throw DomainError("factors must be physical");
    CycloRing ring(p);
    auto A = lowest_model(ring, a, &p, energy_cutoff - b.E0);
    auto B = lowest_model(ring, b, &p, energy_cutoff - a.E0);
    const auto& sa = A.spaces();
    const auto& sb = B.spaces();

    // pairs (eta_a, eta_b) with a fixed sum, and offsets of their product blocks
    auto blocks = [&](const Weight& tot) {
        std::vector<std::tuple<Weight, Weight, std::size_t>> out_blocks;
        std::size_t off = 0;
        for (const auto& [ea, spa] : sa) {
            auto it = sb.find(tot - ea);
            if (it == sb.end()) continue;
            out_blocks.emplace_back(ea, it->first, off);
            off += spa.dim * it->second.dim;
        }
        return std::make_pair(out_blocks, off);
    };

    std::set<Weight> totals;
    for (const auto& [ea, x] : sa)
        for (const auto& [eb, y] : sb) {
            Weight t = ea + eb;
            if (a.E0 + b.E0 + t.a1 <= energy_cutoff) totals.insert(t);
        }
    for (const auto& tot : totals) {
        auto [src, n] = blocks(tot);
        if (n == 0) continue;
        // after rescaling u (x) v by q^{kappa(weight u)} the coproduct of X_i^- becomes
        // E_i (x) 1 + 1 (x) E_i up to row factors, so the kernel is computed in that form
        std::vector<Mat> parts;
        for (int i = 1; i <= 2; ++i) {
            auto [dst, nd] = blocks(tot - b2::simple_root(i));
            if (nd == 0) continue;
            std::map<std::pair<Weight, Weight>, std::size_t> doff;
            for (const auto& [ea, eb, o] : dst) doff[{ea, eb}] = o;
            Mat t(nd, n, ring.zero());
            for (const auto& [ea, eb, o] : src) {
                const auto& ua = sa.at(ea);
                const auto& ub = sb.at(eb);
                auto ia = doff.find({ea - b2::simple_root(i), eb});
                if (ia != doff.end()) {
                    const auto& ta = sa.at(ea - b2::simple_root(i));
                    for (std::size_t x = 0; x < ua.dim; ++x)
                        for (std::size_t y = 0; y < ub.dim; ++y)
                            for (std::size_t x2 = 0; x2 < ta.dim; ++x2)
                                if (!ua.E[i](x2, x).is_zero())
                                    t(ia->second + x2 * ub.dim + y, o + x * ub.dim + y) = ua.E[i](x2, x);
                }
                auto ib = doff.find({ea, eb - b2::simple_root(i)});
                if (ib != doff.end()) {
                    const auto& tb = sb.at(eb - b2::simple_root(i));
                    for (std::size_t x = 0; x < ua.dim; ++x)
                        for (std::size_t y = 0; y < ub.dim; ++y)
                            for (std::size_t y2 = 0; y2 < tb.dim; ++y2)
                                if (!ub.E[i](y2, y).is_zero()) {
                                    auto& slot = t(ib->second + x * tb.dim + y2, o + x * ub.dim + y);
                                    slot = slot + ub.E[i](y2, y);
                                }
                }
            }
            parts.push_back(std::move(t));
        }
        std::size_t rows = 0;
        for (const auto& m : parts) rows += m.rows();
        Mat stacked(rows, n, ring.zero());
        std::size_t r0 = 0;
        for (const auto& m : parts) {
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t c = 0; c < n; ++c) stacked(r0 + r, c) = m(r, c);
            r0 += m.rows();
        }
        std::size_t nullity = n - (rows ? rank(stacked) : 0);
        if (nullity == 0) continue;
        Weight nu = ma + mb + tot;
        LowestWeight lw{nu.E0(), -nu.s()};
        bool phys = is_physical(lw, p);
        for (std::size_t k = 0; k < nullity; ++k) (phys ? out.parts : out.rejected).push_back(lw);
    }
    std::sort(out.parts.begin(), out.parts.end());
    std::sort(out.rejected.begin(), out.rejected.end());
    return out;
}

std::vector<LowestWeight> classical_two_particle(const LowestWeight& a, const LowestWeight& b,
                                                 const Rational& energy_cutoff) {
    GenericRing ring;
    auto char_of = [&](const LowestWeight& w, const Rational& max_energy) {
        auto model = lowest_model(ring, w, nullptr, max_energy);
        Weight mu = b2::lowest_from_E0s(w.E0, w.s);
        std::map<Weight, long> ch;
        for (const auto& [eta, sp] : model.spaces()) ch[mu + eta] += static_cast<long>(sp.dim);
        return ch;
    };
    auto ca = char_of(a, energy_cutoff - b.E0), cb = char_of(b, energy_cutoff - a.E0);
    std::map<Weight, long> prod;
    for (const auto& [wa, x] : ca)
        for (const auto& [wb, y] : cb) {
            Weight w = wa + wb;
            if (w.E0() <= energy_cutoff) prod[w] += x * y;
        }
    std::vector<LowestWeight> out;
    while (true) {
        for (auto it = prod.begin(); it != prod.end();) it = it->second == 0 ? prod.erase(it) : std::next(it);
        if (prod.empty()) break;
        // the smallest (a1, a2) is a lowest weight of what remains
        auto [nu, c] = *prod.begin();
        if (c < 0) throw InternalError("negative multiplicity in character peeling");
        LowestWeight lw{nu.E0(), -nu.s()};
        auto cl = char_of(lw, energy_cutoff);
        for (const auto& [w, x] : cl) prod[w] -= c * x;
        for (long k = 0; k < c; ++k) out.push_back(lw);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace uqrep::so5
