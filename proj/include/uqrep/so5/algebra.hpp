#pragma once

// Elements of U_q(so5) in normal order F_k K_1^a K_2^b E_l, where
//   F_k = F_{b1}^{k0} F_{b3}^{k1} F_{b4}^{k2} F_{b2}^{k3}      (negative part)
//   E_l = E_{b2}^{l3} E_{b4}^{l2} E_{b3}^{l1} E_{b1}^{l0}      (positive part, reversed)
// and K_1 = q^{h_1}, K_2 = q^{h_2} with h_i = d_i H_i. The positive root vectors
// are the images of the negative ones under the antilinear anti-automorphism
// tau(F_i) = E_i, tau(E_i) = F_i, tau(K) = K^{-1}, tau(q) = q^{-1}; so
// E_{b3} = q^{-1} E_2 E_1 - E_1 E_2 and the U^+ straightening is the U^- one
// read backwards with conjugated coefficients.

#include "uqrep/so5/uminus.hpp"
#include "uqrep/so5/verma.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <vector>

namespace uqrep::so5 {

struct AlgTerm {
    Mono f{};
    int a = 0, b = 0;
    Mono e{};
    friend bool operator<(const AlgTerm& x, const AlgTerm& y) {
        return std::tie(x.f, x.a, x.b, x.e) < std::tie(y.f, y.a, y.b, y.e);
    }
    friend bool operator==(const AlgTerm& x, const AlgTerm& y) {
        return x.f == y.f && x.a == y.a && x.b == y.b && x.e == y.e;
    }
};

/// A generator letter of an unordered word.
struct Letter {
    enum Kind { F, E, K } kind;
    int i = 0;         // simple index for F and E
    int a = 0, b = 0;  // K_1^a K_2^b
    static Letter f(int i) { return {F, i, 0, 0}; }
    static Letter e(int i) { return {E, i, 0, 0}; }
    static Letter k(int a, int b) { return {K, 0, a, b}; }
};

template <class Ring>
class Algebra {
public:
    using S = typename Ring::Scalar;
    using Element = std::map<AlgTerm, S>;
    using RawWord = std::pair<std::vector<Letter>, S>;

    explicit Algebra(UMinus<Ring>& u, long step_budget = 20'000'000) : u_(u), budget_(step_budget) {}

    const Ring& ring() const { return u_.ring(); }

    Element scalar(const S& c) const { return c == ring().zero() ? Element{} : Element{{AlgTerm{}, c}}; }
    Element gen(const Letter& l) const {
        AlgTerm t;
        if (l.kind == Letter::F) t.f[letter_position(l.i)] = 1;
        if (l.kind == Letter::E) t.e[letter_position(l.i)] = 1;
        if (l.kind == Letter::K) {
            t.a = l.a;
            t.b = l.b;
        }
        return {{t, ring().one()}};
    }

    Element add(Element x, const Element& y, const S& c) const {
        for (const auto& [t, v] : y) {
            auto& slot = x[t];
            slot = slot + v * c;
        }
        prune(x);
        return x;
    }
    Element sub(const Element& x, const Element& y) const { return add(x, y, -ring().one()); }

    /// Product of two normal ordered elements, again normal ordered.
    Element mul(const Element& x, const Element& y) {
        Element out;
        for (const auto& [t, c] : x) {
            // E part of t acting on y, rightmost letter first
            Element cur;
            for (const auto& [w, wc] : e_words(t.e)) {
                Element z = y;
                for (auto it = w.rbegin(); it != w.rend(); ++it) z = mul_E(*it, z);
                cur = add(cur, z, wc);
            }
            // K part
            Element kz;
            for (const auto& [s, v] : cur) {
                AlgTerm s2 = s;
                s2.a += t.a;
                s2.b += t.b;
                auto& slot = kz[s2];
                slot = slot + v * k_past_f(t.a, t.b, s.f);
            }
            // F part
            for (const auto& [s, v] : kz) {
                step();
                for (const auto& [k, x2] : u_.mul_mono(t.f, typename UMinus<Ring>::Vec{{s.f, ring().one()}})) {
                    AlgTerm s2 = s;
                    s2.f = k;
                    auto& slot = out[s2];
                    slot = slot + v * x2 * c;
                }
            }
        }
        prune(out);
        return out;
    }

    Element commutator(const Element& x, const Element& y) { return sub(mul(x, y), mul(y, x)); }

    /// Normal form of a combination of arbitrary words in the generators.
    Element normal_order(const std::vector<RawWord>& words) {
        Element out;
        for (const auto& [w, c] : words) {
            Element z = scalar(ring().one());
            for (auto it = w.rbegin(); it != w.rend(); ++it) z = mul(gen(*it), z);
            out = add(out, z, c);
        }
        return out;
    }

    /// The element itself as words (used to re-order and to take adjoints).
    std::vector<RawWord> words_of(const Element& x) const {
        std::vector<RawWord> out;
        for (const auto& [t, c] : x)
            for (const auto& [wf, cf] : f_words(t.f))
                for (const auto& [we, ce] : e_words(t.e)) {
                    std::vector<Letter> w;
                    for (int l : wf) w.push_back(Letter::f(l));
                    if (t.a || t.b) w.push_back(Letter::k(t.a, t.b));
                    for (int l : we) w.push_back(Letter::e(l));
                    out.emplace_back(w, c * cf * ce);
                }
        return out;
    }

    /// Antilinear anti-automorphism with (X_i^+)^* = sigma_i X_i^-, K^* = K^{-1}.
    Element adjoint(const Element& x, FormSigns sg) {
        std::vector<RawWord> out;
        for (auto [w, c] : words_of(x)) {
            std::vector<Letter> r;
            S coeff = ring().conj(c);
            for (auto it = w.rbegin(); it != w.rend(); ++it) {
                const Letter& l = *it;
                int sign = l.i == 1 ? sg.s1 : sg.s2;
                if (l.kind == Letter::K) {
                    r.push_back(Letter::k(-l.a, -l.b));
                    continue;
                }
                r.push_back(l.kind == Letter::F ? Letter::e(l.i) : Letter::f(l.i));
                if (sign < 0) coeff = -coeff;
            }
            out.emplace_back(r, coeff);
        }
        return normal_order(out);
    }

    /// Root vectors F_beta and E_beta = tau(F_beta) at a PBW position.
    Element f_root(int pos) const {
        AlgTerm t;
        t.f[pos] = 1;
        return {{t, ring().one()}};
    }
    Element e_root(int pos) const {
        AlgTerm t;
        t.e[pos] = 1;
        return {{t, ring().one()}};
    }

    long steps() const { return steps_; }

private:
    void prune(Element& x) const {
        for (auto it = x.begin(); it != x.end();) it = ring().is_zero(it->second) ? x.erase(it) : std::next(it);
    }
    void step() {
        if (++steps_ > budget_) throw InternalError("normal ordering exceeded its step budget");
    }

    // K_1^a K_2^b F_f = (this) F_f K_1^a K_2^b
    S k_past_f(int a, int b, const Mono& f) const {
        Weight w = mono_weight(f);
        Rational x = a * b2::pairing(w, b2::simple_root(1)) + b * b2::pairing(w, b2::simple_root(2));
        return ring().q_pow(-x);
    }

    std::vector<std::pair<Word, S>> f_words(const Mono& f) const {
        std::vector<std::pair<Word, S>> out;
        for (const auto& [w, c] : word_expansion(f)) out.emplace_back(w, ring().spec(c));
        return out;
    }
    // words for E_l = tau(F_l): each word reversed, each coefficient conjugated
    std::vector<std::pair<Word, S>> e_words(const Mono& e) const {
        auto out = f_words(e);
        for (auto& [w, c] : out) {
            std::reverse(w.begin(), w.end());
            c = ring().conj(c);
        }
        return out;
    }

    // E_i times a normal ordered element.
    Element mul_E(int i, const Element& y) {
        Element out;
        const Weight ai = b2::simple_root(i);
        for (const auto& [t, c] : y) {
            step();
            // F_f E_i K E_e: E_i passes K, then joins the E monomial (tau of F_e F_i)
            Rational x = t.a * b2::pairing(ai, b2::simple_root(1)) + t.b * b2::pairing(ai, b2::simple_root(2));
            S kq = ring().q_pow(-x);
            Mono unit{};
            unit[letter_position(i)] = 1;
            for (const auto& [k, v] : u_.mul_mono(t.e, typename UMinus<Ring>::Vec{{unit, ring().one()}})) {
                AlgTerm s = t;
                s.e = k;
                auto& slot = out[s];
                slot = slot + c * kq * ring().conj(v);
            }
            // [E_i, F_f] K E_e
            for (const auto& [ct, v] : u_.comm(i, t.f)) {
                AlgTerm s = t;
                s.f = ct.f;
                s.a += ct.a;
                s.b += ct.b;
                auto& slot = out[s];
                slot = slot + c * v;
            }
        }
        prune(out);
        return out;
    }

    UMinus<Ring>& u_;
    long budget_;
    long steps_ = 0;
};

}  // namespace uqrep::so5
