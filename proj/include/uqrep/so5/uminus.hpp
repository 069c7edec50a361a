#pragma once

// Straightening in U^- and the commutators of the raising generators with
// PBW monomials, over any scalar ring from ring.hpp.
//
// comm(i, k) stores E_i F_k - F_k E_i as a combination of F_{k'} K_1^a K_2^b
// with K_1 = q^{H_1}, K_2 = q^{H_2/2}, so [H_i] = (K_i - K_i^{-1})/(q^{d_i} - q^{-d_i}).
// The data do not depend on a highest weight; a Verma module only evaluates
// K_1^a K_2^b at its weight.

#include "uqrep/so5/pbw.hpp"
#include "uqrep/so5/ring.hpp"

#include <map>
#include <tuple>

namespace uqrep::so5 {

struct CartanTerm {
    Mono f{};
    int a = 0, b = 0;  // exponents of K_1, K_2
    friend bool operator<(const CartanTerm& x, const CartanTerm& y) {
        return std::tie(x.f, x.a, x.b) < std::tie(y.f, y.a, y.b);
    }
};

template <class Ring>
class UMinus {
public:
    using S = typename Ring::Scalar;
    using Vec = std::map<Mono, S>;
    using CVec = std::map<CartanTerm, S>;

    explicit UMinus(Ring ring) : ring_(std::move(ring)) {
        for (const auto& [key, rule] : rewrite_system().rules) {
            std::vector<std::pair<Mono, S>> r;
            for (const auto& [mono, c] : rule) r.emplace_back(mono, ring_.spec(c));
            rules_[key] = r;
        }
        for (int p = 0; p < 4; ++p)
            for (const auto& [w, c] : root_word(p)) words_[p].emplace_back(w, ring_.spec(c));
    }

    const Ring& ring() const { return ring_; }
    /// Root vector at a position as (word, coefficient) pairs in the ring.
    const std::vector<std::pair<Word, S>>& word_of(int pos) const { return words_[pos]; }

    /// F_pos F_k in normal order.
    const Vec& mul_left(int pos, const Mono& k) {
        auto key = std::make_pair(pos, k);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        Vec out;
        int lead = leading_position(k);
        if (pos <= lead) {
            Mono k2 = k;
            ++k2[pos];
            out.emplace(k2, ring_.one());
        } else {
            Mono rest = k;
            --rest[lead];
            for (const auto& [mono, c] : rules_.at({pos, lead})) {
                Vec v = mul_mono(mono, Vec{{rest, ring_.one()}});
                add_scaled(out, v, c);
            }
        }
        return memo_.emplace(key, std::move(out)).first->second;
    }

    Vec mul_left(int pos, const Vec& v) {
        Vec out;
        for (const auto& [k, c] : v) add_scaled(out, mul_left(pos, k), c);
        return out;
    }

    /// F_a v for a PBW monomial a.
    Vec mul_mono(const Mono& a, Vec v) {
        for (int p = 3; p >= 0; --p)
            for (int e = 0; e < a[p]; ++e) v = mul_left(p, v);
        return v;
    }

    /// F_{w_1} ... F_{w_l} v for a word of simple letters.
    Vec mul_word(const Word& w, Vec v) {
        for (auto it = w.rbegin(); it != w.rend(); ++it) v = mul_left(letter_position(*it), v);
        return v;
    }

    /// E_i F_k - F_k E_i.
    const CVec& comm(int i, const Mono& k) {
        auto key = std::make_pair(i, k);
        auto it = comm_memo_.find(key);
        if (it != comm_memo_.end()) return it->second;
        CVec out;
        int lead = leading_position(k);
        if (lead < 4) {
            Mono rest = k;
            --rest[lead];
            for (const auto& [w, c] : words_[lead]) add_scaled(out, comm_word(i, w, 0, rest), c);
        }
        return comm_memo_.emplace(key, std::move(out)).first->second;
    }

    /// Cartan part of E_i acting on a U^- element.
    CVec comm(int i, const Vec& v) {
        CVec out;
        for (const auto& [k, c] : v) add_scaled(out, comm(i, k), c);
        return out;
    }

    /// Value of K_1^a K_2^b on the weight lambda; the rho-part feeds deformed rings.
    S cartan_value(int a, int b, const Weight& lambda) const {
        Weight r = b2::rho();
        Rational x = a * b2::pairing(lambda, b2::simple_root(1)) + b * b2::pairing(lambda, b2::simple_root(2));
        Rational xr = a * b2::pairing(r, b2::simple_root(1)) + b * b2::pairing(r, b2::simple_root(2));
        return ring_.q_weight(x, xr);
    }

    /// E_i F_k w_lambda in the Verma module M(lambda).
    Vec verma_E(int i, const Mono& k, const Weight& lambda) {
        Vec out;
        for (const auto& [t, c] : comm(i, k)) {
            S v = c * cartan_value(t.a, t.b, lambda);
            auto& slot = out[t.f];
            slot = slot + v;
        }
        prune(out);
        return out;
    }

private:
    template <class Map>
    void add_scaled(Map& out, const Map& v, const S& c) {
        for (const auto& [k, x] : v) {
            auto it = out.find(k);
            if (it == out.end()) {
                S y = x * c;
                if (!ring_.is_zero(y)) out.emplace(k, std::move(y));
            } else {
                it->second = it->second + x * c;
                if (ring_.is_zero(it->second)) out.erase(it);
            }
        }
    }
    template <class Map>
    void prune(Map& m) {
        for (auto it = m.begin(); it != m.end();)
            it = ring_.is_zero(it->second) ? m.erase(it) : std::next(it);
    }

    // Cartan part of E_i F_{w[idx]} ... F_{w[l-1]} F_rest.
    CVec comm_word(int i, const Word& w, std::size_t idx, const Mono& rest) {
        if (idx == w.size()) return comm(i, rest);
        CVec inner = comm_word(i, w, idx + 1, rest);
        CVec out;
        int pos = letter_position(w[idx]);
        for (const auto& [t, c] : inner)
            for (const auto& [k, x] : mul_left(pos, t.f)) {
                CVec one{{CartanTerm{k, t.a, t.b}, x}};
                add_scaled(out, one, c);
            }
        if (w[idx] == i) {
            Word tail(w.begin() + static_cast<long>(idx) + 1, w.end());
            Vec z = mul_word(tail, Vec{{rest, ring_.one()}});
            // [H_i] X = X (q^{-x} K_i - q^{x} K_i^{-1}) / (q^{d_i} - q^{-d_i}), x = (alpha_i, wt X)
            Rational d = b2::d_simple(i);
            S denom_inv = S(ring_.one()) / (ring_.q_pow(d) - ring_.q_pow(-d));
            for (const auto& [k, c] : z) {
                Rational x = b2::pairing(b2::simple_root(i), mono_weight(k));
                CartanTerm plus{k, i == 1 ? 1 : 0, i == 2 ? 1 : 0};
                CartanTerm minus{k, i == 1 ? -1 : 0, i == 2 ? -1 : 0};
                add_scaled(out, CVec{{plus, ring_.q_pow(-x) * denom_inv}}, c);
                add_scaled(out, CVec{{minus, -(ring_.q_pow(x) * denom_inv)}}, c);
            }
        }
        return out;
    }

    Ring ring_;
    std::map<std::pair<int, int>, std::vector<std::pair<Mono, S>>> rules_;
    std::array<std::vector<std::pair<Word, S>>, 4> words_;
    std::map<std::pair<int, Mono>, Vec> memo_;
    std::map<std::pair<int, Mono>, CVec> comm_memo_;
};

}  // namespace uqrep::so5
