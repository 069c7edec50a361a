#include "uqrep/so5/pbw.hpp"

#include <algorithm>

namespace uqrep::so5 {

namespace {

RatFunc sp(int k) { return RatFunc::var_pow(k); }

WordVec concat(const WordVec& a, const WordVec& b) {
    WordVec out;
    for (const auto& [u, cu] : a)
        for (const auto& [v, cv] : b) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            RatFunc& slot = out[w];
            slot += cu * cv;
            if (slot.is_zero()) out.erase(w);
        }
    return out;
}

void add_into(WordVec& a, const WordVec& b, const RatFunc& c) {
    for (const auto& [w, x] : b) {
        RatFunc& slot = a[w];
        slot += c * x;
        if (slot.is_zero()) a.erase(w);
    }
}

std::vector<Word> words_of_weight(long a1, long a2) {
    std::vector<Word> out;
    if (a1 < 0 || a2 < 0) return out;
    Word w;
    for (long i = 0; i < a1; ++i) w.push_back(1);
    for (long i = 0; i < a2; ++i) w.push_back(2);
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

// The quantum Serre elements, with the alternating signs.
const std::array<WordVec, 2>& serre_elements() {
    static const std::array<WordVec, 2> s = [] {
        RatFunc two = sp(2) + sp(-2);            // [2]_q
        RatFunc three = sp(2) + RatFunc(1) + sp(-2);  // [3]_{q^{1/2}}
        WordVec s12{{{1, 1, 2}, RatFunc(1)}, {{1, 2, 1}, -two}, {{2, 1, 1}, RatFunc(1)}};
        WordVec s21{{{2, 2, 2, 1}, RatFunc(1)},
                    {{2, 2, 1, 2}, -three},
                    {{2, 1, 2, 2}, three},
                    {{1, 2, 2, 2}, RatFunc(-1)}};
        return std::array<WordVec, 2>{s12, s21};
    }();
    return s;
}

// Spanning set of the Serre ideal in weight (a1, a2).
std::vector<WordVec> ideal_span(long a1, long a2) {
    std::vector<WordVec> out;
    const std::array<std::pair<long, long>, 2> wt{{{2, 1}, {1, 3}}};
    for (int t = 0; t < 2; ++t) {
        long r1 = a1 - wt[t].first, r2 = a2 - wt[t].second;
        if (r1 < 0 || r2 < 0) continue;
        for (long b1 = 0; b1 <= r1; ++b1)
            for (long b2 = 0; b2 <= r2; ++b2)
                for (const auto& u : words_of_weight(b1, b2))
                    for (const auto& v : words_of_weight(r1 - b1, r2 - b2))
                        out.push_back(concat(concat(WordVec{{u, RatFunc(1)}}, serre_elements()[t]),
                                             WordVec{{v, RatFunc(1)}}));
    }
    return out;
}

long to_l(const Rational& r) { return to_long(r); }

struct Reduced {
    Matrix<RatFunc> rref;
    std::vector<std::size_t> pivots;
};

// Columns: ideal span, then the extra vectors; rows: words of the weight.
Reduced reduce_columns(long a1, long a2, const std::vector<WordVec>& extra, std::size_t& n_ideal) {
    auto words = words_of_weight(a1, a2);
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = i;
    const auto ideal = ideal_span(a1, a2);
    n_ideal = ideal.size();
    Matrix<RatFunc> a(words.size(), ideal.size() + extra.size());
    std::size_t col = 0;
    for (const auto* group : {&ideal, &extra})
        for (const auto& v : *group) {
            for (const auto& [w, c] : v) a(index.at(w), col) = c;
            ++col;
        }
    auto piv = row_reduce(a);
    return {a, piv};
}

RewriteSystem derive() {
    RewriteSystem rs;
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < x; ++y) {
            Weight eta = position_weight(x) + position_weight(y);
            long a1 = to_l(eta.a1), a2 = to_l(eta.a2);
            auto basis = pbw_basis(eta);
            std::vector<WordVec> extra;
            for (const auto& k : basis) extra.push_back(word_expansion(k));
            extra.push_back(concat(root_word(x), root_word(y)));
            std::size_t n_ideal = 0;
            auto red = reduce_columns(a1, a2, extra, n_ideal);
            std::size_t ideal_rank = 0;
            for (auto p : red.pivots)
                if (p < n_ideal) ++ideal_rank;
            if (words_of_weight(a1, a2).size() - ideal_rank != basis.size())
                throw InternalError("PBW count mismatch modulo Serre ideal at " + eta.simple_str());
            // every ordered monomial must be a pivot, the product must not be
            std::map<std::size_t, std::size_t> row_of;
            for (std::size_t r = 0; r < red.pivots.size(); ++r) row_of[red.pivots[r]] = r;
            const std::size_t target = n_ideal + basis.size();
            if (row_of.count(target)) throw InternalError("product outside the span of ordered monomials");
            Rule rule;
            for (std::size_t j = 0; j < basis.size(); ++j) {
                auto it = row_of.find(n_ideal + j);
                if (it == row_of.end()) throw InternalError("ordered monomials dependent modulo Serre ideal");
                const RatFunc& c = red.rref(it->second, target);
                if (!c.is_zero()) rule.emplace_back(basis[j], c);
            }
            rs.rules[{x, y}] = rule;
        }
    return rs;
}

}  // namespace

Weight position_weight(int pos) { return b2::root(kPosRoot[pos]); }

Weight mono_weight(const Mono& k) {
    Weight w;
    for (int p = 0; p < 4; ++p) w = w + Rational(k[p]) * position_weight(p);
    return w;
}

int leading_position(const Mono& k) {
    for (int p = 0; p < 4; ++p)
        if (k[p] != 0) return p;
    return 4;
}

std::string mono_str(const Mono& k) {
    return "(" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2]) + "," +
           std::to_string(k[3]) + ")";
}

std::vector<Mono> pbw_basis(const Weight& eta) {
    std::vector<Mono> out;
    if (!b2::in_Qplus(eta)) return out;
    long a1 = to_l(eta.a1), a2 = to_l(eta.a2);
    // beta_1 = (1,0), beta_3 = (1,1), beta_4 = (1,2), beta_2 = (0,1)
    for (long k3 = 0; k3 <= a1; ++k3)
        for (long k4 = 0; k3 + k4 <= a1; ++k4) {
            long k1 = a1 - k3 - k4, k2 = a2 - k3 - 2 * k4;
            if (k2 < 0) continue;
            out.push_back({static_cast<int>(k1), static_cast<int>(k3), static_cast<int>(k4), static_cast<int>(k2)});
        }
    std::sort(out.begin(), out.end());
    return out;
}

const WordVec& root_word(int pos) {
    static const std::array<WordVec, 4> w = [] {
        WordVec f1{{{1}, RatFunc(1)}}, f2{{{2}, RatFunc(1)}};
        WordVec f3;
        add_into(f3, concat(f1, f2), sp(2));
        add_into(f3, concat(f2, f1), RatFunc(-1));
        WordVec f4;
        add_into(f4, concat(f3, f2), RatFunc(1));
        add_into(f4, concat(f2, f3), RatFunc(-1));
        return std::array<WordVec, 4>{f1, f3, f4, f2};
    }();
    return w[pos];
}

WordVec word_expansion(const Mono& k) {
    WordVec out{{Word{}, RatFunc(1)}};
    for (int p = 0; p < 4; ++p)
        for (int e = 0; e < k[p]; ++e) out = concat(out, root_word(p));
    return out;
}

const RewriteSystem& rewrite_system() {
    static const RewriteSystem rs = derive();
    return rs;
}

std::size_t serre_quotient_dim(const Weight& eta) {
    std::size_t n_ideal = 0;
    long a1 = to_l(eta.a1), a2 = to_l(eta.a2);
    auto red = reduce_columns(a1, a2, {}, n_ideal);
    return words_of_weight(a1, a2).size() - red.pivots.size();
}

bool equal_mod_serre(const WordVec& a, const WordVec& b) {
    WordVec d = a;
    add_into(d, b, RatFunc(-1));
    if (d.empty()) return true;
    long a1 = 0, a2 = 0;
    for (int l : d.begin()->first) (l == 1 ? a1 : a2)++;
    for (const auto& [w, c] : d) {
        long c1 = std::count(w.begin(), w.end(), 1);
        if (c1 != a1 || static_cast<long>(w.size()) - c1 != a2) throw DomainError("inhomogeneous element");
    }
    std::size_t n_ideal = 0;
    auto red = reduce_columns(a1, a2, {d}, n_ideal);
    return std::find(red.pivots.begin(), red.pivots.end(), n_ideal) == red.pivots.end();
}

}  // namespace uqrep::so5
