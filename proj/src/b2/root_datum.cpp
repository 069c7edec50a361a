#include "uqrep/b2/root_datum.hpp"

#include <deque>

namespace uqrep::b2 {

std::string Weight::str() const { return "(" + to_string(E0()) + "," + to_string(s()) + ")"; }

std::string Weight::simple_str() const { return to_string(a1) + "*a1 + " + to_string(a2) + "*a2"; }

Weight lowest_from_E0s(const Rational& E0, const Rational& s) { return Weight::from_E0s(E0, -s); }

Weight root(int i) {
    switch (i) {
        case 1: return {1, 0};
        case 2: return {0, 1};
        case 3: return {1, 1};
        case 4: return {1, 2};
        default: throw DomainError("root index must be 1..4");
    }
}

Weight simple_root(int i) {
    if (i != 1 && i != 2) throw DomainError("simple root index must be 1 or 2");
    return root(i);
}

Rational pairing(const Weight& x, const Weight& y) {
    // (alpha_i, alpha_j) = [[2,-1],[-1,1]]
    return 2 * x.a1 * y.a1 - x.a1 * y.a2 - x.a2 * y.a1 + x.a2 * y.a2;
}

Rational d_root(int i) { return pairing(root(i), root(i)) / 2; }

Rational d_simple(int i) {
    simple_root(i);
    return d_root(i);
}

int cartan(int i, int j) {
    Rational a = 2 * pairing(simple_root(i), simple_root(j)) / pairing(simple_root(j), simple_root(j));
    return static_cast<int>(to_long(a));
}

Weight rho() { return {make_rational(3, 2), 2}; }

Rational h_eigenvalue(const Weight& w, int i) { return pairing(w, simple_root(i)) / d_simple(i); }

bool in_root_lattice(const Weight& w) { return is_integer(w.a1) && is_integer(w.a2); }

bool in_Qplus(const Weight& w) { return in_root_lattice(w) && w.a1 >= 0 && w.a2 >= 0; }

long height(const Weight& w) {
    if (!in_root_lattice(w)) throw DomainError("height of a weight outside the root lattice");
    return to_long(w.a1 + w.a2);
}

long par_count(const Weight& eta) {
    if (!in_Qplus(eta)) return 0;
    const long a = to_long(eta.a1), b = to_long(eta.a2);
    long count = 0;
    // eta = k1 b1 + k3 b3 + k4 b4 + k2 b2; a = k1 + k3 + k4, b = k3 + 2 k4 + k2
    for (long k3 = 0; k3 <= a; ++k3)
        for (long k4 = 0; k3 + k4 <= a; ++k4) {
            long k2 = b - k3 - 2 * k4;
            if (k2 >= 0) ++count;
        }
    return count;
}

bool is_integral(const Weight& w) {
    for (int i = 1; i <= 4; ++i)
        if (!is_integer(pairing(w, root(i)) / d_root(i))) return false;
    return true;
}

Classification classify_weight(const Weight& w, const QParams& p) {
    Classification c;
    const Rational hp = p.half_period();
    const Rational E0 = pairing(w, root(3));
    const Rational E0s = pairing(w, root(4));
    c.basic = E0 >= 0 && E0 < hp && E0s >= 0 && E0s < hp;
    c.integral = is_integral(w);
    c.compact = c.basic && c.integral && w.s() >= 0 && pairing(w, root(1)) >= 0;
    return c;
}

Weight reflect(const Weight& w, const AffineReflection& r, const QParams& p) {
    const Weight b = root(r.root);
    const Rational bb = pairing(b, b);
    const Weight center = -rho() + (make_rational(p.m, 4 * p.n) / d_root(r.root) * r.level) * b;
    const Rational k = 2 * pairing(w - center, b) / bb;
    return w - k * b;
}

bool allowed_level(const Weight& w, const AffineReflection& r, const QParams& p) {
    return in_root_lattice(w - reflect(w, r, p));
}

bool in_NT(int root_index, long k, const QParams& p) {
    if (k < 1) return false;
    return k % p.M_sub(root_index) == 0;
}

bool in_NR(const Weight& w, int root_index, long k, const QParams& p) {
    if (k < 1) return false;
    const Weight b = root(root_index);
    const Rational x = pairing(w + rho() - make_rational(k, 2) * b, b);
    return is_integer(x / p.half_period());
}

namespace {

template <class F>
void for_each_step(const Weight& w, const QParams& p, long budget, F&& f) {
    for (int i = 1; i <= 4; ++i) {
        const long h = height(root(i));
        for (long k = 1; k * h <= budget; ++k)
            if (in_NT(i, k, p) || in_NR(w, i, k, p)) f(w - Rational(k) * root(i), k * h);
    }
}

}  // namespace

std::set<Weight> strongly_linked(const Weight& w, const QParams& p, long depth) {
    std::set<Weight> seen{w};
    std::deque<Weight> todo{w};
    while (!todo.empty()) {
        Weight v = todo.front();
        todo.pop_front();
        for_each_step(v, p, depth - height(w - v), [&](const Weight& u, long) {
            if (seen.insert(u).second) todo.push_back(u);
        });
    }
    return seen;
}

std::set<Weight> single_step_linked(const Weight& w, const QParams& p, long depth) {
    std::set<Weight> out;
    for_each_step(w, p, depth, [&](const Weight& u, long) { out.insert(u); });
    return out;
}

std::array<Weight, 2> one_dim_weights(const QParams& p) {
    const Rational hp = p.half_period();
    return {hp * simple_root(1), hp * simple_root(2)};
}

Weight shift_by_omega(const Weight& lambda, const QParams& p) { return -lambda + p.half_period() * root(3); }

long default_depth(const QParams& p) {
    Rational h = 2 * p.half_period() * 3;
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
    return c.get_si();
}

}  // namespace uqrep::b2
