#include <doctest.h>

#include "uqrep/b2/root_datum.hpp"

using namespace uqrep;
using namespace uqrep::b2;

namespace {

Rational R(long a, long b = 1) { return make_rational(a, b); }

}  // namespace

TEST_CASE("root datum invariants") {
    CHECK(cartan(1, 1) == 2);
    CHECK(cartan(1, 2) == -2);
    CHECK(cartan(2, 1) == -1);
    CHECK(cartan(2, 2) == 2);
    CHECK(d_simple(1) == 1);
    CHECK(d_simple(2) == R(1, 2));
    CHECK(pairing(root(3), root(3)) == 1);
    CHECK(pairing(root(4), root(4)) == 2);
    CHECK(pairing(root(2), root(2)) == 1);
    CHECK(pairing(root(1), root(1)) == 2);
    CHECK(pairing(root(2), root(3)) == 0);
    // rho is half the sum of positive roots
    Weight sum;
    for (int i = 1; i <= 4; ++i) sum = sum + root(i);
    CHECK(R(1, 2) * sum == rho());
    CHECK(pairing(rho(), simple_root(1)) == 1);
    CHECK(pairing(rho(), simple_root(2)) == R(1, 2));
}

TEST_CASE("weight coordinates") {
    Weight w = Weight::from_E0s(R(5, 2), R(-1, 2));
    CHECK(w.E0() == R(5, 2));
    CHECK(w.s() == R(-1, 2));
    CHECK(Weight::from_E0s(w.E0(), w.s()) == w);
    // (lambda, beta_i) in (E0, s) coordinates
    Rational E0 = 3, s = R(1, 2);
    Weight l = Weight::from_E0s(E0, s);
    CHECK(pairing(l, root(1)) == E0 - s);
    CHECK(pairing(l, root(3)) == E0);
    CHECK(pairing(l, root(4)) == E0 + s);
    CHECK(pairing(l, root(2)) == s);
    CHECK(h_eigenvalue(l, 1) == E0 - s);
    CHECK(h_eigenvalue(l, 2) == 2 * s);
}

TEST_CASE("partition counts") {
    CHECK(par_count({0, 0}) == 1);
    CHECK(par_count({1, 1}) == 2);
    CHECK(par_count({1, 2}) == 3);
    CHECK(par_count({-1, 2}) == 0);
    CHECK(par_count({R(1, 2), 2}) == 0);
    // generating identity: convolution of the four geometric series on a box
    const int B = 10;
    std::vector<std::vector<long>> g(B + 1, std::vector<long>(B + 1, 0));
    g[0][0] = 1;
    for (int i : {1, 3, 4, 2}) {
        Weight b = root(i);
        int da = static_cast<int>(to_long(b.a1)), db = static_cast<int>(to_long(b.a2));
        // multiply by 1/(1 - x^b): g[a][c] += g[a-da][c-db] in increasing order
        for (int a = 0; a <= B; ++a)
            for (int c = 0; c <= B; ++c)
                if (a >= da && c >= db) g[a][c] += g[a - da][c - db];
    }
    for (int a = 0; a <= B; ++a)
        for (int c = 0; c <= B; ++c) CHECK(par_count({a, c}) == g[a][c]);
}

TEST_CASE("affine reflections") {
    auto p8 = QParams::make(8, 1);
    CHECK(reflect({0, 0}, {1, 0}, p8) == -root(1));
    CHECK(reflect({0, 0}, {2, 0}, p8) == -root(2));
    for (int i = 1; i <= 4; ++i)
        for (long l = -3; l <= 3; ++l) {
            Weight w = Weight::from_E0s(R(3, 2), R(1, 2));
            AffineReflection r{i, l};
            CHECK(reflect(reflect(w, r, p8), r, p8) == w);
            // image differs from w by a multiple of beta
            Weight d = w - reflect(w, r, p8);
            Weight b = root(i);
            CHECK(d.a1 * b.a2 == d.a2 * b.a1);
        }
}

TEST_CASE("linkage sets") {
    auto p8 = QParams::make(8, 1);
    auto s = strongly_linked({0, 0}, p8, 2);
    CHECK(s.count({0, 0}));
    CHECK(s.count(-root(1)));
    CHECK(s.count(-root(2)));
    auto s4 = strongly_linked({0, 0}, p8, 8);
    CHECK(s4.count(Weight{-4, 0}));
    // monotone in depth and closed under single steps within depth
    for (long d = 1; d < 8; ++d) {
        auto a = strongly_linked({1, 1}, p8, d), b = strongly_linked({1, 1}, p8, d + 1);
        for (const auto& w : a) CHECK(b.count(w));
        for (const auto& w : a)
            for (const auto& u : single_step_linked(w, p8, d - height(Weight{1, 1} - w))) CHECK(a.count(u));
    }
}

TEST_CASE("classification") {
    auto p8 = QParams::make(8, 1);
    auto c0 = classify_weight({0, 0}, p8);
    CHECK(c0.basic);
    CHECK(c0.compact);
    auto c1 = classify_weight(Weight::from_E0s(2, 1), p8);
    CHECK(c1.basic);
    CHECK(c1.compact);
    auto c2 = classify_weight(Weight::from_E0s(1, 2), p8);
    CHECK(c2.basic);
    CHECK_FALSE(c2.compact);
    auto c3 = classify_weight(Weight::from_E0s(4, 0), p8);
    CHECK_FALSE(c3.basic);
    // compact implies basic on a grid
    for (long a = -4; a <= 10; ++a)
        for (long b = -4; b <= 10; ++b) {
            auto c = classify_weight(Weight::from_E0s(R(a, 2), R(b, 2)), p8);
            if (c.compact) CHECK(c.basic);
        }
    CHECK(is_integral(Weight::from_E0s(R(1, 2), R(1, 2))));
    CHECK_FALSE(is_integral(Weight::from_E0s(R(1, 2), 0)));
}

TEST_CASE("one-dimensional weights and the shift") {
    auto p8 = QParams::make(8, 1);
    auto g = one_dim_weights(p8);
    CHECK(g[0] == Weight{4, 0});
    CHECK(g[1] == Weight{0, 4});
    Weight mu = shift_by_omega({0, 0}, p8);
    CHECK(mu.E0() == 4);
    CHECK(mu.s() == 0);
    Weight mu2 = shift_by_omega(Weight::from_E0s(2, 1), p8);
    CHECK(mu2 == lowest_from_E0s(2, 1));
    CHECK(default_depth(p8) == 24);
}

TEST_CASE("allowed levels for the singleton weights") {
    for (int m : {8, 12}) {
        auto p = QParams::make(m, 1);
        Weight rac = Weight::from_E0s(R(m - 1, 2), 0);
        Weight di = Weight::from_E0s(R(m, 2) - 1, R(1, 2));
        // the predicted extra highest weights lambda - 2 beta_3 and lambda - beta_3
        CHECK(strongly_linked(rac, p, 4).count(rac - R(2) * root(3)));
        CHECK(strongly_linked(di, p, 2).count(di - root(3)));
        for (int i = 1; i <= 4; ++i)
            for (long l = -2; l <= 2; ++l) {
                AffineReflection r{i, l};
                bool ok = allowed_level(rac, r, p);
                Weight img = reflect(rac, r, p);
                CHECK(ok == in_root_lattice(rac - img));
            }
    }
}
