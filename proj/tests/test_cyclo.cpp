#include <doctest.h>

#include "uqrep/core/ratfunc.hpp"
#include "uqrep/cyclo/qnumbers.hpp"
#include "uqrep/cyclo/signature.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include <random>

using namespace uqrep;
using namespace uqrep::cyclo;

namespace {

CycloNumber random_element(std::mt19937& rng, int order, int range = 5) {
    std::uniform_int_distribution<int> d(-range, range);
    std::vector<Rational> c(order);
    for (auto& x : c) x = Rational(d(rng), 1 + (d(rng) + range) % 3);
    return CycloNumber::from_coefficients(order, c);
}

// Oracle: value of sum_k c_k cos(2 pi k / N) with 200 decimal digits.
using Dec200 = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<200>>;

Dec200 real_part_200(const CycloNumber& x) {
    Dec200 acc = 0;
    const Dec200 two_pi = 2 * boost::math::constants::pi<Dec200>();
    for (int k = 0; k < x.field().phi(); ++k) {
        Rational c = x.coeff(k);
        if (c == 0) continue;
        Dec200 num(c.get_num().get_str()), den(c.get_den().get_str());
        acc += num / den * cos(two_pi * k / x.order());
    }
    return acc;
}

// Oracle: inertia from the characteristic polynomial (Faddeev-LeVerrier)
// and Descartes' rule, exact for real-rooted polynomials.
Signature inertia_by_charpoly(const Matrix<CycloNumber>& a) {
    const std::size_t n = a.rows();
    const int order = a(0, 0).order();
    std::vector<CycloNumber> c(n + 1);  // p(x) = sum c_k x^k, c_n = 1
    c[n] = CycloNumber::one(order);
    Matrix<CycloNumber> mk(n, n, CycloNumber::zero(order));
    for (std::size_t k = 1; k <= n; ++k) {
        Matrix<CycloNumber> t = mk;
        for (std::size_t i = 0; i < n; ++i) t(i, i) = t(i, i) + c[n - k + 1];
        mk = a * t;
        CycloNumber tr = CycloNumber::zero(order);
        for (std::size_t i = 0; i < n; ++i) tr += mk(i, i);
        c[n - k] = tr * Rational(-1, static_cast<long>(k));
    }
    std::size_t z = 0;
    while (z <= n && c[z].is_zero()) ++z;
    auto changes = [&](bool flip) {
        int prev = 0, ch = 0;
        for (std::size_t k = z; k <= n; ++k) {
            int s = static_cast<int>(sign_of_real(c[k]));
            if (flip && (k % 2)) s = -s;
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++ch;
            prev = s;
        }
        return static_cast<std::size_t>(ch);
    };
    return Signature{changes(false), z, changes(true)};
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
    CHECK(cyclotomic_polynomial(8) == std::vector<long>{1, 0, 0, 0, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
    CHECK(cyclotomic_polynomial(9) == std::vector<long>{1, 0, 0, 1, 0, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
}

TEST_CASE("roots of unity relations") {
    for (int n : {1, 2, 3, 5, 8, 12, 16, 24, 30}) {
        CHECK(CycloNumber::zeta_power(n, n) == CycloNumber::one(n));
        if (n > 1) {
            CycloNumber s = CycloNumber::zero(n);
            for (int k = 0; k < n; ++k) s += CycloNumber::zeta_power(n, k);
            CHECK(s.is_zero());
        }
        CHECK(CycloNumber::zeta_power(n, 3) * CycloNumber::zeta_power(n, -3) == CycloNumber::one(n));
    }
}

TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(7);
    for (int order : {5, 8, 12, 16, 24}) {
        for (int t = 0; t < 20; ++t) {
            auto a = random_element(rng, order), b = random_element(rng, order), c = random_element(rng, order);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a * b).conj() == a.conj() * b.conj());
            CHECK(a.conj().conj() == a);
            if (!a.is_zero()) CHECK(a * a.inverse() == CycloNumber::one(order));
            CHECK((a * b).lifted(2 * order) == a.lifted(2 * order) * b.lifted(2 * order));
            CHECK((a + b).lifted(3 * order) == a.lifted(3 * order) + b.lifted(3 * order));
        }
    }
}

TEST_CASE("mixed orders align to the lcm") {
    auto a = CycloNumber::zeta_power(4, 1);   // i
    auto b = CycloNumber::zeta_power(6, 1);   // exp(i pi/3)
    auto p = a * b;                           // exp(5 i pi/6)
    CHECK(p.order() == 12);
    CHECK(p == CycloNumber::zeta_power(12, 5));
    CHECK(CycloNumber() + a == a);
}

TEST_CASE("q-integers") {
    auto p8 = QParams::make(8, 1);
    CHECK(qint(1, 1, p8) == CycloNumber::one(16));
    CHECK(qint(4, 1, p8).is_zero());
    CHECK(qint(2, 1, p8) == CycloNumber::zeta_power(8, 1) + CycloNumber::zeta_power(8, -1));
    CHECK(sign_of_real(qint(5, 1, p8)) == Sign::negative);
    CHECK(qint(5, 1, p8) == CycloNumber::rational(16, -1));
    CHECK(qfactorial(0, 1, p8) == CycloNumber::one(16));
    CHECK(qfactorial(4, 1, p8).is_zero());
    CHECK(qbinom(2, 1, 1, p8) == qint(2, 1, p8));
    CHECK_THROWS_AS(qbinom(5, 4, 1, p8), DomainError);
    CHECK_THROWS_AS(qint(3, 4, p8), DomainError);  // q^4 = q^{-4}

    for (int m : {4, 5, 6, 8, 12}) {
        auto p = QParams::make(m, 1);
        for (long k = -3 * m; k <= 3 * m; ++k) {
            auto x = qint(k, 1, p);
            CHECK(x.is_real());
            CHECK(qint(-k, 1, p) == -x);
            CHECK(qint(k + m, 1, p) == x);
            if (m % 2 == 0) CHECK(qint(k + m / 2, 1, p) == -x);
        }
        // half-integer d: [k]_{q^{1/2}}
        for (long k = -m; k <= m; ++k) {
            auto x = qint(k, make_rational(1, 2), p);
            CHECK(x.is_real());
            CHECK(qint(k + 2 * m, make_rational(1, 2), p) == x);
        }
    }
    // qint agrees with the quotient definition
    auto p12 = QParams::make(12, 5);
    for (long k = 0; k < 30; ++k) {
        int N = p12.base_order();
        auto q = p12.qpow(1, N);
        auto lhs = qint(k, 1, p12, N) * (q - q.inverse());
        auto rhs = p12.qpow(k, N) - p12.qpow(-k, N);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("sign_of_real against a 200-digit oracle") {
    CHECK(sign_of_real(CycloNumber::zero(8)) == Sign::zero);
    CHECK(sign_of_real(CycloNumber::zeta_power(8, 1) + CycloNumber::zeta_power(8, -1)) == Sign::positive);
    CHECK_THROWS_AS(sign_of_real(CycloNumber::zeta_power(8, 1)), DomainError);

    std::mt19937 rng(2024);
    int checked = 0;
    for (int t = 0; t < 1000; ++t) {
        int order = std::vector<int>{8, 12, 16, 20, 24, 32}[t % 6];
        auto a = random_element(rng, order, 9);
        auto x = a + a.conj();
        if (t % 5 == 0) x = x * x - CycloNumber::rational(order, t % 7);  // values near cancellation
        Dec200 v = real_part_200(x);
        Sign s = sign_of_real(x);
        if (x.is_zero()) {
            CHECK(s == Sign::zero);
            continue;
        }
        REQUIRE(abs(v) > Dec200("1e-150"));
        CHECK(static_cast<int>(s) == (v > 0 ? 1 : -1));
        ++checked;
    }
    CHECK(checked > 900);
}

TEST_CASE("sign_of_real resolves tiny differences") {
    int N = 64;
    auto c = CycloNumber::zeta_power(N, 1) + CycloNumber::zeta_power(N, -1);  // 2cos(pi/32)
    // 2cos(pi/32) = 1.990369453344...
    CHECK(sign_of_real(c - CycloNumber::rational(N, Rational(1990369453, 1000000000))) == Sign::positive);
    CHECK(sign_of_real(c - CycloNumber::rational(N, Rational(1990369454, 1000000000))) == Sign::negative);
}

TEST_CASE("hermitian signature") {
    auto p8 = QParams::make(8, 1);
    int N = 16;
    auto one = CycloNumber::one(N);
    CHECK(hermitian_signature(Matrix<CycloNumber>::identity(3, one)) == Signature{3, 0, 0});
    Matrix<CycloNumber> d(3, 3, CycloNumber::zero(N));
    d(0, 0) = qint(1, 1, p8);
    d(1, 1) = -qint(2, 1, p8);
    CHECK(hermitian_signature(d) == Signature{1, 1, 1});

    Matrix<CycloNumber> h(2, 2, CycloNumber::zero(N));
    h(0, 1) = CycloNumber::zeta_power(N, 3);
    h(1, 0) = CycloNumber::zeta_power(N, -3);
    CHECK(hermitian_signature(h) == Signature{1, 0, 1});

    Matrix<CycloNumber> bad(2, 2, CycloNumber::zero(N));
    bad(0, 1) = one;
    CHECK_THROWS_AS(hermitian_signature(bad), DomainError);
}

TEST_CASE("signature is a congruence invariant and matches the charpoly oracle") {
    std::mt19937 rng(99);
    for (int t = 0; t < 40; ++t) {
        int order = (t % 2) ? 12 : 16;
        std::size_t n = 2 + t % 4;
        Matrix<CycloNumber> a(n, n, CycloNumber::zero(order));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = random_element(rng, order, 3);
        Matrix<CycloNumber> g = a + a.conj_transpose();
        if (t % 3 == 0) {  // force degeneracy: rank-deficient product
            Matrix<CycloNumber> b(n, 1, CycloNumber::zero(order));
            for (std::size_t i = 0; i < n; ++i) b(i, 0) = random_element(rng, order, 3);
            g = b * b.conj_transpose() - (b * b.conj_transpose()).scaled(CycloNumber::rational(order, 2));
        }
        Signature s = hermitian_signature(g);
        CHECK(s.n_plus + s.n_zero + s.n_minus == n);
        CHECK(s == inertia_by_charpoly(g));

        // random exact invertible P: unit upper triangular times a permutation-free diagonal
        Matrix<CycloNumber> p = Matrix<CycloNumber>::identity(n, CycloNumber::one(order));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) p(i, j) = random_element(rng, order, 2);
        for (std::size_t i = 0; i < n; ++i) p(i, i) = CycloNumber::zeta_power(order, static_cast<long>(rng() % order));
        Matrix<CycloNumber> pl = p.transpose();
        Matrix<CycloNumber> g2 = (pl * p).conj_transpose() * g * (pl * p);
        CHECK(hermitian_signature(g2) == s);
    }
}

TEST_CASE("rational functions") {
    RatFunc s = RatFunc::var_pow(1);
    RatFunc q = s * s;
    RatFunc qi = q.inverse();
    RatFunc two = (q * q - qi * qi) / (q - qi);  // [2]_q = q + 1/q
    CHECK(two == q + qi);
    CHECK(two.bar() == two);
    CHECK(s.bar() == RatFunc::var_pow(-1));
    CHECK((s + 1).at(Rational(1, 2)) == Rational(3, 2));
    Poly phi8({1, 0, 0, 0, 1});
    RatFunc f = RatFunc(phi8 * phi8 * Poly({0, 1}), Poly({1, 1}));
    CHECK(f.valuation(phi8) == 2);
    CHECK(f.inverse().valuation(phi8) == -2);
    CHECK_THROWS_AS(RatFunc(1) / RatFunc(0), DomainError);
}

TEST_CASE("exact linear algebra") {
    Matrix<Rational> a(3, 3);
    a(0, 0) = 1; a(0, 1) = 2; a(0, 2) = 3;
    a(1, 0) = 2; a(1, 1) = 4; a(1, 2) = 6;
    a(2, 0) = 1; a(2, 1) = 0; a(2, 2) = 1;
    CHECK(rank(a) == 2);
    auto k = kernel(a, Rational(1));
    REQUIRE(k.cols() == 1);
    CHECK((a * k).is_zero());
    CHECK(determinant(a, Rational(1)) == 0);
    a(1, 1) = 5;
    CHECK(determinant(a, Rational(1)) == -2);  // 1*(5-0) - 2*(2-6) + 3*(0-5)
    auto inv = inverse(a, Rational(1));
    CHECK(a * inv == Matrix<Rational>::identity(3, 1));
}
