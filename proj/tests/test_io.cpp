#include "uqrep/io/json.hpp"

#include <doctest.h>

using namespace uqrep;
using cyclo::CycloNumber;
using cyclo::QParams;

TEST_CASE("json: rationals and cyclotomic numbers round-trip") {
    for (const char* t : {"0", "-7/3", "5", "1/2"}) CHECK(io::rational_from_json(io::to_json(parse_rational(t))) == parse_rational(t));
    CHECK(io::rational_from_json(io::json(4)) == Rational(4));
    auto p = QParams::make(8, 1);
    int o = p.base_order();
    CycloNumber x = p.qpow(Rational(3), o) + p.qpow(Rational(-1), o) * CycloNumber::rational(o, Rational(2, 7));
    CHECK(io::cyclo_from_json(io::to_json(x)) == x);
    auto v = sl2::build_irrep2(3, 1, p);
    CHECK(io::matrix_from_json(io::matrix_to_json(v.rep.Xp)) == v.rep.Xp);
}

TEST_CASE("json: weights in both pictures") {
    b2::Weight w = b2::Weight::from_E0s(Rational(5, 2), Rational(1, 2));
    CHECK(io::weight_from_json(io::weight_to_json(w)) == w);
    b2::Weight mu = b2::lowest_from_E0s(Rational(2), Rational(1));
    auto j = io::lowest_to_json(mu);
    CHECK(j["E0"] == "2");
    CHECK(j["s"] == "1");
    CHECK(io::lowest_from_json(j) == mu);
    CHECK(io::eta_from_json(io::eta_to_json(b2::root(4))) == b2::root(4));
}

TEST_CASE("json: reports round-trip") {
    auto p = QParams::make(12, 1);
    auto phys = so5::physical_rep(Rational(2), Rational(1), p, 4);
    auto j = io::to_json(phys);
    CHECK(io::to_json(io::report_from_json(j)) == j);
    CHECK(j["gauge_subspace"]["weight"] == io::json{{"E0", "3"}, {"s", "0"}});
    auto comp = so5::unitarity_so5(b2::Weight::from_E0s(Rational(2), Rational(1)), p);
    auto jc = io::to_json(comp);
    CHECK(io::to_json(io::report_from_json(jc)) == jc);
    CHECK(jc["unitarity"]["verdict"] == true);
    auto env = io::envelope("so5 unitarity", {{"m", 12}}, jc);
    CHECK(env["schema"] == io::kSchema);
    CHECK(io::json::parse(env.dump()) == env);
}

TEST_CASE("json: decomposition labels carry their type") {
    auto p = QParams::make(8, 1);
    auto a = sl2::build_irrep2(3, 1, p);
    auto j = io::to_json(sl2::tensor_decompose2(a, a));
    CHECK(j["v_parts"][0]["type"] == "V");
    CHECK(j["i_parts"][0]["type"] == "I");
    CHECK(j["i_parts"][0]["p"] == 2);
}
