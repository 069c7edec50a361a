#include "uqrep/io/json.hpp"

namespace uqrep::io {

using b2::Weight;
using cyclo::CycloNumber;

json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    return parse_rational(j.get<std::string>());
}

json to_json(const CycloNumber& x) {
    json c = json::array();
    for (const auto& v : x.coefficients()) c.push_back(to_json(v));
    return {{"order", x.order()}, {"coeffs", c}};
}

CycloNumber cyclo_from_json(const json& j) {
    std::vector<Rational> c;
    for (const auto& v : j.at("coeffs")) c.push_back(rational_from_json(v));
    return CycloNumber::from_coefficients(j.at("order").get<int>(), c);
}

json matrix_to_json(const Matrix<CycloNumber>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(to_json(m(i, k)));
        rows.push_back(r);
    }
    return rows;
}

Matrix<CycloNumber> matrix_from_json(const json& j) {
    std::size_t rows = j.size(), cols = rows ? j[0].size() : 0;
    Matrix<CycloNumber> m(rows, cols, CycloNumber());
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = cyclo_from_json(j[i][k]);
    return m;
}

json weight_to_json(const Weight& w) { return {{"E0", to_json(w.E0())}, {"s", to_json(w.s())}}; }

Weight weight_from_json(const json& j) {
    return Weight::from_E0s(rational_from_json(j.at("E0")), rational_from_json(j.at("s")));
}

json lowest_to_json(const Weight& mu) { return {{"E0", to_json(mu.E0())}, {"s", to_json(-mu.s())}}; }

Weight lowest_from_json(const json& j) {
    return b2::lowest_from_E0s(rational_from_json(j.at("E0")), rational_from_json(j.at("s")));
}

json eta_to_json(const Weight& eta) { return {{"a1", to_json(eta.a1)}, {"a2", to_json(eta.a2)}}; }

Weight eta_from_json(const json& j) { return Weight{rational_from_json(j.at("a1")), rational_from_json(j.at("a2"))}; }

json to_json(const so5::UnitarityInfo& u) {
    json j{{"form", u.form},
           {"verdict", u.verdict},
           {"complete", u.complete},
           {"in_domain", u.in_domain},
           {"special_case", u.special_case}};
    if (u.witness_eta) j["witness_eta"] = eta_to_json(*u.witness_eta);
    if (u.first_negative_pivot) j["first_negative_pivot"] = *u.first_negative_pivot;
    return j;
}

so5::UnitarityInfo unitarity_from_json(const json& j) {
    so5::UnitarityInfo u;
    u.form = j.at("form").get<std::string>();
    u.verdict = j.at("verdict").get<bool>();
    u.complete = j.at("complete").get<bool>();
    u.in_domain = j.at("in_domain").get<bool>();
    u.special_case = j.at("special_case").get<std::string>();
    if (j.contains("witness_eta")) u.witness_eta = eta_from_json(j["witness_eta"]);
    if (j.contains("first_negative_pivot")) u.first_negative_pivot = j["first_negative_pivot"].get<std::size_t>();
    return u;
}

json to_json(const so5::IrrepReport& r) {
    const bool low = r.picture == "lowest";
    auto wt = [&](const Weight& w) { return low ? lowest_to_json(w) : weight_to_json(w); };
    json ch = json::array();
    for (const auto& c : r.character) ch.push_back({{"eta", eta_to_json(c.eta)}, {"mult", c.mult}});
    json sv = json::array();
    for (const auto& s : r.singular_vectors)
        sv.push_back({{"eta", eta_to_json(s.eta)}, {"weight", wt(s.weight)}, {"count", s.count}, {"vector", s.description}});
    json j{{"lambda", wt(r.lambda)},
           {"picture", r.picture},
           {"depth", r.depth},
           {"complete", r.complete},
           {"character", ch},
           {"singular_vectors", sv},
           {"classification", r.classification},
           {"all_multiplicities_one", r.all_multiplicities_one},
           {"total_dim", r.total_dim}};
    if (r.unitarity) j["unitarity"] = to_json(*r.unitarity);
    if (r.unitarity_shifted) j["unitarity_shifted"] = to_json(*r.unitarity_shifted);
    if (r.gauge_subspace)
        j["gauge_subspace"] = {{"weight", wt(r.gauge_subspace->first)}, {"dimension", r.gauge_subspace->second}};
    return j;
}

so5::IrrepReport report_from_json(const json& j) {
    so5::IrrepReport r;
    r.picture = j.at("picture").get<std::string>();
    const bool low = r.picture == "lowest";
    auto wt = [&](const json& w) { return low ? lowest_from_json(w) : weight_from_json(w); };
    r.lambda = wt(j.at("lambda"));
    r.depth = j.at("depth").get<long>();
    r.complete = j.at("complete").get<bool>();
    for (const auto& c : j.at("character")) r.character.push_back({eta_from_json(c.at("eta")), c.at("mult").get<std::size_t>()});
    for (const auto& s : j.at("singular_vectors"))
        r.singular_vectors.push_back({eta_from_json(s.at("eta")), wt(s.at("weight")), s.at("count").get<std::size_t>(),
                                      s.at("vector").get<std::string>()});
    r.classification = j.at("classification").get<std::string>();
    r.all_multiplicities_one = j.at("all_multiplicities_one").get<bool>();
    r.total_dim = j.at("total_dim").get<std::size_t>();
    if (j.contains("unitarity")) r.unitarity = unitarity_from_json(j["unitarity"]);
    if (j.contains("unitarity_shifted")) r.unitarity_shifted = unitarity_from_json(j["unitarity_shifted"]);
    if (j.contains("gauge_subspace"))
        r.gauge_subspace = std::make_pair(wt(j["gauge_subspace"].at("weight")),
                                          j["gauge_subspace"].at("dimension").get<std::size_t>());
    return r;
}

json to_json(const so5::DetCheck& d) {
    json j{{"mode", d.mode},
           {"match", d.match},
           {"gram_zero", d.gram_zero},
           {"formula_zero", d.formula_zero},
           {"calibration", d.calibration}};
    if (d.gram_order) j["gram_order"] = *d.gram_order;
    if (d.formula_order) j["formula_order"] = *d.formula_order;
    return j;
}

json to_json(const so5::LowestWeight& w) { return {{"E0", to_json(w.E0)}, {"s", to_json(w.s)}}; }

json to_json(const so5::TruncatedSO23& t) {
    json parts = json::array(), rej = json::array();
    for (const auto& w : t.parts) parts.push_back(to_json(w));
    for (const auto& w : t.rejected) rej.push_back(to_json(w));
    return {{"parts", parts}, {"rejected", rej}, {"energy_cutoff", to_json(t.energy_cutoff)}};
}

json to_json(const so5::CompactStructure& c) {
    auto list = [](const std::vector<std::pair<Weight, std::size_t>>& v) {
        json a = json::array();
        for (const auto& [eta, n] : v) a.push_back({{"eta", eta_to_json(eta)}, {"count", n}});
        return a;
    };
    return {{"lambda", weight_to_json(c.lambda)},
            {"extra", list(c.extra)},
            {"primitive", list(c.primitive)},
            {"quotient_matches_irrep", c.quotient_matches_irrep},
            {"irrep_matches_weyl", c.irrep_matches_weyl},
            {"irrep_dim", c.irrep_dim},
            {"weyl_dim", c.weyl_dim}};
}

json to_json(const so5::VermaWeightSpace& v) {
    json basis = json::array();
    for (const auto& k : v.basis) basis.push_back(json(std::vector<int>(k.begin(), k.end())));
    return {{"lambda", weight_to_json(v.lambda)},
            {"eta", eta_to_json(v.eta)},
            {"basis", basis},
            {"gram", matrix_to_json(v.gram)}};
}

json to_json(const sl2::Irrep2& v) {
    json w = json::array();
    for (const auto& x : v.rep.weights) w.push_back(to_json(x));
    return {{"d", v.d},
            {"z", v.z},
            {"j", to_json(v.j)},
            {"weights", w},
            {"H", matrix_to_json(v.rep.H)},
            {"Xp", matrix_to_json(v.rep.Xp)},
            {"Xm", matrix_to_json(v.rep.Xm)}};
}

json to_json(const sl2::Unitarity2& u) {
    json signs = json::array();
    for (auto s : u.pivot_signs) signs.push_back(cyclo::to_string(s));
    return {{"verdict", u.verdict},
            {"formula_verdict", u.formula_verdict},
            {"pivot_signs", signs},
            {"gram_signature",
             {{"plus", u.gram_signature.n_plus}, {"zero", u.gram_signature.n_zero}, {"minus", u.gram_signature.n_minus}}}};
}

json to_json(const sl2::VLabel& v) { return {{"type", "V"}, {"d", v.d}, {"z", v.z}}; }

json to_json(const sl2::Decomposition2& d) {
    json v = json::array(), i = json::array();
    for (const auto& x : d.v_parts) v.push_back(to_json(x));
    for (const auto& b : d.i_parts)
        i.push_back({{"type", "I"},
                     {"p", b.p},
                     {"z", b.z},
                     {"dim", b.dim},
                     {"top", to_json(b.top)},
                     {"bottom", to_json(b.bottom)},
                     {"hw_vectors", b.hw_vectors},
                     {"lw_vectors", b.lw_vectors},
                     {"socle_vector_ok", b.socle_vector_ok},
                     {"head_vector_ok", b.head_vector_ok}});
    return {{"v_parts", v}, {"i_parts", i}, {"total_dim", d.total_dim}};
}

json to_json(const sl2::TruncatedResult& t) {
    json v = json::array();
    for (const auto& x : t.parts) v.push_back(to_json(x));
    return {{"parts", v}, {"convention", t.convention}};
}

json envelope(const std::string& command, const json& config, const json& result) {
    return {{"schema", kSchema}, {"command", command}, {"config", config}, {"result", result}};
}

}  // namespace uqrep::io
