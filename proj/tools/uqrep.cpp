// Command line front end: every analysis as a text or JSON report.
// Exit codes: 0 success, 2 rejected input, 1 internal failure.

#include "uqrep/io/json.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace uqrep;
using io::json;
using b2::Weight;

namespace {

struct Config {
    int m = 0, n = 1;
    std::string format = "text";
    unsigned seed = 0;
    // command parameters, kept as given so reports can echo them
    int d = 1;
    long z = 0;
    std::string a, b, form = "so21", lambda, E0, s, eta, cutoff = "4", e0_range = "0:4", s_values = "0,1/2,1",
                       step = "1/2";
    long depth = -1;
    bool generic = false, classical = false, show_matrix = false;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

std::pair<Rational, Rational> parse_pair(const std::string& text) {
    auto parts = split(text, ',');
    if (parts.size() != 2) throw DomainError("expected a pair 'x,y', got '" + text + "'");
    return {parse_rational(parts[0]), parse_rational(parts[1])};
}

std::pair<int, long> parse_dz(const std::string& text) {
    auto [d, z] = parse_pair(text);
    if (!is_integer(d) || !is_integer(z)) throw DomainError("d and z must be integers");
    return {static_cast<int>(to_long(d)), to_long(z)};
}

Weight parse_eta(const std::string& text) {
    if (text == "0") return Weight{};
    if (text == "a1" || text == "b1") return b2::root(1);
    if (text == "a2" || text == "b2") return b2::root(2);
    if (text == "b3") return b2::root(3);
    if (text == "b4") return b2::root(4);
    auto [x, y] = parse_pair(text);
    return Weight{x, y};
}

// highest weight from --lambda (simple-root coordinates) or --E0/--s
Weight highest_weight(const Config& c) {
    if (!c.lambda.empty()) {
        if (c.lambda == "0") return Weight{};
        auto [x, y] = parse_pair(c.lambda);
        return Weight{x, y};
    }
    if (c.E0.empty() || c.s.empty()) throw DomainError("give --lambda a1,a2 or both --E0 and --s");
    return Weight::from_E0s(parse_rational(c.E0), parse_rational(c.s));
}

cyclo::QParams params(const Config& c) {
    if (c.m < 1 || c.n < 1) throw DomainError("need m >= 1 and n >= 1");
    return cyclo::QParams::make(c.m, c.n);
}

long depth_or_default(const Config& c, const cyclo::QParams& p) { return c.depth >= 0 ? c.depth : b2::default_depth(p); }

json config_json(const Config& c, const std::string& cmd) {
    json j{{"m", c.m}, {"n", c.n}, {"format", c.format}, {"seed", c.seed}, {"command", cmd}};
    auto put = [&](const char* k, const std::string& v) {
        if (!v.empty()) j[k] = v;
    };
    if (cmd == "sl2 build" || cmd == "sl2 unitarity") {
        j["d"] = c.d;
        j["z"] = c.z;
    }
    if (cmd == "sl2 unitarity") j["form"] = c.form;
    put("a", c.a);
    put("b", c.b);
    put("lambda", c.lambda);
    put("E0", c.E0);
    put("s", c.s);
    put("eta", c.eta);
    if (cmd == "so5 truncfuse") j["cutoff"] = c.cutoff;
    if (cmd == "atlas") {
        j["E0_range"] = c.e0_range;
        j["s_values"] = c.s_values;
        j["step"] = c.step;
    }
    if (c.depth >= 0) j["depth"] = c.depth;
    if (c.generic) j["generic"] = true;
    return j;
}

std::string wstr(const Weight& w) { return "(E0,s)=(" + to_string(w.E0()) + "," + to_string(w.s()) + ")"; }
std::string lstr(const Weight& mu) { return "(" + to_string(mu.E0()) + "," + to_string(-mu.s()) + ")"; }
std::string estr(const Weight& eta) { return to_string(eta.a1) + "*a1+" + to_string(eta.a2) + "*a2"; }

void print_report_text(const so5::IrrepReport& r, std::ostream& os) {
    const bool low = r.picture == "lowest";
    os << (low ? "lowest weight " + lstr(r.lambda) : "highest weight " + wstr(r.lambda)) << "\n";
    os << "classification: " << r.classification << "\n";
    os << "dimension: " << r.total_dim << (r.complete ? " (complete)" : " (depth limited)") << "\n";
    if (r.unitarity) {
        const auto& u = *r.unitarity;
        os << "unitarity " << u.form << ": " << (u.verdict ? "unitarizable" : "not unitarizable");
        if (u.witness_eta) os << ", negative norm at depth " << estr(*u.witness_eta);
        if (u.special_case != "none") os << ", special case " << u.special_case;
        if (!u.in_domain) os << ", outside the basic domain";
        os << "\n";
    }
    if (r.unitarity_shifted)
        os << "shifted compact test: " << (r.unitarity_shifted->verdict ? "unitarizable" : "not unitarizable") << "\n";
    if (r.gauge_subspace) os << "gauge subspace: lowest weight " << lstr(r.gauge_subspace->first) << "\n";
    for (const auto& s : r.singular_vectors)
        os << (low ? "lowest weight vector at " + lstr(s.weight) : "singular vector at " + wstr(s.weight)) << " (depth "
           << estr(s.eta) << ", " << s.count << ")\n";
    os << "multiplicities all one: " << (r.all_multiplicities_one ? "yes" : "no") << "\n";
}

void emit(const Config& c, const std::string& cmd, const json& result, const std::string& text) {
    if (c.format == "json")
        std::cout << io::envelope(cmd, config_json(c, cmd), result).dump(2) << "\n";
    else
        std::cout << text;
}

int run_sl2(const Config& c, const std::string& sub) {
    auto p = params(c);
    std::ostringstream os;
    json res;
    if (sub == "build") {
        auto v = sl2::build_irrep2(c.d, c.z, p);
        res = io::to_json(v);
        res["relations_ok"] = sl2::satisfies_relations(v.rep);
        os << "V_{" << c.d << "," << c.z << "}: highest weight " << to_string(v.j) << ", dimension " << v.rep.dim()
           << ", relations " << (res["relations_ok"].get<bool>() ? "ok" : "FAILED") << "\n";
        for (std::size_t k = 0; k < v.rep.dim(); ++k) os << "  weight " << to_string(v.rep.weights[k]) << "\n";
    } else if (sub == "unitarity") {
        auto f = c.form == "su2" ? sl2::Form::SU2 : sl2::Form::SO21;
        if (c.form != "su2" && c.form != "so21") throw DomainError("--form is so21 or su2");
        auto u = sl2::unitarity_sl2(c.d, c.z, p, f);
        res = io::to_json(u);
        os << "V_{" << c.d << "," << c.z << "} " << sl2::to_string(f) << ": "
           << (u.verdict ? "unitarizable" : "not unitarizable") << "\n";
    } else if (sub == "fuse" || sub == "truncfuse" || sub == "rmatrix") {
        auto [d1, z1] = parse_dz(c.a);
        auto [d2, z2] = parse_dz(c.b);
        auto va = sl2::build_irrep2(d1, z1, p), vb = sl2::build_irrep2(d2, z2, p);
        if (sub == "fuse") {
            auto dec = sl2::tensor_decompose2(va, vb);
            res = io::to_json(dec);
            os << "V_{" << d1 << "," << z1 << "} x V_{" << d2 << "," << z2 << "} =";
            for (const auto& v : dec.v_parts) os << " V_{" << v.d << "," << v.z << "}";
            for (const auto& b : dec.i_parts) os << " I^" << b.p << "_" << b.z;
            os << "  (total dimension " << dec.total_dim << ")\n";
            auto claim = sl2::fusion_formula2(d1, z1, d2, z2, p);
            json cv = json::array();
            for (const auto& v : claim.v_parts) cv.push_back(io::to_json(v));
            for (const auto& [pp, zz] : claim.i_parts) cv.push_back({{"type", "I"}, {"p", pp}, {"z", zz}});
            res["formula"] = cv;
        } else if (sub == "truncfuse") {
            auto t = sl2::truncated_tensor2(va, vb);
            res = io::to_json(t);
            os << "truncated product:";
            for (const auto& v : t.parts) os << " V_{" << v.d << "," << v.z << "}";
            os << "  (index convention: " << t.convention << ")\n";
        } else {
            auto r = sl2::rmatrix2(va.rep, vb.rep);
            auto rs = sl2::rmatrix2_star(va.rep, vb.rep);
            auto ab = sl2::tensor(va.rep, vb.rep), ba = sl2::tensor(vb.rep, va.rep);
            auto sw = sl2::flip(va.rep, vb.rep);
            bool inter = true;
            for (auto pick : {&sl2::Rep2::H, &sl2::Rep2::Xp, &sl2::Rep2::Xm})
                inter = inter && sw.transpose() * (ba.*pick) * sw * r == r * (ab.*pick);
            bool unit = rs * r == sl2::Mat::identity(r.rows(), cyclo::CycloNumber::one(va.rep.order));
            res = {{"intertwiner", inter}, {"star_inverse", unit}, {"dim", r.rows()}};
            if (c.show_matrix) res["R"] = io::matrix_to_json(r);
            os << "R on V_{" << d1 << "," << z1 << "} x V_{" << d2 << "," << z2 << "}: intertwiner "
               << (inter ? "ok" : "FAILED") << ", R* R = 1 " << (unit ? "ok" : "FAILED") << "\n";
        }
    }
    emit(c, "sl2 " + sub, res, os.str());
    return 0;
}

int run_so5(const Config& c, const std::string& sub) {
    auto p = params(c);
    std::ostringstream os;
    json res;
    if (sub == "physical") {
        if (c.E0.empty() || c.s.empty()) throw DomainError("physical needs --E0 and --s");
        long depth = c.depth >= 0 ? c.depth : 6;
        auto r = so5::physical_rep(parse_rational(c.E0), parse_rational(c.s), p, depth);
        res = io::to_json(r);
        print_report_text(r, os);
    } else if (sub == "truncfuse") {
        auto [e1, s1] = parse_pair(c.a);
        auto [e2, s2] = parse_pair(c.b);
        Rational cut = parse_rational(c.cutoff);
        auto t = so5::truncated_tensor_so23({e1, s1}, {e2, s2}, p, cut);
        res = io::to_json(t);
        os << "truncated product up to energy " << to_string(cut) << ":";
        for (const auto& w : t.parts) os << " (" << to_string(w.E0) << "," << to_string(w.s) << ")";
        os << "\n";
        if (!t.rejected.empty()) {
            os << "non-physical lowest weights dropped:";
            for (const auto& w : t.rejected) os << " (" << to_string(w.E0) << "," << to_string(w.s) << ")";
            os << "\n";
        }
        if (c.classical) {
            auto cl = so5::classical_two_particle({e1, s1}, {e2, s2}, cut);
            json arr = json::array();
            os << "generic q:";
            for (const auto& w : cl) {
                arr.push_back(io::to_json(w));
                os << " (" << to_string(w.E0) << "," << to_string(w.s) << ")";
            }
            os << "\n";
            res["classical"] = arr;
        }
    } else {
        Weight lam = highest_weight(c);
        if (sub == "verma") {
            auto v = so5::verma_weight_space(lam, parse_eta(c.eta.empty() ? "0" : c.eta), p);
            res = io::to_json(v);
            auto sig = cyclo::hermitian_signature(v.gram);
            res["signature"] = {{"plus", sig.n_plus}, {"zero", sig.n_zero}, {"minus", sig.n_minus}};
            os << "M(" << wstr(lam) << ") at depth " << estr(v.eta) << ": dimension " << v.basis.size()
               << ", Gram signature (" << sig.n_plus << "," << sig.n_zero << "," << sig.n_minus << ")\n";
            for (std::size_t i = 0; i < v.gram.rows(); ++i) {
                os << " ";
                for (std::size_t k = 0; k < v.gram.cols(); ++k) os << " [" << v.gram(i, k).str() << "]";
                os << "\n";
            }
        } else if (sub == "detcheck") {
            Weight eta = parse_eta(c.eta.empty() ? "a1" : c.eta);
            auto d = c.generic ? so5::verify_det_generic(lam, eta) : so5::verify_det(lam, eta, p);
            res = io::to_json(d);
            os << "determinant check at " << estr(eta) << " (" << d.mode << "): " << (d.match ? "match" : "MISMATCH");
            if (d.gram_zero) os << ", both zero, orders " << d.gram_order.value_or(-1) << "/" << d.formula_order.value_or(-1);
            os << "\n";
        } else if (sub == "singular") {
            long depth = depth_or_default(c, p);
            auto sv = so5::singular_vectors(lam, p, depth);
            res = json::array();
            for (const auto& e : sv) {
                res.push_back({{"eta", io::eta_to_json(e.eta)},
                               {"weight", io::weight_to_json(e.weight)},
                               {"count", e.count},
                               {"vector", e.description}});
                os << "singular vector at depth " << estr(e.eta) << ": " << e.count << "\n";
            }
            if (sv.empty()) os << "no singular vectors within depth " << depth << "\n";
        } else if (sub == "character") {
            auto r = so5::irrep_character(lam, p, depth_or_default(c, p));
            res = io::to_json(r);
            print_report_text(r, os);
            for (const auto& e : r.character) os << "  " << estr(e.eta) << ": " << e.mult << "\n";
        } else if (sub == "unitarity") {
            auto r = so5::unitarity_so5(lam, p);
            res = io::to_json(r);
            print_report_text(r, os);
        } else if (sub == "structure") {
            auto s = so5::compact_structure(lam, p);
            res = io::to_json(s);
            os << "extra singular vectors:";
            for (const auto& [eta, n] : s.extra) os << " " << estr(eta) << " (" << n << ")";
            os << "\nirrep dimension " << s.irrep_dim << ", Weyl dimension " << s.weyl_dim << "\n";
        } else if (sub == "linkage") {
            long depth = depth_or_default(c, p);
            res = json::array();
            for (const auto& w : b2::strongly_linked(lam, p, depth)) {
                res.push_back(io::eta_to_json(w));
                os << estr(w) << "\n";
            }
        }
    }
    emit(c, "so5 " + sub, res, os.str());
    return 0;
}

int run_atlas(const Config& c) {
    auto p = params(c);
    auto range = split(c.e0_range, ':');
    if (range.size() != 2) throw DomainError("--E0-range is lo:hi");
    Rational lo = parse_rational(range[0]), hi = parse_rational(range[1]), step = parse_rational(c.step);
    if (step <= 0) throw DomainError("--step must be positive");
    std::vector<Rational> svals;
    for (const auto& t : split(c.s_values, ','))
        if (!t.empty()) svals.push_back(parse_rational(t));
    std::size_t n_e = hi < lo ? 0 : static_cast<std::size_t>(floor_long((hi - lo) / step)) + 1;
    std::size_t size = n_e * svals.size();
    if (size > 400) throw DomainError("grid of " + std::to_string(size) + " points exceeds the limit of 400");
    json rows = json::array();
    std::ostringstream os;
    std::size_t done = 0;
    for (std::size_t k = 0; k < n_e; ++k) {
        Rational E0 = lo + static_cast<long>(k) * step;
        for (const auto& s : svals) {
            json row{{"E0", to_string(E0)}, {"s", to_string(s)}};
            std::string status;
            try {
                auto r = so5::physical_rep(E0, s, p, 2);
                row["verdict"] = r.unitarity->verdict;
                row["classification"] = r.classification;
                status = r.unitarity->verdict ? "unitarizable" : "not unitarizable";
            } catch (const DomainError& e) {
                row["verdict"] = nullptr;
                row["unsupported"] = e.what();
                status = "unsupported";
            }
            rows.push_back(row);
            os << "(" << to_string(E0) << "," << to_string(s) << ") " << status << "\n";
            std::cerr << "\ratlas " << ++done << "/" << size << std::flush;
        }
    }
    if (size) std::cerr << "\n";
    emit(c, "atlas", rows, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Representations of U_q(sl2) and U_q(so5) at roots of unity"};
    app.require_subcommand(1);
    Config c;
    app.add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", c.seed, "seed recorded in reports");

    auto common = [&](CLI::App* s) {
        s->add_option("--m", c.m, "q = exp(2 pi i n/m)")->required();
        s->add_option("--n", c.n, "q = exp(2 pi i n/m)");
        s->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };

    std::string chosen;
    auto* sl2 = app.add_subcommand("sl2", "U_q(sl2) analyses");
    sl2->require_subcommand(1);
    for (const char* name : {"build", "unitarity", "fuse", "truncfuse", "rmatrix"}) {
        auto* s = sl2->add_subcommand(name);
        common(s);
        s->add_option("--d", c.d, "dimension");
        s->add_option("--z", c.z, "band index");
        s->add_option("--a", c.a, "first factor d,z");
        s->add_option("--b", c.b, "second factor d,z");
        s->add_option("--form", c.form, "so21 or su2");
        s->add_flag("--show-matrix", c.show_matrix, "include R in the JSON result");
        s->callback([&, name] { chosen = std::string("sl2 ") + name; });
    }
    auto* so5 = app.add_subcommand("so5", "U_q(so5) analyses");
    so5->require_subcommand(1);
    for (const char* name :
         {"verma", "detcheck", "singular", "character", "unitarity", "physical", "truncfuse", "linkage", "structure"}) {
        auto* s = so5->add_subcommand(name);
        common(s);
        s->add_option("--lambda", c.lambda, "highest weight in simple-root coordinates a1,a2 (or 0)");
        s->add_option("--E0", c.E0, "energy E0 (p/q)");
        s->add_option("--s", c.s, "spin s (p/q)");
        s->add_option("--eta", c.eta, "depth: a1, a2, b3, b4, x,y or 0");
        s->add_option("--depth", c.depth, "height bound");
        s->add_option("--a", c.a, "first lowest weight E0,s");
        s->add_option("--b", c.b, "second lowest weight E0,s");
        s->add_option("--cutoff", c.cutoff, "energy cutoff");
        s->add_flag("--generic", c.generic, "determinant check at generic q");
        s->add_flag("--classical", c.classical, "also run the generic-q oracle");
        s->callback([&, name] { chosen = std::string("so5 ") + name; });
    }
    auto* atlas = app.add_subcommand("atlas", "SO(2,3) unitarity over an (E0, s) grid");
    common(atlas);
    atlas->add_option("--E0-range", c.e0_range, "lo:hi");
    atlas->add_option("--s-values", c.s_values, "comma separated spins");
    atlas->add_option("--step", c.step, "E0 step");
    atlas->callback([&] { chosen = "atlas"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        if (chosen.rfind("sl2 ", 0) == 0) return run_sl2(c, chosen.substr(4));
        if (chosen.rfind("so5 ", 0) == 0) return run_so5(c, chosen.substr(4));
        return run_atlas(c);
    } catch (const DomainError& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
