#include "kflag/json_io.hpp"

#include <sstream>

namespace kflag {

json charpoly_to_json(const CharPoly& p) {
    json terms = json::array();
    // std::map iterates exponent vectors in lexicographic order already
    for (const auto& [e, c] : p.terms()) {
        std::ostringstream os;
        os << c;
        terms.push_back({{"exp", e}, {"coef", os.str()}});
    }
    return {{"terms", terms}};
}

CharPoly charpoly_from_json(const json& j, int vars) {
    CharPoly p(vars);
    for (const auto& t : j.at("terms")) {
        Expo e = t.at("exp").get<Expo>();
        Coef c(t.at("coef").get<std::string>());
        p.add_term(e, c);
    }
    return p;
}

json ratchar_to_json(const RatChar& r) {
    json den = json::array();
    const int v = r.vars();
    for (const auto& [f, m] : r.den()) {
        std::vector<int> mu(f.m.begin(), f.m.begin() + v);
        den.push_back({{"mu", mu}, {"yexp", f.m[v]}, {"sign", f.sign}, {"mult", m}});
    }
    return {{"num", charpoly_to_json(r.num())}, {"den", den}};
}

json kclass_to_json(const KClass& k, const std::string& class_kind) {
    const RootSystem& rs = *k.rs;
    json values = json::array();
    for (int w = 0; w < rs.order(); ++w) {
        json v = ratchar_to_json(k.values[w]);
        json entry;
        entry["w"] = rs.reduced_word(w);
        entry["num"] = v["num"];
        entry["den"] = v["den"];
        values.push_back(std::move(entry));
    }
    return {{"cartan", {{"family", std::string(1, rs.family())}, {"rank", rs.rank()}}},
            {"class_kind", class_kind},
            {"values", values}};
}

json bb_data_to_json(const BBFixedPointData& d) {
    json points = json::array();
    for (const auto& p : d.points)
        points.push_back({{"label", p.label}, {"cell_dim", p.cell_dim}, {"weights", p.weights}});
    return {{"dim", d.dim}, {"points", points}};
}

BBFixedPointData bb_data_from_json(const json& j) {
    BBFixedPointData d;
    d.dim = j.at("dim").get<int>();
    for (const auto& p : j.at("points")) {
        BBFixedPoint fp;
        fp.label = p.at("label").get<std::string>();
        fp.cell_dim = p.at("cell_dim").get<int>();
        fp.weights = p.at("weights").get<std::vector<int>>();
        d.points.push_back(std::move(fp));
    }
    return d;
}

}  // namespace kflag
