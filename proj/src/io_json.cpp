#include "charlab/io_json.hpp"

#include <stdexcept>

namespace charlab {

namespace {

HalfInt parse_half(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("json: half-integers are encoded as strings");
    auto v = HalfInt::parse(j.get<std::string>());
    if (!v) throw std::invalid_argument("json: bad half-integer '" + j.get<std::string>() + "'");
    return *v;
}

}  // namespace

json partition_to_json(const SignedPartition& p) {
    json parts = json::array();
    for (const auto& x : p.parts()) parts.push_back(x.to_string());
    return json{{"parts", parts}, {"sign", p.sign() < 0 ? "-" : "+"}};
}

SignedPartition partition_from_json(const json& j) {
    std::vector<HalfInt> parts;
    for (const auto& x : j.at("parts")) parts.push_back(parse_half(x));
    int sign = +1;
    if (j.contains("sign")) sign = j.at("sign").get<std::string>() == "-" ? -1 : +1;
    return SignedPartition(std::move(parts), sign);
}

json poly_to_json(const LaurentPoly& p, const std::vector<std::string>& var_names) {
    json vars = json::array();
    for (std::size_t i = 0; i < p.arity(); ++i)
        vars.push_back(i < var_names.size() ? var_names[i] : "x" + std::to_string(i + 1));
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json exps = json::array();
        for (int d : e) exps.push_back(HalfInt::from_doubled(d).to_string());
        terms.push_back(json{{"exp", exps}, {"coeff", c.get_str()}});
    }
    return json{{"vars", vars}, {"terms", terms}};
}

LaurentPoly poly_from_json(const json& j) {
    std::size_t arity = j.at("vars").size();
    LaurentPoly p(arity);
    for (const auto& t : j.at("terms")) {
        LaurentPoly::Exps e;
        for (const auto& x : t.at("exp")) e.push_back(static_cast<int>(parse_half(x).doubled().get_si()));
        if (e.size() != arity) throw std::invalid_argument("json: exponent arity mismatch");
        p.add_term(e, Int(t.at("coeff").get<std::string>()));
    }
    return p;
}

json pattern_to_json(const Pattern& p) {
    json rows = json::array();
    for (const auto& row : p.rows) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.to_string());
        rows.push_back(r);
    }
    return json{{"family", family_name(p.family)}, {"rows", rows}};
}

Pattern pattern_from_json(const json& j) {
    Pattern p;
    auto fam = family_from_name(j.at("family").get<std::string>());
    if (!fam) throw std::invalid_argument("json: unknown pattern family");
    p.family = *fam;
    for (const auto& row : j.at("rows")) {
        std::vector<HalfInt> r;
        for (const auto& v : row) r.push_back(parse_half(v));
        p.rows.push_back(std::move(r));
    }
    return p;
}

json array_to_json(const MonoidTaggedArray& a) {
    json rows = json::array();
    for (const auto& row : a.entries) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.to_string());
        rows.push_back(r);
    }
    return json{{"rows", rows}, {"outer", a.outer == OuterMonoid::Half ? "half" : "int"}};
}

MonoidTaggedArray array_from_json(const json& j) {
    std::vector<std::vector<HalfInt>> entries;
    std::vector<std::size_t> lens;
    for (const auto& row : j.at("rows")) {
        std::vector<HalfInt> r;
        for (const auto& v : row) r.push_back(parse_half(v));
        lens.push_back(r.size());
        entries.push_back(std::move(r));
    }
    OuterMonoid outer = OuterMonoid::Integer;
    if (j.contains("outer") && j.at("outer").get<std::string>() == "half") outer = OuterMonoid::Half;
    return make_array(std::move(lens), std::move(entries), outer);
}

}  // namespace charlab
