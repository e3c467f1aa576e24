#pragma once

// JSON wire formats for the value types: fusion rings, module tables,
// semisimple algebras, and 2-category models. Serialization is deterministic
// (object keys come out sorted), so emitted files are byte-stable.

#include "two_category.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace deligne {

using nlohmann::json;

inline json ring_to_json(const FusionRing& r) {
    json j;
    j["labels"] = r.labels;
    j["unit"] = r.unit;
    if (r.dual) j["dual"] = *r.dual;
    j["N"] = r.N;
    return j;
}

inline FusionRing ring_from_json(const json& j) {
    FusionRing r;
    r.labels = j.at("labels").get<std::vector<std::string>>();
    r.unit = j.at("unit").get<std::vector<std::size_t>>();
    if (j.contains("dual")) r.dual = j.at("dual").get<std::vector<std::size_t>>();
    r.N = j.at("N").get<std::vector<Mat>>();
    require_shape(r);
    return r;
}

inline json table_to_json(const ModuleTable& t) {
    json j = ring_to_json(t.ring);
    j["provenance"] = t.provenance;
    j["completeness"] = completeness_to_string(t.completeness);
    return j;
}

inline ModuleTable table_from_json(const json& j) {
    ModuleTable t;
    t.ring = ring_from_json(j);
    t.provenance = j.at("provenance").get<std::string>();
    t.completeness = completeness_from_string(j.at("completeness").get<std::string>());
    return t;
}

inline DivisionKind division_from_letter(const std::string& s) {
    if (s == "R" || s == "K") return DivisionKind::Base;
    if (s == "C") return DivisionKind::Cplx;
    if (s == "H") return DivisionKind::Quat;
    throw std::invalid_argument("division algebra: expected R, C, H, or K, got '" + s + "'");
}

inline json algebra_to_json(const SemisimpleAlgebra& a) {
    json j;
    j["field"] = field_to_string(a.field);
    json factors = json::array();
    for (const auto& f : a.factors)
        factors.push_back(json::array({f.n, std::string(1, division_letter(f.d, a.field.real))}));
    j["factors"] = std::move(factors);
    return j;
}

inline SemisimpleAlgebra algebra_from_json(const json& j) {
    SemisimpleAlgebra a;
    a.field = field_from_string(j.at("field").get<std::string>());
    for (const auto& f : j.at("factors")) {
        if (!f.is_array() || f.size() != 2)
            throw std::invalid_argument("semisimple algebra: each factor is a [size, letter] pair");
        a.factors.push_back({f.at(0).get<i64>(), division_from_letter(f.at(1).get<std::string>())});
    }
    require_algebra_shape(a);
    return a;
}

inline json component_to_json(const Component& c) {
    json j;
    j["id"] = c.id;
    if (c.group) j["group"] = *c.group;
    j["endo"] = ring_to_json(c.endo);
    if (c.real_model) j["real_model"] = algebra_to_json(*c.real_model);
    return j;
}

inline Component component_from_json(const json& j) {
    Component c;
    c.id = j.at("id").get<std::string>();
    if (j.contains("group")) c.group = j.at("group").get<Vec>();
    c.endo = ring_from_json(j.at("endo"));
    if (j.contains("real_model")) c.real_model = algebra_from_json(j.at("real_model"));
    return c;
}

inline json model_to_json(const TwoCategoryModel& m) {
    json j;
    j["field"] = field_to_string(m.field);
    json comps = json::array();
    for (const auto& c : m.components) comps.push_back(component_to_json(c));
    j["components"] = std::move(comps);
    json simples = json::array();
    for (const auto& [label, cid] : m.simples) simples.push_back(json::array({label, cid}));
    j["simples"] = std::move(simples);
    j["simples_completeness"] = completeness_to_string(m.simples_completeness);
    j["hom_counts"] = m.hom_counts;
    return j;
}

inline TwoCategoryModel model_from_json(const json& j) {
    TwoCategoryModel m;
    m.field = field_from_string(j.at("field").get<std::string>());
    for (const auto& c : j.at("components")) m.components.push_back(component_from_json(c));
    for (const auto& s : j.at("simples")) {
        if (!s.is_array() || s.size() != 2)
            throw std::invalid_argument("two-category model: each simple is a [label, component] pair");
        m.simples.push_back({s.at(0).get<std::string>(), s.at(1).get<std::string>()});
    }
    m.simples_completeness =
        completeness_from_string(j.at("simples_completeness").get<std::string>());
    m.hom_counts = j.at("hom_counts").get<Mat>();
    std::size_t n = m.simples.size();
    if (m.hom_counts.size() != n)
        throw std::invalid_argument("two-category model: hom_counts must match the simples");
    for (const auto& row : m.hom_counts)
        if (row.size() != n)
            throw std::invalid_argument("two-category model: hom_counts must be square");
    for (const auto& [label, cid] : m.simples) {
        bool found = false;
        for (const auto& c : m.components) found |= c.id == cid;
        if (!found)
            throw std::invalid_argument("two-category model: simple '" + label +
                                        "' names unknown component '" + cid + "'");
    }
    return m;
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return json::parse(in); // throws json::parse_error on malformed input
}

inline std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace deligne
