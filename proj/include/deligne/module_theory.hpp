#pragma once

// Module categories over pointed categories Vect_G: classification of the
// simple module categories as pairs (subgroup, cohomology class), tables of
// decategorified tensor products of module categories, and the coprimality
// certificate that decides when such a table is a complete classification.

#include "cohomology.hpp"
#include "fusion_ring.hpp"
#include "render.hpp"

namespace deligne {

struct ModuleSimple {
    Subgroup subgroup;
    std::string cocycle_label; // "triv", "ν", "ν1", ...
    Vec cocycle_exponents;     // class coordinates in H^2 of the subgroup
};

inline std::string simple_name(const ModuleSimple& s) {
    return "(" + subgroup_name(s.subgroup) + "," + s.cocycle_label + ")";
}

// simple module categories of Vect_G: one per pair of a subgroup H whose
// order is invertible in the field and a class in H^2(H, k*); subgroups come
// in canonical order, the trivial class first within each
inline std::vector<ModuleSimple> classify_module_simples(const FiniteAbelianGroup& g, i64 field_char) {
    require_valid_char(field_char);
    std::vector<ModuleSimple> out;
    for (const auto& h : enumerate_subgroups(g)) {
        if (field_char != 0 && h.order % field_char == 0) continue;
        CocycleClassGroup classes = h2_classes(invariant_factors(h), field_char);
        for (std::size_t c = 0; c < classes.labels.size(); ++c)
            out.push_back({h, classes.labels[c], classes.class_exponents[c]});
    }
    return out;
}

inline i64 count_module_simples(const FiniteAbelianGroup& g, i64 field_char) {
    return static_cast<i64>(classify_module_simples(g, field_char).size());
}

enum class Completeness { Complete, ImageOnly, Partial };

inline std::string completeness_to_string(Completeness c) {
    switch (c) {
    case Completeness::Complete: return "Complete";
    case Completeness::ImageOnly: return "ImageOnly";
    case Completeness::Partial: return "Partial";
    }
    return "?";
}

inline Completeness completeness_from_string(const std::string& s) {
    if (s == "Complete") return Completeness::Complete;
    if (s == "ImageOnly") return Completeness::ImageOnly;
    if (s == "Partial") return Completeness::Partial;
    throw std::invalid_argument("completeness: expected Complete, ImageOnly, or Partial, got '" + s + "'");
}

// a fusion table of simple module categories together with where it came
// from ("Vect[2]^beta" names the underlying group and twist) and whether the
// listed simples are the whole classification
struct ModuleTable {
    FusionRing ring;
    std::string provenance;
    Completeness completeness = Completeness::Complete;
};

struct Provenance {
    Vec orders;      // cyclic factors of the underlying group
    std::string tag; // twist description
};

inline std::optional<Provenance> parse_provenance(const std::string& s) {
    auto lb = s.find("Vect[");
    auto rb = s.find(']');
    auto caret = s.find('^');
    if (lb != 0 || rb == std::string::npos || caret != rb + 1) return std::nullopt;
    Provenance p;
    p.tag = s.substr(caret + 1);
    std::string body = s.substr(5, rb - 5);
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t comma = body.find(',', pos);
        if (comma == std::string::npos) comma = body.size();
        try {
            p.orders.push_back(std::stoll(body.substr(pos, comma - pos)));
        } catch (const std::exception&) {
            return std::nullopt;
        }
        if (p.orders.back() < 2) return std::nullopt;
        pos = comma + 1;
    }
    if (p.orders.empty()) return std::nullopt;
    return p;
}

inline std::string format_provenance(const Provenance& p) {
    std::string s = "Vect[";
    for (std::size_t i = 0; i < p.orders.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p.orders[i]);
    }
    return s + "]^" + p.tag;
}

struct FactorizationCertificate {
    bool certified = false;
    std::string detail; // "gcd(2,9) = 1", "gcd 2", or "non-integer FP dimension"
};

inline std::string certificate_status(const FactorizationCertificate& c) {
    return c.certified ? "Certified" : "NotCertified";
}

inline FactorizationCertificate certify_totals(i64 n1, i64 n2) {
    i64 g = std::gcd(n1, n2);
    if (g == 1)
        return {true, "gcd(" + std::to_string(n1) + "," + std::to_string(n2) + ") = 1"};
    return {false, "gcd " + std::to_string(g)};
}

// the global dimension a table certifies against: the underlying group order
// when the provenance records one, otherwise the table's own certified
// integral Frobenius-Perron total
inline std::optional<i64> table_total(const ModuleTable& t) {
    if (auto p = parse_provenance(t.provenance)) {
        i64 total = 1;
        for (i64 n : p->orders) total *= n;
        return total;
    }
    FPData fp = fp_data(t.ring);
    if (fp.integral) return fp.total_int;
    return std::nullopt;
}

// coprimality of the two global dimensions certifies that every simple of
// the product is a product of simples, so the product table is complete
inline FactorizationCertificate factorization_certificate(const ModuleTable& a, const ModuleTable& b) {
    std::optional<i64> ta = table_total(a), tb = table_total(b);
    if (!ta || !tb) return {false, "non-integer FP dimension"};
    return certify_totals(*ta, *tb);
}

inline ModuleTable module_table_product(const ModuleTable& a, const ModuleTable& b) {
    ModuleTable out;
    out.ring = deligne_product(a.ring, b.ring);
    auto pa = parse_provenance(a.provenance), pb = parse_provenance(b.provenance);
    if (pa && pb) {
        Provenance p;
        p.orders = pa->orders;
        p.orders.insert(p.orders.end(), pb->orders.begin(), pb->orders.end());
        p.tag = pa->tag + "⊠" + pb->tag;
        out.provenance = format_provenance(p);
    } else {
        out.provenance = a.provenance + "⊠" + b.provenance;
    }
    bool inputs_complete =
        a.completeness == Completeness::Complete && b.completeness == Completeness::Complete;
    out.completeness = inputs_complete && factorization_certificate(a, b).certified
                           ? Completeness::Complete
                           : Completeness::ImageOnly;
    return out;
}

// rename basis elements and reorder them; every old label must be covered
// and the order must list every new label exactly once
inline ModuleTable relabel_table(const ModuleTable& t, const std::map<std::string, std::string>& names,
                                 const std::vector<std::string>& order) {
    std::size_t n = t.ring.rank();
    if (names.size() != n || order.size() != n)
        throw std::invalid_argument("relabel_table: name map and order must cover the basis");
    std::vector<std::size_t> perm(n); // perm[new] = old
    for (std::size_t i = 0; i < n; ++i) {
        auto it = names.find(t.ring.labels[i]);
        if (it == names.end())
            throw std::invalid_argument("relabel_table: no new name for '" + t.ring.labels[i] + "'");
        auto pos = std::find(order.begin(), order.end(), it->second);
        if (pos == order.end())
            throw std::invalid_argument("relabel_table: '" + it->second + "' missing from order");
        perm[static_cast<std::size_t>(pos - order.begin())] = i;
    }
    ModuleTable out;
    out.provenance = t.provenance;
    out.completeness = t.completeness;
    out.ring.labels = order;
    out.ring.N.assign(n, Mat(n, Vec(n, 0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                out.ring.N[i][j][k] = t.ring.N[perm[i]][perm[j]][perm[k]];
    for (std::size_t u : t.ring.unit)
        for (std::size_t i = 0; i < n; ++i)
            if (perm[i] == u) out.ring.unit.push_back(i);
    std::sort(out.ring.unit.begin(), out.ring.unit.end());
    if (t.ring.dual) {
        std::vector<std::size_t> old_to_new(n);
        for (std::size_t i = 0; i < n; ++i) old_to_new[perm[i]] = i;
        std::vector<std::size_t> dual(n);
        for (std::size_t i = 0; i < n; ++i) dual[i] = old_to_new[(*t.ring.dual)[perm[i]]];
        out.ring.dual = std::move(dual);
    }
    return out;
}

// one table cell as a sum of labeled terms: "0", "⟨b⟩", "3⟨a+b⟩", joined by " + "
inline std::string render_cell(const FusionRing& r, std::size_t i, std::size_t j) {
    std::string out;
    for (std::size_t k = 0; k < r.rank(); ++k) {
        i64 c = r.N[i][j][k];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (c != 1) out += std::to_string(c);
        out += r.labels[k];
    }
    return out.empty() ? "0" : out;
}

inline std::vector<std::vector<std::string>> table_grid(const ModuleTable& t) {
    std::size_t n = t.ring.rank();
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head{"⊗"};
    for (const auto& l : t.ring.labels) head.push_back(l);
    rows.push_back(std::move(head));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::string> row{t.ring.labels[i]};
        for (std::size_t j = 0; j < n; ++j) row.push_back(render_cell(t.ring, i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::string render_table(const ModuleTable& t) { return render_grid(table_grid(t)); }

} // namespace deligne
