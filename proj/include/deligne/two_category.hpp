#pragma once

// Decategorified models of semisimple 2-categories: a finite set of connected
// components, each carrying the fusion ring of its endofunctors, plus the
// simple objects with their pairwise hom dimensions. Over the reals a
// component also carries its semisimple endomorphism algebra, which is what
// splits under products.

#include "module_theory.hpp"
#include "semisimple.hpp"

namespace deligne {

struct Component {
    std::string id;
    std::optional<Vec> group; // cyclic orders of the underlying group, when pointed
    FusionRing endo;
    std::optional<SemisimpleAlgebra> real_model;
};

struct TwoCategoryModel {
    FieldDescriptor field;
    std::vector<Component> components;
    std::vector<std::pair<std::string, std::string>> simples; // (label, component id)
    Completeness simples_completeness = Completeness::Complete;
    Mat hom_counts; // hom dimensions between the listed simples
};

inline std::size_t pi0(const TwoCategoryModel& m) { return m.components.size(); }

// display name of a component presented by one simple real algebra factor
inline std::string factor_component_name(const SimpleFactor& f) {
    if (f.n == 1) return std::string("Mod(Vect_") + division_letter(f.d, true) + ")";
    return "Mod(" + factor_to_string(f, true) + ")";
}

inline std::string component_display(const Component& c) {
    if (c.real_model && c.real_model->factors.size() == 1)
        return factor_component_name(c.real_model->factors[0]);
    return c.id;
}

inline void require_same_field(const TwoCategoryModel& a, const TwoCategoryModel& b) {
    if (!(a.field == b.field))
        throw std::invalid_argument("two-category product: models live over different fields");
}

// components of a product of 2-categories: Cartesian pairs over a closed
// field; over the reals each pair contributes one component per simple factor
// of the tensor of its endomorphism algebras
inline std::vector<Component> product_components(const TwoCategoryModel& a, const TwoCategoryModel& b) {
    require_same_field(a, b);
    std::vector<Component> out;
    for (const auto& ca : a.components)
        for (const auto& cb : b.components) {
            std::string id = ca.id + "⊡" + cb.id;
            if (!a.field.real) {
                Component c;
                c.id = id;
                c.endo = deligne_product(ca.endo, cb.endo);
                if (ca.group && cb.group) {
                    Vec g = *ca.group;
                    g.insert(g.end(), cb.group->begin(), cb.group->end());
                    c.group = std::move(g);
                }
                out.push_back(std::move(c));
                continue;
            }
            if (!ca.real_model || !cb.real_model)
                throw std::invalid_argument("two-category product: real components need a real model");
            SemisimpleAlgebra t = tensor(*ca.real_model, *cb.real_model);
            for (std::size_t k = 0; k < t.factors.size(); ++k) {
                Component c;
                c.id = t.factors.size() == 1 ? id : id + "#" + std::to_string(k + 1);
                c.endo.labels = {"1"};
                c.endo.unit = {0};
                c.endo.dual = std::vector<std::size_t>{0};
                c.endo.N = {Mat{Vec{1}}};
                c.real_model = SemisimpleAlgebra{t.field, {t.factors[k]}};
                out.push_back(std::move(c));
            }
        }
    return out;
}

struct ProductSimples {
    std::vector<std::pair<std::string, std::string>> simples;
    Completeness completeness = Completeness::Partial;
    i64 listed = 0;
    i64 full_count = 0; // size of the full classification the pairs sit inside
};

// pairs of simples of a product over a closed field, marked Complete exactly
// when they exhaust the classification of the product's components
inline ProductSimples simples_of_product(const TwoCategoryModel& a, const TwoCategoryModel& b) {
    require_same_field(a, b);
    if (a.field.real)
        throw std::invalid_argument("simples_of_product: only defined over a closed field");
    ProductSimples out;
    for (const auto& [la, ca] : a.simples)
        for (const auto& [lb, cb] : b.simples)
            out.simples.push_back({la + "⊠" + lb, ca + "⊡" + cb});
    out.listed = static_cast<i64>(out.simples.size());

    for (const auto& ca : a.components)
        for (const auto& cb : b.components) {
            if (!ca.group || !cb.group)
                throw std::invalid_argument(
                    "simples_of_product: components must record their underlying groups");
            Vec g = *ca.group;
            g.insert(g.end(), cb.group->begin(), cb.group->end());
            out.full_count += count_module_simples(group_new(g), a.field.char_p);
        }
    bool inputs_complete = a.simples_completeness == Completeness::Complete &&
                           b.simples_completeness == Completeness::Complete;
    out.completeness = inputs_complete && out.listed == out.full_count ? Completeness::Complete
                                                                       : Completeness::Partial;
    return out;
}

// hom dimensions multiply under products: the matrix is the Kronecker product
// in the same row-major pair order as the simples
inline Mat hom_count_product(const Mat& ha, const Mat& hb) {
    std::size_t na = ha.size(), nb = hb.size();
    for (const auto& r : ha)
        if (r.size() != na) throw std::invalid_argument("hom_count_product: matrix must be square");
    for (const auto& r : hb)
        if (r.size() != nb) throw std::invalid_argument("hom_count_product: matrix must be square");
    Mat out(na * nb, Vec(na * nb, 0));
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t k = 0; k < na; ++k)
                for (std::size_t l = 0; l < nb; ++l)
                    out[i * nb + j][k * nb + l] = ha[i][k] * hb[j][l];
    return out;
}

inline TwoCategoryModel product_model(const TwoCategoryModel& a, const TwoCategoryModel& b) {
    require_same_field(a, b);
    TwoCategoryModel out;
    out.field = a.field;
    out.components = product_components(a, b);
    if (!a.field.real) {
        ProductSimples ps = simples_of_product(a, b);
        out.simples = std::move(ps.simples);
        out.simples_completeness = ps.completeness;
        out.hom_counts = hom_count_product(a.hom_counts, b.hom_counts);
    }
    return out;
}

// forget the real structure: the same components viewed over a closed field
// of characteristic zero
inline TwoCategoryModel strip_to_closed(const TwoCategoryModel& m) {
    TwoCategoryModel out = m;
    out.field = {false, 0};
    for (auto& c : out.components) c.real_model.reset();
    return out;
}

} // namespace deligne
