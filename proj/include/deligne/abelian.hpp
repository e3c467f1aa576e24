#pragma once

// Finite abelian groups presented as products of cyclic factors, and their
// subgroups represented as integer lattices L with diag(orders)·Z^r ⊆ L ⊆ Z^r
// in a unique Hermite-form basis. Elements are residue tuples, indexed in
// little-endian mixed radix (first factor varies fastest).

#include "int_linalg.hpp"

#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>

namespace deligne {

// group-order cap shared by every constructor that enumerates; the CLI's
// FUSION_CAP environment variable overrides the default
inline i64 fusion_cap() {
    if (const char* s = std::getenv("FUSION_CAP")) {
        char* end = nullptr;
        long long v = std::strtoll(s, &end, 10);
        if (end && *end == '\0' && v >= 1) return v;
    }
    return 10000;
}

struct FiniteAbelianGroup {
    Vec orders; // cyclic factor orders, each >= 2; empty = trivial group
    i64 order = 1;

    bool operator==(const FiniteAbelianGroup&) const = default;
};

inline FiniteAbelianGroup group_new(const Vec& orders) {
    FiniteAbelianGroup g;
    g.orders = orders;
    for (i64 n : orders) {
        if (n <= 1) throw std::invalid_argument("group_new: cyclic factor orders must be >= 2");
        if (g.order > fusion_cap() / n)
            throw std::invalid_argument("group_new: group order exceeds cap");
        g.order *= n;
    }
    return g;
}

inline Vec element_tuple(const FiniteAbelianGroup& g, i64 idx) {
    Vec t(g.orders.size());
    for (std::size_t i = 0; i < g.orders.size(); ++i) {
        t[i] = idx % g.orders[i];
        idx /= g.orders[i];
    }
    return t;
}

inline i64 element_index(const FiniteAbelianGroup& g, const Vec& t) {
    i64 idx = 0, stride = 1;
    for (std::size_t i = 0; i < g.orders.size(); ++i) {
        idx += mod_pos(t[i], g.orders[i]) * stride;
        stride *= g.orders[i];
    }
    return idx;
}

inline i64 element_add(const FiniteAbelianGroup& g, i64 a, i64 b) {
    Vec ta = element_tuple(g, a), tb = element_tuple(g, b);
    for (std::size_t i = 0; i < ta.size(); ++i) ta[i] = (ta[i] + tb[i]) % g.orders[i];
    return element_index(g, ta);
}

inline i64 element_neg(const FiniteAbelianGroup& g, i64 a) {
    Vec t = element_tuple(g, a);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = (g.orders[i] - t[i]) % g.orders[i];
    return element_index(g, t);
}

// Display names: single-factor groups use the residue itself ("3"); groups
// with several factors use "0" for the identity and letters a, b, c, ... for
// the nonzero elements in index order, falling back to tuples past 'z'.
inline std::string element_name(const FiniteAbelianGroup& g, i64 idx) {
    if (g.orders.size() <= 1) return std::to_string(idx);
    if (idx == 0) return "0";
    if (g.order - 1 <= 26) return std::string(1, static_cast<char>('a' + idx - 1));
    Vec t = element_tuple(g, idx);
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

inline std::string group_name(const FiniteAbelianGroup& g) {
    if (g.orders.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < g.orders.size(); ++i) {
        if (i) s += "⊕"; // ⊕
        s += "Z/" + std::to_string(g.orders[i]);
    }
    return s;
}

struct Subgroup {
    FiniteAbelianGroup ambient;
    Mat basis; // r x r Hermite form of the lattice, unique per subgroup
    i64 order = 1;

    bool operator==(const Subgroup& o) const {
        return ambient == o.ambient && basis == o.basis;
    }
};

// canonicalize a generating set (rows of ambient-residue tuples) into the
// unique Hermite-form lattice basis; the ambient relations are always joined in
inline Subgroup make_subgroup(const FiniteAbelianGroup& g, Mat generators) {
    std::size_t r = g.orders.size();
    for (auto& row : generators) {
        if (row.size() != r) throw std::invalid_argument("make_subgroup: generator arity mismatch");
        for (std::size_t i = 0; i < r; ++i) row[i] = mod_pos(row[i], g.orders[i]);
    }
    for (std::size_t i = 0; i < r; ++i) {
        Vec diag(r, 0);
        diag[i] = g.orders[i];
        generators.push_back(std::move(diag));
    }
    Subgroup s;
    s.ambient = g;
    s.basis = hermite_form(std::move(generators), r);
    i64 det = 1;
    for (std::size_t i = 0; i < r; ++i) det *= s.basis[i][i];
    s.order = g.order / det;
    return s;
}

inline Subgroup trivial_subgroup(const FiniteAbelianGroup& g) { return make_subgroup(g, {}); }

inline Subgroup full_subgroup(const FiniteAbelianGroup& g) {
    Mat rows;
    std::size_t r = g.orders.size();
    for (std::size_t i = 0; i < r; ++i) {
        Vec e(r, 0);
        e[i] = 1;
        rows.push_back(std::move(e));
    }
    return make_subgroup(g, rows);
}

// membership by integer back-substitution against the triangular basis
inline bool subgroup_contains(const Subgroup& s, i64 element_idx) {
    Vec g = element_tuple(s.ambient, element_idx);
    std::size_t r = g.size();
    Vec c(r, 0);
    for (std::size_t j = 0; j < r; ++j) {
        i64 acc = g[j];
        for (std::size_t i = 0; i < j; ++i) acc -= c[i] * s.basis[i][j];
        if (acc % s.basis[j][j] != 0) return false;
        c[j] = acc / s.basis[j][j];
    }
    return true;
}

// basis rows reduced into the ambient group, zero rows dropped; this is the
// presentation used for display and for the canonical ordering
inline Mat display_basis(const Subgroup& s) {
    Mat out;
    for (const auto& row : s.basis) {
        Vec red(row.size());
        bool nonzero = false;
        for (std::size_t i = 0; i < row.size(); ++i) {
            red[i] = mod_pos(row[i], s.ambient.orders[i]);
            nonzero |= red[i] != 0;
        }
        if (nonzero) out.push_back(std::move(red));
    }
    return out;
}

inline std::string subgroup_name(const Subgroup& s) {
    Mat rows = display_basis(s);
    if (rows.empty()) return "⟨0⟩"; // ⟨0⟩
    std::string out = "⟨";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out += ",";
        out += element_name(s.ambient, element_index(s.ambient, rows[i]));
    }
    return out + "⟩";
}

// cyclic invariant factors n1 | n2 | ... of the subgroup itself (ones dropped):
// with basis H and ambient orders D, the subgroup is Z^r/rowspace(D·H^{-1}),
// and D·H^{-1} is computed exactly by back-substitution
inline Vec invariant_factors(const Subgroup& s) {
    std::size_t r = s.ambient.orders.size();
    Mat a(r, Vec(r, 0));
    for (std::size_t i = 0; i < r; ++i) {
        // solve row · basis = orders[i] * e_i (basis is upper triangular)
        for (std::size_t j = 0; j < r; ++j) {
            i64 acc = (i == j) ? s.ambient.orders[i] : 0;
            for (std::size_t k = 0; k < j; ++k) acc -= a[i][k] * s.basis[k][j];
            if (acc % s.basis[j][j] != 0)
                throw std::logic_error("invariant_factors: ambient relations not in lattice");
            a[i][j] = acc / s.basis[j][j];
        }
    }
    Vec out;
    for (i64 d : smith_invariants(a))
        if (d > 1) out.push_back(d);
    std::sort(out.begin(), out.end());
    return out;
}

inline i64 subgroup_exponent(const Subgroup& s) {
    Vec f = invariant_factors(s);
    return f.empty() ? 1 : f.back();
}

// ambient element indices of the subgroup's members, ascending
inline Vec subgroup_elements(const Subgroup& s) {
    Vec out;
    for (i64 g = 0; g < s.ambient.order; ++g)
        if (subgroup_contains(s, g)) out.push_back(g);
    return out;
}

namespace detail {

// ordering key: subgroup order, then display-basis rows read as little-endian
// element indices (this reproduces the ⟨0⟩, ⟨a⟩, ⟨b⟩, ⟨c⟩, ⟨a,b⟩ convention)
inline std::pair<i64, Vec> subgroup_sort_key(const Subgroup& s) {
    Vec rows;
    for (const auto& row : display_basis(s)) rows.push_back(element_index(s.ambient, row));
    return {s.order, rows};
}

} // namespace detail

namespace detail {

inline void partitions_desc(i64 remaining, i64 max_part, Vec& cur, std::vector<Vec>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (i64 part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_desc(remaining - part, part, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

// every isomorphism type of abelian group of order n, as invariant factor
// lists d_1 | d_2 | ... (ascending divisibility), sorted by length then
// lexicographically; built from one exponent partition per prime
inline std::vector<Vec> abelian_types(i64 n) {
    if (n < 1) throw std::invalid_argument("abelian_types: order must be >= 1");
    std::vector<std::pair<i64, std::vector<Vec>>> per_prime;
    for (auto [p, e] : factorize(n)) {
        std::vector<Vec> parts;
        Vec cur;
        detail::partitions_desc(e, e, cur, parts);
        per_prime.push_back({p, std::move(parts)});
    }
    std::vector<Vec> out;
    std::vector<std::size_t> pick(per_prime.size(), 0);
    while (true) {
        std::size_t len = 0;
        for (std::size_t i = 0; i < per_prime.size(); ++i)
            len = std::max(len, per_prime[i].second[pick[i]].size());
        Vec factors(len, 1); // factors[0] is the largest invariant factor
        for (std::size_t i = 0; i < per_prime.size(); ++i) {
            const Vec& part = per_prime[i].second[pick[i]];
            for (std::size_t k = 0; k < part.size(); ++k)
                for (i64 rep = 0; rep < part[k]; ++rep) factors[k] *= per_prime[i].first;
        }
        std::reverse(factors.begin(), factors.end());
        out.push_back(std::move(factors));
        std::size_t i = 0;
        for (; i < per_prime.size(); ++i) {
            if (++pick[i] < per_prime[i].second.size()) break;
            pick[i] = 0;
        }
        if (i == per_prime.size()) break;
    }
    std::sort(out.begin(), out.end(), [](const Vec& a, const Vec& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

// Every subgroup exactly once, canonical form, sorted. Subgroups are closures
// of element joins: seed with all cyclic subgroups, then saturate under joins
// with cyclic ones.
inline std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& g) {
    std::set<Mat> seen;
    std::vector<Subgroup> found;
    auto push = [&](Subgroup s) {
        if (seen.insert(s.basis).second) found.push_back(std::move(s));
    };

    std::vector<Subgroup> cyclic;
    push(trivial_subgroup(g));
    for (i64 e = 0; e < g.order; ++e) {
        Subgroup s = make_subgroup(g, {element_tuple(g, e)});
        if (seen.insert(s.basis).second) {
            cyclic.push_back(s);
            found.push_back(std::move(s));
        }
    }
    for (std::size_t i = 0; i < found.size(); ++i) {
        for (const auto& c : cyclic) {
            Mat rows = found[i].basis;
            rows.insert(rows.end(), c.basis.begin(), c.basis.end());
            push(make_subgroup(g, std::move(rows)));
        }
    }
    std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
        return detail::subgroup_sort_key(a) < detail::subgroup_sort_key(b);
    });
    return found;
}

} // namespace deligne
