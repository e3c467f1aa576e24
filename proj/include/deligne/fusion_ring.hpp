#pragma once

// Based rings with nonnegative integer structure constants: validation of the
// ring axioms, constructors for group rings and Tambara-Yamagami rings, the
// tensor product and direct sum operations, and exact Frobenius-Perron data
// with an integrality certificate.

#include "abelian.hpp"

#include <cmath>
#include <numeric>
#include <optional>

namespace deligne {

struct FusionRing {
    std::vector<std::string> labels;
    std::vector<std::size_t> unit;                 // basis indices of the unit decomposition
    std::optional<std::vector<std::size_t>> dual;  // duality involution when one exists
    std::vector<Mat> N;                            // structure constants N[i][j][k]

    std::size_t rank() const { return labels.size(); }
};

// structural well-formedness (shapes and index ranges); axiom violations are
// reported by validate(), but a malformed container is a caller error
inline void require_shape(const FusionRing& r) {
    std::size_t n = r.rank();
    if (n == 0) throw std::invalid_argument("fusion ring: empty basis");
    if (r.N.size() != n) throw std::invalid_argument("fusion ring: N must have one matrix per basis element");
    for (const auto& m : r.N) {
        if (m.size() != n) throw std::invalid_argument("fusion ring: ragged structure constants");
        for (const auto& row : m)
            if (row.size() != n) throw std::invalid_argument("fusion ring: ragged structure constants");
    }
    if (r.unit.empty()) throw std::invalid_argument("fusion ring: empty unit set");
    std::set<std::size_t> seen;
    for (std::size_t u : r.unit) {
        if (u >= n) throw std::invalid_argument("fusion ring: unit index out of range");
        if (!seen.insert(u).second) throw std::invalid_argument("fusion ring: repeated unit index");
    }
    if (r.dual) {
        if (r.dual->size() != n) throw std::invalid_argument("fusion ring: dual map must cover the basis");
        for (std::size_t d : *r.dual)
            if (d >= n) throw std::invalid_argument("fusion ring: dual index out of range");
    }
}

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations; // first few failures, pinpointed
};

inline ValidationReport validate(const FusionRing& r) {
    require_shape(r);
    std::size_t n = r.rank();
    ValidationReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        if (rep.violations.size() < 10) rep.violations.push_back(std::move(msg));
        return rep.violations.size() >= 10;
    };
    auto idx4 = [](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "," +
               std::to_string(l) + ")";
    };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (r.N[i][j][k] < 0)
                    if (fail("negative structure constant at (" + std::to_string(i) + "," +
                             std::to_string(j) + "," + std::to_string(k) + ")"))
                        return rep;

    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            i64 left = 0, right = 0;
            for (std::size_t u : r.unit) {
                left += r.N[u][j][k];
                right += r.N[j][u][k];
            }
            i64 want = (j == k) ? 1 : 0;
            if (left != want)
                if (fail("left unit law fails at (" + std::to_string(j) + "," + std::to_string(k) + ")"))
                    return rep;
            if (right != want)
                if (fail("right unit law fails at (" + std::to_string(j) + "," + std::to_string(k) + ")"))
                    return rep;
        }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    i64 lhs = 0, rhs = 0;
                    for (std::size_t m = 0; m < n; ++m) {
                        lhs += r.N[i][j][m] * r.N[m][k][l];
                        rhs += r.N[j][k][m] * r.N[i][m][l];
                    }
                    if (lhs != rhs)
                        if (fail("associativity fails at " + idx4(i, j, k, l))) return rep;
                }

    if (r.dual) {
        const auto& d = *r.dual;
        for (std::size_t i = 0; i < n; ++i)
            if (d[d[i]] != i)
                if (fail("dual map is not an involution at " + std::to_string(i))) return rep;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                i64 got = 0;
                for (std::size_t u : r.unit) got += r.N[i][j][u];
                i64 want = (j == d[i]) ? 1 : 0;
                if (got != want)
                    if (fail("duality law fails at (" + std::to_string(i) + "," + std::to_string(j) + ")"))
                        return rep;
            }
    }
    return rep;
}

inline void require_valid(const FusionRing& r) {
    ValidationReport rep = validate(r);
    if (!rep.ok) throw std::invalid_argument("fusion ring axioms violated: " + rep.violations.front());
}

// (M_i)[j][k] = N[i][j][k], the matrix of left multiplication by basis element i
inline Mat left_mult_matrix(const FusionRing& r, std::size_t i) { return r.N[i]; }

inline FusionRing group_ring(const FiniteAbelianGroup& g) {
    FusionRing r;
    std::size_t n = static_cast<std::size_t>(g.order);
    r.labels.resize(n);
    r.N.assign(n, Mat(n, Vec(n, 0)));
    r.unit = {0};
    std::vector<std::size_t> dual(n);
    for (i64 i = 0; i < g.order; ++i) {
        r.labels[static_cast<std::size_t>(i)] = element_name(g, i);
        dual[static_cast<std::size_t>(i)] = static_cast<std::size_t>(element_neg(g, i));
        for (i64 j = 0; j < g.order; ++j)
            r.N[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
               [static_cast<std::size_t>(element_add(g, i, j))] = 1;
    }
    r.dual = std::move(dual);
    return r;
}

// rank |G| + 1: the group elements plus one object m with g*m = m*g = m and
// m*m the sum of all group elements
inline FusionRing tambara_yamagami(const FiniteAbelianGroup& g) {
    if (g.order >= fusion_cap()) throw std::invalid_argument("tambara_yamagami: rank exceeds cap");
    FusionRing r;
    std::size_t n = static_cast<std::size_t>(g.order) + 1;
    std::size_t m = n - 1;
    r.labels.resize(n);
    r.N.assign(n, Mat(n, Vec(n, 0)));
    r.unit = {0};
    std::vector<std::size_t> dual(n);
    dual[m] = m;
    r.labels[m] = "m";
    for (i64 i = 0; i < g.order; ++i) {
        std::size_t si = static_cast<std::size_t>(i);
        r.labels[si] = element_name(g, i);
        dual[si] = static_cast<std::size_t>(element_neg(g, i));
        for (i64 j = 0; j < g.order; ++j)
            r.N[si][static_cast<std::size_t>(j)][static_cast<std::size_t>(element_add(g, i, j))] = 1;
        r.N[si][m][m] = 1;
        r.N[m][si][m] = 1;
        r.N[m][m][si] = 1;
    }
    r.dual = std::move(dual);
    return r;
}

// tensor product: basis pairs, structure constants multiply; pair (i, j) of
// ranks (ra, rb) flattens to i * rb + j
inline FusionRing deligne_product(const FusionRing& a, const FusionRing& b) {
    require_shape(a);
    require_shape(b);
    std::size_t ra = a.rank(), rb = b.rank();
    if (static_cast<i64>(ra) > fusion_cap() / static_cast<i64>(rb))
        throw std::invalid_argument("deligne_product: rank exceeds cap");
    std::size_t n = ra * rb;
    FusionRing r;
    r.labels.resize(n);
    r.N.assign(n, Mat(n, Vec(n, 0)));
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < rb; ++j)
            r.labels[i * rb + j] = a.labels[i] + "⊠" + b.labels[j];
    for (std::size_t ua : a.unit)
        for (std::size_t ub : b.unit) r.unit.push_back(ua * rb + ub);
    std::sort(r.unit.begin(), r.unit.end());
    if (a.dual && b.dual) {
        std::vector<std::size_t> dual(n);
        for (std::size_t i = 0; i < ra; ++i)
            for (std::size_t j = 0; j < rb; ++j)
                dual[i * rb + j] = (*a.dual)[i] * rb + (*b.dual)[j];
        r.dual = std::move(dual);
    }
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < rb; ++j)
            for (std::size_t k = 0; k < ra; ++k)
                for (std::size_t l = 0; l < rb; ++l)
                    for (std::size_t p = 0; p < ra; ++p)
                        for (std::size_t q = 0; q < rb; ++q) {
                            i64 c = a.N[i][k][p] * b.N[j][l][q];
                            if (c) r.N[i * rb + j][k * rb + l][p * rb + q] = c;
                        }
    return r;
}

// direct sum: block-diagonal structure constants, unit sets concatenate; a
// label from b that collides with one from a picks up primes until distinct
inline FusionRing direct_sum(const FusionRing& a, const FusionRing& b) {
    require_shape(a);
    require_shape(b);
    std::size_t ra = a.rank(), rb = b.rank();
    if (static_cast<i64>(ra) + static_cast<i64>(rb) > fusion_cap())
        throw std::invalid_argument("direct_sum: rank exceeds cap");
    std::size_t n = ra + rb;
    FusionRing r;
    r.labels = a.labels;
    std::set<std::string> used(a.labels.begin(), a.labels.end());
    for (const std::string& lb : b.labels) {
        std::string cand = lb;
        while (!used.insert(cand).second) cand += "'";
        r.labels.push_back(cand);
    }
    r.unit = a.unit;
    for (std::size_t u : b.unit) r.unit.push_back(u + ra);
    r.N.assign(n, Mat(n, Vec(n, 0)));
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < ra; ++j)
            for (std::size_t k = 0; k < ra; ++k) r.N[i][j][k] = a.N[i][j][k];
    for (std::size_t i = 0; i < rb; ++i)
        for (std::size_t j = 0; j < rb; ++j)
            for (std::size_t k = 0; k < rb; ++k) r.N[i + ra][j + ra][k + ra] = b.N[i][j][k];
    if (a.dual && b.dual) {
        std::vector<std::size_t> dual(n);
        for (std::size_t i = 0; i < ra; ++i) dual[i] = (*a.dual)[i];
        for (std::size_t i = 0; i < rb; ++i) dual[i + ra] = (*b.dual)[i] + ra;
        r.dual = std::move(dual);
    }
    return r;
}

inline bool is_pointed(const FusionRing& r) {
    std::size_t n = r.rank();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            i64 row = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (r.N[i][j][k] < 0 || r.N[i][j][k] > 1) return false;
                row += r.N[i][j][k];
            }
            if (row != 1) return false;
        }
    // each left multiplication must also be injective on the basis
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            i64 col = 0;
            for (std::size_t j = 0; j < n; ++j) col += r.N[i][j][k];
            if (col != 1) return false;
        }
    return true;
}

// indecomposable blocks of the basis: i, j, k are glued whenever N[i][j][k] > 0,
// which separates exactly the direct summands
inline std::vector<std::vector<std::size_t>> components(const FusionRing& r) {
    std::size_t n = r.rank();
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](std::size_t x, std::size_t y) { parent[find(x)] = find(y); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (r.N[i][j][k] > 0) {
                    unite(i, j);
                    unite(i, k);
                }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
}

struct FPData {
    std::vector<double> dims; // Frobenius-Perron dimension of each basis element
    double total = 0;         // sum of squared dimensions
    bool integral = false;    // true when the total is certified to be an exact integer
    i64 total_int = 0;        // that integer, when certified
};

namespace detail {

// largest eigenvalue of a nonnegative integer matrix by power iteration on
// M + I (the shift makes the dominant eigenvalue unique), Rayleigh quotient
// convergence to within 1e-12 relative
inline double perron_root(const Mat& m) {
    std::size_t n = m.size();
    std::vector<double> v(n, 1.0), w(n);
    double lam = 0;
    for (int it = 0; it < 10000; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            double acc = v[i];
            for (std::size_t j = 0; j < n; ++j) acc += static_cast<double>(m[i][j]) * v[j];
            w[i] = acc;
        }
        double num = 0, den = 0, norm = 0;
        for (std::size_t i = 0; i < n; ++i) {
            num += w[i] * v[i];
            den += v[i] * v[i];
            norm = std::max(norm, std::abs(w[i]));
        }
        double next = num / den;
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
        if (it > 0 && std::abs(next - lam) < 1e-12 * std::max(1.0, std::abs(next)))
            return std::max(next - 1.0, 0.0);
        lam = next;
    }
    throw std::runtime_error("perron_root: power iteration did not converge");
}

// exact witness that t is an eigenvalue of C = sum_i M_{i*} M_i restricted to
// one indecomposable block; C is integral, so det(C - t I) = 0 decides it
inline bool certify_block_total(const FusionRing& r, const std::vector<std::size_t>& block, i64 t) {
    if (!r.dual) return false;
    std::size_t units_here = 0;
    for (std::size_t u : r.unit)
        if (std::find(block.begin(), block.end(), u) != block.end()) ++units_here;
    if (units_here != 1) return false;
    for (std::size_t i : block)
        if (std::find(block.begin(), block.end(), (*r.dual)[i]) == block.end()) return false;

    std::size_t b = block.size();
    Mat c(b, Vec(b, 0));
    for (std::size_t i : block)
        for (std::size_t x = 0; x < b; ++x)
            for (std::size_t y = 0; y < b; ++y)
                for (std::size_t k = 0; k < b; ++k)
                    c[x][y] += r.N[(*r.dual)[i]][block[x]][block[k]] * r.N[i][block[k]][block[y]];

    // dual reverses multiplication order up to transpose, so c is symmetric;
    // subtract t from the diagonal and test the determinant exactly
    for (std::size_t x = 0; x < b; ++x) c[x][x] -= t;
    return det_exact(c) == 0;
}

} // namespace detail

inline FPData fp_data(const FusionRing& r) {
    require_shape(r);
    std::size_t n = r.rank();
    FPData out;
    out.dims.resize(n);

    if (is_pointed(r)) {
        for (std::size_t i = 0; i < n; ++i) out.dims[i] = 1.0;
        out.total = static_cast<double>(n);
        out.integral = true;
        out.total_int = static_cast<i64>(n);
        return out;
    }

    for (std::size_t i = 0; i < n; ++i) out.dims[i] = detail::perron_root(r.N[i]);
    for (double d : out.dims) out.total += d * d;

    out.integral = true;
    out.total_int = 0;
    for (const auto& block : components(r)) {
        double bt = 0;
        for (std::size_t i : block) bt += out.dims[i] * out.dims[i];
        i64 t = std::llround(bt);
        if (std::abs(bt - static_cast<double>(t)) > 1e-6 || !detail::certify_block_total(r, block, t)) {
            out.integral = false;
            out.total_int = 0;
            return out;
        }
        out.total_int += t;
    }
    return out;
}

} // namespace deligne
