#pragma once

// Semisimple algebras over the reals or an algebraically closed field,
// presented by their Wedderburn decomposition into matrix algebras over a
// division algebra (R, C, or H in the real case). Tensor products follow the
// classical rules; a brute-force model multiplies structure constants out and
// measures the center exactly.

#include "int_linalg.hpp"

#include <array>
#include <optional>
#include <string>

namespace deligne {

struct FieldDescriptor {
    bool real = false; // true: the real numbers; false: algebraically closed
    i64 char_p = 0;    // characteristic, 0 unless an ACp field

    bool operator==(const FieldDescriptor&) const = default;
};

inline std::string field_to_string(const FieldDescriptor& f) {
    if (f.real) return "R";
    if (f.char_p == 0) return "AC0";
    return "ACp:" + std::to_string(f.char_p);
}

inline FieldDescriptor field_from_string(const std::string& s) {
    if (s == "R") return {true, 0};
    if (s == "AC0") return {false, 0};
    if (s.rfind("ACp:", 0) == 0) {
        i64 p = 0;
        try {
            p = std::stoll(s.substr(4));
        } catch (const std::exception&) {
            throw std::invalid_argument("field descriptor: bad characteristic in '" + s + "'");
        }
        if (!is_prime(p)) throw std::invalid_argument("field descriptor: characteristic must be prime");
        return {false, p};
    }
    throw std::invalid_argument("field descriptor: expected R, AC0, or ACp:<p>, got '" + s + "'");
}

enum class DivisionKind { Base, Cplx, Quat }; // base field itself, C, or H

inline char division_letter(DivisionKind d, bool real) {
    switch (d) {
    case DivisionKind::Base: return real ? 'R' : 'K';
    case DivisionKind::Cplx: return 'C';
    case DivisionKind::Quat: return 'H';
    }
    return '?';
}

inline i64 division_dim(DivisionKind d) {
    switch (d) {
    case DivisionKind::Cplx: return 2;
    case DivisionKind::Quat: return 4;
    default: return 1;
    }
}

inline i64 division_center_dim(DivisionKind d) { return d == DivisionKind::Cplx ? 2 : 1; }

struct SimpleFactor {
    i64 n = 1; // matrix size
    DivisionKind d = DivisionKind::Base;

    bool operator==(const SimpleFactor&) const = default;
};

struct SemisimpleAlgebra {
    FieldDescriptor field;
    std::vector<SimpleFactor> factors;
};

inline void require_algebra_shape(const SemisimpleAlgebra& a) {
    for (const auto& f : a.factors) {
        if (f.n < 1) throw std::invalid_argument("semisimple algebra: matrix size must be >= 1");
        if (!a.field.real && f.d != DivisionKind::Base)
            throw std::invalid_argument(
                "semisimple algebra: only the base division algebra exists over a closed field");
    }
}

inline i64 factor_dim(const SimpleFactor& f) { return f.n * f.n * division_dim(f.d); }

inline i64 algebra_dim(const SemisimpleAlgebra& a) {
    i64 total = 0;
    for (const auto& f : a.factors) total += factor_dim(f);
    return total;
}

inline i64 center_dim(const SemisimpleAlgebra& a) {
    i64 total = 0;
    for (const auto& f : a.factors) total += division_center_dim(f.d);
    return total;
}

inline std::size_t simple_count(const SemisimpleAlgebra& a) { return a.factors.size(); }

inline std::string factor_to_string(const SimpleFactor& f, bool real) {
    std::string d(1, division_letter(f.d, real));
    if (f.n == 1) return d;
    return "M" + std::to_string(f.n) + "(" + d + ")";
}

// tensor product of two simple real factors per the Brauer group of R:
// R is the identity, C x C doubles, C x H absorbs into C, H x H lands in R
inline std::vector<SimpleFactor> tensor_simple_real(const SimpleFactor& a, const SimpleFactor& b) {
    i64 nm = a.n * b.n;
    if (a.d == DivisionKind::Base) return {{nm, b.d}};
    if (b.d == DivisionKind::Base) return {{nm, a.d}};
    if (a.d == DivisionKind::Cplx && b.d == DivisionKind::Cplx)
        return {{nm, DivisionKind::Cplx}, {nm, DivisionKind::Cplx}};
    if (a.d == DivisionKind::Quat && b.d == DivisionKind::Quat) return {{4 * nm, DivisionKind::Base}};
    return {{2 * nm, DivisionKind::Cplx}}; // one factor C, the other H
}

inline SemisimpleAlgebra tensor(const SemisimpleAlgebra& a, const SemisimpleAlgebra& b) {
    if (!(a.field == b.field))
        throw std::invalid_argument("tensor: algebras live over different fields");
    require_algebra_shape(a);
    require_algebra_shape(b);
    SemisimpleAlgebra out;
    out.field = a.field;
    for (const auto& fa : a.factors)
        for (const auto& fb : b.factors) {
            if (a.field.real) {
                for (auto f : tensor_simple_real(fa, fb)) out.factors.push_back(f);
            } else {
                out.factors.push_back({fa.n * fb.n, DivisionKind::Base});
            }
        }
    return out;
}

namespace detail {

// integer structure constant table of a real semisimple algebra on the basis
// of matrix units tensored with the division algebra basis (1, i, j, k)
struct StructureTable {
    std::size_t dim = 0;
    std::vector<Mat> mult; // mult[a][b][c]: coefficient of basis c in e_a * e_b
};

inline StructureTable structure_table(const SemisimpleAlgebra& alg) {
    // quaternion sign table on (1, i, j, k); complex numbers use the top 2x2
    static const int qidx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int qsgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};

    StructureTable t;
    for (const auto& f : alg.factors) t.dim += static_cast<std::size_t>(factor_dim(f));
    t.mult.assign(t.dim, Mat(t.dim, Vec(t.dim, 0)));

    std::size_t base = 0;
    for (const auto& f : alg.factors) {
        std::size_t n = static_cast<std::size_t>(f.n);
        std::size_t dd = static_cast<std::size_t>(division_dim(f.d));
        auto at = [&](std::size_t p, std::size_t q, std::size_t k) {
            return base + (p * n + q) * dd + k;
        };
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q)
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t s = 0; s < n; ++s) {
                        if (q != r) continue;
                        for (std::size_t k1 = 0; k1 < dd; ++k1)
                            for (std::size_t k2 = 0; k2 < dd; ++k2)
                                t.mult[at(p, q, k1)][at(r, s, k2)][at(p, s, static_cast<std::size_t>(
                                                                             qidx[k1][k2]))] +=
                                    qsgn[k1][k2];
                    }
        base += n * n * dd;
    }
    return t;
}

} // namespace detail

// independent check of the tensor rules on small algebras: multiply the
// structure constants out and return (total dimension, center dimension),
// with the center measured as the exact kernel of the commutator system
inline std::pair<i64, i64> tensor_brute_force(const SemisimpleAlgebra& a, const SemisimpleAlgebra& b) {
    if (!(a.field == b.field) || !a.field.real)
        throw std::invalid_argument("tensor_brute_force: expects two real algebras");
    if (algebra_dim(a) * algebra_dim(b) > 64)
        throw std::invalid_argument("tensor_brute_force: product dimension capped at 64");
    detail::StructureTable ta = detail::structure_table(a), tb = detail::structure_table(b);
    std::size_t n = ta.dim * tb.dim;

    // product structure constants by pairing the factors' tables
    std::vector<Mat> mult(n, Mat(n, Vec(n, 0)));
    for (std::size_t a1 = 0; a1 < ta.dim; ++a1)
        for (std::size_t b1 = 0; b1 < tb.dim; ++b1)
            for (std::size_t a2 = 0; a2 < ta.dim; ++a2)
                for (std::size_t b2 = 0; b2 < tb.dim; ++b2)
                    for (std::size_t a3 = 0; a3 < ta.dim; ++a3)
                        for (std::size_t b3 = 0; b3 < tb.dim; ++b3) {
                            i64 c = ta.mult[a1][a2][a3] * tb.mult[b1][b2][b3];
                            if (c) mult[a1 * tb.dim + b1][a2 * tb.dim + b2][a3 * tb.dim + b3] += c;
                        }

    // z is central iff z * e_t - e_t * z = 0 for every basis element t;
    // collect the linear system rows and count independent ones exactly
    Mat rows;
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t c = 0; c < n; ++c) {
            Vec row(n, 0);
            bool nonzero = false;
            for (std::size_t z = 0; z < n; ++z) {
                i64 v = mult[z][t][c] - mult[t][z][c];
                row[z] = v;
                nonzero |= v != 0;
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    i64 rank = rows.empty() ? 0 : rank_exact(rows);
    return {static_cast<i64>(n), static_cast<i64>(n) - rank};
}

} // namespace deligne
