#pragma once

// Exact integer linear algebra shared by the rest of the library: Hermite
// normal form for lattice bases, Smith invariant factors, fraction-free
// determinants and ranks, and solution counting for homogeneous systems
// over Z/m. Matrices here are small and dense; clarity beats asymptotics.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace deligne {

using i64 = long long;
using Vec = std::vector<i64>;
using Mat = std::vector<Vec>;

using bigint = boost::multiprecision::cpp_int;

inline i64 mod_pos(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

// extended euclid: returns g = gcd(a, b) >= 0 with a*x + b*y = g
inline i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
    if (b == 0) {
        x = a < 0 ? -1 : 1;
        y = 0;
        return a < 0 ? -a : a;
    }
    i64 x1, y1;
    i64 g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

// Row-style Hermite normal form of the lattice spanned by `rows` inside Z^n.
// Callers always pass lattices of full column rank (ours contain a diagonal
// of cyclic orders), so the result is n x n upper triangular with positive
// diagonal and every entry above a pivot reduced into [0, pivot).
inline Mat hermite_form(Mat rows, std::size_t n) {
    if (n == 0) return {};
    for (auto& r : rows)
        if (r.size() != n) throw std::invalid_argument("hermite_form: ragged row");

    for (std::size_t col = 0, top = 0; col < n; ++col, ++top) {
        // combine rows below `top` until only rows[top] is nonzero at col
        for (std::size_t i = top + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            if (rows[top][col] == 0) {
                std::swap(rows[top], rows[i]);
                continue;
            }
            i64 x, y;
            i64 a = rows[top][col], b = rows[i][col];
            i64 g = ext_gcd(a, b, x, y);
            Vec combined(n), cleared(n);
            for (std::size_t j = 0; j < n; ++j) {
                combined[j] = x * rows[top][j] + y * rows[i][j];
                cleared[j] = (a / g) * rows[i][j] - (b / g) * rows[top][j];
            }
            rows[top] = std::move(combined);
            rows[i] = std::move(cleared);
        }
        if (rows.size() <= top || rows[top][col] == 0)
            throw std::invalid_argument("hermite_form: lattice not of full rank");
        if (rows[top][col] < 0)
            for (auto& v : rows[top]) v = -v;
    }
    rows.resize(n);
    // reduce entries above each pivot, left to right: subtracting a multiple
    // of pivot row i only touches columns >= i, which are not yet reduced
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < i; ++k) {
            i64 q = rows[k][i] / rows[i][i];
            if (rows[k][i] - q * rows[i][i] < 0) --q;
            if (q != 0)
                for (std::size_t j = 0; j < n; ++j) rows[k][j] -= q * rows[i][j];
        }
    }
    return rows;
}

// Smith normal form invariant factors d1 | d2 | ... of an integer matrix,
// nonnegative, ones retained, trailing zeros dropped.
inline std::vector<i64> smith_invariants(Mat a) {
    std::size_t m = a.size();
    std::size_t n = m ? a[0].size() : 0;
    std::vector<i64> out;
    std::size_t s = 0;
    while (s < m && s < n) {
        // locate the minimal nonzero entry of the trailing submatrix
        std::size_t pi = s, pj = s;
        i64 best = 0;
        for (std::size_t i = s; i < m; ++i)
            for (std::size_t j = s; j < n; ++j) {
                i64 v = a[i][j] < 0 ? -a[i][j] : a[i][j];
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;
        std::swap(a[s], a[pi]);
        for (std::size_t i = s; i < m; ++i) std::swap(a[i][s], a[i][pj]);

        bool dirty = false;
        for (std::size_t i = s + 1; i < m; ++i) {
            i64 q = a[i][s] / a[s][s];
            if (q != 0)
                for (std::size_t j = s; j < n; ++j) a[i][j] -= q * a[s][j];
            if (a[i][s] != 0) dirty = true;
        }
        for (std::size_t j = s + 1; j < n; ++j) {
            i64 q = a[s][j] / a[s][s];
            if (q != 0)
                for (std::size_t i = s; i < m; ++i) a[i][j] -= q * a[i][s];
            if (a[s][j] != 0) dirty = true;
        }
        if (dirty) continue; // new smaller entries appeared, redo the pivot hunt
        // pivot must divide the rest of the submatrix
        bool divides = true;
        for (std::size_t i = s + 1; i < m && divides; ++i)
            for (std::size_t j = s + 1; j < n; ++j)
                if (a[i][j] % a[s][s] != 0) {
                    for (std::size_t jj = s; jj < n; ++jj) a[s][jj] += a[i][jj];
                    divides = false;
                    break;
                }
        if (!divides) continue;
        out.push_back(a[s][s] < 0 ? -a[s][s] : a[s][s]);
        ++s;
    }
    return out;
}

// exact determinant by Bareiss fraction-free elimination
inline bigint det_exact(const Mat& a) {
    std::size_t n = a.size();
    if (n == 0) return 1;
    std::vector<std::vector<bigint>> b(n, std::vector<bigint>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("det_exact: not square");
        for (std::size_t j = 0; j < n; ++j) b[i][j] = a[i][j];
    }
    bigint prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (b[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && b[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(b[k], b[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                b[i][j] = (b[i][j] * b[k][k] - b[i][k] * b[k][j]) / prev;
        prev = b[k][k];
    }
    return sign * b[n - 1][n - 1];
}

// exact rank over Q via fraction-free elimination
inline std::size_t rank_exact(const Mat& a) {
    std::size_t m = a.size();
    std::size_t n = m ? a[0].size() : 0;
    std::vector<std::vector<bigint>> b(m, std::vector<bigint>(n));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) b[i][j] = a[i][j];
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t piv = rank;
        while (piv < m && b[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(b[rank], b[piv]);
        for (std::size_t i = rank + 1; i < m; ++i) {
            if (b[i][col] == 0) continue;
            bigint f = b[i][col], p = b[rank][col];
            for (std::size_t j = col; j < n; ++j) b[i][j] = b[i][j] * p - b[rank][j] * f;
        }
        ++rank;
    }
    return rank;
}

inline std::vector<std::pair<i64, int>> factorize(i64 m) {
    std::vector<std::pair<i64, int>> out;
    for (i64 p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

namespace detail {

inline int val_at(i64 x, i64 p, int cap) {
    int v = 0;
    while (v < cap && x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

// modular inverse of a unit mod pe
inline i64 inv_mod(i64 a, i64 pe) {
    i64 x, y;
    i64 g = ext_gcd(mod_pos(a, pe), pe, x, y);
    if (g != 1) throw std::logic_error("inv_mod: not a unit");
    return mod_pos(x, pe);
}

// Incremental row reduction over Z/p^e. Keeps one pivot row per column,
// normalized so the pivot entry is exactly p^v; preserves the row space.
struct LocalEchelon {
    i64 p, pe;
    int e;
    std::size_t n;
    std::vector<Vec> rows;
    std::vector<std::size_t> col;
    std::vector<int> val;

    LocalEchelon(i64 p_, int e_, std::size_t n_) : p(p_), e(e_), n(n_) {
        pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
    }

    void add_row(Vec r) {
        for (auto& x : r) x = mod_pos(x, pe);
        for (std::size_t idx = 0; idx < rows.size(); ++idx) {
            std::size_t c = col[idx];
            while (r[c] != 0) {
                int vr = val_at(r[c], p, e);
                if (vr >= val[idx]) {
                    i64 q = r[c] / ipow(val[idx]);
                    for (std::size_t j = 0; j < n; ++j)
                        r[j] = mod_pos(r[j] - q * rows[idx][j], pe);
                } else {
                    // the incoming row is a better pivot for this column;
                    // swap and push the displaced row back through from the top
                    normalize(r, c, vr);
                    std::swap(r, rows[idx]);
                    std::swap(val[idx], vr); // vr now holds the displaced valuation, unused
                    add_row(std::move(r));
                    return;
                }
            }
        }
        std::size_t best_col = n;
        int best_val = e;
        for (std::size_t j = 0; j < n; ++j)
            if (r[j] != 0) {
                int v = val_at(r[j], p, e);
                if (v < best_val) {
                    best_val = v;
                    best_col = j;
                }
            }
        if (best_col == n) return; // reduced to zero
        normalize(r, best_col, best_val);
        rows.push_back(std::move(r));
        col.push_back(best_col);
        val.push_back(best_val);
    }

    i64 ipow(int v) const {
        i64 r = 1;
        for (int i = 0; i < v; ++i) r *= p;
        return r;
    }

    void normalize(Vec& r, std::size_t c, int v) {
        i64 unit = r[c] / ipow(v);
        i64 inv = inv_mod(unit, pe);
        for (auto& x : r) x = mod_pos(x * inv, pe);
    }
};

// diagonal valuations of the local Smith form over Z/p^e
inline std::vector<int> local_smith_vals(std::vector<Vec> a, i64 p, int e, i64 pe) {
    std::vector<int> vals;
    std::size_t m = a.size();
    std::size_t n = m ? a[0].size() : 0;
    for (std::size_t s = 0; s < std::min(m, n); ++s) {
        std::size_t pi = s, pj = s;
        int best = e;
        for (std::size_t i = s; i < m; ++i)
            for (std::size_t j = s; j < n; ++j)
                if (a[i][j] != 0) {
                    int v = val_at(a[i][j], p, e);
                    if (v < best) {
                        best = v;
                        pi = i;
                        pj = j;
                    }
                }
        if (best == e) break; // submatrix vanished mod p^e
        std::swap(a[s], a[pi]);
        for (std::size_t i = 0; i < m; ++i) std::swap(a[i][s], a[i][pj]);
        i64 pv = 1;
        for (int i = 0; i < best; ++i) pv *= p;
        i64 inv = inv_mod(a[s][s] / pv, pe);
        for (std::size_t j = s; j < n; ++j) a[s][j] = mod_pos(a[s][j] * inv, pe);
        for (std::size_t i = s + 1; i < m; ++i) {
            if (a[i][s] == 0) continue;
            i64 q = a[i][s] / pv;
            for (std::size_t j = s; j < n; ++j) a[i][j] = mod_pos(a[i][j] - q * a[s][j], pe);
        }
        for (std::size_t j = s + 1; j < n; ++j) {
            if (a[s][j] == 0) continue;
            i64 q = a[s][j] / pv;
            for (std::size_t i = s; i < m; ++i) a[i][j] = mod_pos(a[i][j] - q * a[i][s], pe);
        }
        vals.push_back(best);
    }
    return vals;
}

} // namespace detail

// Number of solutions x in (Z/m)^n of (rows)·x = 0 (mod m), returned in
// factored form {(p, exponent), ...} because the raw count routinely
// overflows 64 bits. m = 1 or an empty system give the empty factorization.
inline std::vector<std::pair<i64, long long>> kernel_count_factored(const Mat& rows,
                                                                    std::size_t n, i64 m) {
    std::vector<std::pair<i64, long long>> out;
    if (m <= 1) return out;
    for (auto [p, e] : factorize(m)) {
        detail::LocalEchelon ech(p, e, n);
        for (const auto& r : rows) {
            if (r.size() != n) throw std::invalid_argument("kernel_count_factored: ragged row");
            ech.add_row(r);
        }
        auto vals = detail::local_smith_vals(ech.rows, p, e, ech.pe);
        long long exp = static_cast<long long>(e) * (static_cast<long long>(n) - vals.size());
        for (int v : vals) exp += v;
        out.emplace_back(p, exp);
    }
    return out;
}

} // namespace deligne
