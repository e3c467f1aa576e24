#pragma once

// Second cohomology of finite abelian groups with coefficients in the units
// of a field. For H with cyclic factors n_1, ..., n_r the group H^2(H, k*) is
// the product over pairs i < j of cyclic groups of order gcd(n_i, n_j) with
// all factors of char(k) removed. A brute-force cocycle count over small
// groups cross-checks the formula.

#include "abelian.hpp"

#include <array>
#include <numeric>

namespace deligne {

// remove every factor of p from n (p = 0 means characteristic zero: no-op)
inline i64 strip_char(i64 n, i64 field_char) {
    if (field_char <= 1) return n;
    while (n % field_char == 0) n /= field_char;
    return n;
}

inline void require_valid_char(i64 field_char) {
    if (field_char == 0) return;
    if (!is_prime(field_char))
        throw std::invalid_argument("field characteristic must be 0 or a prime");
}

inline i64 group_exponent(const FiniteAbelianGroup& g) {
    i64 e = 1;
    for (i64 n : g.orders) e = std::lcm(e, n);
    return e;
}

// cyclic orders of H^2(H, k*), ascending, trivial factors dropped
inline Vec h2_invariants(const Vec& orders, i64 field_char) {
    require_valid_char(field_char);
    Vec out;
    for (std::size_t i = 0; i < orders.size(); ++i)
        for (std::size_t j = i + 1; j < orders.size(); ++j) {
            i64 d = strip_char(std::gcd(orders[i], orders[j]), field_char);
            if (d > 1) out.push_back(d);
        }
    std::sort(out.begin(), out.end());
    return out;
}

inline Vec h2_invariants(const FiniteAbelianGroup& g, i64 field_char) {
    return h2_invariants(g.orders, field_char);
}

// explicit list of cohomology classes, indexed by exponent tuples over the
// cyclic pair factors; the trivial class comes first
struct CocycleClassGroup {
    std::vector<std::array<std::size_t, 2>> pairs; // factor index pairs with modulus > 1
    Vec moduli;                                    // matching cyclic orders
    std::vector<Vec> class_exponents;              // one tuple per class, all-zero first
    std::vector<std::string> labels;               // "triv", then "ν" or "ν1", "ν2", ...
};

inline CocycleClassGroup h2_classes(const Vec& orders, i64 field_char) {
    require_valid_char(field_char);
    CocycleClassGroup out;
    i64 total = 1;
    for (std::size_t i = 0; i < orders.size(); ++i)
        for (std::size_t j = i + 1; j < orders.size(); ++j) {
            i64 d = strip_char(std::gcd(orders[i], orders[j]), field_char);
            if (d > 1) {
                if (total > fusion_cap() / d)
                    throw std::invalid_argument("h2_classes: class count exceeds cap");
                out.pairs.push_back({i, j});
                out.moduli.push_back(d);
                total *= d;
            }
        }
    Vec t(out.moduli.size(), 0);
    for (i64 c = 0; c < total; ++c) {
        out.class_exponents.push_back(t);
        for (std::size_t k = 0; k < t.size(); ++k) {
            if (++t[k] < out.moduli[k]) break;
            t[k] = 0;
        }
    }
    out.labels.resize(out.class_exponents.size());
    for (std::size_t c = 0; c < out.labels.size(); ++c) {
        if (c == 0)
            out.labels[c] = "triv";
        else if (out.labels.size() == 2)
            out.labels[c] = "ν";
        else
            out.labels[c] = "ν" + std::to_string(c);
    }
    return out;
}

inline CocycleClassGroup h2_classes(const FiniteAbelianGroup& g, i64 field_char) {
    return h2_classes(g.orders, field_char);
}

// Independent count of |H^2(H, k*)| by linear algebra over Z/m. Every class
// has a representative cocycle valued in the m-th roots of unity for
// m = exponent(H) * |H| with char factors stripped, and the coboundaries of
// k*-valued cochains whose coboundary lands in those roots number exactly
// m^|H| (such cochains are homomorphisms mod the roots, m^|H| lifts each,
// and the kernel of d is the |Hom(H, k*)| homomorphisms). So the class count
// is |Z^2(H, Z/m)| / m^|H|, counted exactly via the prime-local kernel.
inline i64 h2_brute_force_count(const FiniteAbelianGroup& g, i64 field_char) {
    require_valid_char(field_char);
    if (g.order > 16)
        throw std::invalid_argument("h2_brute_force_count: group order capped at 16");
    i64 h = g.order;
    i64 m = strip_char(group_exponent(g) * h, field_char);
    if (m <= 1) return 1;

    // unknowns: w(a,b) for a,b in H, flattened a*h + b
    std::size_t n = static_cast<std::size_t>(h * h);
    Mat rows;
    rows.reserve(static_cast<std::size_t>(h * h * h));
    for (i64 a = 0; a < h; ++a)
        for (i64 b = 0; b < h; ++b)
            for (i64 c = 0; c < h; ++c) {
                // w(b,c) - w(a+b,c) + w(a,b+c) - w(a,b) = 0
                Vec row(n, 0);
                i64 ab = element_add(g, a, b), bc = element_add(g, b, c);
                row[static_cast<std::size_t>(b * h + c)] += 1;
                row[static_cast<std::size_t>(ab * h + c)] -= 1;
                row[static_cast<std::size_t>(a * h + bc)] += 1;
                row[static_cast<std::size_t>(a * h + b)] -= 1;
                bool nonzero = false;
                for (i64 x : row) nonzero |= x != 0;
                if (nonzero) rows.push_back(std::move(row));
            }
    auto factored = kernel_count_factored(rows, n, m);

    // divide by m^h, prime by prime
    i64 count = 1;
    for (auto [p, e] : factored) {
        long long denom = static_cast<long long>(detail::val_at(m, p, 64)) * h;
        if (e < denom) throw std::logic_error("h2_brute_force_count: kernel smaller than coboundaries");
        for (long long k = denom; k < e; ++k) count *= p;
    }
    return count;
}

} // namespace deligne
