#pragma once

// Independent reference implementations used only by the tests. Each one
// computes a quantity the library also computes, by a different route, so
// agreement is meaningful.

#include <deligne/deligne.hpp>

#include <random>

namespace oracles {

using namespace deligne;

// largest eigenvalue of a 1x1, 2x2, or 3x3 nonnegative integer matrix from
// the characteristic polynomial in closed form (quadratic formula, Cardano)
inline double largest_eigenvalue_closed_form(const Mat& m) {
    std::size_t n = m.size();
    if (n == 1) return static_cast<double>(m[0][0]);
    if (n == 2) {
        double tr = static_cast<double>(m[0][0] + m[1][1]);
        double det = static_cast<double>(m[0][0] * m[1][1] - m[0][1] * m[1][0]);
        return tr / 2 + std::sqrt(std::max(tr * tr / 4 - det, 0.0));
    }
    if (n != 3) throw std::invalid_argument("closed form eigenvalues only up to 3x3");
    auto minor2 = [&](std::size_t i, std::size_t j) {
        return static_cast<double>(m[i][i] * m[j][j] - m[i][j] * m[j][i]);
    };
    double c2 = static_cast<double>(m[0][0] + m[1][1] + m[2][2]);
    double c1 = minor2(0, 1) + minor2(0, 2) + minor2(1, 2);
    double c0 = static_cast<double>(det_exact(m).convert_to<long long>());
    // roots of x^3 - c2 x^2 + c1 x - c0; depress with x = t + c2/3
    double p = c1 - c2 * c2 / 3;
    double q = -c0 + c1 * c2 / 3 - 2 * c2 * c2 * c2 / 27;
    double shift = c2 / 3;
    double disc = q * q / 4 + p * p * p / 27;
    // a repeated root makes disc exactly zero in exact arithmetic; demand a
    // clearly positive value at problem scale before trusting the one-real-
    // root branch, since at disc = 0 it returns the simple root, which need
    // not be the largest
    double scale = std::max({1.0, q * q, std::abs(p * p * p)});
    if (disc > 1e-9 * scale) {
        double s = std::sqrt(disc);
        double t = std::cbrt(-q / 2 + s) + std::cbrt(-q / 2 - s);
        return t + shift; // single real root, necessarily the spectral radius
    }
    if (p >= 0) return shift; // triple root at the shift point
    double r = 2 * std::sqrt(-p / 3);
    double arg = std::clamp(3 * q / (2 * p) * std::sqrt(-3 / p), -1.0, 1.0);
    return r * std::cos(std::acos(arg) / 3) + shift; // largest of three real roots
}

// Kronecker product built by materializing the pair list first and indexing
// into it, instead of the direct four-loop formula
inline Mat kronecker_by_pairs(const Mat& a, const Mat& b) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) pairs.push_back({i, j});
    Mat out(pairs.size(), Vec(pairs.size(), 0));
    for (std::size_t r = 0; r < pairs.size(); ++r)
        for (std::size_t c = 0; c < pairs.size(); ++c)
            out[r][c] = a[pairs[r].first][pairs[c].first] * b[pairs[r].second][pairs[c].second];
    return out;
}

// exhaustive search for a basis bijection identifying two rings (rank <= 8);
// labels are ignored, units must map onto units, duals must be conjugate
inline bool isomorphic_rings(const FusionRing& a, const FusionRing& b) {
    std::size_t n = a.rank();
    if (b.rank() != n || n > 8) return false;
    if (a.dual.has_value() != b.dual.has_value()) return false;
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::set<std::size_t> unit_b(b.unit.begin(), b.unit.end());
    do {
        std::set<std::size_t> mapped;
        for (std::size_t u : a.unit) mapped.insert(perm[u]);
        if (mapped != unit_b) continue;
        bool ok = true;
        if (a.dual)
            for (std::size_t i = 0; i < n && ok; ++i)
                ok = perm[(*a.dual)[i]] == (*b.dual)[perm[i]];
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j)
                for (std::size_t k = 0; k < n && ok; ++k)
                    ok = a.N[i][j][k] == b.N[perm[i]][perm[j]][perm[k]];
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// solution count of a homogeneous system over Z/m by trying every tuple
inline i64 kernel_count_exhaustive(const Mat& rows, std::size_t n, i64 m) {
    i64 total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > 2000000 / m) throw std::invalid_argument("kernel oracle: search space too large");
        total *= m;
    }
    i64 count = 0;
    Vec x(n, 0);
    for (i64 t = 0; t < total; ++t) {
        i64 rem = t;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = rem % m;
            rem /= m;
        }
        bool ok = true;
        for (const auto& row : rows) {
            i64 acc = 0;
            for (std::size_t i = 0; i < n; ++i) acc = (acc + row[i] % m * x[i]) % m;
            if (mod_pos(acc, m) != 0) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
    }
    return count;
}

inline i64 factored_to_int(const std::vector<std::pair<i64, long long>>& f) {
    i64 out = 1;
    for (auto [p, e] : f)
        for (long long k = 0; k < e; ++k) out *= p;
    return out;
}

// the sampling pool for randomized ring properties: group rings of every
// abelian type of order <= 8, Tambara-Yamagami rings over groups of order
// <= 4, and direct sums of random pairs from those
inline std::vector<FusionRing> sample_ring_pool(std::mt19937& rng) {
    std::vector<FusionRing> pool;
    for (i64 n = 1; n <= 8; ++n)
        for (const Vec& t : abelian_types(n)) pool.push_back(group_ring(group_new(t)));
    for (i64 n = 1; n <= 4; ++n)
        for (const Vec& t : abelian_types(n)) pool.push_back(tambara_yamagami(group_new(t)));
    std::size_t base = pool.size();
    std::uniform_int_distribution<std::size_t> pick(0, base - 1);
    for (int k = 0; k < 15; ++k)
        pool.push_back(direct_sum(pool[pick(rng)], pool[pick(rng)]));
    return pool;
}

} // namespace oracles
