#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace deligne;

TEST_CASE("group rings and Tambara-Yamagami rings satisfy the axioms") {
    for (i64 n = 1; n <= 12; ++n)
        for (const Vec& type : abelian_types(n)) {
            FusionRing r = group_ring(group_new(type));
            INFO("group ring of order " << n);
            REQUIRE(validate(r).ok);
            REQUIRE(is_pointed(r));
        }
    for (i64 n = 1; n <= 4; ++n)
        for (const Vec& type : abelian_types(n)) {
            FusionRing r = tambara_yamagami(group_new(type));
            REQUIRE(validate(r).ok);
            // over the trivial group the extra object squares to the unit,
            // so that one ring is pointed after all
            REQUIRE(is_pointed(r) == (n == 1));
        }
}

TEST_CASE("validation pinpoints violations") {
    FusionRing r = group_ring(group_new({2}));

    SECTION("negative entry") {
        r.N[1][1][0] = -1;
        ValidationReport rep = validate(r);
        REQUIRE_FALSE(rep.ok);
        REQUIRE(rep.violations[0].find("negative") != std::string::npos);
        REQUIRE(rep.violations[0].find("(1,1,0)") != std::string::npos);
    }
    SECTION("broken unit law") {
        r.N[0][1][1] = 2;
        ValidationReport rep = validate(r);
        REQUIRE_FALSE(rep.ok);
        REQUIRE(rep.violations[0].find("unit law") != std::string::npos);
    }
    SECTION("broken associativity") {
        FusionRing t = tambara_yamagami(group_new({2}));
        t.N[2][2][0] = 2; // m*m = 2*1 + a breaks (m m) m = m (m m)
        ValidationReport rep = validate(t);
        REQUIRE_FALSE(rep.ok);
        bool found = false;
        for (const auto& v : rep.violations) found |= v.find("associativity") != std::string::npos;
        REQUIRE(found);
    }
    SECTION("broken duality") {
        FusionRing t = tambara_yamagami(group_new({3}));
        (*t.dual)[1] = 1; // 1 and 2 are each other's inverses, not self-dual
        ValidationReport rep = validate(t);
        REQUIRE_FALSE(rep.ok);
    }
    SECTION("violation list is capped") {
        for (auto& m : r.N)
            for (auto& row : m)
                for (auto& x : row) x = 3;
        ValidationReport rep = validate(r);
        REQUIRE_FALSE(rep.ok);
        REQUIRE(rep.violations.size() == 10);
    }
    SECTION("shape errors throw instead") {
        r.unit = {5};
        REQUIRE_THROWS_AS(validate(r), std::invalid_argument);
    }
}

TEST_CASE("tensor product of coprime group rings is the group ring of the product") {
    FusionRing a = group_ring(group_new({2}));
    FusionRing b = group_ring(group_new({3}));
    FusionRing p = deligne_product(a, b);
    REQUIRE(p.rank() == 6);
    REQUIRE(validate(p).ok);
    REQUIRE(p.labels[1] == "0⊠1");
    REQUIRE(oracles::isomorphic_rings(p, group_ring(group_new({6}))));
    REQUIRE(oracles::isomorphic_rings(p, group_ring(group_new({2, 3}))));
    REQUIRE_FALSE(oracles::isomorphic_rings(p, tambara_yamagami(group_new({2, 2})))); // rank 5
}

TEST_CASE("tensor product with a Tambara-Yamagami factor") {
    FusionRing p = deligne_product(tambara_yamagami(group_new({2})), group_ring(group_new({2})));
    REQUIRE(p.rank() == 6);
    REQUIRE(validate(p).ok);
    FPData fp = fp_data(p);
    REQUIRE(fp.integral);
    REQUIRE(fp.total_int == 8);
    REQUIRE(fp.total == Catch::Approx(8.0).margin(1e-9));
}

TEST_CASE("tensor product respects duals componentwise") {
    FusionRing a = tambara_yamagami(group_new({3}));
    FusionRing b = group_ring(group_new({4}));
    FusionRing p = deligne_product(a, b);
    REQUIRE(p.dual.has_value());
    std::size_t rb = b.rank();
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = 0; j < rb; ++j)
            REQUIRE((*p.dual)[i * rb + j] == (*a.dual)[i] * rb + (*b.dual)[j]);
    // dropping one dual drops the product's dual
    b.dual.reset();
    REQUIRE_FALSE(deligne_product(a, b).dual.has_value());
}

TEST_CASE("tensor product is associative on the nose") {
    std::vector<FusionRing> rings = {group_ring(group_new({2})), tambara_yamagami(group_new({2})),
                                     group_ring(group_new({3}))};
    for (const auto& a : rings)
        for (const auto& b : rings)
            for (const auto& c : rings) {
                FusionRing left = deligne_product(deligne_product(a, b), c);
                FusionRing right = deligne_product(a, deligne_product(b, c));
                REQUIRE(left.N == right.N);
                REQUIRE(left.labels == right.labels);
                REQUIRE(left.unit == right.unit);
                REQUIRE(left.dual == right.dual);
            }
}

TEST_CASE("direct sums") {
    FusionRing a = group_ring(group_new({2}));
    FusionRing s = direct_sum(a, a);
    REQUIRE(s.rank() == 4);
    REQUIRE(s.unit == std::vector<std::size_t>{0, 2});
    REQUIRE(validate(s).ok);
    REQUIRE(s.labels == std::vector<std::string>{"0", "1", "0'", "1'"});
    REQUIRE(components(s).size() == 2);
    REQUIRE(components(a).size() == 1);

    FPData fa = fp_data(a), fs = fp_data(s);
    REQUIRE(fs.total == Catch::Approx(2 * fa.total).margin(1e-9));

    FusionRing ts = direct_sum(tambara_yamagami(group_new({2})), a);
    REQUIRE(validate(ts).ok);
    FPData fts = fp_data(ts);
    REQUIRE(fts.total == Catch::Approx(6.0).margin(1e-9));
    REQUIRE(fts.integral);
    REQUIRE(fts.total_int == 6);
}

TEST_CASE("rank one direct summands keep a two-element unit set") {
    FusionRing one;
    one.labels = {"1"};
    one.unit = {0};
    one.dual = std::vector<std::size_t>{0};
    one.N = {Mat{Vec{1}}};
    FusionRing s = direct_sum(one, one);
    REQUIRE(s.unit.size() == 2);
    REQUIRE(validate(s).ok);
    FPData fp = fp_data(s);
    REQUIRE(fp.total == Catch::Approx(2.0).margin(1e-12));
}

TEST_CASE("Frobenius-Perron data of the rank 3 Tambara-Yamagami ring") {
    FusionRing t = tambara_yamagami(group_new({2}));
    FPData fp = fp_data(t);
    REQUIRE(fp.dims[0] == Catch::Approx(1.0).margin(1e-9));
    REQUIRE(fp.dims[1] == Catch::Approx(1.0).margin(1e-9));
    REQUIRE(fp.dims[2] == Catch::Approx(std::sqrt(2.0)).margin(1e-9));
    REQUIRE(fp.total == Catch::Approx(4.0).margin(1e-9));
    REQUIRE(fp.integral);
    REQUIRE(fp.total_int == 4);
}

TEST_CASE("pointed rings short-circuit to exact dimension one") {
    FPData fp = fp_data(group_ring(group_new({5})));
    for (double d : fp.dims) REQUIRE(d == 1.0);
    REQUIRE(fp.total == 5.0);
    REQUIRE(fp.integral);
}

TEST_CASE("power iteration agrees with closed-form eigenvalues up to rank 3") {
    std::vector<FusionRing> rings = {tambara_yamagami(group_new({2})),
                                     tambara_yamagami(group_new({})), group_ring(group_new({3}))};
    // a rank 2 table with a genuinely irrational dimension: x*x = 1 + x
    FusionRing fib;
    fib.labels = {"1", "x"};
    fib.unit = {0};
    fib.dual = std::vector<std::size_t>{0, 1};
    fib.N = {Mat{{1, 0}, {0, 1}}, Mat{{0, 1}, {1, 1}}};
    REQUIRE(validate(fib).ok);
    rings.push_back(fib);

    for (const auto& r : rings)
        for (std::size_t i = 0; i < r.rank(); ++i) {
            double closed = oracles::largest_eigenvalue_closed_form(r.N[i]);
            double power = detail::perron_root(r.N[i]);
            INFO("basis element " << i);
            REQUIRE(power == Catch::Approx(closed).margin(1e-9));
        }

    FPData fp = fp_data(fib);
    REQUIRE(fp.dims[1] == Catch::Approx((1 + std::sqrt(5.0)) / 2).margin(1e-9));
    REQUIRE_FALSE(fp.integral); // total 1 + phi^2 is irrational
}

TEST_CASE("random products keep dimensions multiplicative") {
    std::mt19937 rng(2024);
    auto pool = oracles::sample_ring_pool(rng);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    int done = 0;
    while (done < 20) {
        const FusionRing &a = pool[pick(rng)], &b = pool[pick(rng)];
        if (a.rank() * b.rank() > 24) continue;
        ++done;
        FPData fa = fp_data(a), fb = fp_data(b), fp = fp_data(deligne_product(a, b));
        REQUIRE(fp.total == Catch::Approx(fa.total * fb.total).margin(1e-6));
        for (std::size_t i = 0; i < a.rank(); ++i)
            for (std::size_t j = 0; j < b.rank(); ++j)
                REQUIRE(fp.dims[i * b.rank() + j] ==
                        Catch::Approx(fa.dims[i] * fb.dims[j]).margin(1e-6));
    }
}

TEST_CASE("rank caps apply to constructors") {
    setenv("FUSION_CAP", "100", 1);
    REQUIRE_THROWS_AS(group_new({101}), std::invalid_argument);
    REQUIRE_THROWS_AS(tambara_yamagami(group_new({100})), std::invalid_argument);
    REQUIRE_THROWS_AS(direct_sum(group_ring(group_new({64})), group_ring(group_new({64}))),
                      std::invalid_argument);
    FusionRing big = group_ring(group_new({12}));
    REQUIRE_THROWS_AS(deligne_product(big, big), std::invalid_argument);
    unsetenv("FUSION_CAP");
    REQUIRE(deligne_product(big, big).rank() == 144);
}
