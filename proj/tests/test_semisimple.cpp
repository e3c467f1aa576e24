#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace deligne;

namespace {

SemisimpleAlgebra real_simple(i64 n, DivisionKind d) {
    SemisimpleAlgebra a;
    a.field = FieldDescriptor{true, 0};
    a.factors = {SimpleFactor{n, d}};
    return a;
}

} // namespace

TEST_CASE("tensor products of real division algebras follow the Brauer rules") {
    auto factors_of = [](const SemisimpleAlgebra& a) { return a.factors; };

    SECTION("R absorbs") {
        auto t = tensor(real_simple(1, DivisionKind::Base), real_simple(3, DivisionKind::Quat));
        REQUIRE(factors_of(t) == std::vector<SimpleFactor>{{3, DivisionKind::Quat}});
    }
    SECTION("C tensor C splits into two copies of C") {
        auto t = tensor(real_simple(1, DivisionKind::Cplx), real_simple(1, DivisionKind::Cplx));
        REQUIRE(factors_of(t) ==
                std::vector<SimpleFactor>{{1, DivisionKind::Cplx}, {1, DivisionKind::Cplx}});
    }
    SECTION("C tensor H is a complex matrix algebra") {
        auto t = tensor(real_simple(1, DivisionKind::Cplx), real_simple(1, DivisionKind::Quat));
        REQUIRE(factors_of(t) == std::vector<SimpleFactor>{{2, DivisionKind::Cplx}});
    }
    SECTION("H tensor H is a real matrix algebra") {
        auto t = tensor(real_simple(1, DivisionKind::Quat), real_simple(1, DivisionKind::Quat));
        REQUIRE(factors_of(t) == std::vector<SimpleFactor>{{4, DivisionKind::Base}});
    }
    SECTION("matrix sizes multiply through") {
        auto t = tensor(real_simple(2, DivisionKind::Quat), real_simple(3, DivisionKind::Cplx));
        REQUIRE(factors_of(t) == std::vector<SimpleFactor>{{12, DivisionKind::Cplx}});
    }
}

TEST_CASE("rule table matches the brute force structure constant computation") {
    struct Case {
        SimpleFactor a, b;
    };
    std::vector<Case> cases = {
        {{1, DivisionKind::Base}, {1, DivisionKind::Base}},
        {{1, DivisionKind::Base}, {1, DivisionKind::Cplx}},
        {{1, DivisionKind::Base}, {1, DivisionKind::Quat}},
        {{1, DivisionKind::Cplx}, {1, DivisionKind::Cplx}},
        {{1, DivisionKind::Cplx}, {1, DivisionKind::Quat}},
        {{1, DivisionKind::Quat}, {1, DivisionKind::Quat}},
        {{2, DivisionKind::Base}, {1, DivisionKind::Cplx}},
    };
    for (const auto& c : cases) {
        SemisimpleAlgebra a = real_simple(c.a.n, c.a.d), b = real_simple(c.b.n, c.b.d);
        SemisimpleAlgebra t = tensor(a, b);
        auto [dim, zdim] = tensor_brute_force(a, b);
        INFO(factor_to_string(c.a, true) << " tensor " << factor_to_string(c.b, true));
        REQUIRE(dim == algebra_dim(a) * algebra_dim(b));
        REQUIRE(dim == algebra_dim(t));
        REQUIRE(zdim == center_dim(t));
    }
}

TEST_CASE("pinned dimension and center pairs for the division algebra tensors") {
    auto check = [](DivisionKind x, DivisionKind y, i64 dim, i64 zdim) {
        SemisimpleAlgebra a = real_simple(1, x), b = real_simple(1, y);
        auto got = tensor_brute_force(a, b);
        REQUIRE(got.first == dim);
        REQUIRE(got.second == zdim);
    };
    check(DivisionKind::Base, DivisionKind::Base, 1, 1);
    check(DivisionKind::Base, DivisionKind::Cplx, 2, 2);
    check(DivisionKind::Base, DivisionKind::Quat, 4, 1);
    check(DivisionKind::Cplx, DivisionKind::Cplx, 4, 4);
    check(DivisionKind::Cplx, DivisionKind::Quat, 8, 2);
    check(DivisionKind::Quat, DivisionKind::Quat, 16, 1);
}

TEST_CASE("brute force rejects oversized and non-real inputs") {
    SemisimpleAlgebra a = real_simple(2, DivisionKind::Quat); // dim 16
    REQUIRE_THROWS_AS(tensor_brute_force(a, a), std::invalid_argument);
    SemisimpleAlgebra c;
    c.field = FieldDescriptor{false, 0};
    c.factors = {SimpleFactor{1, DivisionKind::Base}};
    REQUIRE_THROWS_AS(tensor_brute_force(c, c), std::invalid_argument);
}

TEST_CASE("over a closed field simple counts multiply") {
    SemisimpleAlgebra a, b;
    a.field = b.field = FieldDescriptor{false, 0};
    a.factors = {{1, DivisionKind::Base}, {2, DivisionKind::Base}};
    b.factors = {{1, DivisionKind::Base}, {3, DivisionKind::Base}, {1, DivisionKind::Base}};
    SemisimpleAlgebra t = tensor(a, b);
    REQUIRE(simple_count(t) == 6);
    REQUIRE(algebra_dim(t) == algebra_dim(a) * algebra_dim(b));
    REQUIRE(t.factors[1].n == 3); // 1 x 3
    REQUIRE(t.factors[5].n == 2); // 2 x 1
}

TEST_CASE("over the reals the simple count can grow") {
    SemisimpleAlgebra a = real_simple(1, DivisionKind::Cplx);
    SemisimpleAlgebra t = tensor(a, a);
    REQUIRE(simple_count(t) == 2);
    REQUIRE(center_dim(t) == 4);
}

TEST_CASE("field descriptors must match") {
    SemisimpleAlgebra a = real_simple(1, DivisionKind::Base);
    SemisimpleAlgebra b = a;
    b.field = FieldDescriptor{false, 0};
    REQUIRE_THROWS_AS(tensor(a, b), std::invalid_argument);
}

TEST_CASE("closed-field algebras may not carry C or H factors") {
    SemisimpleAlgebra a;
    a.field = FieldDescriptor{false, 0};
    a.factors = {SimpleFactor{1, DivisionKind::Cplx}};
    REQUIRE_THROWS_AS(require_algebra_shape(a), std::invalid_argument);
}

TEST_CASE("field descriptor strings round trip") {
    for (const char* s : {"R", "AC0", "ACp:2", "ACp:7"}) {
        FieldDescriptor f = field_from_string(s);
        REQUIRE(field_to_string(f) == s);
    }
    REQUIRE_THROWS_AS(field_from_string("ACp:6"), std::invalid_argument);
    REQUIRE_THROWS_AS(field_from_string("complex"), std::invalid_argument);
}

TEST_CASE("factor rendering") {
    REQUIRE(factor_to_string({1, DivisionKind::Cplx}, true) == "C");
    REQUIRE(factor_to_string({2, DivisionKind::Quat}, true) == "M2(H)");
    REQUIRE(factor_to_string({4, DivisionKind::Base}, true) == "M4(R)");
    REQUIRE(factor_to_string({1, DivisionKind::Base}, true) == "R");
    REQUIRE(factor_to_string({3, DivisionKind::Base}, false) == "M3(K)");
}
