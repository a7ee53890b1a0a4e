#include <doctest.h>

#include "cohomology_model.hpp"
#include "error.hpp"
#include "generators.hpp"
#include "lie_algebra.hpp"

using mnc::LieAlgebra;
using mnc::Rational;
using mnc::RationalField;
using mnc::RationalMatrix;
using mnc::rational_matrix;

namespace {

LieAlgebra heisenberg() {
    LieAlgebra g(3);
    g.set_bracket(0, 1, {0, 0, 1});
    return g;
}

LieAlgebra aff1() {
    LieAlgebra g(2);
    g.set_bracket(0, 1, {1, 0});
    return g;
}

bool is_zero(const RationalMatrix& m) {
    for (const auto& e : m.data())
        if (!e.is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("aff(1) differential and cohomology") {
    const auto complex = mnc::ce_complex(aff1());
    // d theta1 = -theta1^theta2, d theta2 = 0
    CHECK(complex.differentials[1] == rational_matrix({{-1, 0}}));
    const auto h = mnc::ce_cohomology(aff1());
    CHECK(h.betti == std::vector<std::size_t>{1, 1, 0});
    CHECK(!aff1().is_nilpotent());
    CHECK(aff1().derived_dim() == 1);
}

TEST_CASE("Heisenberg algebra") {
    const auto g = heisenberg();
    CHECK(g.is_nilpotent());
    const auto complex = mnc::ce_complex(g);
    CHECK(complex.differentials[1] == rational_matrix({{0, 0, -1}, {0, 0, 0}, {0, 0, 0}}));
    const auto h = mnc::ce_cohomology(g);
    CHECK(h.betti == std::vector<std::size_t>{1, 2, 2, 1});
    CHECK(g.bracket(1, 0) == std::vector<Rational>{0, 0, -1});
}

TEST_CASE("Jacobi and automorphism failures name the culprits") {
    LieAlgebra bad(3);
    bad.set_bracket(0, 1, {0, 0, 1});
    bad.set_bracket(1, 2, {1, 0, 0});
    bad.set_bracket(0, 2, {0, 1, 0});
    bad.set_bracket(0, 2, {1, 0, 0});
    CHECK_THROWS_AS(bad.check_jacobi(), mnc::Error);
    try {
        bad.check_jacobi();
    } catch (const mnc::Error& e) {
        CHECK(std::string(e.what()).find("(1,2,3)") != std::string::npos);
    }
    const auto g = heisenberg();
    CHECK_NOTHROW(g.check_automorphism(rational_matrix({{2, 1, 0}, {1, 1, 0}, {0, 0, 1}})));
    CHECK_THROWS_AS(g.check_automorphism(rational_matrix({{2, 1, 0}, {1, 1, 0}, {0, 0, 2}})), mnc::Error);
    LieAlgebra h(3);
    CHECK_THROWS_AS(h.set_bracket(1, 0, {0, 0, 1}), mnc::Error);
    CHECK_THROWS_AS(h.set_bracket(0, 1, {0, 1}), mnc::Error);
}

TEST_CASE("d^2 = 0 on random nilpotent algebras") {
    mnc::testing::Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const auto dim = static_cast<std::size_t>(mnc::testing::uniform(rng, 2, 6));
        const LieAlgebra g = mnc::testing::random_nilpotent_algebra(rng, dim);
        CHECK(g.is_nilpotent());
        const auto c = mnc::ce_complex(g);
        for (std::size_t k = 0; k + 1 < c.differentials.size(); ++k)
            CHECK(is_zero(mnc::multiply(RationalField{}, c.differentials[k + 1], c.differentials[k])));
        const auto h = mnc::ce_cohomology(c);
        // nilpotent algebras are unimodular: H^0 = H^top = Q, and b_1 = dim - dim [g,g]
        CHECK(h.betti.front() == 1);
        CHECK(h.betti.back() == 1);
        CHECK(h.betti[1] == dim - g.derived_dim());
        long euler = 0;
        for (std::size_t k = 0; k < h.betti.size(); ++k) euler += (k % 2 ? -1 : 1) * static_cast<long>(h.betti[k]);
        CHECK(euler == 0);
    }
}

TEST_CASE("torus models") {
    const auto m = mnc::torus_model(rational_matrix({{2, 1}, {1, 1}}));
    CHECK(m.top_degree == 2);
    CHECK(m.betti == std::vector<std::size_t>{1, 2, 1});
    CHECK(m.map(1) == rational_matrix({{2, 1}, {1, 1}}));
    CHECK(m.map(2) == rational_matrix({{1}}));
    const auto asym = mnc::torus_model(rational_matrix({{1, 1}, {0, 1}}));
    CHECK(asym.map(1) == rational_matrix({{1, 0}, {1, 1}}));
    CHECK_THROWS_AS(mnc::torus_model(rational_matrix({{2, 0}, {0, 1}})), mnc::Error);
    CHECK_THROWS_AS(mnc::torus_model(rational_matrix({{Rational(1, 2), 0}, {0, 2}})), mnc::Error);
    CHECK_THROWS_AS(mnc::torus_model(rational_matrix({{1, 0, 0}, {0, 1, 0}})), mnc::Error);

    mnc::testing::Rng rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        const auto t = mnc::testing::random_torus_model(rng);
        CHECK_NOTHROW(mnc::validate(t));
        for (std::size_t k = 0; k <= t.top_degree; ++k) CHECK(t.betti[k] == mnc::binomial(t.top_degree, k));
    }
}

TEST_CASE("nilmanifold model of the Heisenberg manifold") {
    const auto m = mnc::nilmanifold_model(heisenberg(), rational_matrix({{2, 1, 0}, {1, 1, 0}, {0, 0, 1}}));
    CHECK(m.betti == std::vector<std::size_t>{1, 2, 2, 1});
    CHECK(m.provenance == mnc::Provenance::Nilmanifold);
    CHECK(mnc::charpoly(m.map(1)) == mnc::Polynomial({1, -3, 1}));
    CHECK(mnc::charpoly(m.map(2)) == mnc::Polynomial({1, -3, 1}));
    CHECK(m.map(3) == rational_matrix({{1}}));
    CHECK_THROWS_AS(mnc::nilmanifold_model(aff1(), rational_matrix({{1, 0}, {0, 1}})), mnc::Error);
}

TEST_CASE("induced maps are functorial") {
    const auto g = heisenberg();
    const RationalMatrix a = rational_matrix({{2, 1, 0}, {1, 1, 0}, {0, 0, 1}});
    const RationalMatrix b = rational_matrix({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
    const auto ma = mnc::nilmanifold_model(g, a);
    const auto mb = mnc::nilmanifold_model(g, b);
    const auto mab = mnc::nilmanifold_model(g, mnc::multiply(RationalField{}, a, b));
    // pullback is contravariant: (ab)^* = b^* a^*
    for (std::size_t k = 0; k <= 3; ++k)
        CHECK(mab.map(k) == mnc::multiply(RationalField{}, mb.map(k), ma.map(k)));
}

TEST_CASE("generic model validation") {
    CHECK_NOTHROW(mnc::generic_model({1, 2}, {rational_matrix({{1}}), rational_matrix({{0, 1}, {1, 0}})}));
    CHECK_THROWS_AS(mnc::generic_model({2}, {rational_matrix({{1, 0}, {0, 1}})}), mnc::Error);
    CHECK_THROWS_AS(mnc::generic_model({1, 2}, {rational_matrix({{1}}), rational_matrix({{1, 1}, {1, 1}})}),
                    mnc::Error);
    CHECK_THROWS_AS(mnc::generic_model({1, 2}, {rational_matrix({{1}})}), mnc::Error);
    CHECK_THROWS_AS(mnc::generic_model({1, 1}, {rational_matrix({{2}}), rational_matrix({{1}})}), mnc::Error);
}
