#include <doctest.h>

#include <random>

#include "support.hpp"
#include "weylpi/errors.hpp"
#include "weylpi/weyl.hpp"

using namespace weylpi;

namespace {

const FieldSpec Q = FieldSpec::rationals();

WeylElement from_word(const std::string& w, const FieldSpec& f) {
    WeylElement e = WeylElement::scalar(Scalar::one(f));
    for (char c : w) e = e * (c == 'x' ? WeylElement::x(f) : WeylElement::y(f));
    return e;
}

WeylElement from_map(const std::map<std::pair<unsigned, unsigned>, long>& m, const FieldSpec& f) {
    WeylElement e(f);
    for (const auto& [ij, c] : m) e.add_term(ij.first, ij.second, CommPoly::constant(Scalar(f, c)));
    return e;
}

WeylElement xpow(unsigned n, const FieldSpec& f) { return WeylElement::basis(f, n, 0); }

WeylElement random_element(std::mt19937_64& rng, const FieldSpec& f) {
    std::uniform_int_distribution<unsigned> deg(0, 3);
    WeylElement e(f);
    for (int t = 0; t < 3; ++t) {
        CommPoly c = CommPoly::constant(test::random_scalar(rng, f));
        if (rng() % 2) c = c * CommPoly::parameter(f, rng() % 4);
        e.add_term(deg(rng), deg(rng), c);
    }
    return e;
}

}  // namespace

TEST_CASE("defining relation") {
    const auto x = WeylElement::x(Q), y = WeylElement::y(Q);
    CHECK(y * x == WeylElement::basis(Q, 1, 1) + WeylElement::scalar(Scalar::one(Q)));
    CHECK(x * y == WeylElement::basis(Q, 1, 1));
    CHECK(weyl_commutator(y, x) == WeylElement::scalar(Scalar::one(Q)));
}

TEST_CASE("y^2 x^2 against the single-swap oracle") {
    const auto oracle = test::swap_oracle("yyxx");
    // frozen oracle output: x^2y^2 + 4xy + 2
    CHECK(oracle == std::map<std::pair<unsigned, unsigned>, long>{{{0, 0}, 2}, {{1, 1}, 4}, {{2, 2}, 1}});
    CHECK(from_word("yyxx", Q) == from_map(oracle, Q));
    CHECK(weyl_mul(WeylElement::basis(Q, 0, 2), WeylElement::basis(Q, 2, 0)) == from_map(oracle, Q));
}

TEST_CASE("normal ordering matches the oracle on all short words") {
    for (unsigned len = 0; len <= 6; ++len) {
        for (unsigned mask = 0; mask < (1u << len); ++mask) {
            std::string w;
            for (unsigned b = 0; b < len; ++b) w += (mask >> b) & 1 ? 'y' : 'x';
            CHECK(from_word(w, Q) == from_map(test::swap_oracle(w), Q));
        }
    }
    for (unsigned j = 0; j <= 4; ++j)
        for (unsigned i = 0; i <= 4; ++i)
            CHECK(normal_order_yx(j, i) == test::swap_oracle(std::string(j, 'y') + std::string(i, 'x')));
}

TEST_CASE("commutator with y is the derivative") {
    CHECK(commutator_with_y(xpow(3, Q)) == xpow(2, Q) * Scalar(Q, 3L));
    CHECK(commutator_with_y(WeylElement::scalar(Scalar::one(Q))).is_zero());
    const FieldSpec f3 = FieldSpec::prime(3);
    CHECK(commutator_with_y(xpow(3, f3)).is_zero());
    CHECK_THROWS_AS(commutator_with_y(WeylElement::y(Q)), NotPurelyX);
    for (unsigned n = 1; n <= 10; ++n) {
        CHECK(commutator_with_y(xpow(n, Q)) == xpow(n - 1, Q) * Scalar(Q, static_cast<long>(n)));
        CHECK(weyl_commutator(WeylElement::y(Q), xpow(n, Q)) == commutator_with_y(xpow(n, Q)));
    }
}

TEST_CASE("derivative property on random polynomials in x") {
    std::mt19937_64 rng(31);
    for (const FieldSpec& f : {Q, FieldSpec::prime(5)}) {
        for (int it = 0; it < 40; ++it) {
            WeylElement a(f);
            for (unsigned i = 0; i < 5; ++i) a.add_term(i, 0, CommPoly::constant(test::random_scalar(rng, f)));
            const auto y = WeylElement::y(f);
            CHECK(weyl_mul(y, a) - weyl_mul(a, y) == commutator_with_y(a));
        }
    }
}

TEST_CASE("centrality") {
    CHECK(is_central(WeylElement::scalar(Scalar::one(Q))));
    CHECK_FALSE(is_central(WeylElement::x(Q)));
    const FieldSpec f5 = FieldSpec::prime(5);
    CHECK(is_central(xpow(5, f5)));
    CHECK(is_central(WeylElement::basis(f5, 0, 5)));
    CHECK_FALSE(is_central(xpow(4, f5)));
    for (unsigned i = 0; i <= 3; ++i)
        for (unsigned j = 0; j <= 3; ++j)
            CHECK(is_central(WeylElement::basis(Q, i, j)) == (i == 0 && j == 0));
}

TEST_CASE("generic commutators of V are central") {
    auto lin = [](std::size_t k) {
        return WeylElement::x(Q) * CommPoly::parameter(Q, alpha_index(k)) +
               WeylElement::y(Q) * CommPoly::parameter(Q, beta_index(k));
    };
    const WeylElement c = weyl_commutator(lin(1), lin(2));
    REQUIRE(c.terms().size() == 1);
    CHECK(c.terms().begin()->first == WeylBasis{0, 0});
    CHECK(is_central(c));
}

TEST_CASE("ring laws") {
    std::mt19937_64 rng(32);
    for (int it = 0; it < 40; ++it) {
        const auto a = random_element(rng, Q), b = random_element(rng, Q), c = random_element(rng, Q);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * WeylElement::scalar(Scalar::one(Q)) == a);
    }
}

TEST_CASE("degree bound of products") {
    for (unsigned i1 = 0; i1 <= 3; ++i1) {
        for (unsigned j1 = 0; j1 <= 3; ++j1) {
            for (unsigned i2 = 0; i2 <= 3; ++i2) {
                for (unsigned j2 = 0; j2 <= 3; ++j2) {
                    const WeylElement p = WeylElement::basis(Q, i1, j1) * WeylElement::basis(Q, i2, j2);
                    for (const auto& [ij, c] : p.terms()) {
                        CHECK(ij.first <= i1 + i2);
                        CHECK(ij.second <= j1 + j2);
                    }
                }
            }
        }
    }
}

TEST_CASE("comm poly") {
    const CommPoly a = CommPoly::parameter(Q, alpha_index(1)), b = CommPoly::parameter(Q, beta_index(2));
    CHECK((a * b - b * a).is_zero());
    CHECK((a * b).to_string() == "a1*b2");
    CHECK(CommPoly::constant(Scalar(Q, 3L)).is_constant());
    const std::vector<Scalar> vals = {Scalar(Q, 2L), Scalar(Q, 0L), Scalar(Q, 0L), Scalar(Q, 5L)};
    CHECK((a * b + a).evaluate(vals) == Scalar(Q, 12L));
    CHECK_THROWS_AS(WeylElement::x(Q) + WeylElement::x(FieldSpec::prime(3)), FieldMismatch);
}
