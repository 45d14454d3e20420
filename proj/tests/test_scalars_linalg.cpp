#include <doctest.h>

#include <random>

#include "support.hpp"
#include "weylpi/errors.hpp"
#include "weylpi/matrix.hpp"
#include "weylpi/scalar.hpp"

using namespace weylpi;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime(5);
}  // namespace

TEST_CASE("field specs") {
    CHECK(Q.is_rational());
    CHECK(Q.characteristic() == 0);
    CHECK(F5.characteristic() == 5);
    CHECK(FieldSpec::parse("q") == Q);
    CHECK(FieldSpec::parse("fp:5") == F5);
    CHECK(FieldSpec::parse("fp:7").name() == "fp:7");
    CHECK_THROWS_AS(FieldSpec::prime(6), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::prime(1), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::parse("fp:x"), std::invalid_argument);
    CHECK(is_prime(4294967291u));
    CHECK_FALSE(is_prime(4294967295u));
}

TEST_CASE("rational arithmetic") {
    const Scalar half = Scalar::parse(Q, "1/2"), third = Scalar::parse(Q, "1/3");
    CHECK((half + third) == Scalar::parse(Q, "5/6"));
    CHECK((half * third) == Scalar::parse(Q, "1/6"));
    CHECK((half - third) == Scalar::parse(Q, "1/6"));
    CHECK((half / third) == Scalar::parse(Q, "3/2"));
    CHECK(Scalar::parse(Q, "2/-4") == Scalar::parse(Q, "-1/2"));
    CHECK(Scalar::parse(Q, "-1/2").rational().get_den() == 2);
    CHECK((Scalar::zero(Q) * half).is_zero());
    CHECK_THROWS_AS(Scalar::zero(Q).inverse(), DivisionByZero);
    CHECK(half.to_string() == "1/2");
    CHECK(Scalar(Q, -3L).to_string() == "-3");
}

TEST_CASE("prime field arithmetic") {
    CHECK(Scalar(F5, 2L).inverse() == Scalar(F5, 3L));
    CHECK(Scalar(F5, -1L).residue() == 4);
    CHECK(Scalar(F5, 7L) == Scalar(F5, 2L));
    CHECK((Scalar(F5, 3L) + Scalar(F5, 4L)).residue() == 2);
    CHECK(Scalar(F5, mpq_class(1, 2)) == Scalar(F5, 3L));
    CHECK_THROWS_AS(Scalar(F5, mpq_class(1, 5)), DivisionByZero);
    CHECK_THROWS_AS(Scalar::zero(F5).inverse(), DivisionByZero);
    CHECK_THROWS_AS(Scalar(F5, 1L) + Scalar(Q, 1L), FieldMismatch);
}

TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(11);
    for (const FieldSpec& f : {Q, F5, FieldSpec::prime(65521)}) {
        for (int it = 0; it < 200; ++it) {
            const Scalar a = test::random_scalar(rng, f), b = test::random_scalar(rng, f),
                         c = test::random_scalar(rng, f);
            CHECK((a + b) == (b + a));
            CHECK((a * b) == (b * a));
            CHECK(((a + b) + c) == (a + (b + c)));
            CHECK(((a * b) * c) == (a * (b * c)));
            CHECK((a * (b + c)) == (a * b + a * c));
            CHECK((a + (-a)).is_zero());
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        }
    }
}

TEST_CASE("rank") {
    CHECK(rank(ExactMatrix::from_rows(Q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
    CHECK(rank(ExactMatrix(Q, 2, 4)) == 0);
    CHECK(rank(ExactMatrix::from_rows(Q, {{1, 2}, {2, 4}})) == 1);
    // singular only mod 5
    const auto m = ExactMatrix::from_rows(Q, {{1, 2}, {3, 1}});
    CHECK(rank(m) == 2);
    CHECK(rank(ExactMatrix::from_rows(F5, {{1, 2}, {3, 1}})) == 1);
    CHECK(rank(m, {.fraction_free = true}) == 2);
    CHECK(rank(m, {.screening_primes = 2}) == 2);
}

TEST_CASE("kernel basis") {
    CHECK(kernel_basis(ExactMatrix::from_rows(Q, {{1, 0}, {0, 1}})).empty());
    CHECK(kernel_basis(ExactMatrix(Q, 1, 2)).size() == 2);
    const auto k = kernel_basis(ExactMatrix::from_rows(Q, {{1, 1}}));
    REQUIRE(k.size() == 1);
    // free coordinate set to 1
    CHECK(k[0][0] == Scalar(Q, -1L));
    CHECK(k[0][1] == Scalar(Q, 1L));
}

TEST_CASE("rank-nullity and kernel vectors on random matrices") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> dim(1, 6), entry(-3, 3);
    for (const FieldSpec& f : {Q, F5, FieldSpec::prime(7)}) {
        for (int it = 0; it < 60; ++it) {
            const int r = dim(rng), c = dim(rng);
            std::vector<std::vector<long>> rows(static_cast<std::size_t>(r), std::vector<long>(static_cast<std::size_t>(c)));
            for (auto& row : rows)
                for (auto& e : row) e = entry(rng) * (entry(rng) > 0 ? 1 : 0);
            const auto m = ExactMatrix::from_rows(f, rows);
            const auto ker = kernel_basis(m);
            CHECK(rank(m) + ker.size() == static_cast<std::size_t>(c));
            CHECK(rank(m, {.fraction_free = true}) == rank(m));
            for (const auto& v : ker)
                for (const auto& e : m.apply(v)) CHECK(e.is_zero());
            if (f.is_rational()) {
                // reduction mod p never raises the rank
                const auto mp = ExactMatrix::from_rows(F5, rows);
                CHECK(rank(mp) <= rank(m));
            }
        }
    }
}

TEST_CASE("rref pivots") {
    std::vector<std::size_t> piv;
    const auto r = rref(ExactMatrix::from_rows(Q, {{0, 2, 4}, {1, 1, 1}}), &piv);
    CHECK(piv == std::vector<std::size_t>{0, 1});
    CHECK(r(0, 0).is_one());
    CHECK(r(0, 2) == Scalar(Q, -1L));
    CHECK(r(1, 2) == Scalar(Q, 2L));
}

TEST_CASE("incremental echelons agree with dense rank") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int it = 0; it < 40; ++it) {
        const std::size_t cols = 7;
        std::vector<SparseIntRow> rows;
        std::vector<std::vector<long>> dense;
        for (int r = 0; r < 9; ++r) {
            SparseIntRow row;
            std::vector<long> d(cols, 0);
            for (std::uint32_t c = 0; c < cols; ++c) {
                if (entry(rng) > 1) {
                    d[c] = entry(rng);
                    if (d[c]) row.emplace_back(c, d[c]);
                }
            }
            rows.push_back(row);
            dense.push_back(d);
        }
        RationalEchelon re(cols);
        for (const auto& r : rows) re.add_row(r);
        CHECK(re.rank() == rank(ExactMatrix::from_rows(Q, dense)));
        CHECK(modular_rank(rows, cols, 7) == rank(ExactMatrix::from_rows(FieldSpec::prime(7), dense)));
    }
}

TEST_CASE("modular helpers") {
    CHECK(mod_inverse(2, 5) == 3);
    CHECK(mod_inverse(3, 7) == 5);
    const auto primes = screening_primes();
    CHECK(primes.size() == 8);
    for (auto p : primes) {
        CHECK(is_prime(p));
        CHECK(p < (1u << 26));
    }
}
