#include <doctest.h>

#include <random>

#include "support.hpp"
#include "weylpi/errors.hpp"
#include "weylpi/evaluation.hpp"
#include "weylpi/identities.hpp"
#include "weylpi/parser.hpp"
#include "weylpi/rewriter.hpp"

using namespace weylpi;

namespace {

const FieldSpec Q = FieldSpec::rationals();

BracketMonomial B(const char* s) { return BracketMonomial::parse(s); }

BracketCombination combo(std::initializer_list<std::pair<const char*, long>> terms) {
    BracketCombination out;
    for (const auto& [m, c] : terms) out.emplace(B(m), Scalar(Q, c));
    return out;
}

// Coefficient lambda with f(x, ..., x) = lambda x^n.
Scalar all_equal_value(const NCPoly& f, unsigned n) {
    const std::vector<VElem> xs(f.nvars(), VElem::X);
    const WeylElement v = substitute_tuple(f, xs);
    if (v.is_zero()) return Scalar::zero(f.field());
    REQUIRE(v.terms().size() == 1);
    CHECK(v.terms().begin()->first == WeylBasis{n, 0});
    return v.terms().begin()->second.constant_term();
}

}  // namespace

TEST_CASE("swap rule") {
    const auto s = semi_reduce(parse("x2*x1"));
    CHECK(s.beta.is_one());
    CHECK(s.terms == combo({{"[x1,x2]", -1}}));
}

TEST_CASE("brackets move to the right") {
    const auto s = semi_reduce(parse("[x1,x2]*x3"));
    CHECK(s.beta.is_zero());
    CHECK(s.terms == combo({{"x3 [x1,x2]", 1}}));
}

TEST_CASE("semi-reduced input is a fixed point") {
    for (const char* m : {"x1 [x2,x3]", "x3 [x1,x2]", "x1 x1 [x1,x2] [x2,x3]", "[x2,x3] [x1,x4]"}) {
        const auto s = semi_reduce(B(m));
        CHECK(s.beta.is_zero());
        CHECK(s.terms == combo({{m, 1}}));
    }
}

TEST_CASE("st3 rule") {
    CHECK(reduce(B("x3 [x1,x2]")) == combo({{"x2 [x1,x3]", 1}, {"x1 [x2,x3]", -1}}));
    CHECK(reduce(B("x1 [x2,x3]")) == combo({{"x1 [x2,x3]", 1}}));
    CHECK(reduce(B("[x1,x2] [x3,x4]")) == combo({{"[x1,x2] [x3,x4]", 1}}));
    CHECK_THROWS_AS(reduce(B("x2 x1 [x3,x4]")), NotSemiReduced);
}

TEST_CASE("t4 rule") {
    CHECK(completely_reduce(B("[x2,x3] [x1,x4]")) == combo({{"[x1,x2] [x3,x4]", -1}, {"[x1,x3] [x2,x4]", 1}}));
    CHECK(completely_reduce(B("[x1,x2] [x3,x4]")) == combo({{"[x1,x2] [x3,x4]", 1}}));
    CHECK(completely_reduce(B("x3 [x1,x4] [x2,x5]")) == combo({{"x3 [x1,x4] [x2,x5]", 1}}));
    CHECK_THROWS_AS(completely_reduce(B("x3 [x1,x2]")), NotReduced);
}

TEST_CASE("normal forms of the generators") {
    for (const NCPoly& g : {gamma_m(3), st3(), t4(), gamma_m(4), gamma_m(5)}) {
        const auto nf = normal_form(g);
        REQUIRE(nf.size() == 1);
        CHECK(nf.begin()->second.is_zero());
    }
    const auto p = normal_form(parse("x1^4"));
    REQUIRE(p.size() == 1);
    CHECK(p.begin()->second.beta.is_one());
    CHECK(p.begin()->second.terms.empty());
    CHECK(normal_form(NCPoly(Q)).empty());
    CHECK_THROWS_AS(semi_reduce(parse("x1 + x1*x2")), NotMultihomogeneous);
}

TEST_CASE("components are handled separately") {
    const auto nf = normal_form(parse("x2*x1 + x1*[x2,x3] - x2*[x1,x3] + x3*[x1,x2]"));
    REQUIRE(nf.size() == 2);
    const NormalForm& two = nf.at(MultiDegree{1, 1});
    CHECK(two.beta.is_one());
    CHECK(two.terms == combo({{"[x1,x2]", -1}}));
    CHECK(nf.at(MultiDegree::ones(3)).is_zero());
}

TEST_CASE("normal form of a combination") {
    const auto nf = normal_form(combo({{"x3 [x1,x2]", 1}, {"x2 [x1,x3]", -1}, {"x1 [x2,x3]", 1}}),
                                MultiDegree::ones(3), Q);
    CHECK(nf.is_zero());
    CHECK_THROWS_AS(normal_form(combo({{"x3 [x1,x2]", 1}}), MultiDegree{2, 1}, Q), DegreeMismatch);
}

TEST_CASE("weights never increase") {
    std::mt19937_64 rng(61);
    for (int it = 0; it < 300; ++it) {
        const auto b = test::random_bracket_monomial(rng, 7, 5);
        const RewriteOptions opts{.check_measure = true};
        const auto s = semi_reduce(b, Q, opts);
        CHECK(s.beta.is_zero());
        for (const auto& [m, c] : s.terms) {
            CHECK(status(m) >= ReductionStatus::SemiReduced);
            CHECK(monomial_weight(m) <= monomial_weight(b));
            CHECK(m.multidegree() == b.multidegree());
            for (const auto& [m2, c2] : reduce(m, Q, opts)) {
                CHECK(status(m2) >= ReductionStatus::Reduced);
                CHECK(monomial_weight(m2) <= monomial_weight(m));
                for (const auto& [m3, c3] : completely_reduce(m2, Q, opts)) {
                    CHECK(status(m3) == ReductionStatus::CompletelyReduced);
                    CHECK(monomial_weight(m3) <= monomial_weight(m2));
                }
            }
        }
    }
}

TEST_CASE("soundness and beta extraction") {
    std::mt19937_64 rng(62);
    const std::vector<MultiDegree> degrees = {MultiDegree{2, 1}, MultiDegree::ones(3), MultiDegree{2, 2},
                                              MultiDegree{1, 2, 1}, MultiDegree::ones(4), MultiDegree{2, 1, 1, 1}};
    for (const FieldSpec& f : {Q, FieldSpec::prime(7)}) {
        for (int it = 0; it < 60; ++it) {
            const MultiDegree& d = degrees[static_cast<std::size_t>(it) % degrees.size()];
            const NCPoly p = test::random_homogeneous(rng, d, f, 6);
            const auto nfs = normal_form(p, {.check_measure = true});
            REQUIRE(nfs.size() == 1);
            const NormalForm& nf = nfs.begin()->second;
            for (const auto& [m, c] : nf.terms) {
                CHECK(status(m) == ReductionStatus::CompletelyReduced);
                CHECK(m.multidegree() == d);
                CHECK_FALSE(c.is_zero());
            }
            const NCPoly back = nf.reconstruct(f);
            CHECK(generic_substitution(back) == generic_substitution(p));
            CHECK(nf.beta == all_equal_value(p, d.total()));
        }
    }
}

TEST_CASE("identities normalize to zero at low degree") {
    for (const MultiDegree& d : {MultiDegree{2, 1}, MultiDegree::ones(3), MultiDegree{2, 2}, MultiDegree::ones(4),
                                 MultiDegree{2, 1, 1}}) {
        for (const NCPoly& f : identity_basis(d)) {
            const auto nf = normal_form(f);
            REQUIRE(nf.size() == 1);
            CHECK(nf.begin()->second.is_zero());
        }
    }
}

TEST_CASE("idempotence on reconstructed normal forms") {
    std::mt19937_64 rng(63);
    for (int it = 0; it < 30; ++it) {
        const NCPoly p = test::random_homogeneous(rng, MultiDegree{2, 1, 1}, Q, 5);
        const NormalForm nf = normal_form(p).begin()->second;
        const NormalForm again = normal_form(nf.reconstruct(Q)).begin()->second;
        CHECK(again.beta == nf.beta);
        CHECK(again.terms == nf.terms);
    }
}

TEST_CASE("trace records each rule") {
    std::vector<RewriteStep> steps;
    normal_form(parse("x3*x2*x1"), {.trace = &steps});
    REQUIRE_FALSE(steps.empty());
    CHECK(steps.front().rule == RewriteRule::Swap);
    CHECK(steps.front().before == "x3 x2 x1");
    bool saw_st3 = false;
    for (const auto& s : steps) {
        saw_st3 = saw_st3 || s.rule == RewriteRule::St3;
        CHECK(s.mw_after <= s.mw_before);
    }
    CHECK(saw_st3);

    steps.clear();
    completely_reduce(B("[x2,x3] [x1,x4]"), Q, {.trace = &steps});
    REQUIRE(steps.size() == 1);
    CHECK(rule_name(steps[0].rule) == "t4");
    CHECK(steps[0].after == "-[x1,x2] [x3,x4] + [x1,x3] [x2,x4]");
    CHECK(steps[0].bw_before == Weight{3, 1});

    steps.clear();
    semi_reduce(B("x2 x1 [x3,x4]"), Q, {.trace = &steps});
    bool moved = false;
    for (const auto& s : steps) moved = moved || s.rule == RewriteRule::MoveBracket;
    CHECK(moved);
}

TEST_CASE("text form of combinations") {
    CHECK(to_string(BracketCombination{}) == "0");
    CHECK(to_string(combo({{"x2 [x1,x3]", 1}, {"x1 [x2,x3]", -2}})) == "-2*x1 [x2,x3] + x2 [x1,x3]");
    const auto nf = normal_form(parse("x2*x1")).begin()->second;
    CHECK(nf.to_string() == "beta=1 (x1*x2) terms: -[x1,x2]");
}
