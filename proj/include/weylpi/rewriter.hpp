#pragma once
// Rewriting modulo the L-ideal I generated by Gamma_3, St_3 and T_4.
//
// Every multihomogeneous f of multidegree d is brought to
//     beta * x1^{d1} ... xm^{dm} + sum alpha_i * b_i   (mod I)
// with completely reduced bracket-monomials b_i, using four rules:
//   swap          f1 xj xi f2 == f1 xi xj f2 - f1 f2 [xi,xj]        (i < j)
//   move-bracket  f1 [xi,xj] f0 f2 == f1 f0 [xi,xj] f2
//   st3           x_t [x_r,x_s] == x_s [x_r,x_t] - x_r [x_s,x_t]    (t > s)
//   t4            [x_b,x_c][x_a,x_d] == -[x_a,x_b][x_c,x_d] + [x_a,x_c][x_b,x_d]   (a<b<c<d)
// Each rewrite strictly lowers (monomial weight, bracket weight, prefix
// inversions) in lexicographic order, which bounds the work.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "weylpi/bracket.hpp"
#include "weylpi/free_algebra.hpp"

namespace weylpi {

using BracketCombination = std::map<BracketMonomial, Scalar>;

enum class RewriteRule { Swap, MoveBracket, St3, T4 };
std::string_view rule_name(RewriteRule r) noexcept;

struct RewriteStep {
    RewriteRule rule;
    std::string before;  // coefficient and monomial
    std::string after;   // resulting combination
    Weight mw_before, bw_before;
    Weight mw_after, bw_after;  // largest over the results
};

struct RewriteOptions {
    /// When set, every rewrite is appended here.
    std::vector<RewriteStep>* trace = nullptr;
    /// Throw std::logic_error if a rewrite fails to lower the termination
    /// measure. Always on in debug builds.
    bool check_measure = false;
};

struct SemiReduction {
    Scalar beta;
    BracketCombination terms;  // semi-reduced, brackets in (s, r) order
};

struct NormalForm {
    MultiDegree mdeg;
    Scalar beta;
    BracketCombination terms;  // completely reduced

    bool is_zero() const { return beta.is_zero() && terms.empty(); }
    /// beta * x^mdeg + sum alpha_i * expand(b_i)
    NCPoly reconstruct(const FieldSpec& field) const;
    std::string to_string() const;
};

/// Requires f multihomogeneous (throws NotMultihomogeneous).
SemiReduction semi_reduce(const NCPoly& f, const RewriteOptions& opts = {});
SemiReduction semi_reduce(const BracketMonomial& b, const FieldSpec& field = FieldSpec::rationals(),
                          const RewriteOptions& opts = {});

/// Requires status(b) >= SemiReduced (throws NotSemiReduced).
BracketCombination reduce(const BracketMonomial& b, const FieldSpec& field = FieldSpec::rationals(),
                          const RewriteOptions& opts = {});

/// Requires status(b) >= Reduced (throws NotReduced).
BracketCombination completely_reduce(const BracketMonomial& b, const FieldSpec& field = FieldSpec::rationals(),
                                     const RewriteOptions& opts = {});

/// One entry per multihomogeneous component of f (zero components included).
std::map<MultiDegree, NormalForm> normal_form(const NCPoly& f, const RewriteOptions& opts = {});

/// Normal form of a linear combination of bracket-monomials of one multidegree.
NormalForm normal_form(const BracketCombination& combo, const MultiDegree& mdeg, const FieldSpec& field,
                       const RewriteOptions& opts = {});

NCPoly expand(const BracketCombination& combo, const FieldSpec& field);
std::string to_string(const BracketCombination& combo);

}  // namespace weylpi
