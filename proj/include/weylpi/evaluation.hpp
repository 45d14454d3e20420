#pragma once
// Substituting elements of V = span{x, y} into free-algebra polynomials.

#include <map>
#include <span>
#include <tuple>
#include <vector>

#include "weylpi/free_algebra.hpp"
#include "weylpi/weyl.hpp"

namespace weylpi {

enum class VElem { X, Y };

/// x_k -> alpha_k x + beta_k y with independent formal parameters.
/// Over an infinite field of the same characteristic, f vanishes on V
/// iff this is zero for every multihomogeneous component of f.
WeylElement generic_substitution(const NCPoly& f);

/// f(t_1, ..., t_m) with t_k in {x, y}; t.size() must equal f.nvars().
WeylElement substitute_tuple(const NCPoly& f, std::span<const VElem> t);

struct IdentityCheckOptions {
    /// Multilinear components are checked on the 2^m tuples instead of generically.
    bool multilinear_fast_path = true;
};

bool is_weak_identity(const NCPoly& f, const IdentityCheckOptions& opts = {});

/// Row coordinate of an evaluation: basis element x^i y^j and parameter monomial.
struct EvalCoordinate {
    unsigned i = 0;
    unsigned j = 0;
    ParamMonomial params;

    friend auto operator<=>(const EvalCoordinate&, const EvalCoordinate&) = default;
};

/// generic_substitution(w) with integer coefficients, computed without
/// CommPoly arithmetic. Coefficients are characteristic-free.
std::map<EvalCoordinate, long> integer_evaluation(const Word& w);

}  // namespace weylpi
