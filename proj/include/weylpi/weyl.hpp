#pragma once
// The first Weyl algebra A1 = F<x,y>/(yx - xy - 1) in the basis x^i y^j,
// with coefficients in a commutative polynomial ring over formal parameters.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "weylpi/scalar.hpp"

namespace weylpi {

/// Exponent vector over the parameters; trailing zeros are trimmed.
/// Parameter 2(k-1) is alpha_k and 2(k-1)+1 is beta_k.
using ParamMonomial = std::vector<std::uint16_t>;

inline std::size_t alpha_index(std::size_t k) { return 2 * (k - 1); }
inline std::size_t beta_index(std::size_t k) { return 2 * (k - 1) + 1; }

class CommPoly {
public:
    using TermMap = std::map<ParamMonomial, Scalar>;

    explicit CommPoly(const FieldSpec& field = FieldSpec::rationals()) : field_(field) {}
    static CommPoly constant(const Scalar& c);
    /// The parameter with the given index.
    static CommPoly parameter(const FieldSpec& field, std::size_t index);

    const FieldSpec& field() const noexcept { return field_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Degree-zero part.
    Scalar constant_term() const;
    bool is_constant() const noexcept;

    void add_term(const ParamMonomial& m, const Scalar& c);

    CommPoly& operator+=(const CommPoly& o);
    CommPoly& operator-=(const CommPoly& o);
    CommPoly& operator*=(const Scalar& c);
    friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
    friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
    friend CommPoly operator*(CommPoly a, const Scalar& c) { return a *= c; }
    friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
    CommPoly operator-() const;
    friend bool operator==(const CommPoly& a, const CommPoly& b) {
        return a.field_ == b.field_ && a.terms_ == b.terms_;
    }

    /// Substitutes values[idx] for each parameter.
    Scalar evaluate(std::span<const Scalar> values) const;

    /// "a1*b2 - a2*b1"
    std::string to_string() const;

private:
    FieldSpec field_;
    TermMap terms_;
};

/// (i, j) stands for x^i y^j.
using WeylBasis = std::pair<unsigned, unsigned>;

class WeylElement {
public:
    using TermMap = std::map<WeylBasis, CommPoly>;

    explicit WeylElement(const FieldSpec& field = FieldSpec::rationals()) : field_(field) {}
    static WeylElement constant(const CommPoly& c);
    static WeylElement scalar(const Scalar& c) { return constant(CommPoly::constant(c)); }
    static WeylElement x(const FieldSpec& field) { return basis(field, 1, 0); }
    static WeylElement y(const FieldSpec& field) { return basis(field, 0, 1); }
    static WeylElement basis(const FieldSpec& field, unsigned i, unsigned j);

    const FieldSpec& field() const noexcept { return field_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    CommPoly coefficient(unsigned i, unsigned j) const;

    void add_term(unsigned i, unsigned j, const CommPoly& c);

    WeylElement& operator+=(const WeylElement& o);
    WeylElement& operator-=(const WeylElement& o);
    WeylElement& operator*=(const Scalar& c);
    WeylElement& operator*=(const CommPoly& c);
    friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
    friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
    friend WeylElement operator*(WeylElement a, const Scalar& c) { return a *= c; }
    friend WeylElement operator*(WeylElement a, const CommPoly& c) { return a *= c; }
    WeylElement operator-() const;
    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.field_ == b.field_ && a.terms_ == b.terms_;
    }

    /// this * x and this * y, using x^i y^j x = x^{i+1} y^j + j x^i y^{j-1}.
    WeylElement times_x() const;
    WeylElement times_y() const;

    /// Substitutes scalars for all parameters.
    WeylElement specialize(std::span<const Scalar> values) const;

    std::string to_string() const;

private:
    FieldSpec field_;
    TermMap terms_;
};

/// y^j x^i in normal order, obtained by pushing one x at a time through y^j.
std::map<WeylBasis, long> normal_order_yx(unsigned j, unsigned i);

WeylElement weyl_mul(const WeylElement& u, const WeylElement& v);
inline WeylElement operator*(const WeylElement& u, const WeylElement& v) { return weyl_mul(u, v); }
WeylElement weyl_commutator(const WeylElement& u, const WeylElement& v);

/// [y, a] for a in F[x]: the formal derivative of a. Throws NotPurelyX.
WeylElement commutator_with_y(const WeylElement& a);

/// Commutes with both x and y.
bool is_central(const WeylElement& u);

}  // namespace weylpi
