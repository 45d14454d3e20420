#pragma once
// Sparse polynomials in the free associative algebra F<x1, x2, ...>.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weylpi/scalar.hpp"

namespace weylpi {

/// 1-based variable index.
using Letter = std::uint16_t;

/// A monomial of the free monoid; the empty word is the unit.
struct Word {
    std::vector<Letter> letters;

    Word() = default;
    Word(std::initializer_list<Letter> l) : letters(l) {}
    explicit Word(std::vector<Letter> l) : letters(std::move(l)) {}

    std::size_t size() const noexcept { return letters.size(); }
    bool empty() const noexcept { return letters.empty(); }
    Letter max_letter() const noexcept;

    friend Word operator*(const Word& a, const Word& b);
    friend bool operator==(const Word&, const Word&) = default;
};

/// Degree first, then lexicographic on the letters.
struct DegLex {
    bool operator()(const Word& a, const Word& b) const noexcept {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.letters < b.letters;
    }
};

/// Per-variable degree vector; trailing zeros are insignificant in comparisons.
class MultiDegree {
public:
    MultiDegree() = default;
    MultiDegree(std::initializer_list<unsigned> c) : counts_(c) {}
    explicit MultiDegree(std::vector<unsigned> c) : counts_(std::move(c)) {}

    /// Multidegree of w, padded to at least `nvars` entries.
    static MultiDegree of(const Word& w, std::size_t nvars = 0);
    /// The multilinear degree 1^m.
    static MultiDegree ones(std::size_t m) { return MultiDegree(std::vector<unsigned>(m, 1)); }

    /// Accepts "d1,d2,...".
    static MultiDegree parse(const std::string& text);

    std::size_t size() const noexcept { return counts_.size(); }
    unsigned operator[](std::size_t i) const noexcept { return i < counts_.size() ? counts_[i] : 0; }
    const std::vector<unsigned>& counts() const noexcept { return counts_; }
    unsigned total() const noexcept;
    /// Number of variables with a nonzero entry counted up to the last one.
    std::size_t nvars() const noexcept;
    bool is_multilinear() const noexcept;

    MultiDegree padded(std::size_t n) const;
    MultiDegree trimmed() const { return padded(0); }

    friend MultiDegree operator+(const MultiDegree& a, const MultiDegree& b);
    friend bool operator==(const MultiDegree& a, const MultiDegree& b) noexcept;
    friend bool operator<(const MultiDegree& a, const MultiDegree& b) noexcept;

    /// "(2,1,0)"
    std::string to_string() const;
    /// "2,1,0"
    std::string to_csv() const;

private:
    std::vector<unsigned> counts_;
};

/// All words of multidegree d, in DegLex order.
std::vector<Word> words_of_multidegree(const MultiDegree& d);

class NCPoly {
public:
    using TermMap = std::map<Word, Scalar, DegLex>;

    explicit NCPoly(const FieldSpec& field = FieldSpec::rationals(), std::size_t nvars = 0)
        : field_(field), nvars_(nvars) {}

    static NCPoly constant(const FieldSpec& field, const Scalar& c);
    static NCPoly variable(const FieldSpec& field, Letter i);
    static NCPoly monomial(const FieldSpec& field, const Word& w, const Scalar& c);
    static NCPoly monomial(const FieldSpec& field, const Word& w) { return monomial(field, w, Scalar::one(field)); }

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t nvars() const noexcept { return nvars_; }
    /// Raises the variable bound; never lowers it below the letters in use.
    void set_nvars(std::size_t n);
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    Scalar coefficient(const Word& w) const;

    /// Adds c*w, dropping the term if it cancels.
    void add_term(const Word& w, const Scalar& c);

    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    NCPoly& operator*=(const Scalar& c);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(NCPoly a, const Scalar& c) { return a *= c; }
    friend NCPoly operator*(const Scalar& c, NCPoly a) { return a *= c; }
    NCPoly operator-() const;
    /// Concatenation product.
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);

    /// Same field and same terms; nvars is not compared.
    friend bool operator==(const NCPoly& a, const NCPoly& b);

    /// Multidegree shared by all terms, if any; nullopt for 0 or mixed.
    std::optional<MultiDegree> multidegree() const;
    bool is_multihomogeneous() const { return is_zero() || multidegree().has_value(); }
    unsigned max_degree() const noexcept;

    /// Replaces x_k by x_{map[k-1]}; map must cover 1..nvars().
    NCPoly relabel(std::span<const Letter> map) const;

private:
    FieldSpec field_;
    std::size_t nvars_;
    TermMap terms_;
};

NCPoly mul(const NCPoly& f, const NCPoly& g);
/// fg - gf
NCPoly commutator(const NCPoly& f, const NCPoly& g);
NCPoly power(const NCPoly& f, unsigned k);

std::map<MultiDegree, NCPoly> multihomogeneous_components(const NCPoly& f);

/// lin_{x_i}^{gamma}(f): x_i becomes x_i + ... + x_{i+k-1} (k = gamma.size()),
/// higher variables shift up by k-1, and the component of multidegree
/// (d_1..d_{i-1}, gamma, d_{i+1}..) is kept. Requires |gamma| = deg_{x_i} f > 0.
NCPoly partial_linearization(const NCPoly& f, std::size_t i, const std::vector<unsigned>& gamma);

/// lin_{x_1}^{1^{d_1}} ... lin_{x_m}^{1^{d_m}} applied in order; variables of
/// degree zero are dropped, so the result has multidegree 1^{|d|}.
NCPoly complete_linearization(const NCPoly& f);

/// Gamma_m = [[x1,x2], x3 ... xm], m >= 3.
NCPoly gamma_m(std::size_t m, const FieldSpec& field = FieldSpec::rationals());
/// x1[x2,x3] - x2[x1,x3] + x3[x1,x2]
NCPoly st3(const FieldSpec& field = FieldSpec::rationals());
/// [x1,x2][x3,x4] - [x1,x3][x2,x4] + [x2,x3][x1,x4]
NCPoly t4(const FieldSpec& field = FieldSpec::rationals());
/// g(x_{idx[0]}, ..., x_{idx[k-1]}); repeated indices allowed.
NCPoly generator_at(const NCPoly& g, std::span<const Letter> idx);

}  // namespace weylpi
