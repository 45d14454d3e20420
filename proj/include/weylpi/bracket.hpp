#pragma once
// Bracket-monomials x_{t1}...x_{tl} [x_{r1},x_{s1}] ... [x_{rk},x_{sk}], r_i < s_i, k >= 1.

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "weylpi/free_algebra.hpp"

namespace weylpi {

struct Bracket {
    Letter r = 0;
    Letter s = 0;

    friend bool operator==(const Bracket&, const Bracket&) = default;
    /// (r, s) lexicographic.
    friend auto operator<=>(const Bracket&, const Bracket&) = default;
};

/// Canonical order of brackets inside a monomial: by s, then r.
inline bool bracket_sr_less(const Bracket& a, const Bracket& b) noexcept {
    return a.s != b.s ? a.s < b.s : a.r < b.r;
}

/// Nonincreasing sequence of nonnegative integers, compared after padding
/// the shorter one with zeros.
class Weight {
public:
    Weight() = default;
    Weight(std::initializer_list<unsigned> e) : entries_(e) {}
    /// Sorts descending.
    static Weight from_unsorted(std::vector<unsigned> values);

    const std::vector<unsigned>& entries() const noexcept { return entries_; }
    std::string to_string() const;

    friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) noexcept;
    friend bool operator==(const Weight& a, const Weight& b) noexcept { return (a <=> b) == 0; }

private:
    std::vector<unsigned> entries_;
};

inline bool weight_less(const Weight& a, const Weight& b) noexcept { return a < b; }

enum class ReductionStatus { None = 0, SemiReduced = 1, Reduced = 2, CompletelyReduced = 3 };

std::string_view to_string(ReductionStatus s) noexcept;

class BracketMonomial {
public:
    /// Throws std::invalid_argument unless k >= 1 and every r < s.
    BracketMonomial(std::vector<Letter> prefix, std::vector<Bracket> brackets);

    /// Reads the display form "x1 x2 [x3,x4] [x1,x5]".
    static BracketMonomial parse(std::string_view text);

    const std::vector<Letter>& prefix() const noexcept { return prefix_; }
    const std::vector<Bracket>& brackets() const noexcept { return brackets_; }
    std::size_t degree() const noexcept { return prefix_.size() + 2 * brackets_.size(); }
    Letter max_letter() const noexcept;

    MultiDegree multidegree(std::size_t nvars = 0) const;
    /// Same monomial with brackets in (s, r) order.
    BracketMonomial with_sorted_brackets() const;

    std::string to_string() const;

    friend bool operator==(const BracketMonomial&, const BracketMonomial&) = default;
    /// Number of brackets, then prefix, then brackets in (r, s) order.
    friend std::strong_ordering operator<=>(const BracketMonomial& a, const BracketMonomial& b);

private:
    std::vector<Letter> prefix_;
    std::vector<Bracket> brackets_;
};

/// The 2^k-term expansion in the free algebra.
NCPoly expand(const BracketMonomial& b, const FieldSpec& field = FieldSpec::rationals());

ReductionStatus status(const BracketMonomial& b);
bool is_semi_reduced(std::span<const Letter> prefix, std::span<const Bracket> brackets);
bool is_reduced(std::span<const Letter> prefix, std::span<const Bracket> brackets);
bool has_nested_pair(std::span<const Bracket> brackets);

/// Prefix indices in descending order, or (0) for an empty prefix.
Weight monomial_weight(std::span<const Letter> prefix);
Weight monomial_weight(const BracketMonomial& b);
/// Spans s - r in descending order.
Weight bracket_weight(std::span<const Bracket> brackets);
Weight bracket_weight(const BracketMonomial& b);

/// All completely reduced bracket-monomials of multidegree d, brackets in
/// (s, r) order, listed by number of brackets, then prefix, then brackets.
/// Throws DegreeTooSmall when |d| < 2.
std::vector<BracketMonomial> enumerate_completely_reduced(const MultiDegree& d);

}  // namespace weylpi
