#include "weylpi/bracket.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace weylpi {

// ---------------------------------------------------------------------- Weight

Weight Weight::from_unsorted(std::vector<unsigned> values) {
    std::sort(values.begin(), values.end(), std::greater<>());
    Weight w;
    w.entries_ = std::move(values);
    return w;
}

std::string Weight::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) s += (i ? "," : "") + std::to_string(entries_[i]);
    return s + ")";
}

std::strong_ordering operator<=>(const Weight& a, const Weight& b) noexcept {
    const std::size_t n = std::max(a.entries_.size(), b.entries_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned x = i < a.entries_.size() ? a.entries_[i] : 0;
        const unsigned y = i < b.entries_.size() ? b.entries_[i] : 0;
        if (x != y) return x <=> y;
    }
    return std::strong_ordering::equal;
}

std::string_view to_string(ReductionStatus s) noexcept {
    switch (s) {
        case ReductionStatus::None:
            return "none";
        case ReductionStatus::SemiReduced:
            return "semi-reduced";
        case ReductionStatus::Reduced:
            return "reduced";
        case ReductionStatus::CompletelyReduced:
            return "completely-reduced";
    }
    return "?";
}

// ------------------------------------------------------------- BracketMonomial

BracketMonomial::BracketMonomial(std::vector<Letter> prefix, std::vector<Bracket> brackets)
    : prefix_(std::move(prefix)), brackets_(std::move(brackets)) {
    if (brackets_.empty()) throw std::invalid_argument("a bracket-monomial needs at least one bracket");
    for (Letter t : prefix_)
        if (t == 0) throw std::invalid_argument("variable indices are 1-based");
    for (const auto& b : brackets_) {
        if (b.r == 0 || b.r >= b.s) throw std::invalid_argument("bracket [x_r,x_s] needs 1 <= r < s");
    }
}

BracketMonomial BracketMonomial::parse(std::string_view text) {
    std::vector<Letter> prefix;
    std::vector<Bracket> brackets;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto var = [&]() -> Letter {
        skip();
        if (i >= text.size() || text[i] != 'x') throw SyntaxError("expected variable", i);
        const std::size_t start = ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw SyntaxError("expected variable index", start);
        return static_cast<Letter>(std::stoul(std::string(text.substr(start, i - start))));
    };
    auto expect = [&](char c) {
        skip();
        if (i >= text.size() || text[i] != c) throw SyntaxError(std::string("expected '") + c + "'", i);
        ++i;
    };
    for (skip(); i < text.size(); skip()) {
        if (text[i] == '[') {
            ++i;
            const Letter r = var();
            expect(',');
            const Letter s = var();
            expect(']');
            brackets.push_back({r, s});
        } else {
            if (!brackets.empty()) throw SyntaxError("prefix letters must precede brackets", i);
            prefix.push_back(var());
        }
    }
    return BracketMonomial(std::move(prefix), std::move(brackets));
}

Letter BracketMonomial::max_letter() const noexcept {
    Letter m = 0;
    for (Letter t : prefix_) m = std::max(m, t);
    for (const auto& b : brackets_) m = std::max(m, b.s);
    return m;
}

MultiDegree BracketMonomial::multidegree(std::size_t nvars) const {
    std::vector<unsigned> c(std::max<std::size_t>(nvars, max_letter()), 0);
    for (Letter t : prefix_) ++c[t - 1u];
    for (const auto& b : brackets_) {
        ++c[b.r - 1u];
        ++c[b.s - 1u];
    }
    return MultiDegree(std::move(c));
}

BracketMonomial BracketMonomial::with_sorted_brackets() const {
    auto br = brackets_;
    std::sort(br.begin(), br.end(), bracket_sr_less);
    return BracketMonomial(prefix_, std::move(br));
}

std::string BracketMonomial::to_string() const {
    std::string s;
    for (Letter t : prefix_) s += (s.empty() ? "x" : " x") + std::to_string(t);
    for (const auto& b : brackets_) {
        s += (s.empty() ? "[x" : " [x") + std::to_string(b.r) + ",x" + std::to_string(b.s) + "]";
    }
    return s;
}

std::strong_ordering operator<=>(const BracketMonomial& a, const BracketMonomial& b) {
    if (auto c = a.brackets_.size() <=> b.brackets_.size(); c != 0) return c;
    if (auto c = a.prefix_ <=> b.prefix_; c != 0) return c;
    return a.brackets_ <=> b.brackets_;
}

NCPoly expand(const BracketMonomial& b, const FieldSpec& field) {
    NCPoly out = NCPoly::monomial(field, Word(b.prefix()));
    for (const auto& br : b.brackets()) {
        out = out * commutator(NCPoly::variable(field, br.r), NCPoly::variable(field, br.s));
    }
    return out;
}

// ------------------------------------------------------------------- statuses

bool is_semi_reduced(std::span<const Letter> prefix, std::span<const Bracket> brackets) {
    if (!std::is_sorted(prefix.begin(), prefix.end())) return false;
    for (std::size_t i = 1; i < brackets.size(); ++i)
        if (brackets[i - 1].s > brackets[i].s) return false;
    return true;
}

bool is_reduced(std::span<const Letter> prefix, std::span<const Bracket> brackets) {
    if (!is_semi_reduced(prefix, brackets)) return false;
    return prefix.empty() || brackets.empty() || prefix.back() <= brackets.front().s;
}

bool has_nested_pair(std::span<const Bracket> brackets) {
    for (const auto& inner : brackets)
        for (const auto& outer : brackets)
            if (outer.r < inner.r && inner.s < outer.s) return true;
    return false;
}

ReductionStatus status(const BracketMonomial& b) {
    if (!is_semi_reduced(b.prefix(), b.brackets())) return ReductionStatus::None;
    if (!is_reduced(b.prefix(), b.brackets())) return ReductionStatus::SemiReduced;
    if (has_nested_pair(b.brackets())) return ReductionStatus::Reduced;
    return ReductionStatus::CompletelyReduced;
}

Weight monomial_weight(std::span<const Letter> prefix) {
    if (prefix.empty()) return Weight{0};
    return Weight::from_unsorted(std::vector<unsigned>(prefix.begin(), prefix.end()));
}

Weight monomial_weight(const BracketMonomial& b) { return monomial_weight(b.prefix()); }

Weight bracket_weight(std::span<const Bracket> brackets) {
    std::vector<unsigned> spans;
    spans.reserve(brackets.size());
    for (const auto& br : brackets) spans.push_back(static_cast<unsigned>(br.s - br.r));
    return Weight::from_unsorted(std::move(spans));
}

Weight bracket_weight(const BracketMonomial& b) { return bracket_weight(b.brackets()); }

// ----------------------------------------------------------------- enumeration

std::vector<BracketMonomial> enumerate_completely_reduced(const MultiDegree& d) {
    if (d.total() < 2) throw DegreeTooSmall();
    const std::size_t m = d.nvars();
    std::vector<unsigned> left(d.counts().begin(), d.counts().begin() + static_cast<std::ptrdiff_t>(m));
    std::vector<Bracket> chosen;
    std::vector<BracketMonomial> out;

    // Brackets are chosen in nondecreasing (s, r) order so each multiset appears once.
    std::function<void()> grow = [&] {
        if (!chosen.empty()) {
            std::vector<Letter> prefix;
            for (std::size_t v = 0; v < m; ++v) prefix.insert(prefix.end(), left[v], static_cast<Letter>(v + 1));
            if (is_reduced(prefix, chosen) && !has_nested_pair(chosen)) out.emplace_back(prefix, chosen);
        }
        for (Letter s = 2; s <= m; ++s) {
            if (!left[s - 1u]) continue;
            for (Letter r = 1; r < s; ++r) {
                if (!left[r - 1u]) continue;
                const Bracket b{r, s};
                if (!chosen.empty() && bracket_sr_less(b, chosen.back())) continue;
                --left[r - 1u];
                --left[s - 1u];
                chosen.push_back(b);
                grow();
                chosen.pop_back();
                ++left[r - 1u];
                ++left[s - 1u];
            }
        }
    };
    grow();
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace weylpi
