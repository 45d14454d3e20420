#include "weylpi/rewriter.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "weylpi/parser.hpp"

namespace weylpi {

std::string_view rule_name(RewriteRule r) noexcept {
    switch (r) {
        case RewriteRule::Swap:
            return "swap";
        case RewriteRule::MoveBracket:
            return "move-bracket";
        case RewriteRule::St3:
            return "st3";
        case RewriteRule::T4:
            return "t4";
    }
    return "?";
}

namespace {

// Prefix word followed by brackets; k = 0 is allowed while rewriting words.
struct Mixed {
    std::vector<Letter> prefix;
    std::vector<Bracket> brackets;

    friend auto operator<=>(const Mixed&, const Mixed&) = default;
    friend bool operator==(const Mixed&, const Mixed&) = default;
};

unsigned inversions(const std::vector<Letter>& p) {
    unsigned n = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) n += p[i] > p[j];
    return n;
}

struct Key {
    Weight mw;
    Weight bw;
    unsigned inv = 0;
    Mixed m;

    friend std::strong_ordering operator<=>(const Key& a, const Key& b) {
        if (auto c = a.mw <=> b.mw; c != 0) return c;
        if (auto c = a.bw <=> b.bw; c != 0) return c;
        if (auto c = a.inv <=> b.inv; c != 0) return c;
        return a.m <=> b.m;
    }
    friend bool operator==(const Key& a, const Key& b) { return (a <=> b) == 0; }
};

Key make_key(Mixed m) {
    Key k;
    k.mw = monomial_weight(m.prefix);
    k.bw = bracket_weight(m.brackets);
    k.inv = inversions(m.prefix);
    k.m = std::move(m);
    return k;
}

bool measure_less(const Key& a, const Key& b) {
    if (auto c = a.mw <=> b.mw; c != 0) return c < 0;
    if (auto c = a.bw <=> b.bw; c != 0) return c < 0;
    return a.inv < b.inv;
}

std::string mixed_text(const Mixed& m) {
    std::string s;
    for (Letter t : m.prefix) s += (s.empty() ? "x" : " x") + std::to_string(t);
    for (const auto& b : m.brackets)
        s += (s.empty() ? "[x" : " [x") + std::to_string(b.r) + ",x" + std::to_string(b.s) + "]";
    return s.empty() ? "1" : s;
}

std::string term_text(const Scalar& c, const Mixed& m, bool leading) {
    const bool neg = c.is_negative();
    const Scalar mag = neg ? -c : c;
    std::string s = leading ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (!mag.is_one()) s += mag.to_string() + "*";
    return s + mixed_text(m);
}

enum class Stage { Semi, Reduced, Complete };

class Engine {
public:
    Engine(const FieldSpec& field, Stage stage, const RewriteOptions& opts)
        : field_(field), stage_(stage), opts_(opts), beta_(field) {
#ifndef NDEBUG
        opts_.check_measure = true;
#endif
    }

    void add(Mixed m, const Scalar& c) {
        if (c.is_zero()) return;
        if (!std::is_sorted(m.brackets.begin(), m.brackets.end(), bracket_sr_less)) {
            Mixed sorted = m;
            std::stable_sort(sorted.brackets.begin(), sorted.brackets.end(), bracket_sr_less);
            if (opts_.trace) {
                const Key before = make_key(m);
                opts_.trace->push_back({RewriteRule::MoveBracket, term_text(c, m, true), term_text(c, sorted, true),
                                        before.mw, before.bw, before.mw, before.bw});
            }
            m = std::move(sorted);
        }
        auto [it, inserted] = work_.try_emplace(make_key(std::move(m)), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) work_.erase(it);
        }
    }

    void run() {
        while (!work_.empty()) {
            auto node = work_.extract(work_.begin());
            step(node.key(), node.mapped());
        }
    }

    const Scalar& beta() const { return beta_; }
    BracketCombination take_terms() {
        BracketCombination out;
        for (auto& [m, c] : done_) out.emplace(BracketMonomial(m.prefix, m.brackets), c);
        return out;
    }

private:
    using Children = std::vector<std::pair<Mixed, Scalar>>;

    void step(const Key& key, const Scalar& c) {
        const Mixed& m = key.m;
        // swap: leftmost adjacent descent in the prefix.
        for (std::size_t i = 0; i + 1 < m.prefix.size(); ++i) {
            if (m.prefix[i] <= m.prefix[i + 1]) continue;
            const Letter hi = m.prefix[i], lo = m.prefix[i + 1];
            Mixed swapped = m;
            std::swap(swapped.prefix[i], swapped.prefix[i + 1]);
            Mixed dropped = m;
            dropped.prefix.erase(dropped.prefix.begin() + static_cast<std::ptrdiff_t>(i),
                                 dropped.prefix.begin() + static_cast<std::ptrdiff_t>(i + 2));
            dropped.brackets.push_back({lo, hi});
            emit(RewriteRule::Swap, key, c, {{std::move(swapped), c}, {std::move(dropped), -c}});
            return;
        }
        if (m.brackets.empty()) {
            beta_ += c;
            return;
        }
        if (stage_ != Stage::Semi && !is_reduced(m.prefix, m.brackets)) {
            // st3 on the last prefix letter and the first bracket.
            const Letter t = m.prefix.back();
            const Bracket b = m.brackets.front();
            Mixed first = m, second = m;
            first.prefix.back() = b.s;
            first.brackets.front() = {b.r, t};
            second.prefix.back() = b.r;
            second.brackets.front() = {b.s, t};
            emit(RewriteRule::St3, key, c, {{std::move(first), c}, {std::move(second), -c}});
            return;
        }
        if (stage_ == Stage::Complete) {
            const auto& br = m.brackets;
            for (std::size_t i = 0; i < br.size(); ++i) {
                for (std::size_t j = 0; j < br.size(); ++j) {
                    if (!(br[j].r < br[i].r && br[i].s < br[j].s)) continue;
                    const Letter a1 = br[j].r, a2 = br[i].r, a3 = br[i].s, a4 = br[j].s;
                    Mixed rest = m;
                    rest.brackets.erase(rest.brackets.begin() + static_cast<std::ptrdiff_t>(std::max(i, j)));
                    rest.brackets.erase(rest.brackets.begin() + static_cast<std::ptrdiff_t>(std::min(i, j)));
                    Mixed first = rest, second = rest;
                    first.brackets.push_back({a1, a2});
                    first.brackets.push_back({a3, a4});
                    second.brackets.push_back({a1, a3});
                    second.brackets.push_back({a2, a4});
                    emit(RewriteRule::T4, key, c, {{std::move(first), -c}, {std::move(second), c}});
                    return;
                }
            }
        }
        auto [it, inserted] = done_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) done_.erase(it);
        }
    }

    void emit(RewriteRule rule, const Key& parent, const Scalar& c, Children children) {
        Weight mw_after, bw_after;
        bool first = true;
        for (const auto& [child, coeff] : children) {
            const Key k = make_key(child);
            if (opts_.check_measure && !measure_less(k, parent)) {
                throw std::logic_error(std::string(rule_name(rule)) + " did not lower the measure on " +
                                       mixed_text(parent.m));
            }
            if (first || mw_after < k.mw || (mw_after == k.mw && bw_after < k.bw)) {
                mw_after = k.mw;
                bw_after = k.bw;
            }
            first = false;
        }
        if (opts_.trace) {
            std::string after;
            for (std::size_t i = 0; i < children.size(); ++i)
                after += term_text(children[i].second, children[i].first, i == 0);
            opts_.trace->push_back(
                {rule, term_text(c, parent.m, true), after, parent.mw, parent.bw, mw_after, bw_after});
        }
        for (auto& [child, coeff] : children) add(std::move(child), coeff);
    }

    FieldSpec field_;
    Stage stage_;
    RewriteOptions opts_;
    Scalar beta_;
    std::map<Key, Scalar, std::greater<>> work_;  // largest measure first
    std::map<Mixed, Scalar> done_;
};

Mixed to_mixed(const BracketMonomial& b) { return Mixed{b.prefix(), b.brackets()}; }

}  // namespace

SemiReduction semi_reduce(const NCPoly& f, const RewriteOptions& opts) {
    if (!f.is_multihomogeneous()) throw NotMultihomogeneous();
    Engine e(f.field(), Stage::Semi, opts);
    for (const auto& [w, c] : f.terms()) e.add(Mixed{w.letters, {}}, c);
    e.run();
    return {e.beta(), e.take_terms()};
}

SemiReduction semi_reduce(const BracketMonomial& b, const FieldSpec& field, const RewriteOptions& opts) {
    Engine e(field, Stage::Semi, opts);
    e.add(to_mixed(b), Scalar::one(field));
    e.run();
    return {e.beta(), e.take_terms()};
}

BracketCombination reduce(const BracketMonomial& b, const FieldSpec& field, const RewriteOptions& opts) {
    if (status(b) < ReductionStatus::SemiReduced) throw NotSemiReduced();
    Engine e(field, Stage::Reduced, opts);
    e.add(to_mixed(b), Scalar::one(field));
    e.run();
    return e.take_terms();
}

BracketCombination completely_reduce(const BracketMonomial& b, const FieldSpec& field, const RewriteOptions& opts) {
    if (status(b) < ReductionStatus::Reduced) throw NotReduced();
    Engine e(field, Stage::Complete, opts);
    e.add(to_mixed(b), Scalar::one(field));
    e.run();
    return e.take_terms();
}

std::map<MultiDegree, NormalForm> normal_form(const NCPoly& f, const RewriteOptions& opts) {
    std::map<MultiDegree, NormalForm> out;
    for (const auto& [d, comp] : multihomogeneous_components(f)) {
        Engine e(f.field(), Stage::Complete, opts);
        for (const auto& [w, c] : comp.terms()) e.add(Mixed{w.letters, {}}, c);
        e.run();
        out.emplace(d, NormalForm{d, e.beta(), e.take_terms()});
    }
    return out;
}

NormalForm normal_form(const BracketCombination& combo, const MultiDegree& mdeg, const FieldSpec& field,
                       const RewriteOptions& opts) {
    Engine e(field, Stage::Complete, opts);
    for (const auto& [b, c] : combo) {
        if (!(b.multidegree() == mdeg)) throw DegreeMismatch("bracket-monomial " + b.to_string() + " has multidegree " +
                                                              b.multidegree().to_string());
        e.add(to_mixed(b), c);
    }
    e.run();
    return NormalForm{mdeg, e.beta(), e.take_terms()};
}

NCPoly expand(const BracketCombination& combo, const FieldSpec& field) {
    NCPoly out(field);
    for (const auto& [b, c] : combo) out += expand(b, field) * c;
    return out;
}

std::string to_string(const BracketCombination& combo) {
    if (combo.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [b, c] : combo) {
        s += term_text(c, Mixed{b.prefix(), b.brackets()}, first);
        first = false;
    }
    return s;
}

NCPoly NormalForm::reconstruct(const FieldSpec& field) const {
    std::vector<Letter> letters;
    for (std::size_t v = 0; v < mdeg.size(); ++v) letters.insert(letters.end(), mdeg[v], static_cast<Letter>(v + 1));
    NCPoly out(field, mdeg.size());
    out.add_term(Word(std::move(letters)), beta);
    out += expand(terms, field);
    return out;
}

std::string NormalForm::to_string() const {
    std::vector<Letter> letters;
    for (std::size_t v = 0; v < mdeg.size(); ++v) letters.insert(letters.end(), mdeg[v], static_cast<Letter>(v + 1));
    return "beta=" + beta.to_string() + " (" + format_word(Word(letters)) + ") terms: " + weylpi::to_string(terms);
}

}  // namespace weylpi
