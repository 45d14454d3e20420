#pragma once
// Shared generators and brute-force oracles for the tests.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "weylpi/bracket.hpp"
#include "weylpi/free_algebra.hpp"
#include "weylpi/scalar.hpp"

namespace weylpi::test {

inline Scalar random_scalar(std::mt19937_64& rng, const FieldSpec& field, int spread = 5) {
    std::uniform_int_distribution<int> num(-spread, spread), den(1, 3);
    if (field.is_rational()) return Scalar(field, mpq_class(num(rng), den(rng)));
    return Scalar(field, static_cast<long>(num(rng)));
}

inline Word random_word(std::mt19937_64& rng, std::size_t len, Letter nvars) {
    std::uniform_int_distribution<int> letter(1, nvars);
    std::vector<Letter> w(len);
    for (auto& l : w) l = static_cast<Letter>(letter(rng));
    return Word(std::move(w));
}

/// Random polynomial whose words all have multidegree d.
inline NCPoly random_homogeneous(std::mt19937_64& rng, const MultiDegree& d, const FieldSpec& field,
                                 std::size_t max_terms) {
    std::vector<Letter> letters;
    for (std::size_t v = 0; v < d.size(); ++v) letters.insert(letters.end(), d[v], static_cast<Letter>(v + 1));
    NCPoly f(field, d.nvars());
    std::uniform_int_distribution<std::size_t> nterms(1, max_terms);
    while (f.is_zero()) {
        for (std::size_t t = nterms(rng); t > 0; --t) {
            std::shuffle(letters.begin(), letters.end(), rng);
            f.add_term(Word(letters), random_scalar(rng, field));
        }
    }
    return f;
}

inline NCPoly random_poly(std::mt19937_64& rng, const FieldSpec& field, std::size_t terms, std::size_t max_len,
                          Letter nvars) {
    NCPoly f(field, nvars);
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    for (std::size_t t = 0; t < terms; ++t) f.add_term(random_word(rng, len(rng), nvars), random_scalar(rng, field));
    return f;
}

/// Random bracket-monomial of total degree <= max_degree over letters 1..nvars.
inline BracketMonomial random_bracket_monomial(std::mt19937_64& rng, std::size_t max_degree, Letter nvars) {
    std::uniform_int_distribution<std::size_t> kdist(1, max_degree / 2);
    const std::size_t k = kdist(rng);
    std::uniform_int_distribution<std::size_t> ldist(0, max_degree - 2 * k);
    const std::size_t l = ldist(rng);
    std::uniform_int_distribution<int> letter(1, nvars);
    std::vector<Letter> prefix(l);
    for (auto& t : prefix) t = static_cast<Letter>(letter(rng));
    std::vector<Bracket> br;
    while (br.size() < k) {
        auto a = static_cast<Letter>(letter(rng)), b = static_cast<Letter>(letter(rng));
        if (a == b) continue;
        br.push_back({std::min(a, b), std::max(a, b)});
    }
    return BracketMonomial(std::move(prefix), std::move(br));
}

/// Normal ordering of a word over {x, y} by single swaps yx -> xy + 1,
/// done on words with integer multiplicities; returns (i, j) -> coefficient.
inline std::map<std::pair<unsigned, unsigned>, long> swap_oracle(const std::string& word) {
    std::map<std::string, long> work{{word, 1}};
    std::map<std::pair<unsigned, unsigned>, long> out;
    while (!work.empty()) {
        auto [w, c] = *work.begin();
        work.erase(work.begin());
        const auto pos = w.find("yx");
        if (pos == std::string::npos) {
            const auto i = static_cast<unsigned>(std::count(w.begin(), w.end(), 'x'));
            out[{i, static_cast<unsigned>(w.size()) - i}] += c;
            continue;
        }
        std::string swapped = w;
        swapped[pos] = 'x';
        swapped[pos + 1] = 'y';
        work[swapped] += c;
        work[w.substr(0, pos) + w.substr(pos + 2)] += c;
    }
    std::erase_if(out, [](const auto& e) { return e.second == 0; });
    return out;
}

}  // namespace weylpi::test
