#include "weylpi/free_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace weylpi {

Letter Word::max_letter() const noexcept {
    return letters.empty() ? Letter{0} : *std::max_element(letters.begin(), letters.end());
}

Word operator*(const Word& a, const Word& b) {
    Word w;
    w.letters.reserve(a.size() + b.size());
    w.letters.insert(w.letters.end(), a.letters.begin(), a.letters.end());
    w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
    return w;
}

// ---------------------------------------------------------------- MultiDegree

MultiDegree MultiDegree::of(const Word& w, std::size_t nvars) {
    std::vector<unsigned> c(std::max<std::size_t>(nvars, w.max_letter()), 0);
    for (Letter l : w.letters) ++c[l - 1u];
    return MultiDegree(std::move(c));
}

MultiDegree MultiDegree::parse(const std::string& text) {
    std::vector<unsigned> c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long v = -1;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        while (used < item.size() && item[used] == ' ') ++used;
        if (used != item.size() || v < 0) throw std::invalid_argument("malformed multidegree '" + text + "'");
        c.push_back(static_cast<unsigned>(v));
    }
    if (c.empty() || (!text.empty() && text.back() == ',')) {
        throw std::invalid_argument("malformed multidegree '" + text + "'");
    }
    return MultiDegree(std::move(c));
}

unsigned MultiDegree::total() const noexcept { return std::accumulate(counts_.begin(), counts_.end(), 0u); }

std::size_t MultiDegree::nvars() const noexcept {
    std::size_t n = counts_.size();
    while (n > 0 && counts_[n - 1] == 0) --n;
    return n;
}

bool MultiDegree::is_multilinear() const noexcept {
    const std::size_t n = nvars();
    return n > 0 && std::all_of(counts_.begin(), counts_.begin() + static_cast<std::ptrdiff_t>(n),
                                [](unsigned c) { return c == 1; });
}

MultiDegree MultiDegree::padded(std::size_t n) const {
    std::vector<unsigned> c(counts_.begin(), counts_.begin() + static_cast<std::ptrdiff_t>(nvars()));
    if (c.size() < n) c.resize(n, 0);
    return MultiDegree(std::move(c));
}

MultiDegree operator+(const MultiDegree& a, const MultiDegree& b) {
    std::vector<unsigned> c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
    return MultiDegree(std::move(c));
}

bool operator==(const MultiDegree& a, const MultiDegree& b) noexcept {
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool operator<(const MultiDegree& a, const MultiDegree& b) noexcept {
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

std::string MultiDegree::to_csv() const {
    std::string s;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(counts_[i]);
    }
    return s;
}

std::string MultiDegree::to_string() const { return "(" + to_csv() + ")"; }

std::vector<Word> words_of_multidegree(const MultiDegree& d) {
    std::vector<Letter> letters;
    for (std::size_t i = 0; i < d.size(); ++i) letters.insert(letters.end(), d[i], static_cast<Letter>(i + 1));
    std::vector<Word> out;
    do {
        out.emplace_back(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

// --------------------------------------------------------------------- NCPoly

NCPoly NCPoly::constant(const FieldSpec& field, const Scalar& c) { return monomial(field, Word{}, c); }

NCPoly NCPoly::variable(const FieldSpec& field, Letter i) {
    if (i == 0) throw std::invalid_argument("variable indices are 1-based");
    return monomial(field, Word{i});
}

NCPoly NCPoly::monomial(const FieldSpec& field, const Word& w, const Scalar& c) {
    NCPoly p(field, w.max_letter());
    p.add_term(w, c);
    return p;
}

void NCPoly::set_nvars(std::size_t n) { nvars_ = std::max(nvars_, n); }

Scalar NCPoly::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(field_) : it->second;
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
    if (!(c.field() == field_)) throw FieldMismatch(field_.name() + " vs " + c.field().name());
    if (c.is_zero()) return;
    nvars_ = std::max<std::size_t>(nvars_, w.max_letter());
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    if (!(field_ == o.field_)) throw FieldMismatch(field_.name() + " vs " + o.field_.name());
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    nvars_ = std::max(nvars_, o.nvars_);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    if (!(field_ == o.field_)) throw FieldMismatch(field_.name() + " vs " + o.field_.name());
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    nvars_ = std::max(nvars_, o.nvars_);
    return *this;
}

NCPoly& NCPoly::operator*=(const Scalar& c) {
    if (!(field_ == c.field())) throw FieldMismatch(field_.name() + " vs " + c.field().name());
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, a] : terms_) a *= c;
    return *this;
}

NCPoly NCPoly::operator-() const {
    NCPoly r = *this;
    for (auto& [w, a] : r.terms_) a = -a;
    return r;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    if (!(a.field_ == b.field_)) throw FieldMismatch(a.field_.name() + " vs " + b.field_.name());
    NCPoly r(a.field_, std::max(a.nvars_, b.nvars_));
    for (const auto& [u, c] : a.terms_)
        for (const auto& [v, d] : b.terms_) r.add_term(u * v, c * d);
    return r;
}

bool operator==(const NCPoly& a, const NCPoly& b) { return a.field_ == b.field_ && a.terms_ == b.terms_; }

std::optional<MultiDegree> NCPoly::multidegree() const {
    if (terms_.empty()) return std::nullopt;
    const MultiDegree d = MultiDegree::of(terms_.begin()->first, nvars_);
    for (const auto& [w, c] : terms_)
        if (!(MultiDegree::of(w, nvars_) == d)) return std::nullopt;
    return d;
}

unsigned NCPoly::max_degree() const noexcept {
    return terms_.empty() ? 0u : static_cast<unsigned>(terms_.rbegin()->first.size());
}

NCPoly NCPoly::relabel(std::span<const Letter> map) const {
    if (map.size() < nvars_) throw ArityMismatch("relabel map covers fewer variables than the polynomial uses");
    NCPoly r(field_);
    for (const auto& [w, c] : terms_) {
        Word v;
        v.letters.reserve(w.size());
        for (Letter l : w.letters) v.letters.push_back(map[l - 1u]);
        r.add_term(v, c);
    }
    Letter mx = 0;
    for (Letter l : map) mx = std::max(mx, l);
    r.set_nvars(mx);
    return r;
}

NCPoly mul(const NCPoly& f, const NCPoly& g) { return f * g; }

NCPoly commutator(const NCPoly& f, const NCPoly& g) { return f * g - g * f; }

NCPoly power(const NCPoly& f, unsigned k) {
    NCPoly r = NCPoly::constant(f.field(), Scalar::one(f.field()));
    r.set_nvars(f.nvars());
    for (unsigned i = 0; i < k; ++i) r = r * f;
    return r;
}

std::map<MultiDegree, NCPoly> multihomogeneous_components(const NCPoly& f) {
    std::map<MultiDegree, NCPoly> out;
    for (const auto& [w, c] : f.terms()) {
        auto [it, _] = out.try_emplace(MultiDegree::of(w, f.nvars()), f.field(), f.nvars());
        it->second.add_term(w, c);
    }
    return out;
}

// ------------------------------------------------------------- linearization

namespace {

// Calls emit(labels) for every sequence with counts[j] occurrences of label j.
void for_each_labelling(std::vector<unsigned>& counts, std::vector<unsigned>& labels, std::size_t pos,
                        const std::function<void(const std::vector<unsigned>&)>& emit) {
    if (pos == labels.size()) {
        emit(labels);
        return;
    }
    for (unsigned j = 0; j < counts.size(); ++j) {
        if (counts[j] == 0) continue;
        --counts[j];
        labels[pos] = j;
        for_each_labelling(counts, labels, pos + 1, emit);
        ++counts[j];
    }
}

}  // namespace

NCPoly partial_linearization(const NCPoly& f, std::size_t i, const std::vector<unsigned>& gamma) {
    if (i == 0) throw std::invalid_argument("variable indices are 1-based");
    if (gamma.empty()) throw DegreeMismatch("linearization needs a nonempty degree fragment");
    if (f.is_zero()) return NCPoly(f.field(), f.nvars() + gamma.size() - 1);
    const auto d = f.multidegree();
    if (!d) throw NotMultihomogeneous();
    const unsigned di = (*d)[i - 1];
    const unsigned g = std::accumulate(gamma.begin(), gamma.end(), 0u);
    if (di == 0 || g != di) {
        throw DegreeMismatch("|gamma| = " + std::to_string(g) + " but deg_x" + std::to_string(i) +
                             " = " + std::to_string(di));
    }
    const auto k = static_cast<Letter>(gamma.size());
    const auto li = static_cast<Letter>(i);
    NCPoly r(f.field(), std::max(f.nvars(), i) + gamma.size() - 1);
    std::vector<unsigned> counts = gamma;
    std::vector<unsigned> labels(di);
    for (const auto& [w, c] : f.terms()) {
        for_each_labelling(counts, labels, 0, [&](const std::vector<unsigned>& lab) {
            Word v;
            v.letters.reserve(w.size());
            std::size_t next = 0;
            for (Letter l : w.letters) {
                if (l < li)
                    v.letters.push_back(l);
                else if (l == li)
                    v.letters.push_back(static_cast<Letter>(li + lab[next++]));
                else
                    v.letters.push_back(static_cast<Letter>(l + k - 1));
            }
            r.add_term(v, c);
        });
    }
    return r;
}

NCPoly complete_linearization(const NCPoly& f) {
    if (f.is_zero()) return f;
    const auto d = f.multidegree();
    if (!d) throw NotMultihomogeneous();
    NCPoly cur = f;
    std::size_t pos = 1;
    for (std::size_t j = 0; j < f.nvars(); ++j) {
        const unsigned dj = (*d)[j];
        if (dj == 0) {
            // x_pos does not occur; close the gap.
            std::vector<Letter> map(cur.nvars());
            for (std::size_t a = 1; a <= map.size(); ++a)
                map[a - 1] = static_cast<Letter>(a > pos ? a - 1 : a);
            cur = cur.relabel(map);
            continue;
        }
        if (dj > 1) cur = partial_linearization(cur, pos, std::vector<unsigned>(dj, 1));
        pos += dj;
    }
    return cur;
}

// ----------------------------------------------------------------- generators

namespace {

NCPoly var(const FieldSpec& f, Letter i) { return NCPoly::variable(f, i); }

}  // namespace

NCPoly gamma_m(std::size_t m, const FieldSpec& field) {
    if (m < 3) throw BadArity("Gamma_m needs m >= 3, got " + std::to_string(m));
    NCPoly tail = NCPoly::constant(field, Scalar::one(field));
    for (std::size_t i = 3; i <= m; ++i) tail = tail * var(field, static_cast<Letter>(i));
    return commutator(commutator(var(field, 1), var(field, 2)), tail);
}

NCPoly st3(const FieldSpec& f) {
    auto x = [&](Letter i) { return var(f, i); };
    return x(1) * commutator(x(2), x(3)) - x(2) * commutator(x(1), x(3)) + x(3) * commutator(x(1), x(2));
}

NCPoly t4(const FieldSpec& f) {
    auto b = [&](Letter i, Letter j) { return commutator(var(f, i), var(f, j)); };
    return b(1, 2) * b(3, 4) - b(1, 3) * b(2, 4) + b(2, 3) * b(1, 4);
}

NCPoly generator_at(const NCPoly& g, std::span<const Letter> idx) { return g.relabel(idx); }

}  // namespace weylpi
