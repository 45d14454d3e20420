#include "weylpi/weyl.hpp"

#include <algorithm>

namespace weylpi {

namespace {

void trim(ParamMonomial& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

ParamMonomial mono_mul(const ParamMonomial& a, const ParamMonomial& b) {
    ParamMonomial r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint16_t>(r[i] + a[i]);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = static_cast<std::uint16_t>(r[i] + b[i]);
    return r;
}

std::string param_name(std::size_t idx) {
    return std::string(idx % 2 == 0 ? "a" : "b") + std::to_string(idx / 2 + 1);
}

}  // namespace

// -------------------------------------------------------------------- CommPoly

CommPoly CommPoly::constant(const Scalar& c) {
    CommPoly p(c.field());
    p.add_term({}, c);
    return p;
}

CommPoly CommPoly::parameter(const FieldSpec& field, std::size_t index) {
    ParamMonomial m(index + 1, 0);
    m[index] = 1;
    CommPoly p(field);
    p.add_term(m, Scalar::one(field));
    return p;
}

Scalar CommPoly::constant_term() const {
    auto it = terms_.find(ParamMonomial{});
    return it == terms_.end() ? Scalar(field_) : it->second;
}

bool CommPoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

void CommPoly::add_term(const ParamMonomial& m, const Scalar& c) {
    if (!(c.field() == field_)) throw FieldMismatch(field_.name() + " vs " + c.field().name());
    if (c.is_zero()) return;
    ParamMonomial key = m;
    trim(key);
    auto [it, inserted] = terms_.try_emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

CommPoly& CommPoly::operator*=(const Scalar& c) {
    if (!(c.field() == field_)) throw FieldMismatch(field_.name() + " vs " + c.field().name());
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, a] : terms_) a *= c;
    return *this;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
    if (!(a.field_ == b.field_)) throw FieldMismatch(a.field_.name() + " vs " + b.field_.name());
    CommPoly r(a.field_);
    for (const auto& [m, c] : a.terms_)
        for (const auto& [n, d] : b.terms_) r.add_term(mono_mul(m, n), c * d);
    return r;
}

CommPoly CommPoly::operator-() const {
    CommPoly r(field_);
    return r -= *this;
}

Scalar CommPoly::evaluate(std::span<const Scalar> values) const {
    Scalar total(field_);
    for (const auto& [m, c] : terms_) {
        Scalar t = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] && i >= values.size()) throw ArityMismatch("missing value for parameter " + param_name(i));
            for (unsigned e = 0; e < m[i]; ++e) t *= values[i];
        }
        total += t;
    }
    return total;
}

std::string CommPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = c.is_negative();
        const Scalar mag = neg ? -c : c;
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            if (!mono.empty()) mono += '*';
            mono += param_name(i);
            if (m[i] > 1) mono += '^' + std::to_string(m[i]);
        }
        if (mono.empty())
            out += mag.to_string();
        else
            out += (mag.is_one() ? std::string() : mag.to_string() + "*") + mono;
    }
    return out;
}

// ----------------------------------------------------------------- WeylElement

WeylElement WeylElement::constant(const CommPoly& c) {
    WeylElement e(c.field());
    e.add_term(0, 0, c);
    return e;
}

WeylElement WeylElement::basis(const FieldSpec& field, unsigned i, unsigned j) {
    WeylElement e(field);
    e.add_term(i, j, CommPoly::constant(Scalar::one(field)));
    return e;
}

CommPoly WeylElement::coefficient(unsigned i, unsigned j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? CommPoly(field_) : it->second;
}

void WeylElement::add_term(unsigned i, unsigned j, const CommPoly& c) {
    if (!(c.field() == field_)) throw FieldMismatch(field_.name() + " vs " + c.field().name());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
    for (const auto& [b, c] : o.terms_) add_term(b.first, b.second, c);
    return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
    for (const auto& [b, c] : o.terms_) add_term(b.first, b.second, -c);
    return *this;
}

WeylElement& WeylElement::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [b, a] : terms_) a *= c;
    return *this;
}

WeylElement& WeylElement::operator*=(const CommPoly& c) {
    TermMap old;
    old.swap(terms_);
    for (const auto& [b, a] : old) add_term(b.first, b.second, a * c);
    return *this;
}

WeylElement WeylElement::operator-() const {
    WeylElement r(field_);
    return r -= *this;
}

WeylElement WeylElement::times_x() const {
    WeylElement r(field_);
    for (const auto& [b, c] : terms_) {
        const auto [i, j] = b;
        r.add_term(i + 1, j, c);
        if (j > 0) r.add_term(i, j - 1, c * Scalar(field_, static_cast<long>(j)));
    }
    return r;
}

WeylElement WeylElement::times_y() const {
    WeylElement r(field_);
    for (const auto& [b, c] : terms_) r.add_term(b.first, b.second + 1, c);
    return r;
}

WeylElement WeylElement::specialize(std::span<const Scalar> values) const {
    WeylElement r(field_);
    for (const auto& [b, c] : terms_) r.add_term(b.first, b.second, CommPoly::constant(c.evaluate(values)));
    return r;
}

std::string WeylElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [b, c] : terms_) {
        const auto [i, j] = b;
        std::string basis;
        if (i) basis += i == 1 ? "x" : "x^" + std::to_string(i);
        if (j) basis += (basis.empty() ? "" : "*") + (j == 1 ? std::string("y") : "y^" + std::to_string(j));
        std::string coeff = c.to_string();
        const bool single = c.terms().size() == 1;
        const bool neg = single && c.terms().begin()->second.is_negative();
        if (neg) coeff = (-c).to_string();
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        first = false;
        if (basis.empty())
            out += single ? coeff : "(" + coeff + ")";
        else if (coeff == "1")
            out += basis;
        else
            out += (single ? coeff : "(" + coeff + ")") + "*" + basis;
    }
    return out;
}

// ------------------------------------------------------------------ products

std::map<WeylBasis, long> normal_order_yx(unsigned j, unsigned i) {
    std::map<WeylBasis, long> cur{{{0u, j}, 1L}};
    for (unsigned step = 0; step < i; ++step) {
        std::map<WeylBasis, long> next;
        for (const auto& [b, c] : cur) {
            const auto [a, e] = b;
            next[{a + 1, e}] += c;
            if (e > 0) next[{a, e - 1}] += c * static_cast<long>(e);
        }
        cur.swap(next);
    }
    return cur;
}

WeylElement weyl_mul(const WeylElement& u, const WeylElement& v) {
    if (!(u.field() == v.field())) throw FieldMismatch(u.field().name() + " vs " + v.field().name());
    const FieldSpec& f = u.field();
    WeylElement r(f);
    std::map<std::pair<unsigned, unsigned>, std::map<WeylBasis, long>> cache;
    for (const auto& [b1, c1] : u.terms()) {
        for (const auto& [b2, c2] : v.terms()) {
            const CommPoly coeff = c1 * c2;
            if (coeff.is_zero()) continue;
            // x^{i1} (y^{j1} x^{i2}) y^{j2}
            auto key = std::make_pair(b1.second, b2.first);
            auto it = cache.find(key);
            if (it == cache.end()) it = cache.emplace(key, normal_order_yx(key.first, key.second)).first;
            for (const auto& [b, n] : it->second) {
                r.add_term(b1.first + b.first, b.second + b2.second, coeff * Scalar(f, n));
            }
        }
    }
    return r;
}

WeylElement weyl_commutator(const WeylElement& u, const WeylElement& v) { return weyl_mul(u, v) - weyl_mul(v, u); }

WeylElement commutator_with_y(const WeylElement& a) {
    WeylElement r(a.field());
    for (const auto& [b, c] : a.terms()) {
        if (b.second != 0) throw NotPurelyX();
        if (b.first > 0) r.add_term(b.first - 1, 0, c * Scalar(a.field(), static_cast<long>(b.first)));
    }
    return r;
}

bool is_central(const WeylElement& u) {
    const FieldSpec& f = u.field();
    return weyl_commutator(u, WeylElement::x(f)).is_zero() && weyl_commutator(u, WeylElement::y(f)).is_zero();
}

}  // namespace weylpi
