#include "weylpi/scalar.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

namespace weylpi {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic witness set for 64-bit inputs.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s && composite; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) composite = false;
        }
        if (composite) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p >= (1ULL << 32) || !is_prime(p)) {
        throw std::invalid_argument("characteristic must be a prime below 2^32: " + std::to_string(p));
    }
    FieldSpec f;
    f.kind_ = Kind::PrimeField;
    f.p_ = p;
    return f;
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.starts_with("fp:")) {
        auto digits = text.substr(3);
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc{} && ptr == digits.data() + digits.size() && !digits.empty()) return prime(p);
    }
    throw std::invalid_argument("bad field '" + std::string(text) + "', expected q or fp:P");
}

std::string FieldSpec::name() const {
    return is_rational() ? std::string("q") : "fp:" + std::to_string(p_);
}

Scalar::Scalar(const FieldSpec& field) : field_(field) {
    if (field.is_rational())
        value_ = mpq_class(0);
    else
        value_ = std::uint64_t{0};
}

Scalar::Scalar(const FieldSpec& field, long value) : field_(field) {
    if (field.is_rational()) {
        value_ = mpq_class(value);
    } else {
        auto p = static_cast<long long>(field.characteristic());
        long long r = static_cast<long long>(value) % p;
        if (r < 0) r += p;
        value_ = static_cast<std::uint64_t>(r);
    }
}

Scalar::Scalar(const FieldSpec& field, const mpq_class& value) : field_(field) {
    if (field.is_rational()) {
        mpq_class v = value;
        v.canonicalize();
        value_ = std::move(v);
        return;
    }
    const auto p = field.characteristic();
    const auto num = reduce_mpz(value.get_num(), p);
    const auto den = reduce_mpz(value.get_den(), p);
    if (den == 0) throw DivisionByZero();
    value_ = mulmod(num, powmod(den, p - 2, p), p);
}

Scalar Scalar::parse(const FieldSpec& field, std::string_view text) {
    mpq_class q;
    if (q.set_str(std::string(text), 10) != 0) throw std::invalid_argument("bad number '" + std::string(text) + "'");
    if (q.get_den() == 0) throw DivisionByZero();
    q.canonicalize();
    return Scalar(field, q);
}

bool Scalar::is_zero() const noexcept {
    if (auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const noexcept {
    if (auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 1;
    return std::get<mpq_class>(value_) == 1;
}

bool Scalar::is_negative() const noexcept {
    if (auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) < 0;
    return false;
}

void Scalar::check_same(const Scalar& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch(field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Scalar r(field_);
    if (field_.is_rational()) {
        r.value_ = mpq_class(1) / std::get<mpq_class>(value_);
    } else {
        const auto p = field_.characteristic();
        r.value_ = powmod(std::get<std::uint64_t>(value_), p - 2, p);
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same(o);
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
    } else {
        auto& a = std::get<std::uint64_t>(value_);
        a += std::get<std::uint64_t>(o.value_);
        if (a >= field_.characteristic()) a -= field_.characteristic();
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same(o);
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
    } else {
        auto& a = std::get<std::uint64_t>(value_);
        const auto b = std::get<std::uint64_t>(o.value_);
        a = a >= b ? a - b : a + field_.characteristic() - b;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same(o);
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
    } else {
        auto& a = std::get<std::uint64_t>(value_);
        a = mulmod(a, std::get<std::uint64_t>(o.value_), field_.characteristic());
    }
    return *this;
}

Scalar Scalar::operator-() const {
    Scalar r(field_);
    return r -= *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const {
    if (auto* r = std::get_if<std::uint64_t>(&value_)) return std::to_string(*r);
    return std::get<mpq_class>(value_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace weylpi
