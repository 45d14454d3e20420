#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "weylpi/errors.hpp"

namespace weylpi {

/// The coefficient field: the rationals, or a prime field F_p with p < 2^32.
class FieldSpec {
public:
    enum class Kind { Rationals, PrimeField };

    constexpr FieldSpec() = default;

    static FieldSpec rationals() { return {}; }
    /// Throws std::invalid_argument unless p is a prime below 2^32.
    static FieldSpec prime(std::uint64_t p);
    /// Accepts "q" or "fp:P".
    static FieldSpec parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    bool is_rational() const noexcept { return kind_ == Kind::Rationals; }
    /// 0 for the rationals.
    std::uint64_t characteristic() const noexcept { return p_; }
    /// "q" or "fp:P", the inverse of parse().
    std::string name() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    Kind kind_ = Kind::Rationals;
    std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Exact field element. Residues are kept in [0, p); rationals in lowest terms.
class Scalar {
public:
    /// Zero of the rationals.
    Scalar() : value_(mpq_class(0)) {}
    explicit Scalar(const FieldSpec& field);
    Scalar(const FieldSpec& field, long value);
    Scalar(const FieldSpec& field, const mpq_class& value);

    static Scalar zero(const FieldSpec& f) { return Scalar(f); }
    static Scalar one(const FieldSpec& f) { return Scalar(f, 1); }
    /// Parses an integer or "a/b" literal.
    static Scalar parse(const FieldSpec& field, std::string_view text);

    const FieldSpec& field() const noexcept { return field_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    /// True for rationals with negative sign; residues are never negative.
    bool is_negative() const noexcept;

    const mpq_class& rational() const { return std::get<mpq_class>(value_); }
    std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }

    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& a, const Scalar& b);

    std::string to_string() const;

private:
    void check_same(const Scalar& o) const;

    FieldSpec field_;
    std::variant<mpq_class, std::uint64_t> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace weylpi
