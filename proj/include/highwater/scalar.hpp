#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace highwater {

/// Base class for every error raised by the library.
class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Characteristic 2, 3 or a composite number was requested.
class FieldError : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

/// Two operands live over different fields.
class FieldMismatch : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

/// The coefficient field: the rationals (characteristic 0) or GF(p) with p prime, p > 3.
class Field {
public:
    /// Throws FieldError for 1, 2, 3 and composite values.
    static Field make(std::uint64_t characteristic);
    static Field rationals() { return Field(0); }

    std::uint64_t characteristic() const { return p_; }
    bool is_rational() const { return p_ == 0; }

    friend bool operator==(const Field&, const Field&) = default;

    std::string name() const;

private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_;
};

/// An element of a Field. Operations between scalars of different fields throw FieldMismatch.
class Scalar {
public:
    Scalar(const Field& field, long n);
    Scalar(const Field& field, long num, long den);
    static Scalar zero(const Field& field) { return Scalar(field, 0); }
    static Scalar one(const Field& field) { return Scalar(field, 1); }
    /// Parses "n", "-n" or "n/d".
    static Scalar parse(const Field& field, const std::string& text);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    /// Total order used for containers: numeric order over Q, residue order over GF(p).
    bool operator<(const Scalar& o) const;

    /// "n" or "n/d" over Q; the residue in [0, p) over GF(p).
    std::string to_string() const;
    /// Printing helper: true when the value reads as negative ("-3/4" over Q, never over GF(p)).
    bool prints_negative() const;

    /// Only meaningful over Q.
    const mpq_class& rational() const { return std::get<mpq_class>(value_); }
    std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }

private:
    Scalar(const Field& field, std::variant<mpq_class, std::uint64_t> v)
        : field_(field), value_(std::move(v)) {}
    void check(const Scalar& o) const;

    Field field_;
    std::variant<mpq_class, std::uint64_t> value_;
};

}  // namespace highwater
