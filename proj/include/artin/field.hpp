#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "artin/errors.hpp"

namespace artin {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

bool is_odd_prime(std::int64_t q);

enum class FieldKind { PrimeField, Rationals };

/// Coefficient field: F_q for an odd prime q, or the rationals.
class FieldDescriptor {
public:
    static FieldDescriptor rationals() {
        return FieldDescriptor(FieldKind::Rationals, 0);
    }

    /// q must be an odd prime (>= 3); characteristic two is rejected because
    /// the square-root constructions divide by 2 throughout.
    static FieldDescriptor prime_field(std::int64_t q);

    FieldKind kind() const { return kind_; }
    bool is_prime_field() const { return kind_ == FieldKind::PrimeField; }

    /// q for a prime field, 0 for the rationals.
    std::int64_t characteristic() const { return q_; }

    std::string name() const {
        return is_prime_field() ? "F" + std::to_string(q_) : "Q";
    }

    friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) {
        return a.kind_ == b.kind_ && a.q_ == b.q_;
    }
    friend bool operator!=(const FieldDescriptor& a, const FieldDescriptor& b) {
        return !(a == b);
    }

private:
    FieldDescriptor(FieldKind k, std::int64_t q) : kind_(k), q_(q) {}

    FieldKind kind_;
    std::int64_t q_;
};

/// Element of F_q (canonical residue in [0, q)) or of Q (reduced fraction,
/// positive denominator; cpp_rational canonicalizes on construction).
/// Pure value semantics; operations on mismatched descriptors throw
/// MixedFields.
class FieldScalar {
public:
    static FieldScalar zero(const FieldDescriptor& d) {
        return from_integer(d, 0);
    }
    static FieldScalar one(const FieldDescriptor& d) {
        return from_integer(d, 1);
    }
    static FieldScalar from_integer(const FieldDescriptor& d, std::int64_t v);

    /// Throws NonReducibleModQ when mapping a/b into F_q with q | b.
    static FieldScalar from_rational(const FieldDescriptor& d,
                                     const BigRational& r);

    const FieldDescriptor& descriptor() const { return desc_; }
    bool is_zero() const;
    bool is_one() const;

    std::int64_t residue() const;        // PrimeField only
    const BigRational& rational() const; // Rationals only

    FieldScalar operator-() const;
    FieldScalar inverse() const;  // DivisionByZero on 0

    friend FieldScalar operator+(const FieldScalar& a, const FieldScalar& b);
    friend FieldScalar operator-(const FieldScalar& a, const FieldScalar& b);
    friend FieldScalar operator*(const FieldScalar& a, const FieldScalar& b);
    friend bool operator==(const FieldScalar& a, const FieldScalar& b);
    friend bool operator!=(const FieldScalar& a, const FieldScalar& b) {
        return !(a == b);
    }

    /// Canonical square root when one exists: the nonnegative root over Q,
    /// the smaller of the two residues over F_q.
    std::optional<FieldScalar> sqrt() const;

    std::string to_string() const;

    /// True when the canonical rendering would start with '-' (rationals
    /// only; residues are never signed).
    bool renders_negative() const;

private:
    explicit FieldScalar(const FieldDescriptor& d) : desc_(d) {}

    FieldDescriptor desc_;
    std::int64_t res_ = 0;  // PrimeField payload
    BigRational rat_;       // Rationals payload
};

// Named operation surface (thin aliases over the operators).
FieldScalar field_add(const FieldScalar& a, const FieldScalar& b);
FieldScalar field_mul(const FieldScalar& a, const FieldScalar& b);
FieldScalar field_neg(const FieldScalar& a);
FieldScalar field_inv(const FieldScalar& a);

/// n-th coefficient of the sqrt(1 + u) expansion, computed over Q by the
/// recurrence c_0 = 1, c_n = c_{n-1} * (1/2 - (n-1)) / n, then mapped into
/// the requested field. Denominators are powers of two, so the map into any
/// odd-characteristic field is defined.
BigRational binomial_half_rational(long n);
FieldScalar binomial_half(long n, const FieldDescriptor& d);

}  // namespace artin
