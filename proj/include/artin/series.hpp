#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "artin/errors.hpp"
#include "artin/field.hpp"
#include "artin/order.hpp"

namespace artin {

/// Exponent vector of a monomial in T1..TN. Entries may be negative
/// (Laurent-graded domain); the total degree is cached.
class ExponentVector {
public:
    explicit ExponentVector(std::vector<long> exps);
    static ExponentVector zero(int num_vars);
    /// e * (basis vector for T_{index+1})
    static ExponentVector unit(int num_vars, int index, long e = 1);

    int num_vars() const { return static_cast<int>(exps_.size()); }
    long total_degree() const { return total_; }
    long operator[](int i) const { return exps_[static_cast<size_t>(i)]; }
    const std::vector<long>& entries() const { return exps_; }
    bool all_nonnegative() const;

    ExponentVector operator+(const ExponentVector& o) const;
    ExponentVector operator-(const ExponentVector& o) const;

    friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
        return a.exps_ == b.exps_;
    }
    friend bool operator!=(const ExponentVector& a, const ExponentVector& b) {
        return !(a == b);
    }

private:
    std::vector<long> exps_;
    long total_;
};

/// Graded lexicographic term order: lower total degree first; ties broken
/// with the T1-major monomial first (lexicographically larger exponent
/// vector precedes). This is the canonical order used for storage,
/// rendering, and all deterministic output.
struct GradedLexLess {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

enum class SeriesDomain { NonNegExponents, LaurentGraded };

/// nullopt means the series is exact (a known polynomial, no tail).
using Precision = std::optional<long>;

using TermMap = std::map<ExponentVector, FieldScalar, GradedLexLess>;

/// Sparse formal series graded by total degree, with a single precision
/// cutoff pi: stored terms all have total_degree < pi, and nothing is known
/// at or above pi. Invariants: no zero coefficients; NonNegExponents implies
/// every stored exponent entry is >= 0. Immutable value type.
class GradedSeries {
public:
    static GradedSeries zero(const FieldDescriptor& d, int num_vars,
                             Precision precision = std::nullopt);
    static GradedSeries constant(const FieldScalar& c, int num_vars,
                                 Precision precision = std::nullopt);
    static GradedSeries monomial(const FieldScalar& c, const ExponentVector& e,
                                 Precision precision = std::nullopt);
    static GradedSeries from_terms(const FieldDescriptor& d, int num_vars,
                                   TermMap terms,
                                   Precision precision = std::nullopt);
    // as above, but with the domain stated by the caller (a NonNegExponents
    // claim is still validated against the exponents)
    static GradedSeries from_terms(const FieldDescriptor& d, int num_vars,
                                   TermMap terms, Precision precision,
                                   SeriesDomain domain);

    const FieldDescriptor& descriptor() const { return desc_; }
    int num_vars() const { return num_vars_; }
    Precision precision() const { return precision_; }
    bool is_exact() const { return !precision_.has_value(); }
    SeriesDomain domain() const { return domain_; }
    const TermMap& terms() const { return terms_; }

    bool has_terms() const { return !terms_.empty(); }
    bool is_exact_zero() const { return terms_.empty() && is_exact(); }

    /// Total degree of the lowest nonzero term; +infinity for the exact
    /// zero. Throws IndeterminateOrder for an empty series with finite
    /// precision (zero at this precision: the order is >= pi, unknown).
    Order ord() const;
    bool has_determinate_ord() const { return has_terms() || is_exact(); }

    /// min(ord, cap), treating an empty truncated series as order >= cap.
    /// Only meaningful when cap <= precision; asserted.
    long ord_capped(long cap) const;

    /// ord when determinate, otherwise the precision cutoff. This is the
    /// lower bound entering the multiplication precision rule.
    Order ord_lower_bound() const;

    FieldScalar coeff(const ExponentVector& e) const;

    /// Canonical rendering: graded-lex term order, "+"/"-" joined, trailing
    /// " + O(deg >= pi)" when the precision is finite.
    std::string to_string() const;

private:
    GradedSeries(const FieldDescriptor& d, int num_vars, TermMap terms,
                 Precision precision, SeriesDomain domain);

    FieldDescriptor desc_;
    int num_vars_;
    TermMap terms_;
    Precision precision_;
    SeriesDomain domain_;

    friend GradedSeries add(const GradedSeries&, const GradedSeries&);
    friend GradedSeries sub(const GradedSeries&, const GradedSeries&);
    friend GradedSeries mul(const GradedSeries&, const GradedSeries&);
    friend GradedSeries mul_truncated(const GradedSeries&, const GradedSeries&,
                                      long cap);
    friend GradedSeries negate(const GradedSeries&);
    friend GradedSeries scalar_mul(const FieldScalar&, const GradedSeries&);
    friend GradedSeries truncate(const GradedSeries&, long pi);
    friend GradedSeries invert_unit(const GradedSeries&, long pi);
};

GradedSeries add(const GradedSeries& f, const GradedSeries& g);
GradedSeries sub(const GradedSeries& f, const GradedSeries& g);
GradedSeries mul(const GradedSeries& f, const GradedSeries& g);
/// mul followed by dropping everything at or above cap (result precision is
/// min of the propagated precision and cap). Used by jet evaluation and the
/// Newton loops to keep intermediate supports small.
GradedSeries mul_truncated(const GradedSeries& f, const GradedSeries& g,
                           long cap);
GradedSeries negate(const GradedSeries& f);
GradedSeries scalar_mul(const FieldScalar& c, const GradedSeries& f);
GradedSeries pow(const GradedSeries& f, long e,
                 std::optional<long> cap = std::nullopt);

/// Restrict knowledge to total degrees < pi. pi must not exceed the current
/// precision (PrecisionIncrease otherwise).
GradedSeries truncate(const GradedSeries& f, long pi);

/// Newton inversion of a unit (determinate ord 0 whose degree-0 form is a
/// single constant term) to the requested precision.
GradedSeries invert_unit(const GradedSeries& f, long pi);

/// Structural identity: same descriptor, variables, terms, precision, domain.
bool identical(const GradedSeries& a, const GradedSeries& b);

/// f == g mod m^pi (compares truncations; both must carry precision >= pi).
bool congruent_mod(const GradedSeries& a, const GradedSeries& b, long pi);

/// Element of the fraction field, kept as an explicit numerator/denominator
/// pair. Membership in the valuation ring (ord num >= ord den) is a testable
/// predicate, not an enforced invariant.
struct SeriesFraction {
    GradedSeries numerator;
    GradedSeries denominator;
};

/// ord(num) - ord(den) as an integer; errors: IndeterminateOrder if either
/// ord is indeterminate, DivisionByZero if the denominator is exactly zero.
long fraction_reduce_ord(const SeriesFraction& fr);

bool fraction_in_valuation_ring(const SeriesFraction& fr);

/// Expand num/den as a Laurent-graded series to precision pi. Requires exact
/// inputs, a nonzero denominator whose lowest form is a single monomial.
GradedSeries fraction_to_graded(const SeriesFraction& fr, long pi);

}  // namespace artin
