#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "artin/series.hpp"

namespace artin {

// Exponents of the unknowns X1..Xn (plain lexicographic map key).
using UnknownKey = std::vector<long>;

// Polynomial in the unknowns X1..Xn whose coefficients are series in T1..TN.
// Coefficients must be exact zero or have determinate order, and must live in
// the non-negative-exponent ring (they are honest power series, not Laurent).
class SeriesPolynomial {
public:
    SeriesPolynomial(const FieldDescriptor& d, int num_series_vars,
                     int num_unknowns);

    const FieldDescriptor& descriptor() const { return desc_; }
    int num_series_vars() const { return num_series_vars_; }
    int num_unknowns() const { return num_unknowns_; }
    const std::map<UnknownKey, GradedSeries>& terms() const { return terms_; }

    // adds c * X^key to the polynomial (merging with any existing term)
    void add_term(const UnknownKey& key, const GradedSeries& c);

    // substitute xs for the unknowns; cap truncates all intermediate products
    GradedSeries evaluate(const std::vector<GradedSeries>& xs,
                          std::optional<long> cap = std::nullopt) const;

    long degree_in_unknowns() const;

private:
    FieldDescriptor desc_;
    int num_series_vars_;
    int num_unknowns_;
    std::map<UnknownKey, GradedSeries> terms_;
};

// A finite list of polynomials sharing one ring: the systems f_1 = ... = f_r = 0.
struct PolySystem {
    FieldDescriptor descriptor;
    int num_series_vars = 1;
    int num_unknowns = 1;
    std::vector<SeriesPolynomial> polys;

    static PolySystem single(SeriesPolynomial p);
    std::vector<GradedSeries> evaluate(const std::vector<GradedSeries>& xs,
                                       std::optional<long> cap = std::nullopt) const;
};

// A solution candidate known modulo m^order: n series all truncated at the
// same precision, with non-negative exponents.
struct Jet {
    std::vector<GradedSeries> values;

    long order() const;  // the shared precision
    std::string to_string() const;
};

// Monomials T^e with e >= 0 and total degree < cap, in graded-lex order.
std::vector<ExponentVector> monomials_below(int num_vars, long cap);

// Monomials T^e with e >= 0 and total degree exactly d, in graded-lex order.
std::vector<ExponentVector> monomials_of_degree(int num_vars, long d);

// |monomials_below| as an exact integer (binomial count, no enumeration).
BigInt count_monomials_below(int num_vars, long cap);

// The full space of jets over a prime field: n components, each a series
// truncated at `order`, coefficients running over F_q. Jets are indexed by
// flat base-q digits in a canonical monomial order so enumeration is
// deterministic and splittable into contiguous blocks.
class JetSpace {
public:
    JetSpace(const FieldDescriptor& d, int num_series_vars, int num_unknowns,
             long order);

    BigInt size() const { return size_; }  // q^(n * #monomials)
    long order() const { return order_; }
    const std::vector<ExponentVector>& monomials() const { return monomials_; }

    Jet decode(unsigned long long index) const;

    // residues of all coefficients on monomials of degree < modulus, canonical
    // order, all components concatenated: the congruence class mod m^modulus
    std::vector<long> class_key(const Jet& jet, long modulus) const;

private:
    FieldDescriptor desc_;
    int num_series_vars_;
    int num_unknowns_;
    long order_;
    std::vector<ExponentVector> monomials_;
    BigInt size_;
};

}  // namespace artin
