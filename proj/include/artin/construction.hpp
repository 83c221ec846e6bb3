#pragma once

#include <optional>

#include "artin/series.hpp"

namespace artin {

// A computed square root: root^2 - input has no terms of total degree
// < precision. The root itself may be Laurent-graded even when the input is a
// plain power series (sqrt(T1^2 + T2^3) starts T1 + (1/2)T1^-1 T2^3 - ...).
struct SqrtWitness {
    GradedSeries input;
    GradedSeries root;
    long precision;
};

// Square root by Newton iteration r <- (r + f/r)/2, doubling the number of
// correct degrees each round; only 2 must be invertible, so this works over
// any odd-characteristic prime field as well as over the rationals.
//
// The input must factor as m^2 * g with m a monomial and g a unit whose
// degree-0 form is a square constant: concretely, the lowest homogeneous form
// of f must be a single monomial c*T^E with E even entrywise and c a square.
SqrtWitness sqrt_newton(const GradedSeries& f, long pi);

// z_p = T1^2 + T2^p over the given field (exact, two series variables)
GradedSeries zp_series(long p, const FieldDescriptor& d);

// x_p = sqrt(T1^2 + T2^p), the degree-2 element all the approximation
// statements are about, as a Laurent-graded series with terms known strictly
// below total degree pi. Computed by Newton iteration.
GradedSeries xp_series(long p, const FieldDescriptor& d, long pi);

// Same series by its closed form sum_i a_i T1^(1-2i) T2^(ip), where a_i is
// the order-i coefficient of sqrt(1+s). Independent of the Newton route; the
// two must agree term by term.
GradedSeries xp_series_closed_form(long p, const FieldDescriptor& d, long pi);

// The order-k truncation x_{p,k} = sum_{i<k} a_i T1^(1-2i) T2^(ip), an exact
// Laurent polynomial.
GradedSeries xpk_laurent(long p, long k, const FieldDescriptor& d);

// x_{p,k} written over a common denominator: (u, v) with
//   u = sum_{i<k} a_i T1^(2k-2-2i) T2^(ip)   (a power series, exponents >= 0)
//   v = T1^(2k-3)
SeriesFraction build_xpk(long p, long k, const FieldDescriptor& d);

// true iff the coefficient a_n of sqrt(1+s) is nonzero in the field
bool coefficient_nonzero(long n, const FieldDescriptor& d);

// ord(x_p - x_{p,k}): the approximation distance. Equals (p-2)k + 1 whenever
// a_k is nonzero in the field, and is >= that in any case. Requires
// pi > (p-2)k + 1 so the answer is decidable at the working precision.
long distance_to_root(long p, long k, const FieldDescriptor& d, long pi);

// The approximate-solution triple for P = X^2 - Z*Y^2.
struct CounterexampleTriple {
    long p;
    long k;
    GradedSeries u;  // u_{p,k}, exact
    GradedSeries v;  // T1^(2k-3), exact
    GradedSeries z;  // T1^2 + T2^p, exact
    long predicted_ordP;        // (p+2)k - 4
    long predicted_min_uv_ord;  // 2k - 3
};

// Measured orders of a triple plus the checks that tie them to the predicted
// values. measured_ordP is exact (the inputs are polynomials).
struct TripleReport {
    Order measured_ordP;
    long ord_u;
    long ord_v;
    bool equality_regime;    // a_k nonzero in the field
    bool bound_holds;        // measured_ordP >= predicted
    bool equality_holds;     // measured_ordP == predicted (expected iff equality_regime)
    bool min_uv_ord_holds;   // min(ord u, ord v) == 2k-3
    bool factorization_ok;   // u^2 - z v^2 == (x_pk - x_p)(x_pk + x_p) v^2 below pi
};

// default working precision: (p+2)k - 2, two guard degrees above the largest
// asserted order
CounterexampleTriple build_triple(long p, long k, const FieldDescriptor& d,
                                  std::optional<long> pi = std::nullopt);

TripleReport verify_triple(const CounterexampleTriple& t,
                           std::optional<long> pi = std::nullopt);

}  // namespace artin
