#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "artin/series.hpp"

namespace artin {

// One measurement of how well the fraction u_{p,k}/v_k approximates x_p:
// how the distance ord(x_p - u/v) sits against the denominator order. The
// predicted line has slope p/2 - 1 and intercept 3p/2 - 2, so the slopes grow
// without bound in p even though every x_p has algebraic degree 2: no
// Liouville-type exponent bound can hold in this valued field.
struct ApproximationRecord {
    long p;
    long k;
    long ord_v;
    long ord_distance;
    BigRational slope_pred;      // p/2 - 1
    BigRational intercept_pred;  // 3p/2 - 2
    bool equality_regime;        // a_k nonzero in the field
};

ApproximationRecord measure_record(long p, long k, const FieldDescriptor& d,
                                   std::optional<long> pi = std::nullopt);

// Exact least-squares line through integer points.
struct AffineFit {
    BigRational a;  // slope
    BigRational b;  // intercept
    BigRational residual_max;
};

AffineFit fit_affine(const std::vector<std::pair<long, long>>& points);

// Evaluation data for the bridge inequality on one instance: the value of
// Q(X) = X^2 - z at the approximating fraction, and the value of the
// homogenized P = X^2 - Z Y^2 at the triple.
struct BridgeData {
    GradedSeries q_value;  // Q(u/v), Laurent-graded
    GradedSeries p_value;  // P(u, v, z) = u^2 - z v^2
};

// True iff ord(Q(u/v)) >= distance and ord(P) >= distance + d * ord_v, the
// two inequalities that turn an approximate root into an approximate solution
// of the polynomial system.
bool check_bridge_inequality(const BridgeData& data, long distance, long d,
                             long ord_v);

// Assembles BridgeData plus the measured distance for the (p, k) instance.
struct BridgeInstance {
    BridgeData data;
    long distance;
    long d;  // = 2, the degree of Q
    long ord_v;
};

BridgeInstance make_bridge_instance(long p, long k, const FieldDescriptor& desc,
                                    std::optional<long> pi = std::nullopt);

}  // namespace artin
