#include "artin/diophantine.hpp"

#include <algorithm>

#include "artin/construction.hpp"

namespace artin {

ApproximationRecord measure_record(long p, long k, const FieldDescriptor& d,
                                   std::optional<long> pi) {
    // default precision reaches past (p-2)(k+3): enough to see the first
    // surviving coefficient even if a_k, a_k+1, a_k+2 all vanish mod q
    const long precision = pi.value_or((p - 2) * (k + 3) + 2);
    SeriesFraction fr = build_xpk(p, k, d);
    ApproximationRecord rec{
        p,
        k,
        fr.denominator.ord().value(),
        distance_to_root(p, k, d, precision),
        BigRational(p, 2) - 1,
        BigRational(3 * p, 2) - 2,
        coefficient_nonzero(k, d)};
    return rec;
}

AffineFit fit_affine(const std::vector<std::pair<long, long>>& points) {
    if (points.size() < 2) {
        throw BadParameters("fit_affine: need at least two points");
    }
    const BigInt n = static_cast<long>(points.size());
    BigInt sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : points) {
        sx += x;
        sy += y;
        sxx += BigInt(x) * x;
        sxy += BigInt(x) * y;
    }
    const BigInt denom = n * sxx - sx * sx;
    if (denom == 0) {
        throw DegenerateInput("fit_affine: all abscissas equal");
    }
    const BigRational a = BigRational(n * sxy - sx * sy, denom);
    const BigRational b = (BigRational(sy) - a * BigRational(sx)) / BigRational(n);
    BigRational residual_max = 0;
    for (const auto& [x, y] : points) {
        BigRational r = BigRational(y) - (a * x + b);
        if (r < 0) r = -r;
        residual_max = std::max(residual_max, r);
    }
    return AffineFit{a, b, residual_max};
}

bool check_bridge_inequality(const BridgeData& data, long distance, long d,
                             long ord_v) {
    const auto at_least = [](const GradedSeries& f, long bound) {
        if (f.is_exact_zero()) return true;  // an exact root: vacuously fine
        return f.ord() >= bound;             // IndeterminateOrder propagates
    };
    return at_least(data.q_value, distance) &&
           at_least(data.p_value, distance + d * ord_v);
}

BridgeInstance make_bridge_instance(long p, long k, const FieldDescriptor& desc,
                                    std::optional<long> pi) {
    const long precision = pi.value_or((p - 2) * (k + 3) + 2);
    const GradedSeries xpk = xpk_laurent(p, k, desc);
    const GradedSeries z = zp_series(p, desc);
    SeriesFraction fr = build_xpk(p, k, desc);
    const GradedSeries& u = fr.numerator;
    const GradedSeries& v = fr.denominator;
    BridgeData data{sub(mul(xpk, xpk), z),
                    sub(mul(u, u), mul(z, mul(v, v)))};
    return BridgeInstance{std::move(data),
                          distance_to_root(p, k, desc, precision), 2,
                          v.ord().value()};
}

}  // namespace artin
