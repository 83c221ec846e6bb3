#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "artin/construction.hpp"
#include "artin/diophantine.hpp"

using namespace artin;

namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();
const FieldDescriptor F3 = FieldDescriptor::prime_field(3);

}  // namespace

TEST_CASE("approximation records measure the distance sweep") {
    auto r = measure_record(4, 3, Q);
    CHECK(r.p == 4);
    CHECK(r.k == 3);
    CHECK(r.ord_v == 3);
    CHECK(r.ord_distance == 7);  // (p-2)k + 1
    CHECK(r.slope_pred == BigRational(1));
    CHECK(r.intercept_pred == BigRational(4));
    CHECK(r.equality_regime);

    CHECK(measure_record(6, 3, Q).ord_distance == 13);
    CHECK(measure_record(3, 3, Q).ord_distance == 4);

    // distances on one p lie exactly on a line in ord_v; slope p/2 - 1 grows
    // with p, which is what rules out any uniform approximation exponent
    std::vector<std::pair<long, long>> pts;
    for (long k = 3; k <= 8; ++k) {
        auto rec = measure_record(6, k, Q);
        pts.emplace_back(rec.ord_v, rec.ord_distance);
    }
    auto fit = fit_affine(pts);
    CHECK(fit.a == BigRational(2));  // p/2 - 1
    CHECK(fit.b == BigRational(7));  // 3p/2 - 2
    CHECK(fit.residual_max == BigRational(0));
}

TEST_CASE("vanishing coefficients push the record off the line") {
    auto r = measure_record(3, 7, F3);
    CHECK(r.ord_distance == 10);  // strict: a_7 = a_8 = 0 mod 3
    CHECK_FALSE(r.equality_regime);
    CHECK(r.ord_distance > (3 - 2) * 7 + 1);
}

TEST_CASE("exact least-squares line") {
    auto f = fit_affine({{3, 7}, {5, 9}, {7, 11}});
    CHECK(f.a == BigRational(1));
    CHECK(f.b == BigRational(4));
    CHECK(f.residual_max == BigRational(0));

    auto g = fit_affine({{0, 0}, {1, 1}, {2, 3}});
    CHECK(g.a == BigRational(3, 2));
    CHECK(g.b == BigRational(-1, 6));
    CHECK(g.residual_max == BigRational(1, 3));

    auto h = fit_affine({{1, 1}, {3, 2}, {5, 3}});
    CHECK(h.a == BigRational(1, 2));
    CHECK(h.b == BigRational(1, 2));
    CHECK(h.residual_max == BigRational(0));

    CHECK_THROWS_AS(fit_affine({{2, 1}, {2, 5}}), DegenerateInput);
    CHECK_THROWS_AS(fit_affine({{1, 1}}), BadParameters);
}

TEST_CASE("bridge from approximate root to approximate solution") {
    auto inst = make_bridge_instance(3, 3, Q);
    CHECK(inst.distance == 4);
    CHECK(inst.d == 2);
    CHECK(inst.ord_v == 3);

    // ord Q(u/v) = distance + 1 (the cofactor x_pk + x_p has order 1), and
    // ord P(u, v, z) = ord Q(u/v) + 2 ord v
    CHECK(inst.data.q_value.ord() == Order::finite(5));
    CHECK(inst.data.p_value.ord() == Order::finite(11));

    CHECK(check_bridge_inequality(inst.data, inst.distance, inst.d, inst.ord_v));
    // one degree of slack is real: both orders carry the +1 from the cofactor
    CHECK(check_bridge_inequality(inst.data, inst.distance + 1, inst.d,
                                  inst.ord_v));
    CHECK_FALSE(check_bridge_inequality(inst.data, inst.distance + 2, inst.d,
                                        inst.ord_v));

    CHECK(make_bridge_instance(4, 3, Q).data.q_value.ord() == Order::finite(8));
}

TEST_CASE("bridge check edge cases") {
    auto zero = GradedSeries::zero(Q, 2);
    CHECK(check_bridge_inequality(BridgeData{zero, zero}, 100, 2, 50));

    // a perturbation of low order breaks the first inequality
    auto inst = make_bridge_instance(3, 3, Q);
    auto one = GradedSeries::constant(FieldScalar::one(Q), 2);
    BridgeData bad{add(inst.data.q_value, one), inst.data.p_value};
    CHECK_FALSE(check_bridge_inequality(bad, inst.distance, 2, inst.ord_v));

    // an order that is indeterminate at the working precision must not pass
    BridgeData murky{GradedSeries::zero(Q, 2, 3), zero};
    CHECK_THROWS_AS(check_bridge_inequality(murky, 2, 2, 1),
                    IndeterminateOrder);
}
