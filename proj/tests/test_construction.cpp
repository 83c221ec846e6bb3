#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "artin/construction.hpp"

using namespace artin;

namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();
const FieldDescriptor F3 = FieldDescriptor::prime_field(3);
const FieldDescriptor F5 = FieldDescriptor::prime_field(5);
const FieldDescriptor F7 = FieldDescriptor::prime_field(7);

ExponentVector ev(std::vector<long> e) { return ExponentVector(std::move(e)); }

BigRational coeff_q(const GradedSeries& f, std::vector<long> e) {
    return f.coeff(ev(std::move(e))).rational();
}

}  // namespace

TEST_CASE("z_p is the deformed square") {
    CHECK(zp_series(3, Q).to_string() == "T1^2 + T2^3");
    CHECK(zp_series(5, F3).to_string() == "T1^2 + T2^5");
    CHECK(zp_series(3, Q).is_exact());
    CHECK_THROWS_AS(zp_series(2, Q), BadParameters);
}

TEST_CASE("Newton square root of 1 + T1 reproduces the binomial series") {
    auto one = GradedSeries::constant(FieldScalar::one(Q), 1);
    auto t = GradedSeries::monomial(FieldScalar::one(Q), ev({1}));
    auto f = add(one, t);

    auto w = sqrt_newton(f, 6);
    CHECK(w.precision == 6);
    CHECK(w.root.precision() == Precision(6));
    CHECK(coeff_q(w.root, {0}) == BigRational(1));
    CHECK(coeff_q(w.root, {1}) == BigRational(1, 2));
    CHECK(coeff_q(w.root, {2}) == BigRational(-1, 8));
    CHECK(coeff_q(w.root, {3}) == BigRational(1, 16));
    CHECK(coeff_q(w.root, {4}) == BigRational(-5, 128));
    CHECK(coeff_q(w.root, {5}) == BigRational(7, 256));
    CHECK(congruent_mod(mul(w.root, w.root), f, 6));
}

TEST_CASE("Newton square root pulls out the even monomial factor") {
    // 4*T1^2*(1 + T2): root is 2*T1*sqrt(1 + T2)
    auto four = FieldScalar::from_integer(Q, 4);
    TermMap terms;
    terms.emplace(ev({2, 0}), four);
    terms.emplace(ev({2, 1}), four);
    auto f = GradedSeries::from_terms(Q, 2, std::move(terms));

    auto w = sqrt_newton(f, 6);
    CHECK(coeff_q(w.root, {1, 0}) == BigRational(2));  // canonical root of 4
    CHECK(coeff_q(w.root, {1, 1}) == BigRational(1));
    CHECK(coeff_q(w.root, {1, 2}) == BigRational(-1, 4));
    CHECK(congruent_mod(mul(w.root, w.root), f, 6));
}

TEST_CASE("Newton square root over a prime field") {
    // 4 + T1 over F5: constant root is the canonical square root 2
    TermMap terms;
    terms.emplace(ev({0}), FieldScalar::from_integer(F5, 4));
    terms.emplace(ev({1}), FieldScalar::one(F5));
    auto f = GradedSeries::from_terms(F5, 1, std::move(terms));
    auto w = sqrt_newton(f, 8);
    CHECK(w.root.coeff(ev({0})).residue() == 2);
    CHECK(congruent_mod(mul(w.root, w.root), f, 8));
}

TEST_CASE("Newton square root input validation") {
    auto t1 = GradedSeries::monomial(FieldScalar::one(Q), ev({1}));
    CHECK_THROWS_AS(sqrt_newton(t1, 4), NotASquareLeadingForm);  // odd exponent

    auto two_t1sq =
        GradedSeries::monomial(FieldScalar::from_integer(Q, 2), ev({2}));
    CHECK_THROWS_AS(sqrt_newton(two_t1sq, 4), NotASquareLeadingForm);

    // 2 is not a quadratic residue mod 5
    auto two_f5 = GradedSeries::constant(FieldScalar::from_integer(F5, 2), 1);
    CHECK_THROWS_AS(sqrt_newton(two_f5, 4), NotASquareLeadingForm);

    // lowest homogeneous form with two monomials
    TermMap terms;
    terms.emplace(ev({2, 0}), FieldScalar::one(Q));
    terms.emplace(ev({1, 1}), FieldScalar::one(Q));
    auto mixed = GradedSeries::from_terms(Q, 2, std::move(terms));
    CHECK_THROWS_AS(sqrt_newton(mixed, 4), NotASquareLeadingForm);

    auto zero = GradedSeries::zero(Q, 1);
    CHECK(sqrt_newton(zero, 3).root.is_exact_zero());
    CHECK_THROWS_AS(sqrt_newton(GradedSeries::zero(Q, 1, 3), 3),
                    IndeterminateOrder);

    auto one = GradedSeries::constant(FieldScalar::one(Q), 1);
    auto f = truncate(add(one, t1), 4);
    CHECK_THROWS_AS(sqrt_newton(f, 6), PrecisionIncrease);
    CHECK_THROWS_AS(sqrt_newton(one, 0), BadParameters);
}

TEST_CASE("Newton route and closed form agree on x_p") {
    CHECK(identical(xp_series(3, Q, 12), xp_series_closed_form(3, Q, 12)));
    CHECK(identical(xp_series(3, F3, 12), xp_series_closed_form(3, F3, 12)));
    CHECK(identical(xp_series(5, F5, 12), xp_series_closed_form(5, F5, 12)));
    CHECK(identical(xp_series(4, Q, 10), xp_series_closed_form(4, Q, 10)));

    // first Laurent terms: T1 + 1/2 T1^-1 T2^3 - 1/8 T1^-3 T2^6 + ...
    auto x3 = xp_series(3, Q, 4);
    CHECK(coeff_q(x3, {1, 0}) == BigRational(1));
    CHECK(coeff_q(x3, {-1, 3}) == BigRational(1, 2));
    CHECK(coeff_q(x3, {-3, 6}) == BigRational(-1, 8));
}

TEST_CASE("truncated root and its fraction form") {
    auto xpk = xpk_laurent(3, 3, Q);
    CHECK(xpk.is_exact());
    CHECK(xpk.to_string() == "T1 + 1/2*T1^-1*T2^3 - 1/8*T1^-3*T2^6");
    CHECK(xpk_laurent(3, 3, F3).to_string() ==
          "T1 + 2*T1^-1*T2^3 + T1^-3*T2^6");

    auto fr = build_xpk(3, 3, Q);
    CHECK(fr.numerator.to_string() == "T1^4 + 1/2*T1^2*T2^3 - 1/8*T2^6");
    CHECK(fr.denominator.to_string() == "T1^3");
    CHECK(identical(fraction_to_graded(fr, 8), truncate(xpk, 8)));

    // same identity where a coefficient dies: a_7 = a_8 = 0 over F3
    auto fr9 = build_xpk(3, 9, F3);
    CHECK(identical(fraction_to_graded(fr9, 12),
                    truncate(xpk_laurent(3, 9, F3), 12)));

    CHECK_THROWS_AS(xpk_laurent(2, 3, Q), BadParameters);
    CHECK_THROWS_AS(xpk_laurent(3, 2, Q), BadParameters);
}

TEST_CASE("binomial coefficient vanishing per field") {
    CHECK(coefficient_nonzero(0, Q));
    CHECK(coefficient_nonzero(5, Q));
    CHECK_FALSE(coefficient_nonzero(7, F3));
    CHECK_FALSE(coefficient_nonzero(8, F3));
    CHECK(coefficient_nonzero(9, F3));
    CHECK_FALSE(coefficient_nonzero(5, F7));  // a_5 = 7/256
}

TEST_CASE("distance from the truncation to the root") {
    // equality regime: ord(x_p - x_pk) == (p-2)k + 1
    CHECK(distance_to_root(4, 3, Q, 20) == 7);
    CHECK(distance_to_root(3, 4, Q, 20) == 5);
    CHECK(distance_to_root(3, 3, F3, 20) == 4);

    // a_7, a_8 vanish mod 3, a_9 does not: the distance jumps to 1 + 9
    CHECK(distance_to_root(3, 7, F3, 20) == 10);

    CHECK_THROWS_AS(distance_to_root(3, 3, Q, 4), PrecisionTooLow);
}

TEST_CASE("the approximate-solution triples") {
    auto t = build_triple(3, 3, Q);
    CHECK(t.u.to_string() == "T1^4 + 1/2*T1^2*T2^3 - 1/8*T2^6");
    CHECK(t.v.to_string() == "T1^3");
    CHECK(t.z.to_string() == "T1^2 + T2^3");
    CHECK(t.predicted_ordP == 11);
    CHECK(t.predicted_min_uv_ord == 3);

    auto r = verify_triple(t);
    CHECK(r.measured_ordP == Order::finite(11));
    CHECK(r.ord_u == 4);
    CHECK(r.ord_v == 3);
    CHECK(r.equality_regime);
    CHECK(r.bound_holds);
    CHECK(r.equality_holds);
    CHECK(r.min_uv_ord_holds);
    CHECK(r.factorization_ok);

    auto r5 = verify_triple(build_triple(3, 5, Q));
    CHECK(r5.measured_ordP == Order::finite(21));
    CHECK(r5.equality_holds);
    CHECK(r5.factorization_ok);

    auto t43 = build_triple(4, 3, F3);
    CHECK(t43.u.to_string() == "T1^4 + 2*T1^2*T2^4 + T2^8");
    auto r43 = verify_triple(t43);
    CHECK(r43.measured_ordP == Order::finite(14));
    CHECK(r43.equality_holds);
    CHECK(r43.factorization_ok);
}

TEST_CASE("triple outside the equality regime") {
    // a_7 = 0 over F3: the defect order beats the generic prediction
    auto t = build_triple(3, 7, F3);
    CHECK(t.predicted_ordP == 31);
    auto r = verify_triple(t);
    CHECK(r.measured_ordP == Order::finite(33));
    CHECK_FALSE(r.equality_regime);
    CHECK(r.bound_holds);
    CHECK_FALSE(r.equality_holds);
    CHECK(r.min_uv_ord_holds);
    CHECK(r.factorization_ok);
}

TEST_CASE("triple parameter validation") {
    CHECK_THROWS_AS(build_triple(2, 5, Q), BadParameters);
    CHECK_THROWS_AS(build_triple(5, 2, Q), BadParameters);
    CHECK_THROWS_AS(build_triple(3, 3, Q, 10), PrecisionTooLow);
}
