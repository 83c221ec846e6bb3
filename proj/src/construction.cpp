#include "artin/construction.hpp"

#include <algorithm>

namespace artin {

namespace {

void require_odd_characteristic(const FieldDescriptor& d) {
    if (d.characteristic() == 2) throw CharTwo("square roots need 2 invertible");
}

void require_pk(long p, long k) {
    if (p <= 2 || k <= 2) {
        throw BadParameters("family is defined for p > 2 and k > 2");
    }
}

}  // namespace

SqrtWitness sqrt_newton(const GradedSeries& f, long pi) {
    require_odd_characteristic(f.descriptor());
    if (pi < 1) throw BadParameters("sqrt_newton: precision must be >= 1");
    if (f.precision() && *f.precision() < pi) {
        throw PrecisionIncrease("sqrt_newton: input precision below target");
    }
    if (f.is_exact_zero()) {
        return SqrtWitness{f, GradedSeries::zero(f.descriptor(), f.num_vars()), pi};
    }
    if (!f.has_determinate_ord()) {
        throw IndeterminateOrder("sqrt_newton: input is zero at its precision");
    }

    // lowest form must be one monomial c*T^E, E even entrywise, c a square
    const auto& low = *f.terms().begin();
    auto second = std::next(f.terms().begin());
    if (second != f.terms().end() &&
        second->first.total_degree() == low.first.total_degree()) {
        throw NotASquareLeadingForm("lowest form is not a monomial");
    }
    const ExponentVector E = low.first;
    for (int i = 0; i < E.num_vars(); ++i) {
        if (E[i] % 2 != 0) {
            throw NotASquareLeadingForm("lowest monomial has an odd exponent");
        }
    }
    const auto c_sqrt = low.second.sqrt();
    if (!c_sqrt) {
        throw NotASquareLeadingForm("lowest coefficient is not a square in " +
                                    f.descriptor().name());
    }

    // g = f / (c*T^E) = 1 + h with ord(h) >= 1; find w = sqrt(g) by Newton
    TermMap g_terms;
    const FieldScalar c_inv = low.second.inverse();
    for (const auto& [e, coeff] : f.terms()) {
        g_terms.emplace(e - E, coeff * c_inv);
    }
    const long unit_target = std::max(pi - E.total_degree(), long{1});
    const GradedSeries g = GradedSeries::from_terms(
        f.descriptor(), f.num_vars(), std::move(g_terms),
        f.is_exact() ? Precision{} : Precision{*f.precision() - E.total_degree()});

    const FieldScalar half =
        FieldScalar::from_integer(f.descriptor(), 2).inverse();
    GradedSeries w = GradedSeries::constant(FieldScalar::one(f.descriptor()),
                                            f.num_vars());
    long s = 1;
    while (s < unit_target) {
        const long s2 = std::min(2 * s, unit_target);
        // w' = (w + g/w)/2; treating the stored w as an exact polynomial makes
        // w'^2 - g = (w^2 - g)^2 / (4 w^2), so the error order doubles
        const GradedSeries w_inv = invert_unit(w, s2);
        const GradedSeries next =
            scalar_mul(half, add(truncate(w, s2), mul(g, w_inv)));
        w = GradedSeries::from_terms(f.descriptor(), f.num_vars(),
                                     TermMap(next.terms()), std::nullopt,
                                     next.domain());
        s = s2;
    }
    w = GradedSeries::from_terms(f.descriptor(), f.num_vars(),
                                 TermMap(w.terms()), unit_target, w.domain());

    std::vector<long> half_exps(static_cast<size_t>(E.num_vars()));
    for (int i = 0; i < E.num_vars(); ++i) half_exps[static_cast<size_t>(i)] = E[i] / 2;
    const GradedSeries m_half =
        GradedSeries::monomial(*c_sqrt, ExponentVector(half_exps));
    return SqrtWitness{f, mul(m_half, w), pi};
}

GradedSeries zp_series(long p, const FieldDescriptor& d) {
    if (p <= 2) throw BadParameters("z_p is used with p > 2");
    const FieldScalar one = FieldScalar::one(d);
    TermMap terms;
    terms.emplace(ExponentVector::unit(2, 0, 2), one);
    terms.emplace(ExponentVector::unit(2, 1, p), one);
    return GradedSeries::from_terms(d, 2, std::move(terms));
}

GradedSeries xp_series(long p, const FieldDescriptor& d, long pi) {
    // asking for the square to hold mod m^(pi+1) leaves the root itself
    // carrying precision (pi+1) - 1 = pi, since the lowest monomial is T1
    return sqrt_newton(zp_series(p, d), pi + 1).root;
}

GradedSeries xp_series_closed_form(long p, const FieldDescriptor& d, long pi) {
    require_odd_characteristic(d);
    if (p <= 2) throw BadParameters("z_p is used with p > 2");
    TermMap terms;
    for (long i = 0;; ++i) {
        const long deg = 1 + i * (p - 2);  // total degree of a_i T1^(1-2i) T2^(ip)
        if (deg >= pi) break;
        const FieldScalar a = binomial_half(i, d);
        if (a.is_zero()) continue;
        std::vector<long> exps{1 - 2 * i, i * p};
        terms.emplace(ExponentVector(std::move(exps)), a);
    }
    return GradedSeries::from_terms(d, 2, std::move(terms), pi,
                                    SeriesDomain::LaurentGraded);
}

GradedSeries xpk_laurent(long p, long k, const FieldDescriptor& d) {
    require_odd_characteristic(d);
    require_pk(p, k);
    TermMap terms;
    for (long i = 0; i < k; ++i) {
        const FieldScalar a = binomial_half(i, d);
        if (a.is_zero()) continue;
        std::vector<long> exps{1 - 2 * i, i * p};
        terms.emplace(ExponentVector(std::move(exps)), a);
    }
    return GradedSeries::from_terms(d, 2, std::move(terms), std::nullopt,
                                    SeriesDomain::LaurentGraded);
}

SeriesFraction build_xpk(long p, long k, const FieldDescriptor& d) {
    require_odd_characteristic(d);
    require_pk(p, k);
    TermMap u_terms;
    for (long i = 0; i < k; ++i) {
        const FieldScalar a = binomial_half(i, d);
        if (a.is_zero()) continue;
        std::vector<long> exps{2 * k - 2 - 2 * i, i * p};
        u_terms.emplace(ExponentVector(std::move(exps)), a);
    }
    GradedSeries u = GradedSeries::from_terms(d, 2, std::move(u_terms));
    GradedSeries v = GradedSeries::monomial(FieldScalar::one(d),
                                            ExponentVector::unit(2, 0, 2 * k - 3));
    return SeriesFraction{std::move(u), std::move(v)};
}

bool coefficient_nonzero(long n, const FieldDescriptor& d) {
    return !binomial_half(n, d).is_zero();
}

long distance_to_root(long p, long k, const FieldDescriptor& d, long pi) {
    require_pk(p, k);
    if (pi <= (p - 2) * k + 1) {
        throw PrecisionTooLow("distance_to_root: need precision > (p-2)k + 1");
    }
    const GradedSeries xp = xp_series(p, d, pi);
    const GradedSeries diff = sub(xp, xpk_laurent(p, k, d));
    return diff.ord().value();  // IndeterminateOrder if nothing below pi
}

CounterexampleTriple build_triple(long p, long k, const FieldDescriptor& d,
                                  std::optional<long> pi) {
    require_odd_characteristic(d);
    require_pk(p, k);
    const long bound = (p + 2) * k - 4;
    const long precision = pi.value_or(bound + 2);
    if (precision <= bound) {
        throw PrecisionTooLow("build_triple: need precision > (p+2)k - 4");
    }
    SeriesFraction fr = build_xpk(p, k, d);
    return CounterexampleTriple{p,
                                k,
                                std::move(fr.numerator),
                                std::move(fr.denominator),
                                zp_series(p, d),
                                bound,
                                2 * k - 3};
}

TripleReport verify_triple(const CounterexampleTriple& t,
                           std::optional<long> pi) {
    const long precision = pi.value_or(t.predicted_ordP + 2);
    const FieldDescriptor d = t.u.descriptor();

    // the inputs are exact polynomials, so P(u, v, z) is measured exactly
    const GradedSeries P = sub(mul(t.u, t.u), mul(t.z, mul(t.v, t.v)));
    const Order ordP = P.is_exact_zero() ? Order::infinite() : P.ord();

    TripleReport r{ordP, 0, 0, false, false, false, false, false};
    r.ord_u = t.u.ord().value();
    r.ord_v = t.v.ord().value();
    r.equality_regime = coefficient_nonzero(t.k, d);
    r.bound_holds = ordP >= t.predicted_ordP;
    r.equality_holds = ordP == Order::finite(t.predicted_ordP);
    r.min_uv_ord_holds = std::min(r.ord_u, r.ord_v) == t.predicted_min_uv_ord;

    // u^2 - z v^2 = (x_pk - x_p)(x_pk + x_p) v^2: both sides below `precision`
    const GradedSeries xp = xp_series(t.p, d, precision);
    const GradedSeries xpk = xpk_laurent(t.p, t.k, d);
    const GradedSeries rhs =
        mul(mul(sub(xpk, xp), add(xpk, xp)), mul(t.v, t.v));
    const long common = std::min(precision, rhs.precision().value_or(precision));
    r.factorization_ok = congruent_mod(P, rhs, common);
    return r;
}

}  // namespace artin
