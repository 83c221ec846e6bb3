// Acceptance gate. Runs the seven release criteria end to end and prints one
// pass/fail line per criterion; exits 0 only if every line is PASS.
//
// Every tolerance is pinned here as a named constant next to nothing else, so
// a reviewer can audit the gate without chasing configuration.

#include <algorithm>
#include <chrono>
#include <exception>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "artin/artin_lab.hpp"
#include "artin/commands.hpp"
#include "artin/construction.hpp"
#include "artin/diophantine.hpp"
#include "artin/errors.hpp"
#include "artin/field.hpp"
#include "artin/order.hpp"
#include "artin/poly_system.hpp"
#include "artin/series.hpp"

namespace {

using namespace artin;
using Clock = std::chrono::steady_clock;

// pinned tolerances
constexpr long kTripleGridTimeBudgetMs = 5000;        // criterion 1
constexpr long kObstructionTimeBudgetMs = 60000;      // criterion 5
constexpr unsigned long long kObstructionCandidateBudget = 10'000'000ULL;
constexpr int kRandomCasesPerSuite = 1000;            // criterion 6
constexpr unsigned kRandomSeed = 424243;              // fixed: failures reproduce

long elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                                 t0)
        .count();
}

// ---------------------------------------------------------------------------
// criterion 1: full (p, k) grid over Q, exact order identity, timed

bool criterion1(std::string& detail) {
    const auto q = FieldDescriptor::rationals();
    const auto t0 = Clock::now();
    int checked = 0;
    for (long p = 3; p <= 8; ++p) {
        for (long k = 3; k <= 8; ++k) {
            // default working precision is (p+2)k - 2
            const auto triple = build_triple(p, k, q);
            const auto rep = verify_triple(triple);
            if (!rep.equality_regime || !rep.equality_holds) {
                detail = "ord(u^2 - z*v^2) != (p+2)k - 4 at p=" +
                         std::to_string(p) + " k=" + std::to_string(k);
                return false;
            }
            if (rep.measured_ordP != Order::finite((p + 2) * k - 4)) {
                detail = "order mismatch at p=" + std::to_string(p) +
                         " k=" + std::to_string(k);
                return false;
            }
            ++checked;
        }
    }
    const long ms = elapsed_ms(t0);
    detail = std::to_string(checked) + " pairs exact, " + std::to_string(ms) +
             " ms < " + std::to_string(kTripleGridTimeBudgetMs) + " ms";
    return checked == 36 && ms < kTripleGridTimeBudgetMs;
}

// ---------------------------------------------------------------------------
// criterion 2: diagonal p = k - 2, ord P = k^2 - 4 and min order 2k - 3

bool criterion2(std::string& detail) {
    const auto q = FieldDescriptor::rationals();
    for (long k = 5; k <= 8; ++k) {
        const long p = k - 2;
        const auto rep = verify_triple(build_triple(p, k, q));
        if (rep.measured_ordP != Order::finite(k * k - 4)) {
            detail = "ord P != k^2 - 4 at k=" + std::to_string(k);
            return false;
        }
        if (std::min(rep.ord_u, rep.ord_v) != 2 * k - 3 ||
            !rep.min_uv_ord_holds) {
            detail = "min(ord u, ord v) != 2k - 3 at k=" + std::to_string(k);
            return false;
        }
    }
    detail = "k=5..8, p=k-2: ord P = k^2 - 4 and min(ord u, ord v) = 2k - 3";
    return true;
}

// ---------------------------------------------------------------------------
// criterion 3: beta-bound over i = 8..12, witness sub-checks per even i

bool criterion3(std::string& detail) {
    const auto q = FieldDescriptor::rationals();
    const std::vector<std::pair<long, long>> expected = {
        {8, 20}, {10, 31}, {12, 44}};
    for (const auto& [i, bound] : expected) {
        const auto w = quadratic_witness(i, q);
        if (w.lower_bound != bound) {
            detail = "lower bound != ((i+2)/2)^2 - 5 at i=" + std::to_string(i);
            return false;
        }
        if (!w.ordP_ok || !(w.measured_ordP >= bound + 1)) {
            detail = "no approximate solution at order bound+1 for i=" +
                     std::to_string(i);
            return false;
        }
        if (!w.obstruction_ok || w.obstruction_order != w.triple.p ||
            !(w.obstruction_order < i + 1)) {
            detail = "square obstruction != p < i+1 at i=" + std::to_string(i);
            return false;
        }
        if (!w.ord_v_ok || !(w.ord_v <= i)) {
            detail = "ord v > i at i=" + std::to_string(i);
            return false;
        }
    }

    // the command-level run covers odd i through monotonicity on i - 1
    BetaBoundOptions opt;
    opt.i = Range{8, 12};
    opt.field = "Q";
    opt.format = "csv";
    std::ostringstream os;
    const int rc = cmd_beta_bound(opt, os);
    const std::string want =
        "i,lower_bound,ord_P,status\n"
        "8,20,21,ok\n"
        "9,20,21,ok (via i-1)\n"
        "10,31,32,ok\n"
        "11,31,32,ok (via i-1)\n"
        "12,44,45,ok\n";
    if (rc != 0 || os.str() != want) {
        detail = "beta-bound 8..12 report mismatch (rc=" + std::to_string(rc) +
                 ")";
        return false;
    }
    detail = "i=8..12: bounds 20/20/31/31/44 all certified";
    return true;
}

// ---------------------------------------------------------------------------
// criterion 4: affine fit of distance against denominator order, exact

bool criterion4(std::string& detail) {
    const auto q = FieldDescriptor::rationals();
    for (long p = 3; p <= 8; ++p) {
        std::vector<std::pair<long, long>> pts;
        for (long k = 3; k <= 8; ++k) {
            const auto r = measure_record(p, k, q);
            pts.emplace_back(r.ord_v, r.ord_distance);
        }
        const auto fit = fit_affine(pts);
        if (fit.a != BigRational(p - 2, 2)) {
            detail = "slope != p/2 - 1 at p=" + std::to_string(p);
            return false;
        }
        if (fit.b != BigRational(3 * p - 4, 2)) {
            detail = "intercept != 3p/2 - 2 at p=" + std::to_string(p);
            return false;
        }
        if (fit.residual_max != 0) {
            detail = "nonzero residual at p=" + std::to_string(p);
            return false;
        }
    }
    detail = "p=3..8: slope p/2 - 1, residual 0, exact arithmetic";
    return true;
}

// ---------------------------------------------------------------------------
// criterion 5: greedy and exhaustive obstruction searches agree, budgeted

bool criterion5(std::string& detail) {
    const std::vector<FieldDescriptor> fields = {
        FieldDescriptor::rationals(), FieldDescriptor::prime_field(3),
        FieldDescriptor::prime_field(5)};
    const auto t0 = Clock::now();
    unsigned long long worst = 0;
    for (const auto& d : fields) {
        for (long p = 3; p <= 5; ++p) {
            const long cap = p + 2;
            const auto greedy = square_obstruction(p, d, cap);
            const auto full =
                square_obstruction_exhaustive(p, d, cap,
                                              kObstructionCandidateBudget);
            if (greedy.max_order != p || full.max_order != p) {
                detail = "sup ord(z_p - t^2) != p at p=" + std::to_string(p) +
                         " over " + d.name();
                return false;
            }
            if (full.candidates > kObstructionCandidateBudget) {
                detail = "candidate budget exceeded at p=" + std::to_string(p) +
                         " over " + d.name();
                return false;
            }
            worst = std::max(worst, full.candidates);
        }
    }
    const long ms = elapsed_ms(t0);
    detail = "9 instances agree, worst exhaustive walk " +
             std::to_string(worst) + " candidates, " + std::to_string(ms) +
             " ms < " + std::to_string(kObstructionTimeBudgetMs) + " ms";
    return ms < kObstructionTimeBudgetMs;
}

// ---------------------------------------------------------------------------
// criterion 6: randomized property suites, >= 1000 cases each, zero failures

FieldScalar random_scalar(std::mt19937& rng, const FieldDescriptor& d,
                          bool nonzero) {
    if (d.is_prime_field()) {
        std::uniform_int_distribution<long> pick(nonzero ? 1 : 0,
                                                 d.characteristic() - 1);
        return FieldScalar::from_integer(d, pick(rng));
    }
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    int a = num(rng);
    if (nonzero && a == 0) a = 1;
    return FieldScalar::from_rational(d, BigRational(a, den(rng)));
}

GradedSeries random_series(std::mt19937& rng, const FieldDescriptor& d,
                           int nv) {
    std::uniform_int_distribution<int> nterms(0, 5);
    std::uniform_int_distribution<long> expo(0, 3);
    std::uniform_int_distribution<int> exactness(0, 2);
    std::uniform_int_distribution<long> cutoff(1, 8);
    TermMap terms;
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        std::vector<long> e(static_cast<size_t>(nv));
        for (auto& x : e) x = expo(rng);
        const FieldScalar c = random_scalar(rng, d, false);
        if (c.is_zero()) continue;
        ExponentVector ev(std::move(e));
        auto [it, fresh] = terms.emplace(std::move(ev), c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    Precision pi;
    if (exactness(rng) != 0) pi = cutoff(rng);
    return GradedSeries::from_terms(d, nv, std::move(terms), pi);
}

GradedSeries random_series_with_terms(std::mt19937& rng,
                                      const FieldDescriptor& d, int nv) {
    for (;;) {
        auto f = random_series(rng, d, nv);
        if (f.has_terms()) return f;
    }
}

const FieldDescriptor& rotate_field(int i) {
    static const std::vector<FieldDescriptor> fields = {
        FieldDescriptor::rationals(), FieldDescriptor::prime_field(3),
        FieldDescriptor::prime_field(5)};
    return fields[static_cast<size_t>(i) % fields.size()];
}

// precision the multiplication rule predicts, recomputed independently here
Precision predicted_mul_precision(const GradedSeries& f,
                                  const GradedSeries& g) {
    if (f.is_exact_zero() || g.is_exact_zero()) return std::nullopt;
    const auto olb = [](const GradedSeries& s) {
        return s.has_terms() ? s.ord().value() : *s.precision();
    };
    Precision out;
    if (f.precision()) out = *f.precision() + olb(g);
    if (g.precision()) {
        const long cand = *g.precision() + olb(f);
        out = out ? std::min(*out, cand) : cand;
    }
    return out;
}

bool suite_ring_axioms(std::mt19937& rng, int cases, std::string& detail) {
    for (int i = 0; i < cases; ++i) {
        const auto& d = rotate_field(i);
        const int nv = 1 + i % 3;
        const auto f = random_series(rng, d, nv);
        const auto g = random_series(rng, d, nv);
        const auto h = random_series(rng, d, nv);
        const auto zero = GradedSeries::zero(d, nv);
        const auto one = GradedSeries::constant(FieldScalar::one(d), nv);

        bool ok = identical(add(f, g), add(g, f));
        ok = ok && identical(mul(f, g), mul(g, f));
        ok = ok && identical(add(add(f, g), h), add(f, add(g, h)));
        ok = ok && identical(mul(mul(f, g), h), mul(f, mul(g, h)));
        ok = ok && identical(add(f, zero), f);
        ok = ok && identical(mul(f, one), f);
        ok = ok && identical(sub(f, g), add(f, negate(g)));

        // distributivity, compared at the coarsest precision either side
        // carries (the two sides may legitimately differ above it)
        const auto lhs = mul(f, add(g, h));
        const auto rhs = add(mul(f, g), mul(f, h));
        Precision common;
        for (const auto* s : {&lhs, &rhs}) {
            if (s->precision()) {
                common = common ? std::min(*common, *s->precision())
                                : *s->precision();
            }
        }
        if (!common) {
            ok = ok && identical(lhs, rhs);
        } else {
            ok = ok && congruent_mod(lhs, rhs, *common);
        }

        if (!ok) {
            detail = "ring axiom failed at case " + std::to_string(i);
            return false;
        }
    }
    return true;
}

bool suite_valuation(std::mt19937& rng, int cases, std::string& detail) {
    for (int i = 0; i < cases; ++i) {
        const auto& d = rotate_field(i);
        const int nv = 1 + i % 3;
        const auto f = random_series_with_terms(rng, d, nv);
        const auto g = random_series_with_terms(rng, d, nv);
        const long of = f.ord().value();
        const long og = g.ord().value();

        bool ok = mul(f, g).ord().value() == of + og;

        const auto c = random_scalar(rng, d, true);
        ok = ok && scalar_mul(c, f).ord().value() == of;
        ok = ok && negate(f).ord().value() == of;

        const long e = 1 + static_cast<long>(i % 3);
        ok = ok && pow(f, e).ord().value() == e * of;

        const auto s = add(f, g);
        if (s.has_determinate_ord()) {
            ok = ok && s.ord() >= std::min(of, og);
        }

        if (!ok) {
            detail = "valuation law failed at case " + std::to_string(i);
            return false;
        }
    }
    return true;
}

bool suite_precision(std::mt19937& rng, int cases, std::string& detail) {
    for (int i = 0; i < cases; ++i) {
        const auto& d = rotate_field(i);
        const int nv = 1 + i % 3;
        const auto f = random_series(rng, d, nv);
        const auto g = random_series(rng, d, nv);

        Precision add_want;
        if (f.precision() || g.precision()) {
            add_want = std::min(f.precision().value_or(1000),
                                g.precision().value_or(1000));
        }
        bool ok = add(f, g).precision() == add_want;

        const auto prod = mul(f, g);
        ok = ok && prod.precision() == predicted_mul_precision(f, g);

        // truncation claims exactly what it was asked for and changes nothing
        // below it
        const long m = f.precision() ? 1 + static_cast<long>(
                                               rng() %
                                               static_cast<unsigned long>(
                                                   *f.precision()))
                                     : 1 + static_cast<long>(rng() % 6);
        const auto tr = truncate(f, m);
        ok = ok && tr.precision() == Precision(m);
        ok = ok && congruent_mod(f, tr, m);

        ok = ok && negate(f).precision() == f.precision();
        const auto c = random_scalar(rng, d, true);
        ok = ok && scalar_mul(c, f).precision() == f.precision();

        if (!f.is_exact_zero() && !g.is_exact_zero()) {
            const long cap = 1 + static_cast<long>(rng() % 8);
            const auto capped = mul_truncated(f, g, cap);
            const auto want = prod.precision()
                                  ? Precision(std::min(*prod.precision(), cap))
                                  : Precision(cap);
            ok = ok && capped.precision() == want;
            ok = ok && congruent_mod(capped, prod, *capped.precision());
        }

        if (!ok) {
            detail = "precision rule failed at case " + std::to_string(i);
            return false;
        }
    }
    return true;
}

bool suite_newton(std::mt19937& rng, int cases, std::string& detail) {
    for (int i = 0; i < cases; ++i) {
        const auto& d = rotate_field(i);
        const int nv = 1 + i % 2;
        std::uniform_int_distribution<long> small(0, 2);
        std::uniform_int_distribution<long> prec(1, 7);

        // inversion round trip on an exact unit
        TermMap ut;
        ut.emplace(ExponentVector::zero(nv), random_scalar(rng, d, true));
        for (int t = 0; t < 3; ++t) {
            std::vector<long> e(static_cast<size_t>(nv));
            long deg = 0;
            for (auto& x : e) {
                x = small(rng);
                deg += x;
            }
            if (deg == 0) continue;
            const auto c = random_scalar(rng, d, false);
            if (c.is_zero()) continue;
            ExponentVector ev(std::move(e));
            auto [it, fresh] = ut.emplace(std::move(ev), c);
            if (!fresh) {
                it->second = it->second + c;
                if (it->second.is_zero()) ut.erase(it);
            }
        }
        const auto u = GradedSeries::from_terms(d, nv, std::move(ut),
                                                std::nullopt);
        const long pi = prec(rng);
        const auto w = invert_unit(u, pi);
        const auto one = GradedSeries::constant(FieldScalar::one(d), nv);
        bool ok = congruent_mod(mul(u, w), one, pi);

        // square root round trip on a constructed square
        TermMap st;
        std::vector<long> base(static_cast<size_t>(nv));
        for (auto& x : base) x = small(rng);
        ExponentVector be(base);
        st.emplace(be, random_scalar(rng, d, true));
        for (int t = 0; t < 2; ++t) {
            const int axis = static_cast<int>(rng() % static_cast<unsigned>(nv));
            const long lift = 1 + static_cast<long>(rng() % 2);
            const auto c = random_scalar(rng, d, false);
            if (c.is_zero()) continue;
            auto ev = be + ExponentVector::unit(nv, axis, lift);
            auto [it, fresh] = st.emplace(std::move(ev), c);
            if (!fresh) {
                it->second = it->second + c;
                if (it->second.is_zero()) st.erase(it);
            }
        }
        const auto s = GradedSeries::from_terms(d, nv, std::move(st),
                                                std::nullopt);
        const auto square = mul(s, s);
        const long pi2 = prec(rng);
        const auto root = sqrt_newton(square, pi2).root;
        ok = ok && congruent_mod(mul(root, root), square, pi2);

        if (!ok) {
            detail = "newton round trip failed at case " + std::to_string(i);
            return false;
        }
    }
    return true;
}

bool criterion6(std::string& detail) {
    std::mt19937 rng(kRandomSeed);
    struct Suite {
        const char* name;
        bool (*run)(std::mt19937&, int, std::string&);
    };
    const std::vector<Suite> suites = {
        {"ring axioms", suite_ring_axioms},
        {"valuation law", suite_valuation},
        {"precision propagation", suite_precision},
        {"newton round trips", suite_newton},
    };
    for (const auto& s : suites) {
        std::string why;
        if (!s.run(rng, kRandomCasesPerSuite, why)) {
            detail = std::string(s.name) + ": " + why;
            return false;
        }
    }
    detail = "4 suites x " + std::to_string(kRandomCasesPerSuite) +
             " randomized cases, seed " + std::to_string(kRandomSeed) +
             ", zero failures";
    return true;
}

// ---------------------------------------------------------------------------
// criterion 7: brute-forced Artin function for one-variable systems over F3
// against hand-derived oracles

SeriesPolynomial make_unknown_only(const FieldDescriptor& d) {
    // f = X
    SeriesPolynomial f(d, 1, 1);
    f.add_term({1}, GradedSeries::constant(FieldScalar::one(d), 1));
    return f;
}

SeriesPolynomial make_unsolvable(const FieldDescriptor& d) {
    // f = X^2 - T
    SeriesPolynomial f(d, 1, 1);
    f.add_term({2}, GradedSeries::constant(FieldScalar::one(d), 1));
    f.add_term({0}, GradedSeries::monomial(-FieldScalar::one(d),
                                           ExponentVector::unit(1, 0)));
    return f;
}

SeriesPolynomial make_parity_pell(const FieldDescriptor& d) {
    // f = X^2 - T*Y^2, unknowns (X, Y)
    SeriesPolynomial f(d, 1, 2);
    f.add_term({2, 0}, GradedSeries::constant(FieldScalar::one(d), 1));
    f.add_term({0, 2}, GradedSeries::monomial(-FieldScalar::one(d),
                                              ExponentVector::unit(1, 0)));
    return f;
}

bool criterion7(std::string& detail) {
    const auto f3 = FieldDescriptor::prime_field(3);

    // f = X: the Artin function is the identity, beta(i) = i
    {
        const auto sys = PolySystem::single(make_unknown_only(f3));
        for (long i = 0; i <= 3; ++i) {
            BetaOptions opt;
            opt.jet_order = std::max<long>(i + 2, 2);  // stays <= 5
            opt.horizon = opt.jet_order + 1;
            opt.oracle = membership_origin_only();
            const auto r = beta_bruteforce(sys, i, f3, opt);
            if (!r.exact_flag || !r.beta_exact || *r.beta_exact != i) {
                detail = "beta(i) != i for f = X at i=" + std::to_string(i);
                return false;
            }
        }
    }

    // f = X^2 - T: no solutions at all, and every value of f has order
    // exactly 1 unless x is a unit, so beta is constantly 1
    {
        const auto sys = PolySystem::single(make_unsolvable(f3));
        for (long i = 0; i <= 3; ++i) {
            BetaOptions opt;
            opt.jet_order = std::max<long>(i + 2, 2);
            opt.horizon = opt.jet_order + 1;
            opt.oracle = membership_empty();
            const auto r = beta_bruteforce(sys, i, f3, opt);
            if (!r.exact_flag || !r.beta_exact || *r.beta_exact != 1) {
                detail = "beta != 1 for f = X^2 - T at i=" + std::to_string(i);
                return false;
            }
        }
    }

    // f = X^2 - T*Y^2: beta(0) = 1 and beta(1) = 3, on the hand-derived
    // affine line 2i + 1; at i = 2 and 3 that line predicts beta >= the jet
    // order 5, so the scan must report the order as undecidable
    {
        const auto sys = PolySystem::single(make_parity_pell(f3));
        const std::vector<std::pair<long, long>> decided = {{0, 1}, {1, 3}};
        std::vector<std::pair<long, long>> measured;
        for (const auto& [i, want] : decided) {
            BetaOptions opt;
            opt.jet_order = (i == 0) ? 2 : 5;
            opt.horizon = opt.jet_order + 1;
            opt.oracle = membership_origin_only();
            const auto r = beta_bruteforce(sys, i, f3, opt);
            if (!r.exact_flag || !r.beta_exact || *r.beta_exact != want) {
                detail = "beta(i) mismatch for f = X^2 - T*Y^2 at i=" +
                         std::to_string(i);
                return false;
            }
            measured.emplace_back(i, *r.beta_exact);
        }
        const auto fit = fit_affine(measured);
        if (fit.a != BigRational(2) || fit.b != BigRational(1) ||
            fit.residual_max != 0) {
            detail = "decided values do not sit on the line 2i + 1";
            return false;
        }
        for (long i = 2; i <= 3; ++i) {
            BetaOptions opt;
            opt.jet_order = 5;
            opt.horizon = 6;
            opt.oracle = membership_origin_only();
            bool undecidable = false;
            try {
                beta_bruteforce(sys, i, f3, opt);
            } catch (const NoSuchB&) {
                undecidable = true;
            }
            if (!undecidable) {
                detail = "jet order 5 unexpectedly decided beta(" +
                         std::to_string(i) + ") for f = X^2 - T*Y^2";
                return false;
            }
        }
    }

    detail =
        "over F3: beta(i) = i for X; beta = 1 for X^2 - T; beta = 1, 3 on the "
        "line 2i + 1 for X^2 - T*Y^2, undecidable past i = 1 at jet order 5";
    return true;
}

}  // namespace

int main() {
    struct Row {
        int num;
        bool (*fn)(std::string&);
    };
    const std::vector<Row> rows = {
        {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
        {5, criterion5}, {6, criterion6}, {7, criterion7},
    };
    bool all = true;
    for (const auto& row : rows) {
        std::string detail;
        bool ok = false;
        try {
            ok = row.fn(detail);
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("unexpected error: ") + e.what();
        }
        std::cout << "criterion " << row.num << ": " << (ok ? "PASS" : "FAIL");
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << "\n";
        all = all && ok;
    }
    std::cout << "note: criterion 7 is a desk-scale contrast only. Exact "
                 "enumeration stops at one series variable, i <= 3, jet "
                 "order <= 5; the general uniform bounds for whole families "
                 "of systems are far beyond enumeration and are neither "
                 "claimed nor tested here.\n";
    std::cout << "acceptance: " << (all ? "PASS" : "FAIL") << "\n";
    return all ? 0 : 1;
}
