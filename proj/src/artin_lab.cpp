#include "artin/artin_lab.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

namespace artin {

// ---------------------------------------------------------------------------
// order inequality

bool check_order_inequality(const PolySystem& sys, const std::vector<Jet>& samples,
                            const std::function<long(long)>& beta_candidate) {
    for (const Jet& sample : samples) {
        // only visible terms enter the minimum: components that vanish at
        // their working precision sit above every term-bearing order in the
        // jet, and a sample with no terms at all is zero as far as its
        // resolution goes, so the nonzero-points quantifier skips it
        Order min_x = Order::infinite();
        for (const auto& comp : sample.values) {
            if (comp.has_terms()) min_x = std::min(min_x, comp.ord());
        }
        if (min_x.is_infinite()) continue;

        // certified iff some component value has a known order within the
        // bound. A value that vanishes at its working precision certifies
        // nothing: its true order may be anything at or above the cutoff,
        // including +infinity for a nonzero true solution, which would
        // contradict the isolated-zero premise.
        const long bound = beta_candidate(min_x.value());
        bool sample_ok = false;
        for (const auto& val : sys.evaluate(sample.values)) {
            if (val.has_terms() && val.ord().value() <= bound) {
                sample_ok = true;
                break;
            }
        }
        if (!sample_ok) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// linear algebra over a field (used by the greedy obstruction route)

namespace {

// Solve A x = b by Gauss-Jordan elimination; free variables are set to zero
// so the returned solution is canonical. Empty optional when inconsistent.
std::optional<std::vector<FieldScalar>> solve_linear(
    std::vector<std::vector<FieldScalar>> A, std::vector<FieldScalar> b,
    const FieldDescriptor& d, size_t num_cols) {
    const size_t rows = A.size();
    std::vector<size_t> pivot_col_of_row(rows, SIZE_MAX);
    size_t rank = 0;
    for (size_t col = 0; col < num_cols && rank < rows; ++col) {
        size_t pivot = SIZE_MAX;
        for (size_t r = rank; r < rows; ++r) {
            if (!A[r][col].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == SIZE_MAX) continue;
        std::swap(A[rank], A[pivot]);
        std::swap(b[rank], b[pivot]);
        const FieldScalar inv = A[rank][col].inverse();
        for (size_t c = col; c < num_cols; ++c) A[rank][c] = A[rank][c] * inv;
        b[rank] = b[rank] * inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || A[r][col].is_zero()) continue;
            const FieldScalar f = A[r][col];
            for (size_t c = col; c < num_cols; ++c) {
                A[r][c] = A[r][c] - f * A[rank][c];
            }
            b[r] = b[r] - f * b[rank];
        }
        pivot_col_of_row[rank] = col;
        ++rank;
    }
    for (size_t r = rank; r < rows; ++r) {
        if (!b[r].is_zero()) return std::nullopt;
    }
    std::vector<FieldScalar> x(num_cols, FieldScalar::zero(d));
    for (size_t r = 0; r < rank; ++r) {
        x[pivot_col_of_row[r]] = b[r];
    }
    return x;
}

// lowest homogeneous form of a nonzero exact series
TermMap lowest_form(const GradedSeries& f) {
    TermMap out;
    const long d0 = f.ord().value();
    for (const auto& [e, c] : f.terms()) {
        if (e.total_degree() != d0) break;
        out.emplace(e, c);
    }
    return out;
}

// the canonical monomial square root T^(E/2) * sqrt(c) of a series whose
// lowest form is the single monomial c*T^E, when that form is a square
std::optional<GradedSeries> form_sqrt(const GradedSeries& z) {
    const auto& low = *z.terms().begin();
    auto second = std::next(z.terms().begin());
    if (second != z.terms().end() &&
        second->first.total_degree() == low.first.total_degree()) {
        return std::nullopt;
    }
    const ExponentVector& E = low.first;
    std::vector<long> half(static_cast<size_t>(E.num_vars()));
    for (int i = 0; i < E.num_vars(); ++i) {
        if (E[i] % 2 != 0) return std::nullopt;
        half[static_cast<size_t>(i)] = E[i] / 2;
    }
    const auto c_sqrt = low.second.sqrt();
    if (!c_sqrt) return std::nullopt;
    return GradedSeries::monomial(*c_sqrt, ExponentVector(std::move(half)));
}

}  // namespace

// ---------------------------------------------------------------------------
// square obstruction, greedy route

ObstructionCertificate square_obstruction(long p, const FieldDescriptor& d,
                                          long max_search_order) {
    if (d.characteristic() == 2) throw CharTwo("square lifting needs 2 invertible");
    if (p <= 2) throw BadParameters("z_p is used with p > 2");
    if (max_search_order <= p) {
        throw BadParameters("square_obstruction: max_search_order must exceed p");
    }
    const GradedSeries z = zp_series(p, d);
    const auto seed = form_sqrt(z);
    if (!seed) throw NotASquareLeadingForm("lowest form of z is not a square");
    GradedSeries t = *seed;
    const FieldScalar two = FieldScalar::from_integer(d, 2);

    while (true) {
        const GradedSeries r = sub(z, mul(t, t));
        if (r.is_exact_zero()) {
            throw SearchBudgetExceeded("z is an exact square: the sup is infinite");
        }
        const long dcur = r.ord().value();
        if (dcur >= max_search_order) {
            throw SearchBudgetExceeded("residual order reached the search cap");
        }
        const long ord_t = t.ord().value();
        const long hdeg = dcur - ord_t;
        const auto hmons = monomials_of_degree(2, hdeg);
        const auto target = monomials_of_degree(2, dcur);
        std::map<ExponentVector, size_t, GradedLexLess> row_of;
        for (size_t i = 0; i < target.size(); ++i) row_of.emplace(target[i], i);

        // columns: the degree-dcur coefficients of 2 * t_low * (h monomial)
        const TermMap t_low = lowest_form(t);
        std::vector<std::vector<FieldScalar>> A(
            target.size(),
            std::vector<FieldScalar>(hmons.size(), FieldScalar::zero(d)));
        for (size_t j = 0; j < hmons.size(); ++j) {
            for (const auto& [e, c] : t_low) {
                const auto it = row_of.find(e + hmons[j]);
                if (it != row_of.end()) {
                    A[it->second][j] = A[it->second][j] + two * c;
                }
            }
        }
        std::vector<FieldScalar> b(target.size(), FieldScalar::zero(d));
        for (const auto& [e, c] : lowest_form(r)) b[row_of.at(e)] = c;

        const auto sol = solve_linear(std::move(A), std::move(b), d, hmons.size());
        if (!sol) {
            return ObstructionCertificate{p, dcur, t, hdeg};
        }
        TermMap h_terms;
        for (size_t j = 0; j < hmons.size(); ++j) {
            if (!(*sol)[j].is_zero()) h_terms.emplace(hmons[j], (*sol)[j]);
        }
        t = add(t, GradedSeries::from_terms(d, 2, std::move(h_terms)));
    }
}

// ---------------------------------------------------------------------------
// square obstruction, exhaustive route

namespace {

struct ExhaustiveState {
    long best = 0;
    unsigned long long visited = 0;
    unsigned long long budget;
    long cap;
    const GradedSeries* z;
};

void visit_node(ExhaustiveState& st, const GradedSeries& t, long level,
                bool& extend, long& residual_ord) {
    if (++st.visited > st.budget) {
        throw SearchBudgetExceeded("exhaustive obstruction search budget");
    }
    const GradedSeries r = sub(*st.z, mul(t, t));
    if (r.is_exact_zero()) {
        st.best = std::max(st.best, st.cap);
        extend = false;
        residual_ord = st.cap;
        return;
    }
    residual_ord = r.ord().value();
    st.best = std::max(st.best, std::min(residual_ord, st.cap));
    // a residual order <= level+1 is frozen: extensions only touch degrees
    // >= level+2, so the branch cannot improve; likewise once the cap is hit
    extend = residual_ord >= level + 2 && residual_ord < st.cap;
}

ExhaustiveObstruction exhaustive_prime_field(long p, const FieldDescriptor& d,
                                             long cap,
                                             unsigned long long budget) {
    const GradedSeries z = zp_series(p, d);
    ExhaustiveState st{0, 0, budget, cap, &z};
    const long q = d.characteristic();

    struct Frame {
        GradedSeries t;
        long level;
    };
    std::vector<Frame> frontier;
    for (long c = 0; c < q; ++c) {
        const GradedSeries t =
            GradedSeries::constant(FieldScalar::from_integer(d, c), 2);
        bool extend = false;
        long r = 0;
        visit_node(st, t, 0, extend, r);
        if (extend) frontier.push_back(Frame{t, 0});
    }
    while (!frontier.empty()) {
        std::vector<Frame> next;
        for (const Frame& fr : frontier) {
            const long level = fr.level + 1;
            const auto mons = monomials_of_degree(2, level);
            const unsigned long long combos = [&] {
                unsigned long long c = 1;
                for (size_t i = 0; i < mons.size(); ++i) {
                    c *= static_cast<unsigned long long>(q);
                }
                return c;
            }();
            for (unsigned long long a = 0; a < combos; ++a) {
                unsigned long long rest = a;
                TermMap h;
                for (const auto& mono : mons) {
                    const long digit =
                        static_cast<long>(rest % static_cast<unsigned long long>(q));
                    rest /= static_cast<unsigned long long>(q);
                    if (digit) h.emplace(mono, FieldScalar::from_integer(d, digit));
                }
                const GradedSeries child =
                    add(fr.t, GradedSeries::from_terms(d, 2, std::move(h)));
                bool extend = false;
                long r = 0;
                visit_node(st, child, level, extend, r);
                if (extend) next.push_back(Frame{child, level});
            }
        }
        frontier = std::move(next);
    }
    return ExhaustiveObstruction{st.best, st.visited};
}

ExhaustiveObstruction exhaustive_rationals(long p, const FieldDescriptor& d,
                                           long cap, unsigned long long budget) {
    const GradedSeries z = zp_series(p, d);
    ExhaustiveState st{0, 0, budget, cap, &z};

    // level 0: the constant term of t must square to the constant term of z,
    // which is 0, so t has no constant term (char != 2)
    {
        bool extend = false;
        long r = 0;
        visit_node(st, GradedSeries::zero(d, 2), 0, extend, r);
        if (!extend) return ExhaustiveObstruction{st.best, st.visited};
    }
    // level 1: the degree-1 part h satisfies h^2 = (degree-2 form of z),
    // forcing h = +/- the monomial square root; two branches from here on
    const auto seed = form_sqrt(z);
    if (!seed) throw NotASquareLeadingForm("lowest form of z is not a square");

    for (const GradedSeries& start : {*seed, negate(*seed)}) {
        GradedSeries t = start;
        long level = 1;
        while (true) {
            bool extend = false;
            long r = 0;
            visit_node(st, t, level, extend, r);
            if (!extend) break;
            // the unique candidate extension solves 2*t_low*h = residual
            // lowest form; divide monomial by monomial, staying inside O_N
            const GradedSeries res = sub(z, mul(t, t));
            const TermMap rform = lowest_form(res);
            const auto& tl = *t.terms().begin();
            const FieldScalar scale =
                (FieldScalar::from_integer(d, 2) * tl.second).inverse();
            TermMap h;
            bool divisible = true;
            for (const auto& [e, c] : rform) {
                const ExponentVector he = e - tl.first;
                ++st.visited;  // one division probe per residual monomial
                if (!he.all_nonnegative()) {
                    divisible = false;
                    break;
                }
                h.emplace(he, c * scale);
            }
            if (!divisible) break;  // branch dies; its value was recorded
            t = add(t, GradedSeries::from_terms(d, 2, std::move(h)));
            level = r - 1;  // the next undecided level
        }
    }
    return ExhaustiveObstruction{st.best, st.visited};
}

}  // namespace

ExhaustiveObstruction square_obstruction_exhaustive(long p,
                                                    const FieldDescriptor& d,
                                                    long max_search_order,
                                                    unsigned long long budget) {
    if (d.characteristic() == 2) throw CharTwo("square lifting needs 2 invertible");
    if (p <= 2) throw BadParameters("z_p is used with p > 2");
    if (max_search_order <= p) {
        throw BadParameters("exhaustive obstruction: cap must exceed p");
    }
    return d.is_prime_field()
               ? exhaustive_prime_field(p, d, max_search_order, budget)
               : exhaustive_rationals(p, d, max_search_order, budget);
}

// ---------------------------------------------------------------------------
// membership oracles

MembershipOracle membership_origin_only() {
    return [](const Jet& jet, long modulus) {
        for (const auto& comp : jet.values) {
            if (truncate(comp, modulus).has_terms()) return false;
        }
        return true;
    };
}

MembershipOracle membership_empty() {
    return [](const Jet&, long) { return false; };
}

MembershipOracle membership_square_or_zero(const FieldDescriptor& d) {
    if (!d.is_prime_field()) {
        throw BadParameters("the s-jet enumeration needs a prime field");
    }
    return [d](const Jet& jet, long modulus) {
        if (jet.values.size() != 3) {
            throw DimensionMismatch("expected a jet in the unknowns (X, Y, Z)");
        }
        const GradedSeries x = truncate(jet.values[0], modulus);
        const GradedSeries y = truncate(jet.values[1], modulus);
        const GradedSeries z = truncate(jet.values[2], modulus);
        if (!x.has_terms() && !y.has_terms()) return true;
        const JetSpace s_space(d, x.num_vars(), 1, modulus);
        const unsigned long long total =
            static_cast<unsigned long long>(s_space.size());
        for (unsigned long long idx = 0; idx < total; ++idx) {
            const GradedSeries s = s_space.decode(idx).values[0];
            if (congruent_mod(mul(s, s), z, modulus) &&
                congruent_mod(mul(s, y), x, modulus)) {
                return true;
            }
        }
        return false;
    };
}

// ---------------------------------------------------------------------------
// liftability-to-horizon heuristic

namespace {

bool system_vanishes(const PolySystem& sys, const std::vector<GradedSeries>& y,
                     long modulus) {
    for (const auto& val : sys.evaluate(y, modulus)) {
        if (val.ord_capped(modulus) < modulus) return false;
    }
    return true;
}

bool lift_dfs(const PolySystem& sys, const std::vector<GradedSeries>& y,
              long cur, long horizon, std::atomic<unsigned long long>& used,
              unsigned long long budget) {
    if (!system_vanishes(sys, y, cur)) return false;
    if (cur >= horizon) return true;
    const auto mons = monomials_of_degree(sys.num_series_vars, cur);
    const long q = sys.descriptor.characteristic();
    const size_t digits = mons.size() * static_cast<size_t>(sys.num_unknowns);
    unsigned long long combos = 1;
    for (size_t i = 0; i < digits; ++i) combos *= static_cast<unsigned long long>(q);
    for (unsigned long long a = 0; a < combos; ++a) {
        if (used.fetch_add(1) >= budget) {
            throw BudgetExceeded("liftability search budget");
        }
        unsigned long long rest = a;
        std::vector<GradedSeries> next = y;
        for (int j = 0; j < sys.num_unknowns; ++j) {
            TermMap h;
            for (const auto& mono : mons) {
                const long digit =
                    static_cast<long>(rest % static_cast<unsigned long long>(q));
                rest /= static_cast<unsigned long long>(q);
                if (digit) {
                    h.emplace(mono,
                              FieldScalar::from_integer(sys.descriptor, digit));
                }
            }
            if (!h.empty()) {
                next[static_cast<size_t>(j)] =
                    add(next[static_cast<size_t>(j)],
                        GradedSeries::from_terms(sys.descriptor,
                                                 sys.num_series_vars,
                                                 std::move(h)));
            }
        }
        if (lift_dfs(sys, next, cur + 1, horizon, used, budget)) return true;
    }
    return false;
}

// exact polynomial representative of the jet's class mod m^modulus
std::vector<GradedSeries> class_representative(const Jet& jet, long modulus) {
    std::vector<GradedSeries> out;
    out.reserve(jet.values.size());
    for (const auto& comp : jet.values) {
        TermMap kept;
        for (const auto& [e, c] : comp.terms()) {
            if (e.total_degree() >= modulus) break;
            kept.emplace(e, c);
        }
        out.push_back(GradedSeries::from_terms(comp.descriptor(), comp.num_vars(),
                                               std::move(kept)));
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// beta_bruteforce

BetaRecord beta_bruteforce(const PolySystem& sys, long i,
                           const FieldDescriptor& d, const BetaOptions& opt) {
    if (!d.is_prime_field()) {
        throw BadParameters("jet enumeration needs a prime field");
    }
    if (sys.descriptor != d) throw MixedFields("system and field disagree");
    if (i < 0 || opt.jet_order < i + 1 || opt.horizon < opt.jet_order) {
        throw BadParameters("need horizon >= jet_order >= i+1 and i >= 0");
    }
    const long J = opt.jet_order;
    const JetSpace space(d, sys.num_series_vars, sys.num_unknowns, J);
    if (space.size() > BigInt(opt.budget)) {
        throw BudgetExceeded("jet space larger than the enumeration budget");
    }
    const auto total = static_cast<unsigned long long>(space.size());

    std::map<std::vector<long>, bool> cache;
    std::mutex cache_mtx;
    std::atomic<unsigned long long> lift_budget_used{0};

    const auto is_good = [&](const Jet& jet) {
        const std::vector<long> key = space.class_key(jet, i + 1);
        {
            std::lock_guard<std::mutex> lock(cache_mtx);
            const auto it = cache.find(key);
            if (it != cache.end()) return it->second;
        }
        bool good;
        if (opt.oracle) {
            good = (*opt.oracle)(jet, i + 1);
        } else {
            good = lift_dfs(sys, class_representative(jet, i + 1), i + 1,
                            opt.horizon, lift_budget_used, opt.budget);
        }
        std::lock_guard<std::mutex> lock(cache_mtx);
        cache.emplace(std::move(key), good);
        return good;
    };

    struct BlockResult {
        long c = -1;
        unsigned long long index = 0;
    };
    const int jobs = std::max(opt.jobs, 1);
    std::vector<BlockResult> results(static_cast<size_t>(jobs));
    std::vector<std::exception_ptr> errors(static_cast<size_t>(jobs));

    const auto scan_block = [&](int job) {
        try {
            const unsigned long long lo = total / jobs * job +
                                          std::min<unsigned long long>(job, total % jobs);
            const unsigned long long hi = total / jobs * (job + 1) +
                                          std::min<unsigned long long>(job + 1, total % jobs);
            BlockResult best;
            for (unsigned long long idx = lo; idx < hi; ++idx) {
                const Jet jet = space.decode(idx);
                long c = J;
                for (const auto& val : sys.evaluate(jet.values, J)) {
                    c = std::min(c, val.ord_capped(J));
                }
                if (c == 0) continue;      // never constrains any B >= 0
                if (is_good(jet)) continue;
                if (c > best.c) best = BlockResult{c, idx};
            }
            results[static_cast<size_t>(job)] = best;
        } catch (...) {
            errors[static_cast<size_t>(job)] = std::current_exception();
        }
    };

    if (jobs == 1) {
        scan_block(0);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(static_cast<size_t>(jobs));
        for (int j = 0; j < jobs; ++j) workers.emplace_back(scan_block, j);
        for (auto& w : workers) w.join();
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    BlockResult best;  // merge in block order: max c, earliest index on ties
    for (const auto& r : results) {
        if (r.c > best.c) best = r;
    }

    if (best.c == J) {
        throw NoSuchB("a bad jet vanishes to the jet order: raise jet_order");
    }
    const long B = std::max(best.c, long{0});
    const bool exact = opt.oracle.has_value();
    BetaRecord rec{i,
                   B,
                   exact ? std::optional<long>(B) : std::nullopt,
                   best.c >= 0 ? std::optional<Jet>(space.decode(best.index))
                               : std::nullopt,
                   opt.horizon,
                   exact};
    return rec;
}

// ---------------------------------------------------------------------------
// quadratic lower-bound witnesses

QuadraticWitnessReport quadratic_witness(long i, const FieldDescriptor& d) {
    if (i % 2 != 0) {
        throw BadParity("odd i: apply monotonicity to the witness for i-1");
    }
    const long k = (i + 2) / 2;
    if (k <= 4) throw BadParameters("need i = 2k-2 with k > 4");
    const long p = k - 2;

    CounterexampleTriple triple = build_triple(p, k, d);
    const TripleReport rep = verify_triple(triple);
    const ObstructionCertificate obst = square_obstruction(p, d, p + 2);

    const long bound = k * k - 4;  // = (p+2)k - 4 for p = k-2
    const bool ordP_ok = rep.measured_ordP >= bound;
    const bool obstruction_ok = obst.max_order == p && p < i + 1;
    const long ord_v = triple.v.ord().value();
    const bool ord_v_ok = ord_v == 2 * k - 3 && ord_v <= i;

    return QuadraticWitnessReport{std::move(triple),
                                  k * k - 5,
                                  rep.measured_ordP,
                                  obst.max_order,
                                  ord_v,
                                  ordP_ok,
                                  obstruction_ok,
                                  ord_v_ok};
}

}  // namespace artin
