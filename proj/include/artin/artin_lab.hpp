#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "artin/construction.hpp"
#include "artin/poly_system.hpp"

namespace artin {

// ---------------------------------------------------------------------------
// order inequality (the reformulation that drives everything else)

// For a system whose only power-series zero is the origin, a function table B
// certifies the order inequality iff every sample x satisfies
//     min_l ord(f_l(x)) <= B(min_k ord(x_k)).
// Samples that are identically zero are skipped (the inequality quantifies
// over nonzero points). Returns false as soon as one sample violates it.
bool check_order_inequality(const PolySystem& sys, const std::vector<Jet>& samples,
                            const std::function<long(long)>& beta_candidate);

// ---------------------------------------------------------------------------
// the square obstruction: sup over t in O_N of ord(z_p - t^2) equals p

struct ObstructionCertificate {
    long p;
    long max_order;           // the sup, as certified
    GradedSeries best_t;      // a t attaining ord(z_p - t^2) = max_order
    long obstruction_degree;  // degree of the homogeneous correction that has no solution
};

// Greedy route: maintain t with ord(z_p - t^2) = d and solve, degree by
// degree, the linear system asking a homogeneous h to kill the residual's
// lowest form via 2*(lowest form of t)*h. The first infeasible system is a
// checkable certificate that no t does better.
ObstructionCertificate square_obstruction(long p, const FieldDescriptor& d,
                                          long max_search_order);

// Exhaustive route, independent of the greedy one: walk the tree of t-jets
// level by level. A prefix whose residual order r is at most (level+1) is
// frozen: every extension keeps ord(z_p - t^2) = r, so the branch is counted
// and closed. Over a prime field the levels are enumerated pointwise; over
// the rationals each level's extensions form an affine solution set computed
// by dividing the residual form monomial-by-monomial (no Gaussian step, so
// the two routes share no machinery).
struct ExhaustiveObstruction {
    long max_order;
    unsigned long long candidates;  // tree nodes visited
};

ExhaustiveObstruction square_obstruction_exhaustive(
    long p, const FieldDescriptor& d, long max_search_order,
    unsigned long long budget = 10'000'000ULL);

// ---------------------------------------------------------------------------
// brute-forced Artin function on jet spaces

// Decides whether a congruence class mod m^modulus contains a true solution
// of the system the oracle was built for. Must be mathematically exact for
// the records it certifies.
using MembershipOracle = std::function<bool(const Jet& jet, long modulus)>;

// The only solution is the origin (true for X, and for X^2 - T*Y^2 by order
// parity).
MembershipOracle membership_origin_only();

// The solution set is empty (true for X^2 - T: ord parity again).
MembershipOracle membership_empty();

// Solutions of X^2 - Z*Y^2 with unknowns ordered (X, Y, Z): either the class
// forces x = y = 0, or some s has s^2 = z and x = s*y mod m^modulus. The
// existential over s is resolved by enumerating s-jets: exact at desk scale.
MembershipOracle membership_square_or_zero(const FieldDescriptor& d);

struct BetaRecord {
    long i;
    long beta_lower;
    std::optional<long> beta_exact;  // present iff exact_flag
    std::optional<Jet> witness;      // bad jet attaining the bound
    long horizon;
    bool exact_flag;
};

struct BetaOptions {
    long jet_order = 3;
    long horizon = 4;  // only used by the liftability heuristic
    std::optional<MembershipOracle> oracle;  // exact when provided
    unsigned long long budget = 10'000'000ULL;
    int jobs = 1;
};

// Scans every jet x of the system's unknowns mod m^jet_order over a prime
// field and returns the smallest B such that each x with ord f(x) >= B+1 is
// congruent mod m^(i+1) to a solution class. With an exact oracle the result
// is the Artin function value itself (restricted to the jet horizon); with
// the liftability heuristic it is a lower bound only. Throws NoSuchB when a
// bad jet kills every B below the jet order, i.e. the jet order is too small
// to decide.
BetaRecord beta_bruteforce(const PolySystem& sys, long i,
                           const FieldDescriptor& d, const BetaOptions& opt);

// ---------------------------------------------------------------------------
// the assembled quadratic lower bound

struct QuadraticWitnessReport {
    CounterexampleTriple triple;
    long lower_bound;          // ((i+2)/2)^2 - 5
    Order measured_ordP;       // >= k^2 - 4 required
    long obstruction_order;    // square_obstruction(p) = p required
    long ord_v;                // 2k - 3 <= i required
    bool ordP_ok;
    bool obstruction_ok;
    bool ord_v_ok;
    bool all_ok() const { return ordP_ok && obstruction_ok && ord_v_ok; }
};

// For even i = 2k-2 with k > 4: builds the (u_{p,k}, v_k, z_p) triple with
// p = k-2 and verifies the three facts that make it a witness for
// beta_N(i) >= ((i+2)/2)^2 - 5. Odd i must go through monotonicity on i-1
// (BadParity points the caller there).
QuadraticWitnessReport quadratic_witness(long i, const FieldDescriptor& d);

}  // namespace artin
