#include "artin/series.hpp"

#include <algorithm>
#include <sstream>

namespace artin {

// ---------------------------------------------------------------------------
// ExponentVector

ExponentVector::ExponentVector(std::vector<long> exps)
    : exps_(std::move(exps)), total_(0) {
    if (exps_.empty()) throw BadParameters("exponent vector needs >= 1 variable");
    for (long e : exps_) total_ += e;
}

ExponentVector ExponentVector::zero(int num_vars) {
    return ExponentVector(std::vector<long>(static_cast<size_t>(num_vars), 0));
}

ExponentVector ExponentVector::unit(int num_vars, int index, long e) {
    std::vector<long> v(static_cast<size_t>(num_vars), 0);
    v.at(static_cast<size_t>(index)) = e;
    return ExponentVector(std::move(v));
}

bool ExponentVector::all_nonnegative() const {
    return std::all_of(exps_.begin(), exps_.end(), [](long e) { return e >= 0; });
}

ExponentVector ExponentVector::operator+(const ExponentVector& o) const {
    if (num_vars() != o.num_vars()) {
        throw DimensionMismatch("adding exponent vectors over different variable counts");
    }
    std::vector<long> v(exps_);
    for (size_t i = 0; i < v.size(); ++i) v[i] += o.exps_[i];
    return ExponentVector(std::move(v));
}

ExponentVector ExponentVector::operator-(const ExponentVector& o) const {
    if (num_vars() != o.num_vars()) {
        throw DimensionMismatch("subtracting exponent vectors over different variable counts");
    }
    std::vector<long> v(exps_);
    for (size_t i = 0; i < v.size(); ++i) v[i] -= o.exps_[i];
    return ExponentVector(std::move(v));
}

bool GradedLexLess::operator()(const ExponentVector& a,
                               const ExponentVector& b) const {
    if (a.total_degree() != b.total_degree()) {
        return a.total_degree() < b.total_degree();
    }
    // within a degree, T1-major first: larger exponent vector precedes
    return std::lexicographical_compare(b.entries().begin(), b.entries().end(),
                                        a.entries().begin(), a.entries().end());
}

// ---------------------------------------------------------------------------
// construction and invariants

namespace {

void require_compatible(const GradedSeries& f, const GradedSeries& g) {
    if (f.descriptor() != g.descriptor()) {
        throw MixedFields("series over " + f.descriptor().name() + " and " +
                          g.descriptor().name());
    }
    if (f.num_vars() != g.num_vars()) {
        throw DimensionMismatch("series in " + std::to_string(f.num_vars()) +
                                " and " + std::to_string(g.num_vars()) +
                                " variables");
    }
}

Precision min_precision(Precision a, Precision b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

SeriesDomain join_domain(SeriesDomain a, SeriesDomain b) {
    return (a == SeriesDomain::NonNegExponents && b == SeriesDomain::NonNegExponents)
               ? SeriesDomain::NonNegExponents
               : SeriesDomain::LaurentGraded;
}

void accumulate(TermMap& into, const ExponentVector& e, const FieldScalar& c) {
    auto it = into.find(e);
    if (it == into.end()) {
        if (!c.is_zero()) into.emplace(e, c);
        return;
    }
    FieldScalar s = it->second + c;
    if (s.is_zero()) {
        into.erase(it);
    } else {
        it->second = s;
    }
}

// product of raw term maps, keeping only total degrees < cap
TermMap raw_mul(const TermMap& a, const TermMap& b, long cap) {
    TermMap out;
    for (const auto& [ea, ca] : a) {
        if (ea.total_degree() >= cap) break;  // maps are degree-sorted
        for (const auto& [eb, cb] : b) {
            if (ea.total_degree() + eb.total_degree() >= cap) break;
            accumulate(out, ea + eb, ca * cb);
        }
    }
    return out;
}

}  // namespace

GradedSeries::GradedSeries(const FieldDescriptor& d, int num_vars, TermMap terms,
                           Precision precision, SeriesDomain domain)
    : desc_(d),
      num_vars_(num_vars),
      terms_(std::move(terms)),
      precision_(precision),
      domain_(domain) {
    if (num_vars_ < 1) throw BadParameters("series needs >= 1 variable");
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.num_vars() != num_vars_) {
            throw DimensionMismatch("term exponent arity differs from series arity");
        }
        if (it->second.descriptor() != desc_) {
            throw MixedFields("term coefficient from a different field");
        }
        const bool drop = it->second.is_zero() ||
                          (precision_ && it->first.total_degree() >= *precision_);
        it = drop ? terms_.erase(it) : std::next(it);
    }
    if (domain_ == SeriesDomain::NonNegExponents) {
        for (const auto& [e, c] : terms_) {
            if (!e.all_nonnegative()) {
                throw std::logic_error(
                    "NonNegExponents series constructed with a negative exponent");
            }
        }
    }
}

GradedSeries GradedSeries::zero(const FieldDescriptor& d, int num_vars,
                                Precision precision) {
    return GradedSeries(d, num_vars, TermMap{}, precision,
                        SeriesDomain::NonNegExponents);
}

GradedSeries GradedSeries::constant(const FieldScalar& c, int num_vars,
                                    Precision precision) {
    TermMap m;
    if (!c.is_zero()) m.emplace(ExponentVector::zero(num_vars), c);
    return GradedSeries(c.descriptor(), num_vars, std::move(m), precision,
                        SeriesDomain::NonNegExponents);
}

GradedSeries GradedSeries::monomial(const FieldScalar& c, const ExponentVector& e,
                                    Precision precision) {
    TermMap m;
    if (!c.is_zero()) m.emplace(e, c);
    SeriesDomain dom = e.all_nonnegative() ? SeriesDomain::NonNegExponents
                                           : SeriesDomain::LaurentGraded;
    return GradedSeries(c.descriptor(), e.num_vars(), std::move(m), precision, dom);
}

GradedSeries GradedSeries::from_terms(const FieldDescriptor& d, int num_vars,
                                      TermMap terms, Precision precision) {
    SeriesDomain dom = SeriesDomain::NonNegExponents;
    for (const auto& [e, c] : terms) {
        if (!e.all_nonnegative()) {
            dom = SeriesDomain::LaurentGraded;
            break;
        }
    }
    return GradedSeries(d, num_vars, std::move(terms), precision, dom);
}

GradedSeries GradedSeries::from_terms(const FieldDescriptor& d, int num_vars,
                                      TermMap terms, Precision precision,
                                      SeriesDomain domain) {
    return GradedSeries(d, num_vars, std::move(terms), precision, domain);
}

Order GradedSeries::ord() const {
    if (!terms_.empty()) return Order::finite(terms_.begin()->first.total_degree());
    if (is_exact()) return Order::infinite();
    throw IndeterminateOrder("zero at precision O(deg >= " +
                             std::to_string(*precision_) +
                             "): order is indeterminate");
}

long GradedSeries::ord_capped(long cap) const {
    if (precision_ && *precision_ < cap) {
        throw std::logic_error("ord_capped beyond the stored precision");
    }
    if (terms_.empty()) return cap;
    return std::min(terms_.begin()->first.total_degree(), cap);
}

Order GradedSeries::ord_lower_bound() const {
    if (!terms_.empty()) return Order::finite(terms_.begin()->first.total_degree());
    if (is_exact()) return Order::infinite();
    return Order::finite(*precision_);
}

FieldScalar GradedSeries::coeff(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? FieldScalar::zero(desc_) : it->second;
}

// ---------------------------------------------------------------------------
// arithmetic

GradedSeries add(const GradedSeries& f, const GradedSeries& g) {
    require_compatible(f, g);
    TermMap out = f.terms_;
    for (const auto& [e, c] : g.terms_) accumulate(out, e, c);
    return GradedSeries(f.desc_, f.num_vars_, std::move(out),
                        min_precision(f.precision_, g.precision_),
                        join_domain(f.domain_, g.domain_));
}

GradedSeries sub(const GradedSeries& f, const GradedSeries& g) {
    require_compatible(f, g);
    TermMap out = f.terms_;
    for (const auto& [e, c] : g.terms_) accumulate(out, e, -c);
    return GradedSeries(f.desc_, f.num_vars_, std::move(out),
                        min_precision(f.precision_, g.precision_),
                        join_domain(f.domain_, g.domain_));
}

GradedSeries negate(const GradedSeries& f) {
    TermMap out;
    for (const auto& [e, c] : f.terms_) out.emplace(e, -c);
    return GradedSeries(f.desc_, f.num_vars_, std::move(out), f.precision_,
                        f.domain_);
}

GradedSeries scalar_mul(const FieldScalar& c, const GradedSeries& f) {
    if (c.descriptor() != f.descriptor()) {
        throw MixedFields("scalar from " + c.descriptor().name() + " on series over " +
                          f.descriptor().name());
    }
    TermMap out;
    if (!c.is_zero()) {
        for (const auto& [e, fc] : f.terms_) out.emplace(e, c * fc);
    }
    return GradedSeries(f.desc_, f.num_vars_, std::move(out), f.precision_,
                        f.domain_);
}

namespace {

// pi(f*g) = min(pi_f + ordlow(g), pi_g + ordlow(f)); an exact factor
// contributes no cap, an exactly-zero factor makes the product exact.
Precision mul_precision(const GradedSeries& f, const GradedSeries& g) {
    auto side = [](Precision pf, Order og) -> Precision {
        if (!pf || og.is_infinite()) return std::nullopt;
        return *pf + og.value();
    };
    return min_precision(side(f.precision(), g.ord_lower_bound()),
                         side(g.precision(), f.ord_lower_bound()));
}

GradedSeries mul_impl(const GradedSeries& f, const GradedSeries& g,
                      Precision cap) {
    require_compatible(f, g);
    Precision pi = min_precision(mul_precision(f, g), cap);
    TermMap out;
    for (const auto& [ef, cf] : f.terms()) {
        for (const auto& [eg, cg] : g.terms()) {
            if (pi && ef.total_degree() + eg.total_degree() >= *pi) break;
            accumulate(out, ef + eg, cf * cg);
        }
    }
    return GradedSeries::from_terms(f.descriptor(), f.num_vars(), std::move(out),
                                    pi, join_domain(f.domain(), g.domain()));
}

}  // namespace

GradedSeries mul(const GradedSeries& f, const GradedSeries& g) {
    return mul_impl(f, g, std::nullopt);
}

GradedSeries mul_truncated(const GradedSeries& f, const GradedSeries& g,
                           long cap) {
    return mul_impl(f, g, cap);
}

GradedSeries pow(const GradedSeries& f, long e, std::optional<long> cap) {
    if (e < 0) throw BadParameters("pow: negative exponent");
    GradedSeries acc = GradedSeries::constant(FieldScalar::one(f.descriptor()),
                                              f.num_vars());
    for (long i = 0; i < e; ++i) {
        acc = cap ? mul_truncated(acc, f, *cap) : mul(acc, f);
    }
    return acc;
}

GradedSeries truncate(const GradedSeries& f, long pi) {
    if (f.precision() && *f.precision() < pi) {
        throw PrecisionIncrease("truncate to O(deg >= " + std::to_string(pi) +
                                ") exceeds stored precision O(deg >= " +
                                std::to_string(*f.precision()) + ")");
    }
    TermMap out;
    for (const auto& [e, c] : f.terms()) {
        if (e.total_degree() >= pi) break;
        out.emplace(e, c);
    }
    return GradedSeries(f.descriptor(), f.num_vars(), std::move(out), pi,
                        f.domain());
}

GradedSeries invert_unit(const GradedSeries& f, long pi) {
    if (pi < 1) throw BadParameters("invert_unit: precision must be >= 1");
    if (f.precision() && *f.precision() < pi) {
        throw PrecisionIncrease("invert_unit: input has precision O(deg >= " +
                                std::to_string(*f.precision()) +
                                "), requested " + std::to_string(pi));
    }
    if (!f.has_determinate_ord() || f.ord() != Order::finite(0)) {
        throw NotAUnit("invert_unit: input must have order 0");
    }
    // The degree-0 homogeneous form must be a single constant term; other
    // ord-0 Laurent elements have residue-field inverses outside this model.
    const ExponentVector zero_exp = ExponentVector::zero(f.num_vars());
    for (const auto& [e, c] : f.terms()) {
        if (e.total_degree() > 0) break;
        if (!(e == zero_exp)) {
            throw NotAUnit("invert_unit: degree-0 form is not a constant");
        }
    }
    const FieldScalar c0 = f.coeff(zero_exp);

    TermMap g;
    g.emplace(zero_exp, c0.inverse());
    const FieldScalar two = FieldScalar::from_integer(f.descriptor(), 2);
    long s = 1;
    while (s < pi) {
        const long s2 = std::min(2 * s, pi);
        // g <- g * (2 - f g); the error 1 - f g squares each round
        TermMap fg = raw_mul(f.terms(), g, s2);
        TermMap corr;
        accumulate(corr, zero_exp, two);
        for (const auto& [e, c] : fg) accumulate(corr, e, -c);
        g = raw_mul(g, corr, s2);
        s = s2;
    }
    return GradedSeries(f.descriptor(), f.num_vars(), std::move(g), pi,
                        f.domain());
}

bool identical(const GradedSeries& a, const GradedSeries& b) {
    if (a.descriptor() != b.descriptor() || a.num_vars() != b.num_vars() ||
        a.precision() != b.precision() || a.domain() != b.domain()) {
        return false;
    }
    return std::equal(a.terms().begin(), a.terms().end(), b.terms().begin(),
                      b.terms().end(), [](const auto& x, const auto& y) {
                          return x.first == y.first && x.second == y.second;
                      });
}

bool congruent_mod(const GradedSeries& a, const GradedSeries& b, long pi) {
    require_compatible(a, b);
    const GradedSeries ta = truncate(a, pi);
    const GradedSeries tb = truncate(b, pi);
    return std::equal(ta.terms().begin(), ta.terms().end(), tb.terms().begin(),
                      tb.terms().end(), [](const auto& x, const auto& y) {
                          return x.first == y.first && x.second == y.second;
                      });
}

// ---------------------------------------------------------------------------
// rendering

namespace {

std::string render_monomial(const ExponentVector& e) {
    std::string out;
    for (int i = 0; i < e.num_vars(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "T" + std::to_string(i + 1);
        if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

}  // namespace

std::string GradedSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        FieldScalar shown = c;
        if (first) {
            first = false;
        } else if (c.renders_negative()) {
            os << " - ";
            shown = -c;
        } else {
            os << " + ";
        }
        const std::string mono = render_monomial(e);
        if (mono.empty()) {
            os << shown.to_string();
        } else if (shown.is_one()) {
            os << mono;
        } else if ((-shown).is_one() && shown.renders_negative()) {
            os << "-" << mono;
        } else {
            os << shown.to_string() << "*" << mono;
        }
    }
    if (precision_) {
        if (!first) os << " + ";
        os << "O(deg >= " << *precision_ << ")";
    } else if (first) {
        os << "0";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// fractions

long fraction_reduce_ord(const SeriesFraction& fr) {
    if (fr.denominator.is_exact_zero()) {
        throw DivisionByZero("fraction with exactly zero denominator");
    }
    if (fr.numerator.is_exact_zero()) {
        throw BadParameters("fraction_reduce_ord: zero numerator has infinite order");
    }
    const Order n = fr.numerator.ord();     // may throw IndeterminateOrder
    const Order d = fr.denominator.ord();
    return n.value() - d.value();
}

bool fraction_in_valuation_ring(const SeriesFraction& fr) {
    if (fr.denominator.is_exact_zero()) {
        throw DivisionByZero("fraction with exactly zero denominator");
    }
    if (fr.numerator.is_exact_zero()) return true;
    return fr.numerator.ord() >= fr.denominator.ord();
}

GradedSeries fraction_to_graded(const SeriesFraction& fr, long pi) {
    if (!fr.numerator.is_exact() || !fr.denominator.is_exact()) {
        throw BadParameters("fraction_to_graded: inputs must be exact");
    }
    if (fr.denominator.is_exact_zero()) {
        throw DivisionByZero("fraction with exactly zero denominator");
    }
    const FieldDescriptor d = fr.numerator.descriptor();
    const int nv = fr.numerator.num_vars();
    if (fr.numerator.is_exact_zero()) return GradedSeries::zero(d, nv, pi);

    // the denominator's lowest form must be a single monomial c*T^e
    const long d0 = fr.denominator.ord().value();
    const auto& den_terms = fr.denominator.terms();
    auto low = den_terms.begin();
    auto next = std::next(low);
    if (next != den_terms.end() && next->first.total_degree() == d0) {
        throw BadParameters(
            "fraction_to_graded: denominator lowest form is not a monomial");
    }
    const ExponentVector e0 = low->first;
    const FieldScalar c0 = low->second;

    // den = c0 T^e0 * u with u = 1 + (higher);  num/den = num * u^{-1} * c0^{-1} T^{-e0}
    TermMap unit_terms;
    for (const auto& [e, c] : den_terms) {
        unit_terms.emplace(e - e0, c * c0.inverse());
    }
    const long n0 = fr.numerator.ord().value();
    const long unit_prec = std::max(pi + d0 - n0, long{1});
    const GradedSeries unit =
        GradedSeries::from_terms(d, nv, std::move(unit_terms), std::nullopt);
    const GradedSeries w = invert_unit(unit, unit_prec);
    const GradedSeries shift = GradedSeries::monomial(
        c0.inverse(), ExponentVector::zero(nv) - e0);
    return truncate(mul(mul(fr.numerator, w), shift), pi);
}

}  // namespace artin
