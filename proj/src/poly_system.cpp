#include "artin/poly_system.hpp"

#include <algorithm>
#include <sstream>

namespace artin {

SeriesPolynomial::SeriesPolynomial(const FieldDescriptor& d, int num_series_vars,
                                   int num_unknowns)
    : desc_(d), num_series_vars_(num_series_vars), num_unknowns_(num_unknowns) {
    if (num_series_vars_ < 1 || num_unknowns_ < 1) {
        throw BadParameters("polynomial needs >= 1 series variable and unknown");
    }
}

void SeriesPolynomial::add_term(const UnknownKey& key, const GradedSeries& c) {
    if (static_cast<int>(key.size()) != num_unknowns_) {
        throw DimensionMismatch("unknown-exponent arity differs from declared n");
    }
    if (std::any_of(key.begin(), key.end(), [](long e) { return e < 0; })) {
        throw NegativeExponent("unknowns occur with nonnegative exponents only");
    }
    if (c.descriptor() != desc_) {
        throw MixedFields("coefficient from a different field");
    }
    if (c.num_vars() != num_series_vars_) {
        throw DimensionMismatch("coefficient arity differs from declared N");
    }
    if (c.domain() != SeriesDomain::NonNegExponents) {
        throw BadParameters("coefficients must be power series, not Laurent");
    }
    if (!c.is_exact_zero() && !c.has_determinate_ord()) {
        throw IndeterminateOrder("coefficient has no determinate order");
    }
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        if (!c.is_exact_zero()) terms_.emplace(key, c);
        return;
    }
    GradedSeries merged = add(it->second, c);
    if (merged.is_exact_zero()) {
        terms_.erase(it);
    } else {
        terms_.insert_or_assign(it, key, std::move(merged));
    }
}

GradedSeries SeriesPolynomial::evaluate(const std::vector<GradedSeries>& xs,
                                        std::optional<long> cap) const {
    if (static_cast<int>(xs.size()) != num_unknowns_) {
        throw DimensionMismatch("evaluation tuple has wrong length");
    }
    for (const auto& x : xs) {
        if (x.descriptor() != desc_) throw MixedFields("evaluation point field");
        if (x.num_vars() != num_series_vars_) {
            throw DimensionMismatch("evaluation point arity");
        }
    }
    GradedSeries acc = GradedSeries::zero(desc_, num_series_vars_);
    for (const auto& [key, coeff] : terms_) {
        GradedSeries term = coeff;
        for (int j = 0; j < num_unknowns_; ++j) {
            for (long e = 0; e < key[static_cast<size_t>(j)]; ++e) {
                term = cap ? mul_truncated(term, xs[static_cast<size_t>(j)], *cap)
                           : mul(term, xs[static_cast<size_t>(j)]);
            }
        }
        acc = add(acc, term);
    }
    return acc;
}

long SeriesPolynomial::degree_in_unknowns() const {
    long d = 0;
    for (const auto& [key, coeff] : terms_) {
        long t = 0;
        for (long e : key) t += e;
        d = std::max(d, t);
    }
    return d;
}

PolySystem PolySystem::single(SeriesPolynomial p) {
    PolySystem sys{p.descriptor(), p.num_series_vars(), p.num_unknowns(), {}};
    sys.polys.push_back(std::move(p));
    return sys;
}

std::vector<GradedSeries> PolySystem::evaluate(const std::vector<GradedSeries>& xs,
                                               std::optional<long> cap) const {
    std::vector<GradedSeries> out;
    out.reserve(polys.size());
    for (const auto& p : polys) out.push_back(p.evaluate(xs, cap));
    return out;
}

long Jet::order() const {
    if (values.empty()) throw BadParameters("empty jet");
    const Precision pi = values.front().precision();
    if (!pi) throw BadParameters("jet components must carry finite precision");
    for (const auto& v : values) {
        if (v.precision() != pi) {
            throw BadParameters("jet components disagree on precision");
        }
    }
    return *pi;
}

std::string Jet::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) os << ", ";
        os << values[i].to_string();
    }
    os << ")";
    return os.str();
}

std::vector<ExponentVector> monomials_below(int num_vars, long cap) {
    if (num_vars < 1) throw BadParameters("need >= 1 variable");
    std::vector<ExponentVector> out;
    std::vector<long> cur(static_cast<size_t>(num_vars), 0);
    // enumerate recursively, then sort into the canonical graded-lex order
    auto rec = [&](auto&& self, int pos, long remaining) -> void {
        if (pos == num_vars - 1) {
            for (long e = 0; e <= remaining; ++e) {
                cur[static_cast<size_t>(pos)] = e;
                out.emplace_back(cur);
            }
            return;
        }
        for (long e = 0; e <= remaining; ++e) {
            cur[static_cast<size_t>(pos)] = e;
            self(self, pos + 1, remaining - e);
        }
    };
    if (cap > 0) rec(rec, 0, cap - 1);
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

std::vector<ExponentVector> monomials_of_degree(int num_vars, long d) {
    std::vector<ExponentVector> out;
    for (auto& e : monomials_below(num_vars, d + 1)) {
        if (e.total_degree() == d) out.push_back(std::move(e));
    }
    return out;
}

BigInt count_monomials_below(int num_vars, long cap) {
    if (cap <= 0) return 0;
    // C(cap-1+num_vars, num_vars): monomials of degree <= cap-1 in num_vars vars
    BigInt num = 1, den = 1;
    for (long j = 1; j <= num_vars; ++j) {
        num *= (cap - 1 + j);
        den *= j;
    }
    return num / den;
}

JetSpace::JetSpace(const FieldDescriptor& d, int num_series_vars,
                   int num_unknowns, long order)
    : desc_(d),
      num_series_vars_(num_series_vars),
      num_unknowns_(num_unknowns),
      order_(order),
      monomials_(monomials_below(num_series_vars, order)) {
    if (!d.is_prime_field()) {
        throw BadParameters("jet enumeration requires a prime field");
    }
    if (num_unknowns_ < 1 || order_ < 1) {
        throw BadParameters("jet space needs n >= 1 and order >= 1");
    }
    const BigInt q = d.characteristic();
    size_ = 1;
    const size_t digits = monomials_.size() * static_cast<size_t>(num_unknowns_);
    for (size_t i = 0; i < digits; ++i) size_ *= q;
}

Jet JetSpace::decode(unsigned long long index) const {
    const long q = desc_.characteristic();
    Jet jet;
    jet.values.reserve(static_cast<size_t>(num_unknowns_));
    unsigned long long rest = index;
    for (int j = 0; j < num_unknowns_; ++j) {
        TermMap terms;
        for (const auto& mono : monomials_) {
            const long digit = static_cast<long>(rest % static_cast<unsigned long long>(q));
            rest /= static_cast<unsigned long long>(q);
            if (digit != 0) {
                terms.emplace(mono, FieldScalar::from_integer(desc_, digit));
            }
        }
        jet.values.push_back(
            GradedSeries::from_terms(desc_, num_series_vars_, std::move(terms), order_));
    }
    return jet;
}

std::vector<long> JetSpace::class_key(const Jet& jet, long modulus) const {
    std::vector<long> key;
    key.reserve(jet.values.size() * monomials_.size());
    for (const auto& component : jet.values) {
        for (const auto& mono : monomials_) {
            if (mono.total_degree() >= modulus) break;
            key.push_back(
                static_cast<long>(component.coeff(mono).residue()));
        }
    }
    return key;
}

}  // namespace artin
