#include "artin/field.hpp"

#include <sstream>

namespace artin {

bool is_odd_prime(std::int64_t q) {
    if (q < 3 || q % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= q; d += 2) {
        if (q % d == 0) return false;
    }
    return true;
}

FieldDescriptor FieldDescriptor::prime_field(std::int64_t q) {
    if (q == 2) throw CharTwo("prime field of characteristic two is not supported");
    if (!is_odd_prime(q)) {
        throw BadParameters("prime field characteristic must be an odd prime, got " +
                            std::to_string(q));
    }
    return FieldDescriptor(FieldKind::PrimeField, q);
}

namespace {

std::int64_t normalize_mod(std::int64_t v, std::int64_t q) {
    std::int64_t r = v % q;
    return r < 0 ? r + q : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t q) {
    return static_cast<std::int64_t>(
        static_cast<unsigned __int128>(static_cast<__uint128_t>(a) * b) % q);
}

// extended Euclid; a in [1, q)
std::int64_t inv_mod(std::int64_t a, std::int64_t q) {
    std::int64_t old_r = a, r = q;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t quot = old_r / r;
        std::int64_t tmp = old_r - quot * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quot * s;
        old_s = s;
        s = tmp;
    }
    return normalize_mod(old_s, q);
}

std::int64_t pow_mod(std::int64_t a, std::int64_t e, std::int64_t q) {
    std::int64_t acc = 1;
    a = normalize_mod(a, q);
    while (e > 0) {
        if (e & 1) acc = mul_mod(acc, a, q);
        a = mul_mod(a, a, q);
        e >>= 1;
    }
    return acc;
}

// Tonelli-Shanks; returns a root of a mod q or nothing when a is a non-residue.
std::optional<std::int64_t> sqrt_mod(std::int64_t a, std::int64_t q) {
    a = normalize_mod(a, q);
    if (a == 0) return 0;
    if (pow_mod(a, (q - 1) / 2, q) != 1) return std::nullopt;
    if (q % 4 == 3) return pow_mod(a, (q + 1) / 4, q);

    std::int64_t s = 0, d = q - 1;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    std::int64_t z = 2;
    while (pow_mod(z, (q - 1) / 2, q) != q - 1) ++z;

    std::int64_t m = s;
    std::int64_t c = pow_mod(z, d, q);
    std::int64_t t = pow_mod(a, d, q);
    std::int64_t r = pow_mod(a, (d + 1) / 2, q);
    while (t != 1) {
        std::int64_t i = 0;
        std::int64_t probe = t;
        while (probe != 1) {
            probe = mul_mod(probe, probe, q);
            ++i;
        }
        std::int64_t b = pow_mod(c, std::int64_t(1) << (m - i - 1), q);
        m = i;
        c = mul_mod(b, b, q);
        t = mul_mod(t, c, q);
        r = mul_mod(r, b, q);
    }
    return r;
}

// exact integer square root test
std::optional<BigInt> perfect_sqrt(const BigInt& v) {
    if (v < 0) return std::nullopt;
    BigInt r = boost::multiprecision::sqrt(v);
    if (r * r == v) return r;
    return std::nullopt;
}

void require_same_field(const FieldScalar& a, const FieldScalar& b) {
    if (a.descriptor() != b.descriptor()) {
        throw MixedFields("operands live in " + a.descriptor().name() + " and " +
                          b.descriptor().name());
    }
}

}  // namespace

FieldScalar FieldScalar::from_integer(const FieldDescriptor& d, std::int64_t v) {
    FieldScalar x(d);
    if (d.is_prime_field()) {
        x.res_ = normalize_mod(v, d.characteristic());
    } else {
        x.rat_ = v;
    }
    return x;
}

FieldScalar FieldScalar::from_rational(const FieldDescriptor& d,
                                       const BigRational& r) {
    FieldScalar x(d);
    if (d.is_prime_field()) {
        const std::int64_t q = d.characteristic();
        BigInt den = boost::multiprecision::denominator(r) % q;
        if (den == 0) {
            std::ostringstream os;
            os << "denominator of " << r << " vanishes mod " << q;
            throw NonReducibleModQ(os.str());
        }
        BigInt num = boost::multiprecision::numerator(r) % q;
        std::int64_t n = normalize_mod(static_cast<std::int64_t>(num), q);
        std::int64_t m = normalize_mod(static_cast<std::int64_t>(den), q);
        x.res_ = mul_mod(n, inv_mod(m, q), q);
    } else {
        x.rat_ = r;
    }
    return x;
}

bool FieldScalar::is_zero() const {
    return desc_.is_prime_field() ? res_ == 0 : rat_ == 0;
}

bool FieldScalar::is_one() const {
    return desc_.is_prime_field() ? res_ == 1 : rat_ == 1;
}

std::int64_t FieldScalar::residue() const {
    if (!desc_.is_prime_field()) {
        throw std::logic_error("residue() on a rational scalar");
    }
    return res_;
}

const BigRational& FieldScalar::rational() const {
    if (desc_.is_prime_field()) {
        throw std::logic_error("rational() on a prime-field scalar");
    }
    return rat_;
}

FieldScalar FieldScalar::operator-() const {
    FieldScalar x(desc_);
    if (desc_.is_prime_field()) {
        x.res_ = res_ == 0 ? 0 : desc_.characteristic() - res_;
    } else {
        x.rat_ = -rat_;
    }
    return x;
}

FieldScalar FieldScalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in " + desc_.name());
    FieldScalar x(desc_);
    if (desc_.is_prime_field()) {
        x.res_ = inv_mod(res_, desc_.characteristic());
    } else {
        x.rat_ = 1 / rat_;
    }
    return x;
}

FieldScalar operator+(const FieldScalar& a, const FieldScalar& b) {
    require_same_field(a, b);
    FieldScalar x(a.desc_);
    if (a.desc_.is_prime_field()) {
        x.res_ = normalize_mod(a.res_ + b.res_, a.desc_.characteristic());
    } else {
        x.rat_ = a.rat_ + b.rat_;
    }
    return x;
}

FieldScalar operator-(const FieldScalar& a, const FieldScalar& b) {
    require_same_field(a, b);
    FieldScalar x(a.desc_);
    if (a.desc_.is_prime_field()) {
        x.res_ = normalize_mod(a.res_ - b.res_, a.desc_.characteristic());
    } else {
        x.rat_ = a.rat_ - b.rat_;
    }
    return x;
}

FieldScalar operator*(const FieldScalar& a, const FieldScalar& b) {
    require_same_field(a, b);
    FieldScalar x(a.desc_);
    if (a.desc_.is_prime_field()) {
        x.res_ = mul_mod(a.res_, b.res_, a.desc_.characteristic());
    } else {
        x.rat_ = a.rat_ * b.rat_;
    }
    return x;
}

bool operator==(const FieldScalar& a, const FieldScalar& b) {
    if (a.desc_ != b.desc_) return false;
    return a.desc_.is_prime_field() ? a.res_ == b.res_ : a.rat_ == b.rat_;
}

std::optional<FieldScalar> FieldScalar::sqrt() const {
    if (desc_.is_prime_field()) {
        auto r = sqrt_mod(res_, desc_.characteristic());
        if (!r) return std::nullopt;
        std::int64_t canonical = std::min(*r, *r == 0 ? *r : desc_.characteristic() - *r);
        return from_integer(desc_, canonical);
    }
    auto num = perfect_sqrt(boost::multiprecision::numerator(rat_));
    auto den = perfect_sqrt(boost::multiprecision::denominator(rat_));
    if (!num || !den) return std::nullopt;
    return from_rational(desc_, BigRational(*num, *den));
}

std::string FieldScalar::to_string() const {
    if (desc_.is_prime_field()) return std::to_string(res_);
    std::ostringstream os;
    os << rat_;
    return os.str();
}

bool FieldScalar::renders_negative() const {
    return !desc_.is_prime_field() && rat_ < 0;
}

FieldScalar field_add(const FieldScalar& a, const FieldScalar& b) { return a + b; }
FieldScalar field_mul(const FieldScalar& a, const FieldScalar& b) { return a * b; }
FieldScalar field_neg(const FieldScalar& a) { return -a; }
FieldScalar field_inv(const FieldScalar& a) { return a.inverse(); }

BigRational binomial_half_rational(long n) {
    if (n < 0) throw BadParameters("binomial_half: n must be nonnegative");
    BigRational c = 1;
    for (long m = 1; m <= n; ++m) {
        // c_m = c_{m-1} * (1/2 - (m-1)) / m = c_{m-1} * (3 - 2m) / (2m)
        c *= BigRational(3 - 2 * m, 2 * m);
    }
    return c;
}

FieldScalar binomial_half(long n, const FieldDescriptor& d) {
    return FieldScalar::from_rational(d, binomial_half_rational(n));
}

}  // namespace artin
