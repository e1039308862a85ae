#include "lrc/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lrc/errors.hpp"

namespace lrc {

namespace {

constexpr uint64_t kMaxOrder = 1ull << 20;

// Polynomials over GF(p) as coefficient vectors, low to high, without a
// normalization requirement on the leading entry.
using Poly = std::vector<uint32_t>;

size_t poly_degree(const Poly& f) {
    size_t d = f.size();
    while (d > 0 && f[d - 1] == 0) --d;
    return d == 0 ? 0 : d - 1;
}

bool poly_is_zero(const Poly& f) {
    return std::all_of(f.begin(), f.end(), [](uint32_t c) { return c == 0; });
}

Poly poly_mul(uint64_t p, const Poly& a, const Poly& b) {
    if (poly_is_zero(a) || poly_is_zero(b)) return {0};
    Poly out(poly_degree(a) + poly_degree(b) + 1, 0);
    for (size_t i = 0; i <= poly_degree(a); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j <= poly_degree(b); ++j) {
            out[i + j] = static_cast<uint32_t>((out[i + j] + uint64_t(a[i]) * b[j]) % p);
        }
    }
    return out;
}

// In-place remainder of f modulo a monic divisor.
void poly_mod(uint64_t p, Poly& f, const Poly& monic) {
    const size_t dm = poly_degree(monic);
    while (!poly_is_zero(f) && poly_degree(f) >= dm && dm > 0) {
        const size_t df = poly_degree(f);
        const uint64_t lead = f[df];
        for (size_t i = 0; i <= dm; ++i) {
            const size_t pos = df - dm + i;
            uint64_t sub = (lead * monic[i]) % p;
            f[pos] = static_cast<uint32_t>((f[pos] + p - sub) % p);
        }
    }
    f.resize(dm == 0 ? 1 : dm, 0);
    if (f.empty()) f.push_back(0);
}

}  // namespace

bool is_prime(uint64_t p) {
    if (p < 2) return false;
    for (uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

bool is_irreducible_over_prime_field(uint64_t p, const std::vector<uint32_t>& poly) {
    const size_t m = poly_degree(poly);
    if (m == 0) return false;
    if (m == 1) return true;
    // Trial division by every monic polynomial of degree 1..m/2. Divisor
    // counts stay tiny at the q <= 2^20 scale this library targets.
    for (size_t d = 1; 2 * d <= m; ++d) {
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (uint64_t v = 0; v < count; ++v) {
            Poly div(d + 1, 0);
            uint64_t t = v;
            for (size_t i = 0; i < d; ++i) {
                div[i] = static_cast<uint32_t>(t % p);
                t /= p;
            }
            div[d] = 1;
            Poly rem = poly;
            poly_mod(p, rem, div);
            if (poly_is_zero(rem)) return false;
        }
    }
    return true;
}

Field::Field(uint64_t p, uint32_t m, std::vector<uint32_t> modulus)
    : p_(static_cast<uint32_t>(p)), m_(m), modulus_(std::move(modulus)) {
    q_ = 1;
    for (uint32_t i = 0; i < m_; ++i) q_ *= p_;
}

FieldPtr Field::make(uint64_t p, uint32_t m) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
    if (m < 1) throw std::invalid_argument("field degree must be at least 1");
    uint64_t q = 1;
    for (uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxOrder) throw std::invalid_argument("field order exceeds the 2^20 cap");
    }
    if (m == 1) return FieldPtr(new Field(p, m, {}));

    // Smallest irreducible monic modulus in packed-coefficient order.
    for (uint64_t v = 0; v < q; ++v) {
        std::vector<uint32_t> candidate(m + 1, 0);
        uint64_t t = v;
        for (uint32_t i = 0; i < m; ++i) {
            candidate[i] = static_cast<uint32_t>(t % p);
            t /= p;
        }
        candidate[m] = 1;
        if (is_irreducible_over_prime_field(p, candidate)) {
            return FieldPtr(new Field(p, m, std::move(candidate)));
        }
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable: they exist for every (p, m)
}

FieldPtr Field::make(uint64_t p, uint32_t m, const std::vector<uint32_t>& modulus) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
    if (m < 1) throw std::invalid_argument("field degree must be at least 1");
    if (m == 1) throw std::invalid_argument("a modulus is only meaningful for extension fields (m > 1)");
    uint64_t q = 1;
    for (uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxOrder) throw std::invalid_argument("field order exceeds the 2^20 cap");
    }
    if (modulus.size() != size_t(m) + 1) throw std::invalid_argument("modulus must have m+1 coefficients");
    if (modulus[m] != 1) throw std::invalid_argument("modulus must be monic");
    for (uint32_t c : modulus) {
        if (c >= p) throw std::invalid_argument("modulus coefficients must lie in [0, p)");
    }
    if (!is_irreducible_over_prime_field(p, modulus)) {
        throw std::invalid_argument("modulus is reducible over GF(p)");
    }
    return FieldPtr(new Field(p, m, modulus));
}

std::vector<uint32_t> Field::unpack(uint32_t value) const {
    std::vector<uint32_t> coeffs(m_, 0);
    uint64_t t = value;
    for (uint32_t i = 0; i < m_; ++i) {
        coeffs[i] = static_cast<uint32_t>(t % p_);
        t /= p_;
    }
    return coeffs;
}

uint32_t Field::pack(const std::vector<uint32_t>& coeffs) const {
    uint64_t v = 0;
    for (size_t i = coeffs.size(); i-- > 0;) v = v * p_ + coeffs[i] % p_;
    return static_cast<uint32_t>(v);
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
    if (m_ == 1) {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    if (p_ == 2) return a ^ b;
    uint32_t out = 0;
    uint32_t mult = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        uint32_t s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        out += s * mult;
        mult *= p_;
        a /= p_;
        b /= p_;
    }
    return out;
}

uint32_t Field::neg(uint32_t a) const {
    if (m_ == 1) return a == 0 ? 0 : p_ - a;
    if (p_ == 2) return a;
    uint32_t out = 0;
    uint32_t mult = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        uint32_t c = a % p_;
        out += (c == 0 ? 0 : p_ - c) * mult;
        mult *= p_;
        a /= p_;
    }
    return out;
}

uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::mul_ext(uint32_t a, uint32_t b) const {
    Poly pa = unpack(a);
    Poly pb = unpack(b);
    Poly prod = poly_mul(p_, pa, pb);
    poly_mod(p_, prod, modulus_);
    prod.resize(m_, 0);
    return pack(prod);
}

uint32_t Field::mul(uint32_t a, uint32_t b) const {
    if (m_ == 1) return static_cast<uint32_t>((uint64_t(a) * b) % p_);
    if (a == 0 || b == 0) return 0;
    return mul_ext(a, b);
}

uint32_t Field::pow(uint32_t a, int64_t e) const {
    if (a == 0) {
        if (e == 0) return one().value();
        if (e < 0) throw std::domain_error("zero has no negative powers");
        return 0;
    }
    // a^(q-1) = 1 for a != 0, so reduce the exponent mod q-1.
    uint64_t exp = static_cast<uint64_t>(((e % int64_t(q_ - 1)) + int64_t(q_ - 1)) % int64_t(q_ - 1));
    uint32_t result = 1;
    uint32_t base = a;
    while (exp > 0) {
        if (exp & 1) result = mul(result, base);
        base = mul(base, base);
        exp >>= 1;
    }
    return result;
}

uint32_t Field::inv(uint32_t a) const {
    if (a == 0) throw std::domain_error("division by zero in GF(" + std::to_string(q_) + ")");
    return pow(a, -1);
}

uint32_t Field::div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

FieldElement Field::element(uint64_t value) const {
    if (value >= q_) throw std::invalid_argument("element value out of range for field order " + std::to_string(q_));
    return FieldElement(shared_from_this(), static_cast<uint32_t>(value));
}

FieldElement Field::zero() const { return FieldElement(shared_from_this(), 0); }
FieldElement Field::one() const { return FieldElement(shared_from_this(), 1); }

std::vector<FieldElement> Field::elements() const {
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (uint64_t v = 0; v < q_; ++v) out.emplace_back(shared_from_this(), static_cast<uint32_t>(v));
    return out;
}

const Field& FieldElement::compatible(const FieldElement& o) const {
    if (!field_->same_as(*o.field_)) {
        throw std::invalid_argument("operands belong to different fields");
    }
    return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    return FieldElement(field_, compatible(o).add(value_, o.value_));
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
    return FieldElement(field_, compatible(o).sub(value_, o.value_));
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
    return FieldElement(field_, compatible(o).mul(value_, o.value_));
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
    return FieldElement(field_, compatible(o).div(value_, o.value_));
}
FieldElement FieldElement::operator-() const { return FieldElement(field_, field_->neg(value_)); }
FieldElement FieldElement::inv() const { return FieldElement(field_, field_->inv(value_)); }
FieldElement FieldElement::pow(int64_t e) const { return FieldElement(field_, field_->pow(value_, e)); }

}  // namespace lrc
