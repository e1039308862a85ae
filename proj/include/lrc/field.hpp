#ifndef LRC_FIELD_HPP
#define LRC_FIELD_HPP

#include <cstdint>
#include <memory>
#include <vector>

namespace lrc {

class Field;
class FieldElement;
using FieldPtr = std::shared_ptr<const Field>;

// GF(p^m) in polynomial-basis representation. Elements are stored as packed
// integers in [0, q): value = c_0 + c_1*p + ... + c_{m-1}*p^{m-1}, the c_i
// being the coefficients of the residue polynomial. The packed value is also
// the on-disk encoding.
//
// A Field is immutable after construction and safe to share across threads.
// Fields compare by value (p, m, modulus), not by object identity, so two
// independently created GF(7) handles interoperate.
class Field : public std::enable_shared_from_this<Field> {
  public:
    // Builds GF(p^m). When m > 1 and no modulus is given, the irreducible
    // monic modulus with the smallest packed coefficient value is chosen, so
    // construction is deterministic for fixed (p, m). A user-supplied modulus
    // must be monic of degree m with coefficients in [0, p), listed low to
    // high, and irreducible over GF(p). Caps q at 2^20.
    static FieldPtr make(uint64_t p, uint32_t m);
    static FieldPtr make(uint64_t p, uint32_t m, const std::vector<uint32_t>& modulus);

    uint32_t characteristic() const { return p_; }
    uint32_t degree() const { return m_; }
    uint64_t order() const { return q_; }
    // Empty for prime fields; otherwise m+1 coefficients, low to high, monic.
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    bool same_as(const Field& other) const {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }

    // Raw-value arithmetic on packed representatives in [0, q). These are the
    // hot-path entry points used by the matrix and enumeration code; the
    // FieldElement wrappers below add the cross-field guard.
    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;  // throws on a == 0
    uint32_t div(uint32_t a, uint32_t b) const;
    uint32_t pow(uint32_t a, int64_t e) const;

    std::vector<uint32_t> unpack(uint32_t value) const;  // m coefficients, low to high
    uint32_t pack(const std::vector<uint32_t>& coeffs) const;

    FieldElement element(uint64_t value) const;  // bounds-checked
    FieldElement zero() const;
    FieldElement one() const;
    // All q elements in packed order: zero first, deterministic.
    std::vector<FieldElement> elements() const;

  private:
    Field(uint64_t p, uint32_t m, std::vector<uint32_t> modulus);

    uint32_t mul_ext(uint32_t a, uint32_t b) const;

    uint32_t p_ = 0;
    uint32_t m_ = 1;
    uint64_t q_ = 0;
    std::vector<uint32_t> modulus_;  // empty when m == 1
};

// A field scalar carrying its field. Arithmetic between elements of
// different fields throws; there is deliberately no implicit coercion.
class FieldElement {
  public:
    FieldElement(FieldPtr field, uint32_t value) : field_(std::move(field)), value_(value) {}

    uint32_t value() const { return value_; }
    const FieldPtr& field() const { return field_; }

    bool is_zero() const { return value_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(int64_t e) const;

    bool operator==(const FieldElement& o) const {
        return field_->same_as(*o.field_) && value_ == o.value_;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

  private:
    const Field& compatible(const FieldElement& o) const;

    FieldPtr field_;
    uint32_t value_;
};

bool is_prime(uint64_t p);

// Irreducibility of a monic polynomial (coefficients low to high) over GF(p),
// by exhaustive trial division against all monic factors of degree <= deg/2.
bool is_irreducible_over_prime_field(uint64_t p, const std::vector<uint32_t>& poly);

}  // namespace lrc

#endif
