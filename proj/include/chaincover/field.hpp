#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace chaincover {

// Which of the two arithmetic levels of a Field an element lives at:
// Base = GF(q) with q = p^e, Ext = GF(q^t).  When t == 1 the extension is
// identified with the base field and every Level is normalized to Base.
enum class Level : std::uint8_t { Base, Ext };

class Field;
using FieldHandle = std::shared_ptr<const Field>;

// GF(q) together with its degree-t extension GF(q^t), q = p^e.
//
// Elements are passed around as integer codes:
//   * a base element with GF(p) coefficients (c_0,...,c_{e-1}) has code
//     sum c_i * p^i,
//   * an extension element with base coefficients (c_0,...,c_{t-1}) has code
//     sum code(c_i) * q^i.
// The extension uses the polynomial basis {1, x, ..., x^{t-1}}, so the code
// of an embedded base element equals its base code, and base codes can be
// used directly in extension arithmetic.
//
// Both moduli are the smallest monic irreducible polynomial of the right
// degree, "smallest" meaning smallest serialized code (coefficients compared
// from the highest degree down).  That makes the construction reproducible.
// Irreducibility is checked by trial division against every monic polynomial
// of degree <= deg/2.
//
// Multiplication uses exp/log tables w.r.t. a primitive element whenever the
// level has at most 2^16 elements; above that it falls back to polynomial
// arithmetic with extended-Euclid inversion.  Tables only accelerate, they
// never change results.
//
// A Field is immutable after construction and safely shareable across
// threads.  make() memoizes by (p, e, t), so equal specs share one instance.
class Field {
 public:
  static constexpr std::uint32_t kMaxFieldSize = 1u << 20;  // cap on q^t
  static constexpr std::uint32_t kMaxTableSize = 1u << 16;  // exp/log cutoff

  // Builds (or fetches the memoized) GF(p^e) plus its degree-t extension.
  // p must be prime, e >= 1, t >= 1, and p^(e*t) <= kMaxFieldSize.
  static FieldHandle make(std::uint32_t p, std::uint32_t e = 1,
                          std::uint32_t t = 1);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t base_degree() const { return e_; }
  std::uint32_t ext_degree() const { return t_; }
  std::uint32_t base_order() const { return q_; }  // q = p^e
  std::uint32_t ext_order() const { return qt_; }  // q^t
  std::uint32_t order(Level lv) const {
    return normalize(lv) == Level::Base ? q_ : qt_;
  }

  // Smallest primitive element of GF(q); its multiplicative order is q - 1.
  std::uint32_t gamma() const { return gamma_; }

  // Monic moduli as coefficient codes in ascending degree (length e+1 / t+1).
  const std::vector<std::uint32_t>& base_modulus() const { return base_mod_; }
  const std::vector<std::uint32_t>& ext_modulus() const { return ext_mod_; }

  bool same_spec(const Field& other) const {
    return p_ == other.p_ && e_ == other.e_ && t_ == other.t_;
  }

  Level normalize(Level lv) const { return t_ == 1 ? Level::Base : lv; }

  // Arithmetic on integer codes at the given level.  Codes must be < the
  // level's order; inv requires a nonzero argument.
  std::uint32_t add(Level lv, std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(Level lv, std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(Level lv, std::uint32_t a) const;
  std::uint32_t mul(Level lv, std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(Level lv, std::uint32_t a) const;
  std::uint32_t pow(Level lv, std::uint32_t a, std::uint64_t k) const;

  // Smallest d >= 1 with a^d == 1; requires a nonzero.
  std::uint32_t multiplicative_order(Level lv, std::uint32_t a) const;

  // GF(q) -> GF(q^t) along the basis element 1; numerically the identity.
  std::uint32_t embed(std::uint32_t base_code) const;
  // Base coefficients (c_0,...,c_{t-1}) of an extension element.
  std::vector<std::uint32_t> decompose(std::uint32_t ext_code) const;
  // Inverse of decompose; coeffs.size() must equal t.
  std::uint32_t compose(std::span<const std::uint32_t> coeffs) const;

  // Coefficient vector of a code: over GF(p) (length e) at Base, over GF(q)
  // (length t) at Ext.
  std::vector<std::uint32_t> coefficients(Level lv, std::uint32_t code) const;

  ~Field() = default;
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  Field(std::uint32_t p, std::uint32_t e, std::uint32_t t);

  void check_code(Level lv, std::uint32_t a) const;

  // Polynomial-path multiplication/inversion (used below the table cutoff
  // only while bootstrapping the tables themselves).
  std::uint32_t mul_poly(Level lv, std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv_poly(Level lv, std::uint32_t a) const;

  std::uint32_t find_primitive(Level lv) const;
  void build_tables(Level lv, std::uint32_t g, std::vector<std::uint32_t>* exp,
                    std::vector<std::uint32_t>* log) const;

  std::uint32_t p_, e_, t_;
  std::uint32_t q_, qt_;
  std::uint32_t gamma_ = 0;
  std::vector<std::uint32_t> base_mod_;  // prime codes, ascending degree
  std::vector<std::uint32_t> ext_mod_;   // base codes, ascending degree

  // exp/log tables; empty when the level runs on the polynomial path or on
  // direct modular arithmetic (prime base field).
  std::vector<std::uint32_t> base_exp_, base_log_;
  std::vector<std::uint32_t> ext_exp_, ext_log_;
};

// Convenience factory matching the (p, e, t) field description.
inline FieldHandle make_field(std::uint32_t p, std::uint32_t e = 1,
                              std::uint32_t t = 1) {
  return Field::make(p, e, t);
}

// A single field element: spec handle + level + code.  Mixing elements of
// different specs or levels throws std::invalid_argument.  The comparison
// order is the canonical total order used for tie-breaking everywhere:
// ascending integer code, i.e. coefficient vectors compared from the highest
// coefficient down, with 0 the smallest element.
class FieldElement {
 public:
  FieldElement(FieldHandle field, Level level, std::uint32_t code);

  const FieldHandle& field() const { return field_; }
  Level level() const { return level_; }
  std::uint32_t code() const { return code_; }
  bool is_zero() const { return code_ == 0; }
  std::vector<std::uint32_t> coefficients() const {
    return field_->coefficients(level_, code_);
  }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  bool operator<(const FieldElement& o) const;

 private:
  void check_compatible(const FieldElement& o) const;

  FieldHandle field_;
  Level level_;
  std::uint32_t code_;
};

inline FieldElement inv(const FieldElement& a) { return a.inverse(); }

// embed/decompose at element granularity.
FieldElement embed(const FieldElement& base_elem);
std::vector<FieldElement> decompose(const FieldElement& ext_elem);

}  // namespace chaincover
