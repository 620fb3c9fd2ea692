#include "chaincover/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace chaincover {
namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// p^k, throwing once the product passes `limit`.
std::uint32_t checked_pow(std::uint32_t base, std::uint32_t k,
                          std::uint64_t limit, const char* what) {
  std::uint64_t v = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    v *= base;
    if (v > limit)
      throw std::invalid_argument(std::string(what) +
                                  ": field size limit exceeded");
  }
  return static_cast<std::uint32_t>(v);
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> fs;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

// Digit expansion of `code` in base `radix`, `len` digits, ascending weight.
void to_digits(std::uint32_t code, std::uint32_t radix, std::uint32_t len,
               std::uint32_t* out) {
  for (std::uint32_t i = 0; i < len; ++i) {
    out[i] = code % radix;
    code /= radix;
  }
}

std::uint32_t from_digits(const std::uint32_t* digits, std::uint32_t radix,
                          std::uint32_t len) {
  std::uint32_t code = 0;
  for (std::uint32_t i = len; i-- > 0;) code = code * radix + digits[i];
  return code;
}

// --- dense polynomial helpers over an abstract coefficient field ----------
//
// Polynomials are coefficient-code vectors in ascending degree with no
// trailing zeros (the zero polynomial is the empty vector).  `Ops` supplies
// add/sub/mul/inv/neg on coefficient codes.

using Poly = std::vector<std::uint32_t>;

template <class Ops>
void poly_trim(Poly* f) {
  while (!f->empty() && f->back() == 0) f->pop_back();
}

template <class Ops>
Poly poly_mul(const Ops& K, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = K.add(c[i + j], K.mul(a[i], b[j]));
  }
  poly_trim<Ops>(&c);
  return c;
}

// Remainder of f modulo g (g nonzero).  Divides through by g's leading
// coefficient, so g need not be monic.
template <class Ops>
Poly poly_mod(const Ops& K, Poly f, const Poly& g) {
  const std::uint32_t lead_inv = K.inv(g.back());
  while (f.size() >= g.size()) {
    const std::uint32_t factor = K.mul(f.back(), lead_inv);
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i)
      f[shift + i] = K.sub(f[shift + i], K.mul(factor, g[i]));
    poly_trim<Ops>(&f);
  }
  return f;
}

// Quotient and remainder.
template <class Ops>
std::pair<Poly, Poly> poly_divmod(const Ops& K, Poly f, const Poly& g) {
  const std::uint32_t lead_inv = K.inv(g.back());
  Poly quot(f.size() >= g.size() ? f.size() - g.size() + 1 : 0, 0);
  while (f.size() >= g.size()) {
    const std::uint32_t factor = K.mul(f.back(), lead_inv);
    const std::size_t shift = f.size() - g.size();
    quot[shift] = factor;
    for (std::size_t i = 0; i < g.size(); ++i)
      f[shift + i] = K.sub(f[shift + i], K.mul(factor, g[i]));
    poly_trim<Ops>(&f);
  }
  poly_trim<Ops>(&quot);
  return {std::move(quot), std::move(f)};
}

// Inverse of a modulo m (m irreducible, a nonzero mod m), extended Euclid.
template <class Ops>
Poly poly_inv_mod(const Ops& K, Poly a, const Poly& m) {
  Poly r0 = m, r1 = std::move(a);
  Poly t0 = {}, t1 = {1};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(K, r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly qt1 = poly_mul(K, q, t1);
    Poly next(std::max(t0.size(), qt1.size()), 0);
    for (std::size_t i = 0; i < next.size(); ++i) {
      std::uint32_t lhs = i < t0.size() ? t0[i] : 0;
      std::uint32_t rhs = i < qt1.size() ? qt1[i] : 0;
      next[i] = K.sub(lhs, rhs);
    }
    poly_trim<Ops>(&next);
    t0 = std::move(t1);
    t1 = std::move(next);
  }
  // r0 = gcd(a, m); irreducible m and a != 0 make it a nonzero constant.
  if (r0.size() != 1)
    throw std::runtime_error("field: inversion against reducible modulus");
  const std::uint32_t scale = K.inv(r0[0]);
  for (auto& c : t0) c = K.mul(c, scale);
  return t0;
}

// True iff monic f (deg >= 1) has no monic divisor of degree 1..deg(f)/2.
template <class Ops>
bool poly_irreducible(const Ops& K, const Poly& f, std::uint32_t radix) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= radix;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % radix);
        c /= radix;
      }
      g[d] = 1;
      if (poly_mod(K, f, g).empty()) return false;
    }
  }
  return true;
}

// Smallest (by code, coefficients read highest degree first) monic
// irreducible polynomial of degree d, as ascending coefficient codes.
template <class Ops>
Poly smallest_irreducible(const Ops& K, std::uint32_t radix, std::uint32_t d) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < d; ++i) count *= radix;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f(d + 1, 0);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < d; ++i) {
      f[i] = static_cast<std::uint32_t>(c % radix);
      c /= radix;
    }
    f[d] = 1;
    if (poly_irreducible(K, f, radix)) return f;
  }
  throw std::runtime_error("field: no irreducible polynomial found");
}

}  // namespace

// Coefficient ops over GF(p) with plain modular arithmetic.
struct PrimeOps {
  std::uint32_t p;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    return (a + b) % p;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return (a + p - b) % p;
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
  }
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw std::invalid_argument("field: inverse of zero");
    // extended Euclid on integers
    std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::int64_t r2 = r0 - q * r1;
      std::int64_t s2 = s0 - q * s1;
      r0 = r1; r1 = r2; s0 = s1; s1 = s2;
    }
    return static_cast<std::uint32_t>(((s0 % p) + p) % p);
  }
};

// Coefficient ops over GF(q) routed through the owning Field's base level.
struct BaseOps {
  const Field* f;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    return f->add(Level::Base, a, b);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return f->sub(Level::Base, a, b);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return f->mul(Level::Base, a, b);
  }
  std::uint32_t inv(std::uint32_t a) const { return f->inv(Level::Base, a); }
};

FieldHandle Field::make(std::uint32_t p, std::uint32_t e, std::uint32_t t) {
  if (!is_prime(p))
    throw std::invalid_argument("make_field: p must be prime (got " +
                                std::to_string(p) + ")");
  if (e < 1 || t < 1)
    throw std::invalid_argument("make_field: degrees must be >= 1");
  checked_pow(p, e * t, kMaxFieldSize, "make_field");

  static std::mutex mu;
  static std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>,
                  FieldHandle>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(p, e, t);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  FieldHandle handle(new Field(p, e, t));
  cache.emplace(key, handle);
  return handle;
}

Field::Field(std::uint32_t p, std::uint32_t e, std::uint32_t t)
    : p_(p), e_(e), t_(t) {
  q_ = checked_pow(p, e, kMaxFieldSize, "make_field");
  qt_ = checked_pow(q_, t, kMaxFieldSize, "make_field");

  PrimeOps prime{p_};
  base_mod_ = e_ == 1 ? Poly{0, 1} : smallest_irreducible(prime, p_, e_);

  if (e_ > 1 && q_ <= kMaxTableSize) {
    std::uint32_t g = find_primitive(Level::Base);
    build_tables(Level::Base, g, &base_exp_, &base_log_);
    gamma_ = g;  // the scan goes by ascending code, so g is already smallest
  } else {
    gamma_ = find_primitive(Level::Base);
  }

  BaseOps base{this};
  ext_mod_ = t_ == 1 ? Poly{0, 1} : smallest_irreducible(base, q_, t_);

  if (t_ > 1 && qt_ <= kMaxTableSize) {
    std::uint32_t g = find_primitive(Level::Ext);
    build_tables(Level::Ext, g, &ext_exp_, &ext_log_);
  }
}

void Field::check_code(Level lv, std::uint32_t a) const {
  if (a >= order(lv))
    throw std::invalid_argument("field: element code " + std::to_string(a) +
                                " out of range for order " +
                                std::to_string(order(lv)));
}

std::uint32_t Field::add(Level lv, std::uint32_t a, std::uint32_t b) const {
  lv = normalize(lv);
  check_code(lv, a);
  check_code(lv, b);
  if (p_ == 2) return a ^ b;  // characteristic 2: digitwise sum is xor
  if (lv == Level::Base) {
    if (e_ == 1) return (a + b) % p_;
    std::uint32_t da[32], db[32];
    to_digits(a, p_, e_, da);
    to_digits(b, p_, e_, db);
    for (std::uint32_t i = 0; i < e_; ++i) da[i] = (da[i] + db[i]) % p_;
    return from_digits(da, p_, e_);
  }
  std::uint32_t da[32], db[32];
  to_digits(a, q_, t_, da);
  to_digits(b, q_, t_, db);
  for (std::uint32_t i = 0; i < t_; ++i) da[i] = add(Level::Base, da[i], db[i]);
  return from_digits(da, q_, t_);
}

std::uint32_t Field::neg(Level lv, std::uint32_t a) const {
  lv = normalize(lv);
  check_code(lv, a);
  if (p_ == 2) return a;
  if (lv == Level::Base) {
    if (e_ == 1) return a == 0 ? 0 : p_ - a;
    std::uint32_t da[32];
    to_digits(a, p_, e_, da);
    for (std::uint32_t i = 0; i < e_; ++i) da[i] = da[i] == 0 ? 0 : p_ - da[i];
    return from_digits(da, p_, e_);
  }
  std::uint32_t da[32];
  to_digits(a, q_, t_, da);
  for (std::uint32_t i = 0; i < t_; ++i) da[i] = neg(Level::Base, da[i]);
  return from_digits(da, q_, t_);
}

std::uint32_t Field::sub(Level lv, std::uint32_t a, std::uint32_t b) const {
  if (p_ == 2) {
    lv = normalize(lv);
    check_code(lv, a);
    check_code(lv, b);
    return a ^ b;
  }
  return add(lv, a, neg(lv, b));
}

std::uint32_t Field::mul_poly(Level lv, std::uint32_t a,
                              std::uint32_t b) const {
  if (lv == Level::Base) {
    PrimeOps K{p_};
    std::uint32_t da[32], db[32];
    to_digits(a, p_, e_, da);
    to_digits(b, p_, e_, db);
    Poly fa(da, da + e_), fb(db, db + e_);
    poly_trim<PrimeOps>(&fa);
    poly_trim<PrimeOps>(&fb);
    Poly prod = poly_mod(K, poly_mul(K, fa, fb), base_mod_);
    prod.resize(e_, 0);
    return from_digits(prod.data(), p_, e_);
  }
  BaseOps K{this};
  std::uint32_t da[32], db[32];
  to_digits(a, q_, t_, da);
  to_digits(b, q_, t_, db);
  Poly fa(da, da + t_), fb(db, db + t_);
  poly_trim<BaseOps>(&fa);
  poly_trim<BaseOps>(&fb);
  Poly prod = poly_mod(K, poly_mul(K, fa, fb), ext_mod_);
  prod.resize(t_, 0);
  return from_digits(prod.data(), q_, t_);
}

std::uint32_t Field::inv_poly(Level lv, std::uint32_t a) const {
  if (lv == Level::Base) {
    PrimeOps K{p_};
    std::uint32_t da[32];
    to_digits(a, p_, e_, da);
    Poly fa(da, da + e_);
    poly_trim<PrimeOps>(&fa);
    Poly r = poly_inv_mod(K, fa, base_mod_);
    r.resize(e_, 0);
    return from_digits(r.data(), p_, e_);
  }
  BaseOps K{this};
  std::uint32_t da[32];
  to_digits(a, q_, t_, da);
  Poly fa(da, da + t_);
  poly_trim<BaseOps>(&fa);
  Poly r = poly_inv_mod(K, fa, ext_mod_);
  r.resize(t_, 0);
  return from_digits(r.data(), q_, t_);
}

std::uint32_t Field::mul(Level lv, std::uint32_t a, std::uint32_t b) const {
  lv = normalize(lv);
  check_code(lv, a);
  check_code(lv, b);
  if (a == 0 || b == 0) return 0;
  if (lv == Level::Base) {
    if (e_ == 1)
      return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b %
                                        p_);
    if (!base_log_.empty()) {
      std::uint64_t s = base_log_[a] + base_log_[b];
      return base_exp_[s % (q_ - 1)];
    }
    return mul_poly(Level::Base, a, b);
  }
  if (!ext_log_.empty()) {
    std::uint64_t s = ext_log_[a] + ext_log_[b];
    return ext_exp_[s % (qt_ - 1)];
  }
  return mul_poly(Level::Ext, a, b);
}

std::uint32_t Field::inv(Level lv, std::uint32_t a) const {
  lv = normalize(lv);
  check_code(lv, a);
  if (a == 0) throw std::invalid_argument("field: inverse of zero");
  if (lv == Level::Base) {
    if (e_ == 1) return PrimeOps{p_}.inv(a);
    if (!base_log_.empty())
      return base_exp_[(q_ - 1 - base_log_[a]) % (q_ - 1)];
    return inv_poly(Level::Base, a);
  }
  if (!ext_log_.empty()) return ext_exp_[(qt_ - 1 - ext_log_[a]) % (qt_ - 1)];
  return inv_poly(Level::Ext, a);
}

std::uint32_t Field::pow(Level lv, std::uint32_t a, std::uint64_t k) const {
  lv = normalize(lv);
  check_code(lv, a);
  std::uint32_t result = 1;
  std::uint32_t base = a;
  while (k > 0) {
    if (k & 1) result = mul(lv, result, base);
    base = mul(lv, base, base);
    k >>= 1;
  }
  return result;
}

std::uint32_t Field::multiplicative_order(Level lv, std::uint32_t a) const {
  lv = normalize(lv);
  check_code(lv, a);
  if (a == 0) throw std::invalid_argument("field: order of zero");
  std::uint32_t x = a;
  std::uint32_t d = 1;
  while (x != 1) {
    x = mul(lv, x, a);
    ++d;
    if (d > order(lv))
      throw std::runtime_error("field: runaway multiplicative order");
  }
  return d;
}

std::uint32_t Field::find_primitive(Level lv) const {
  const std::uint32_t size = order(lv);
  if (size == 2) return 1;
  const std::uint32_t group = size - 1;
  const std::vector<std::uint32_t> factors = prime_factors(group);
  for (std::uint32_t cand = 1; cand < size; ++cand) {
    bool primitive = true;
    for (std::uint32_t f : factors) {
      if (pow(lv, cand, group / f) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return cand;
  }
  throw std::runtime_error("field: no primitive element found");
}

void Field::build_tables(Level lv, std::uint32_t g,
                         std::vector<std::uint32_t>* exp,
                         std::vector<std::uint32_t>* log) const {
  const std::uint32_t size = order(lv);
  exp->assign(size - 1, 0);
  log->assign(size, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i + 1 < size; ++i) {
    (*exp)[i] = x;
    (*log)[x] = i;
    x = lv == Level::Base ? mul_poly(Level::Base, x, g)
                          : mul_poly(Level::Ext, x, g);
    // e_ == 1 base fields never build tables, so mul_poly is safe here.
  }
  if (x != 1) throw std::runtime_error("field: primitive element check failed");
}

std::uint32_t Field::embed(std::uint32_t base_code) const {
  check_code(Level::Base, base_code);
  return base_code;  // constant polynomial along basis element 1
}

std::vector<std::uint32_t> Field::decompose(std::uint32_t ext_code) const {
  check_code(Level::Ext, ext_code);
  std::vector<std::uint32_t> coeffs(t_);
  to_digits(ext_code, q_, t_, coeffs.data());
  return coeffs;
}

std::uint32_t Field::compose(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != t_)
    throw std::invalid_argument("field: compose expects " +
                                std::to_string(t_) + " coefficients");
  for (std::uint32_t c : coeffs) check_code(Level::Base, c);
  return from_digits(coeffs.data(), q_, t_);
}

std::vector<std::uint32_t> Field::coefficients(Level lv,
                                               std::uint32_t code) const {
  lv = normalize(lv);
  check_code(lv, code);
  if (lv == Level::Base) {
    std::vector<std::uint32_t> coeffs(e_);
    to_digits(code, p_, e_, coeffs.data());
    return coeffs;
  }
  return decompose(code);
}

// --- FieldElement ----------------------------------------------------------

FieldElement::FieldElement(FieldHandle field, Level level, std::uint32_t code)
    : field_(std::move(field)), level_(Level::Base), code_(code) {
  if (!field_) throw std::invalid_argument("FieldElement: null field");
  level_ = field_->normalize(level);
  if (code_ >= field_->order(level_))
    throw std::invalid_argument("FieldElement: code out of range");
}

void FieldElement::check_compatible(const FieldElement& o) const {
  if (!field_->same_spec(*o.field_) || level_ != o.level_)
    throw std::invalid_argument(
        "FieldElement: operands from mismatched field specs");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_compatible(o);
  return {field_, level_, field_->add(level_, code_, o.code_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_compatible(o);
  return {field_, level_, field_->sub(level_, code_, o.code_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_compatible(o);
  return {field_, level_, field_->mul(level_, code_, o.code_)};
}

FieldElement FieldElement::operator-() const {
  return {field_, level_, field_->neg(level_, code_)};
}

FieldElement FieldElement::inverse() const {
  return {field_, level_, field_->inv(level_, code_)};
}

bool FieldElement::operator==(const FieldElement& o) const {
  return field_->same_spec(*o.field_) && level_ == o.level_ &&
         code_ == o.code_;
}

bool FieldElement::operator<(const FieldElement& o) const {
  check_compatible(o);
  return code_ < o.code_;
}

FieldElement embed(const FieldElement& base_elem) {
  if (base_elem.level() != Level::Base)
    throw std::invalid_argument("embed: expects a base-field element");
  return {base_elem.field(), Level::Ext,
          base_elem.field()->embed(base_elem.code())};
}

std::vector<FieldElement> decompose(const FieldElement& ext_elem) {
  const FieldHandle& f = ext_elem.field();
  std::vector<FieldElement> out;
  out.reserve(f->ext_degree());
  for (std::uint32_t c : f->decompose(ext_elem.code()))
    out.emplace_back(f, Level::Base, c);
  return out;
}

}  // namespace chaincover
