#include "idealfact/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace idealfact {

namespace {

using Dense = std::vector<std::uint32_t>;

void trim(Dense& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo the monic polynomial m over F_p.
Dense rem_mod_p(Dense f, std::span<const std::uint32_t> m, std::uint32_t p) {
  trim(f);
  const std::size_t dm = m.size() - 1;
  while (f.size() > dm) {
    const std::uint64_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t sub = lead * m[i] % p;
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
    }
    trim(f);
  }
  return f;
}

Dense mul_mod(const Dense& a, const Dense& b, std::span<const std::uint32_t> m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Dense r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return rem_mod_p(std::move(r), m, p);
}

std::uint64_t int_pow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible_mod_p(std::uint32_t p, std::span<const std::uint32_t> monic) {
  const std::size_t deg = monic.size() - 1;
  if (monic.empty() || monic.back() != 1) throw std::invalid_argument("modulus must be monic");
  if (deg == 0) return false;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    const std::uint64_t count = int_pow(p, static_cast<unsigned>(d));
    Dense div(d + 1, 0);
    div[d] = 1;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        div[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      Dense f(monic.begin(), monic.end());
      if (rem_mod_p(std::move(f), div, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, unsigned degree) {
  if (degree == 0) throw std::invalid_argument("irreducible polynomial degree must be positive");
  const std::uint64_t count = int_pow(p, degree);
  // Candidates ordered by the integer sum c_i p^i of their non-leading
  // coefficients.
  for (std::uint64_t code = 0; code < count; ++code) {
    Dense g(degree + 1, 0);
    g[degree] = 1;
    std::uint64_t c = code;
    for (unsigned i = 0; i < degree; ++i) {
      g[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    if (is_irreducible_mod_p(p, g)) return g;
  }
  throw std::logic_error("no irreducible polynomial found");
}

FiniteField::FiniteField(std::uint32_t p, unsigned l, std::vector<std::uint32_t> modulus)
    : p_(p), l_(l), modulus_(std::move(modulus)) {
  if (!is_prime_number(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (l == 0) throw std::invalid_argument("field extension degree must be at least 1");
  const std::uint64_t q = int_pow(p, l);
  if (q > kMaxOrder) throw std::invalid_argument("field order exceeds 2^16");
  q_ = static_cast<std::uint32_t>(q);
  pow_p_l_minus_1_ = int_pow(p, l - 1);
  if (l > 1) {
    if (modulus_.size() != l + 1 || modulus_.back() != 1)
      throw std::invalid_argument("field modulus must be monic of degree " + std::to_string(l));
    for (auto c : modulus_)
      if (c >= p) throw std::invalid_argument("field modulus coefficient out of range");
    if (!is_irreducible_mod_p(p, modulus_)) throw std::invalid_argument("field modulus is reducible");
    build_log_tables();
  } else {
    modulus_.clear();
  }
}

FieldPtr FiniteField::prime(std::uint32_t p) {
  return FieldPtr(new FiniteField(p, 1, {}));
}

FieldPtr FiniteField::extension(std::uint32_t p, unsigned l) {
  if (l == 1) return prime(p);
  if (!is_prime_number(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (int_pow(p, l) > kMaxOrder) throw std::invalid_argument("field order exceeds 2^16");
  return FieldPtr(new FiniteField(p, l, smallest_irreducible(p, l)));
}

FieldPtr FiniteField::extension(std::uint32_t p, unsigned l, std::vector<std::uint32_t> modulus) {
  if (l == 1) return prime(p);
  return FieldPtr(new FiniteField(p, l, std::move(modulus)));
}

void FiniteField::build_log_tables() {
  const std::uint32_t n = q_ - 1;
  // Prime factors of the multiplicative group order.
  std::vector<std::uint32_t> primes;
  {
    std::uint32_t m = n;
    for (std::uint32_t d = 2; d * d <= m; ++d) {
      if (m % d == 0) {
        primes.push_back(d);
        while (m % d == 0) m /= d;
      }
    }
    if (m > 1) primes.push_back(m);
  }
  auto slow_pow = [&](const Dense& base, std::uint64_t e) {
    Dense r{1}, b = base;
    while (e) {
      if (e & 1) r = mul_mod(r, b, modulus_, p_);
      b = mul_mod(b, b, modulus_, p_);
      e >>= 1;
    }
    return r;
  };
  Dense gen;
  for (std::uint32_t code = 2; code < q_; ++code) {
    Dense cand = digits(code);
    trim(cand);
    bool primitive = true;
    for (auto r : primes) {
      Dense t = slow_pow(cand, n / r);
      if (t.size() == 1 && t[0] == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = std::move(cand);
      break;
    }
  }
  if (gen.empty()) throw std::logic_error("no primitive element found");
  exp_.assign(n, 0);
  log_.assign(q_, 0);
  Dense cur{1};
  for (std::uint32_t i = 0; i < n; ++i) {
    Dense padded = cur;
    padded.resize(l_, 0);
    const Coeff code = from_digits(padded);
    exp_[i] = code;
    log_[code] = i;
    cur = mul_mod(cur, gen, modulus_, p_);
  }
}

Coeff FiniteField::add(Coeff a, Coeff b) const {
  if (l_ == 1) {
    const Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (p_ == 2) return a ^ b;
  Coeff r = 0, scale = 1;
  for (unsigned i = 0; i < l_; ++i) {
    const Coeff da = a % p_, db = b % p_;
    Coeff s = da + db;
    if (s >= p_) s -= p_;
    r += s * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

Coeff FiniteField::neg(Coeff a) const {
  if (l_ == 1) return a == 0 ? 0 : p_ - a;
  if (p_ == 2) return a;
  Coeff r = 0, scale = 1;
  for (unsigned i = 0; i < l_; ++i) {
    const Coeff d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * scale;
    scale *= p_;
    a /= p_;
  }
  return r;
}

Coeff FiniteField::sub(Coeff a, Coeff b) const {
  if (l_ == 1) return a >= b ? a - b : a + p_ - b;
  return add(a, neg(b));
}

Coeff FiniteField::mul(Coeff a, Coeff b) const {
  if (l_ == 1) return static_cast<Coeff>(std::uint64_t{a} * b % p_);
  if (a == 0 || b == 0) return 0;
  std::uint32_t s = log_[a] + log_[b];
  if (s >= q_ - 1) s -= q_ - 1;
  return exp_[s];
}

Coeff FiniteField::inv(Coeff a) const {
  if (a == 0) throw std::domain_error("division by zero in " + name());
  if (l_ == 1) return static_cast<Coeff>(pow_mod(a, p_ - 2, p_));
  const std::uint32_t n = q_ - 1;
  return exp_[(n - log_[a]) % n];
}

Coeff FiniteField::pow(Coeff a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (l_ == 1) return static_cast<Coeff>(pow_mod(a, e, p_));
  const std::uint64_t n = q_ - 1;
  return exp_[static_cast<std::size_t>((std::uint64_t{log_[a]} * (e % n)) % n)];
}

Coeff FiniteField::from_integer(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Coeff>(r);
}

Coeff FiniteField::generator() const {
  if (l_ == 1) throw std::domain_error(name() + " is a prime field and has no named generator");
  return p_;
}

std::vector<std::uint32_t> FiniteField::digits(Coeff a) const {
  std::vector<std::uint32_t> d(l_);
  for (unsigned i = 0; i < l_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

Coeff FiniteField::from_digits(std::span<const std::uint32_t> d) const {
  Coeff r = 0, scale = 1;
  for (std::size_t i = 0; i < d.size() && i < l_; ++i) {
    r += (d[i] % p_) * scale;
    scale *= p_;
  }
  return r;
}

std::string FiniteField::name() const {
  if (l_ == 1) return "F_" + std::to_string(p_);
  return "F_" + std::to_string(p_) + "^" + std::to_string(l_);
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  return a == b || (a && b && *a == *b);
}

FieldElement::FieldElement(FieldPtr field, Coeff value) : field_(std::move(field)), value_(value) {
  if (!field_) throw std::invalid_argument("field element without a field");
  if (value_ >= field_->order()) throw std::invalid_argument("field element code out of range");
}

FieldElement FieldElement::from_integer(FieldPtr field, std::int64_t n) {
  const Coeff v = field->from_integer(n);
  return FieldElement(std::move(field), v);
}

const FiniteField& FieldElement::checked(const FieldElement& b) const {
  if (!same_field(field_, b.field_))
    throw std::invalid_argument("mismatched fields: " + field_->name() + " vs " + b.field_->name());
  return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& b) const { return {field_, checked(b).add(value_, b.value_)}; }
FieldElement FieldElement::operator-(const FieldElement& b) const { return {field_, checked(b).sub(value_, b.value_)}; }
FieldElement FieldElement::operator*(const FieldElement& b) const { return {field_, checked(b).mul(value_, b.value_)}; }
FieldElement FieldElement::operator/(const FieldElement& b) const { return {field_, checked(b).div(value_, b.value_)}; }
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }
FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }

bool FieldElement::operator==(const FieldElement& b) const {
  return same_field(field_, b.field_) && value_ == b.value_;
}

}  // namespace idealfact
