#include "tiercode/gf.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "tiercode/linalg.hpp"

namespace tiercode {

namespace {

// Moduli here are field orders, which fit in 32 bits.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return (a % m) * (b % m) % m; }

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

// Remainder of a modulo the monic polynomial d, both low-to-high.
BaseVector poly_mod(BaseVector a, std::span<const Digit> d, unsigned p) {
  const std::size_t dd = d.size() - 1;
  while (a.size() > dd) {
    const unsigned lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - dd;
      for (std::size_t t = 0; t <= dd; ++t)
        a[shift + t] = static_cast<Digit>((a[shift + t] + (p - lead) * d[t]) % p);
    }
    a.pop_back();
  }
  return a;
}

}  // namespace

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d != 0) continue;
    out.push_back(d);
    while (v % d == 0) v /= d;
  }
  if (v > 1) out.push_back(v);
  return out;
}

bool is_irreducible(std::span<const Digit> modulus, unsigned p) {
  const std::size_t n = modulus.size() - 1;
  if (n == 0) return false;
  if (n == 1) return true;
  // Trial division by every monic polynomial of degree 1..n/2.
  for (std::size_t deg = 1; deg <= n / 2; ++deg) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      BaseVector d(deg + 1, 0);
      std::uint64_t t = idx;
      for (std::size_t i = 0; i < deg; ++i) {
        d[i] = static_cast<Digit>(t % p);
        t /= p;
      }
      d[deg] = 1;
      auto r = poly_mod(BaseVector(modulus.begin(), modulus.end()), d, p);
      if (linalg::is_zero(r)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- FieldElement

FieldElement::FieldElement(const FieldContext& ctx, std::uint32_t packed) : ctx_(&ctx), value_(packed) {
  if (packed >= ctx.order()) throw FieldError("packed value outside field");
}

const FieldContext& FieldElement::context() const {
  if (!ctx_) throw FieldError("field element has no context");
  return *ctx_;
}

BaseVector FieldElement::coeffs() const {
  const auto& c = context();
  BaseVector out(c.degree());
  std::uint32_t v = value_;
  for (auto& d : out) {
    d = static_cast<Digit>(v % c.characteristic());
    v /= c.characteristic();
  }
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) { return *this = context().add(*this, rhs); }
FieldElement& FieldElement::operator-=(const FieldElement& rhs) { return *this = context().sub(*this, rhs); }
FieldElement& FieldElement::operator*=(const FieldElement& rhs) { return *this = context().mul(*this, rhs); }
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  return a.context().mul(a, a.context().inv(b));
}
FieldElement FieldElement::operator-() const { return context().neg(*this); }

// ---------------------------------------------------------------- FieldContext

std::optional<BaseVector> FieldContext::builtin_modulus(unsigned p, unsigned n) {
  if (p == 2 && n == 3) return BaseVector{1, 1, 0, 1};
  if (p == 3 && n == 6) return BaseVector{2, 1, 0, 0, 0, 0, 1};
  return std::nullopt;
}

std::shared_ptr<const FieldContext> FieldContext::builtin(unsigned p, unsigned n) {
  auto m = builtin_modulus(p, n);
  if (!m) throw FieldError("no built-in modulus for GF(" + std::to_string(p) + "^" + std::to_string(n) + ")");
  return create(p, *m);
}

FieldContext::FieldContext(unsigned p, BaseVector modulus) : p_(p), modulus_(std::move(modulus)) {
  n_ = static_cast<unsigned>(modulus_.size() - 1);
  pow_p_.assign(n_ + 1, 1);
  for (unsigned i = 1; i <= n_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;
  order_ = static_cast<std::uint32_t>(pow_p_[n_]);
}

std::shared_ptr<const FieldContext> FieldContext::create(unsigned p, BaseVector modulus,
                                                         std::optional<BaseMatrix> representation_basis) {
  if (!is_prime(p) || p > 255) throw FieldError("characteristic must be a prime below 256");
  if (modulus.size() < 2) throw FieldError("modulus must have degree >= 1");
  if (modulus.back() != 1) throw FieldError("modulus must be monic");
  for (auto c : modulus)
    if (c >= p) throw FieldError("modulus coefficient out of range");
  std::uint64_t order = 1;
  for (std::size_t i = 1; i < modulus.size(); ++i) {
    order *= p;
    if (order > kMaxOrder) throw FieldError("field order exceeds 2^30");
  }
  if (!is_irreducible(modulus, p)) throw FieldError("modulus is not irreducible");

  std::shared_ptr<FieldContext> ctx(new FieldContext(p, std::move(modulus)));
  ctx->group_order_primes_ = prime_factors(ctx->order_ - 1);

  // gamma must have order p^n - 1.
  const std::uint32_t gamma = ctx->n_ == 1 ? static_cast<std::uint32_t>((p - ctx->modulus_[0]) % p)
                                           : static_cast<std::uint32_t>(p);
  if (gamma == 0) throw FieldError("modulus root is zero");
  for (auto r : ctx->group_order_primes_)
    if (ctx->pow_packed_poly(gamma, (ctx->order_ - 1) / r) == 1)
      throw FieldError("modulus is not primitive: root has order below p^n - 1");

  if (ctx->order_ <= kTableLimit) ctx->build_tables();
  ctx->build_subfields();

  if (representation_basis) {
    if (representation_basis->size() != ctx->n_) throw FieldError("representation basis needs n elements");
    for (const auto& row : *representation_basis)
      if (row.size() != ctx->n_) throw FieldError("representation basis element has wrong length");
    auto inv = linalg::inverse(*representation_basis, p);
    if (!inv) throw FieldError("representation basis is not linearly independent");
    ctx->basis_ = std::move(representation_basis);
    ctx->basis_inverse_ = std::move(inv);
  }
  return ctx;
}

void FieldContext::build_tables() {
  exp_.resize(order_ - 1);
  log_.assign(order_, 0);
  const std::uint32_t gamma = primitive().packed();
  std::uint32_t cur = 1;
  for (std::uint32_t i = 0; i + 1 < order_; ++i) {
    exp_[i] = cur;
    log_[cur] = i;
    cur = mul_packed_poly(cur, gamma);
  }
}

void FieldContext::build_subfields() {
  for (unsigned d = 1; d <= n_; ++d) {
    if (n_ % d != 0) continue;
    const std::uint64_t step = (order_ - 1) / (pow_p_[d] - 1);
    const std::uint32_t beta = pow_packed_poly(primitive().packed(), step);
    BaseMatrix basis;
    std::uint32_t cur = 1;
    for (unsigned i = 0; i < d; ++i) {
      basis.push_back(unpack(cur));
      cur = mul_packed_poly(cur, beta);
    }
    subfields_.emplace_back(d, std::move(basis));
  }
}

BaseVector FieldContext::unpack(std::uint32_t v) const {
  BaseVector out(n_);
  for (auto& d : out) {
    d = static_cast<Digit>(v % p_);
    v /= p_;
  }
  return out;
}

std::uint32_t FieldContext::pack(std::span<const Digit> coeffs) const {
  std::uint32_t v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) v = v * p_ + coeffs[i];
  return v;
}

std::uint32_t FieldContext::add_packed(std::uint32_t a, std::uint32_t b) const {
  if (p_ == 2) return a ^ b;
  std::uint32_t out = 0;
  for (unsigned i = 0; i < n_; ++i) {
    const std::uint32_t d = (a % p_ + b % p_) % p_;
    out += static_cast<std::uint32_t>(d * pow_p_[i]);
    a /= p_;
    b /= p_;
  }
  return out;
}

std::uint32_t FieldContext::mul_packed_poly(std::uint32_t a, std::uint32_t b) const {
  const auto x = unpack(a);
  const auto y = unpack(b);
  BaseVector prod(2 * n_ - 1, 0);
  for (unsigned i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (unsigned j = 0; j < n_; ++j)
      prod[i + j] = static_cast<Digit>((prod[i + j] + x[i] * y[j]) % p_);
  }
  return pack(poly_mod(std::move(prod), modulus_, p_));
}

std::uint32_t FieldContext::pow_packed_poly(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1;
  while (e) {
    if (e & 1) r = mul_packed_poly(r, a);
    a = mul_packed_poly(a, a);
    e >>= 1;
  }
  return r;
}

void FieldContext::check_same(const FieldElement& a) const {
  if (!a.has_context() || &a.context() != this) throw FieldError("field context mismatch");
}

FieldElement FieldContext::primitive() const {
  if (n_ == 1) return {*this, static_cast<std::uint32_t>((p_ - modulus_[0]) % p_)};
  return {*this, p_};
}

FieldElement FieldContext::gamma_pow(std::int64_t k) const {
  const auto m = static_cast<std::int64_t>(order_ - 1);
  const auto e = static_cast<std::uint64_t>(((k % m) + m) % m);
  return pow(primitive(), e);
}

FieldElement FieldContext::constant(unsigned c) const {
  if (c >= p_) throw FieldError("constant outside prime field");
  return {*this, c};
}

FieldElement FieldContext::from_coeffs(std::span<const Digit> coeffs) const {
  if (coeffs.size() != n_) throw FieldError("coefficient vector has wrong length");
  for (auto c : coeffs)
    if (c >= p_) throw FieldError("coefficient out of range");
  return {*this, pack(coeffs)};
}

FieldElement FieldContext::from_packed(std::uint32_t packed) const { return {*this, packed}; }

FieldElement FieldContext::add(const FieldElement& a, const FieldElement& b) const {
  check_same(a);
  check_same(b);
  return {*this, add_packed(a.packed(), b.packed())};
}

FieldElement FieldContext::neg(const FieldElement& a) const {
  check_same(a);
  auto c = a.coeffs();
  for (auto& d : c) d = static_cast<Digit>((p_ - d) % p_);
  return {*this, pack(c)};
}

FieldElement FieldContext::sub(const FieldElement& a, const FieldElement& b) const { return add(a, neg(b)); }

FieldElement FieldContext::mul(const FieldElement& a, const FieldElement& b) const {
  check_same(a);
  check_same(b);
  if (a.is_zero() || b.is_zero()) return zero();
  if (has_tables()) {
    const std::uint64_t e = (std::uint64_t{log_[a.packed()]} + log_[b.packed()]) % (order_ - 1);
    return {*this, exp_[e]};
  }
  return {*this, mul_packed_poly(a.packed(), b.packed())};
}

FieldElement FieldContext::mul_polynomial(const FieldElement& a, const FieldElement& b) const {
  check_same(a);
  check_same(b);
  return {*this, mul_packed_poly(a.packed(), b.packed())};
}

FieldElement FieldContext::pow(const FieldElement& a, std::uint64_t e) const {
  check_same(a);
  if (a.is_zero()) return e == 0 ? one() : zero();
  if (has_tables()) {
    const std::uint64_t m = order_ - 1;
    const std::uint64_t l = mulmod(log_[a.packed()], e % m, m);
    return {*this, exp_[l]};
  }
  return {*this, pow_packed_poly(a.packed(), e % (order_ - 1))};
}

FieldElement FieldContext::inv(const FieldElement& a) const {
  check_same(a);
  if (a.is_zero()) throw std::domain_error("inverse of zero field element");
  return pow(a, order_ - 2);
}

std::uint32_t FieldContext::log(const FieldElement& a) const {
  check_same(a);
  if (a.is_zero()) throw std::domain_error("logarithm of zero");
  if (has_tables()) return log_[a.packed()];
  const std::uint32_t g = primitive().packed();
  std::uint32_t cur = 1;
  for (std::uint32_t i = 0; i + 1 < order_; ++i) {
    if (cur == a.packed()) return i;
    cur = mul_packed_poly(cur, g);
  }
  throw std::logic_error("discrete log not found");
}

FieldElement FieldContext::frobenius(const FieldElement& a, std::uint64_t i, std::uint64_t q) const {
  check_same(a);
  unsigned s = 0;
  std::uint64_t t = q;
  while (t > 1 && t % p_ == 0) {
    t /= p_;
    ++s;
  }
  if (t != 1 || s == 0 || n_ % s != 0) throw FieldError("q is not the size of a subfield");
  if (a.is_zero()) return a;
  // q^i mod (p^n - 1) keeps the exponent small.
  return pow(a, powmod(q, i, order_ - 1));
}

bool FieldContext::is_in_subfield(const FieldElement& a, unsigned d, std::uint64_t q) const {
  check_same(a);
  unsigned s = 0;
  std::uint64_t t = q;
  while (t > 1 && t % p_ == 0) {
    t /= p_;
    ++s;
  }
  if (t != 1 || s == 0 || d == 0 || n_ % (s * d) != 0) throw FieldError("requested subfield does not exist");
  return frobenius(a, d, q) == a;
}

std::uint32_t FieldContext::element_order(const FieldElement& a) const {
  check_same(a);
  if (a.is_zero()) throw std::domain_error("order of zero element");
  std::uint64_t ord = order_ - 1;
  for (auto r : group_order_primes_) {
    while (ord % r == 0 && pow(a, ord / r) == one()) ord /= r;
  }
  return static_cast<std::uint32_t>(ord);
}

BaseVector FieldContext::to_vector(const FieldElement& a) const {
  check_same(a);
  auto c = a.coeffs();
  if (!basis_inverse_) return c;
  BaseVector out(n_, 0);
  for (unsigned i = 0; i < n_; ++i) linalg::axpy(out, c[i], (*basis_inverse_)[i], p_);
  return out;
}

FieldElement FieldContext::from_vector(std::span<const Digit> v) const {
  if (v.size() != n_) throw FieldError("coordinate vector has wrong length");
  if (!basis_) return from_coeffs(v);
  return from_coeffs(linalg::combine(v, *basis_, n_, p_));
}

const BaseMatrix& FieldContext::subfield_basis(unsigned d) const {
  for (const auto& [deg, basis] : subfields_)
    if (deg == d) return basis;
  throw FieldError("no subfield of degree " + std::to_string(d));
}

std::optional<BaseVector> FieldContext::compress(const FieldElement& a, unsigned d) const {
  check_same(a);
  const auto& basis = subfield_basis(d);
  if (!is_in_subfield(a, d, p_)) return std::nullopt;
  return linalg::solve_left(basis, a.coeffs(), p_);
}

FieldElement FieldContext::expand(std::span<const Digit> coords, unsigned d) const {
  if (coords.size() != d) throw FieldError("subfield coordinate vector has wrong length");
  return from_coeffs(linalg::combine(coords, subfield_basis(d), n_, p_));
}

std::vector<FieldElement> FieldContext::elements() const {
  std::vector<FieldElement> out;
  out.reserve(order_);
  for (std::uint32_t v = 0; v < order_; ++v) out.emplace_back(*this, v);
  return out;
}

FieldElement FieldContext::parse(std::string_view text) const {
  if (text.starts_with("g^") || text.starts_with("γ^")) {
    const auto pos = text.find('^') + 1;
    std::int64_t k = 0;
    const auto* first = text.data() + pos;
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, k);
    if (ec != std::errc{} || ptr != last) throw FieldError("bad exponent in element '" + std::string(text) + "'");
    return gamma_pow(k);
  }
  if (text.size() != n_) throw FieldError("element '" + std::string(text) + "' must have " + std::to_string(n_) + " digits");
  BaseVector c(n_);
  for (unsigned i = 0; i < n_; ++i) {
    const char ch = text[i];
    if (ch < '0' || ch > '9' || static_cast<unsigned>(ch - '0') >= p_)
      throw FieldError("bad digit in element '" + std::string(text) + "'");
    c[i] = static_cast<Digit>(ch - '0');
  }
  return from_coeffs(c);
}

std::string FieldContext::format(const FieldElement& a) const {
  check_same(a);
  std::string s;
  for (auto d : a.coeffs()) s.push_back(static_cast<char>('0' + d));
  return s;
}

FieldElement inv(const FieldElement& a) { return a.context().inv(a); }
FieldElement frobenius(const FieldElement& a, std::uint64_t i, std::uint64_t q) {
  return a.context().frobenius(a, i, q);
}
bool is_in_subfield(const FieldElement& a, unsigned d, std::uint64_t q) {
  return a.context().is_in_subfield(a, d, q);
}
BaseVector to_vector(const FieldElement& a) { return a.context().to_vector(a); }
std::uint32_t element_order(const FieldElement& a) { return a.context().element_order(a); }

}  // namespace tiercode
