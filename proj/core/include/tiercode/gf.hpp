#pragma once

// Arithmetic in GF(p) and GF(p^n), elements stored in polynomial basis.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tiercode {

/// One coordinate of a vector over the prime field GF(p).
using Digit = std::uint8_t;
/// A row vector over GF(p); packets and coordinate vectors use this type.
using BaseVector = std::vector<Digit>;
using BaseMatrix = std::vector<BaseVector>;

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class FieldContext;

/// An element of a FieldContext's field.
///
/// The value is the packed base-p integer sum_i c_i p^i where c_i are the
/// polynomial-basis coefficients. Elements reference their context by
/// pointer: the context must outlive every element created from it.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const FieldContext& ctx, std::uint32_t packed);

  [[nodiscard]] const FieldContext& context() const;
  [[nodiscard]] bool has_context() const noexcept { return ctx_ != nullptr; }
  [[nodiscard]] std::uint32_t packed() const noexcept { return value_; }
  [[nodiscard]] bool is_zero() const noexcept { return value_ == 0; }
  /// Polynomial-basis coefficients, low-to-high, length n.
  [[nodiscard]] BaseVector coeffs() const;

  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.ctx_ == b.ctx_ && a.value_ == b.value_;
  }

 private:
  const FieldContext* ctx_ = nullptr;
  std::uint32_t value_ = 0;
};

/// GF(p^n) built from an explicit monic modulus whose root is primitive.
///
/// Construction verifies irreducibility (trial division) and that the
/// residue class of x has order p^n - 1. Immutable afterwards.
class FieldContext {
 public:
  /// Largest field order accepted.
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 30;
  /// Fields up to this order get exp/log tables.
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

  /// `modulus` is monic of degree n, coefficients low-to-high.
  /// `representation_basis`, when given, lists n elements (as polynomial
  /// coefficient vectors) whose coordinates replace the polynomial basis in
  /// to_vector/from_vector.
  static std::shared_ptr<const FieldContext> create(
      unsigned p, BaseVector modulus,
      std::optional<BaseMatrix> representation_basis = std::nullopt);

  /// Moduli shipped with the toolkit: x^3+x+1 over GF(2), x^6+x+2 over GF(3).
  static std::optional<BaseVector> builtin_modulus(unsigned p, unsigned n);
  static std::shared_ptr<const FieldContext> builtin(unsigned p, unsigned n);

  FieldContext(const FieldContext&) = delete;
  FieldContext& operator=(const FieldContext&) = delete;

  [[nodiscard]] unsigned characteristic() const noexcept { return p_; }
  [[nodiscard]] unsigned degree() const noexcept { return n_; }
  [[nodiscard]] std::uint32_t order() const noexcept { return order_; }
  [[nodiscard]] const BaseVector& modulus() const noexcept { return modulus_; }
  [[nodiscard]] bool has_tables() const noexcept { return !exp_.empty(); }
  [[nodiscard]] bool uses_polynomial_basis() const noexcept { return !basis_.has_value(); }

  [[nodiscard]] FieldElement zero() const { return {*this, 0}; }
  [[nodiscard]] FieldElement one() const { return {*this, 1}; }
  /// gamma, the residue class of x.
  [[nodiscard]] FieldElement primitive() const;
  /// gamma^k, k taken modulo p^n - 1.
  [[nodiscard]] FieldElement gamma_pow(std::int64_t k) const;
  /// Embeds c in GF(p) as a constant polynomial.
  [[nodiscard]] FieldElement constant(unsigned c) const;
  [[nodiscard]] FieldElement from_coeffs(std::span<const Digit> coeffs) const;
  [[nodiscard]] FieldElement from_packed(std::uint32_t packed) const;

  [[nodiscard]] FieldElement add(const FieldElement& a, const FieldElement& b) const;
  [[nodiscard]] FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  [[nodiscard]] FieldElement neg(const FieldElement& a) const;
  [[nodiscard]] FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  /// Schoolbook product reduced modulo the modulus; never uses the tables.
  [[nodiscard]] FieldElement mul_polynomial(const FieldElement& a, const FieldElement& b) const;
  [[nodiscard]] FieldElement inv(const FieldElement& a) const;
  [[nodiscard]] FieldElement pow(const FieldElement& a, std::uint64_t e) const;
  /// Discrete log base gamma. Throws on zero.
  [[nodiscard]] std::uint32_t log(const FieldElement& a) const;

  /// a^(q^i) where q = p^s and s divides n.
  [[nodiscard]] FieldElement frobenius(const FieldElement& a, std::uint64_t i, std::uint64_t q) const;
  /// True iff a lies in GF(q^d) (q = p^s, s*d must divide n).
  [[nodiscard]] bool is_in_subfield(const FieldElement& a, unsigned d, std::uint64_t q) const;
  [[nodiscard]] std::uint32_t element_order(const FieldElement& a) const;

  /// Coordinates in the representation basis (polynomial unless overridden).
  [[nodiscard]] BaseVector to_vector(const FieldElement& a) const;
  [[nodiscard]] FieldElement from_vector(std::span<const Digit> v) const;

  /// Basis {1, b, ..., b^(d-1)} of GF(p^d), b = gamma^((p^n-1)/(p^d-1)),
  /// as polynomial coefficient rows.
  [[nodiscard]] const BaseMatrix& subfield_basis(unsigned d) const;
  /// Length-d coordinates of a relative to subfield_basis(d); nullopt if a
  /// is not in GF(p^d).
  [[nodiscard]] std::optional<BaseVector> compress(const FieldElement& a, unsigned d) const;
  [[nodiscard]] FieldElement expand(std::span<const Digit> coords, unsigned d) const;

  /// All elements in packed order 0..p^n-1.
  [[nodiscard]] std::vector<FieldElement> elements() const;

  /// "g^k" or a base-p digit string of length n, low-order digit first.
  [[nodiscard]] FieldElement parse(std::string_view text) const;
  /// Base-p digit string of the polynomial coefficients, low-order first.
  [[nodiscard]] std::string format(const FieldElement& a) const;

  void check_same(const FieldElement& a) const;

 private:
  FieldContext(unsigned p, BaseVector modulus);

  [[nodiscard]] std::uint32_t add_packed(std::uint32_t a, std::uint32_t b) const;
  [[nodiscard]] std::uint32_t mul_packed_poly(std::uint32_t a, std::uint32_t b) const;
  [[nodiscard]] std::uint32_t pow_packed_poly(std::uint32_t a, std::uint64_t e) const;
  [[nodiscard]] BaseVector unpack(std::uint32_t v) const;
  [[nodiscard]] std::uint32_t pack(std::span<const Digit> coeffs) const;
  void build_tables();
  void build_subfields();

  unsigned p_ = 0;
  unsigned n_ = 0;
  std::uint32_t order_ = 0;
  BaseVector modulus_;
  std::vector<std::uint64_t> pow_p_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint64_t> group_order_primes_;
  std::optional<BaseMatrix> basis_;          // rows: basis elements
  std::optional<BaseMatrix> basis_inverse_;  // coeffs * inverse = coordinates
  std::vector<std::pair<unsigned, BaseMatrix>> subfields_;
};

/// Free-function spellings of the field operations.
FieldElement inv(const FieldElement& a);
FieldElement frobenius(const FieldElement& a, std::uint64_t i, std::uint64_t q);
bool is_in_subfield(const FieldElement& a, unsigned d, std::uint64_t q);
BaseVector to_vector(const FieldElement& a);
std::uint32_t element_order(const FieldElement& a);

/// Monic-polynomial helpers over GF(p), coefficient lists low-to-high.
bool is_irreducible(std::span<const Digit> modulus, unsigned p);
bool is_prime(std::uint64_t v);
std::vector<std::uint64_t> prime_factors(std::uint64_t v);

}  // namespace tiercode
