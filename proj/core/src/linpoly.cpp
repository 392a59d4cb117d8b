#include "tiercode/linpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace tiercode {

LinearizedPoly::LinearizedPoly(std::vector<FieldElement> coeffs, std::uint64_t q)
    : coeffs_(std::move(coeffs)), q_(q) {
  if (coeffs_.empty()) throw std::invalid_argument("linearized polynomial needs at least one coefficient");
  const auto& ctx = coeffs_.front().context();
  for (const auto& c : coeffs_) ctx.check_same(c);
  // Validates q as a subfield size.
  (void)ctx.frobenius(ctx.one(), 1, q_);
}

bool LinearizedPoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const FieldElement& c) { return c.is_zero(); });
}

FieldElement LinearizedPoly::evaluate(const FieldElement& x) const {
  const auto& ctx = context();
  ctx.check_same(x);
  FieldElement acc = ctx.zero();
  FieldElement power = x;  // x^[i]
  for (const auto& u : coeffs_) {
    acc += u * power;
    power = ctx.frobenius(power, 1, q_);
  }
  return acc;
}

FieldElement LinearizedPoly::iterate_evaluate(const FieldElement& x, unsigned j) const {
  FieldElement y = x;
  for (unsigned t = 0; t < j; ++t) y = evaluate(y);
  return y;
}

}  // namespace tiercode
