#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tiercode/gf.hpp"

namespace tiercode {

/// u(x) = sum_i u_i x^[i] with [i] = q^i.
class LinearizedPoly {
 public:
  LinearizedPoly(std::vector<FieldElement> coeffs, std::uint64_t q);

  [[nodiscard]] const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] std::uint64_t q() const noexcept { return q_; }
  [[nodiscard]] const FieldContext& context() const { return coeffs_.front().context(); }
  [[nodiscard]] bool is_zero() const;

  [[nodiscard]] FieldElement evaluate(const FieldElement& x) const;
  /// u composed with itself j times, applied to x. j = 0 returns x.
  [[nodiscard]] FieldElement iterate_evaluate(const FieldElement& x, unsigned j) const;

 private:
  std::vector<FieldElement> coeffs_;
  std::uint64_t q_;
};

}  // namespace tiercode
