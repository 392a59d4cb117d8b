#pragma once

// Dense linear algebra over a prime field GF(p).

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tiercode/gf.hpp"

namespace tiercode::linalg {

[[nodiscard]] unsigned inv_mod(unsigned a, unsigned p);

[[nodiscard]] BaseVector add(std::span<const Digit> a, std::span<const Digit> b, unsigned p);
[[nodiscard]] BaseVector sub(std::span<const Digit> a, std::span<const Digit> b, unsigned p);
[[nodiscard]] BaseVector scale(std::span<const Digit> a, unsigned c, unsigned p);
void axpy(BaseVector& y, unsigned c, std::span<const Digit> x, unsigned p);  // y += c*x
[[nodiscard]] bool is_zero(std::span<const Digit> v);

/// sum_i coeffs[i] * rows[i].
[[nodiscard]] BaseVector combine(std::span<const Digit> coeffs, const BaseMatrix& rows,
                                 std::size_t width, unsigned p);

/// Reduced row echelon form. Pivot choice is the first nonzero entry in
/// column order, so the result is unique for a given row space.
struct Echelon {
  BaseMatrix rows;                  // nonzero rows only, pivots normalized to 1
  std::vector<std::size_t> pivots;  // strictly increasing
};

[[nodiscard]] Echelon reduce(BaseMatrix m, std::size_t width, unsigned p);
[[nodiscard]] std::size_t rank(BaseMatrix m, std::size_t width, unsigned p);
[[nodiscard]] std::optional<BaseMatrix> inverse(const BaseMatrix& m, unsigned p);

/// Coefficients c with sum_i c[i] rows[i] == target, if any.
[[nodiscard]] std::optional<BaseVector> solve_left(const BaseMatrix& rows,
                                                   std::span<const Digit> target, unsigned p);

}  // namespace tiercode::linalg
