#include "tiercode/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace tiercode::linalg {

unsigned inv_mod(unsigned a, unsigned p) {
  a %= p;
  if (a == 0) throw std::domain_error("inverse of zero modulo p");
  // Extended Euclid on small ints.
  long t = 0, new_t = 1;
  long r = static_cast<long>(p), new_r = static_cast<long>(a);
  while (new_r != 0) {
    const long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += static_cast<long>(p);
  return static_cast<unsigned>(t);
}

BaseVector add(std::span<const Digit> a, std::span<const Digit> b, unsigned p) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  BaseVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<Digit>((a[i] + b[i]) % p);
  return out;
}

BaseVector sub(std::span<const Digit> a, std::span<const Digit> b, unsigned p) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  BaseVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<Digit>((a[i] + p - b[i]) % p);
  return out;
}

BaseVector scale(std::span<const Digit> a, unsigned c, unsigned p) {
  BaseVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<Digit>((a[i] * c) % p);
  return out;
}

void axpy(BaseVector& y, unsigned c, std::span<const Digit> x, unsigned p) {
  if (c % p == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = static_cast<Digit>((y[i] + c * x[i]) % p);
}

bool is_zero(std::span<const Digit> v) {
  return std::all_of(v.begin(), v.end(), [](Digit d) { return d == 0; });
}

BaseVector combine(std::span<const Digit> coeffs, const BaseMatrix& rows, std::size_t width,
                   unsigned p) {
  BaseVector out(width, 0);
  for (std::size_t i = 0; i < coeffs.size() && i < rows.size(); ++i) axpy(out, coeffs[i], rows[i], p);
  return out;
}

Echelon reduce(BaseMatrix m, std::size_t width, unsigned p) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < width && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    const unsigned s = inv_mod(m[r][c], p);
    for (auto& x : m[r]) x = static_cast<Digit>((x * s) % p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      axpy(m[i], p - m[i][c], m[r], p);
    }
    e.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  e.rows = std::move(m);
  return e;
}

std::size_t rank(BaseMatrix m, std::size_t width, unsigned p) {
  return reduce(std::move(m), width, p).rows.size();
}

std::optional<BaseMatrix> inverse(const BaseMatrix& m, unsigned p) {
  const std::size_t n = m.size();
  BaseMatrix aug(n, BaseVector(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("inverse of non-square matrix");
    std::copy(m[i].begin(), m[i].end(), aug[i].begin());
    aug[i][n + i] = 1;
  }
  auto e = reduce(std::move(aug), n, p);
  if (e.rows.size() != n || e.pivots.back() != n - 1) return std::nullopt;
  BaseMatrix inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i].assign(e.rows[i].begin() + static_cast<long>(n), e.rows[i].end());
  return inv;
}

std::optional<BaseVector> solve_left(const BaseMatrix& rows, std::span<const Digit> target,
                                     unsigned p) {
  // Transpose: unknowns are row coefficients, equations are columns.
  const std::size_t k = rows.size();
  const std::size_t w = target.size();
  BaseMatrix sys(w, BaseVector(k + 1, 0));
  for (std::size_t c = 0; c < w; ++c) {
    for (std::size_t i = 0; i < k; ++i) sys[c][i] = rows[i][c];
    sys[c][k] = target[c];
  }
  auto e = reduce(std::move(sys), k + 1, p);
  BaseVector x(k, 0);
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    if (e.pivots[r] == k) return std::nullopt;  // inconsistent
    x[e.pivots[r]] = e.rows[r][k];
  }
  return x;
}

}  // namespace tiercode::linalg
