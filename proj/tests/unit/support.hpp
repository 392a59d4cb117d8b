#pragma once

#include <random>
#include <string>
#include <vector>

#include "tiercode/codes.hpp"
#include "tiercode/gf.hpp"

namespace tiercode::testing {

inline std::string config_path(const std::string& name) { return std::string(TIERCODE_CONFIG_DIR) + "/" + name; }

inline FieldPtr gf8() { return FieldContext::create(2, {1, 1, 0, 1}); }
inline FieldPtr gf729() { return FieldContext::create(3, {2, 1, 0, 0, 0, 0, 1}); }
inline FieldPtr gf625() { return FieldContext::create(5, {2, 4, 4, 0, 1}); }

inline KKSpec kk_example(const FieldPtr& f) {
  return KKSpec{f, 2, 3, 2, 1, {f->gamma_pow(3), f->gamma_pow(4)}};
}

inline MVSpec mv1(const FieldPtr& f) {
  return MVSpec{f, 2, 3, 1, 2, 1, {f->gamma_pow(5)}, MvLayout::uncompressed};
}

inline MVSpec mv2(const FieldPtr& f, MvLayout layout) {
  return MVSpec{f, 3, 3, 2, 5, 1, {f->gamma_pow(504), f->gamma_pow(294)}, layout};
}

inline GabidulinSpec gabidulin(const FieldPtr& f, unsigned n, unsigned k) {
  std::vector<FieldElement> g;
  for (unsigned i = 0; i < n; ++i) g.push_back(f->gamma_pow(i));
  return GabidulinSpec{f, 2, f->degree(), n, k, g};
}

/// Schoolbook product of polynomial-basis coefficient vectors reduced by a
/// monic modulus; independent of the field's tables.
inline BaseVector poly_mulmod(const BaseVector& a, const BaseVector& b, const BaseVector& modulus, unsigned p) {
  const std::size_t n = modulus.size() - 1;
  std::vector<unsigned> prod(2 * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t d = 2 * n - 1; d >= n; --d) {
    const unsigned c = prod[d];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= n; ++i) prod[d - n + i] = (prod[d - n + i] + p * p - c * modulus[i]) % p;
  }
  return BaseVector(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(n));
}

inline BaseVector random_vector(std::mt19937_64& rng, std::size_t len, unsigned p) {
  std::uniform_int_distribution<unsigned> d(0, p - 1);
  BaseVector v(len);
  for (auto& x : v) x = static_cast<Digit>(d(rng));
  return v;
}

}  // namespace tiercode::testing
