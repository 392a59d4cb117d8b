#pragma once

// Hamming, rank, subspace and injection metrics, and minimum distance of
// finite (possibly nonlinear) vector sets.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "tiercode/gf.hpp"

namespace tiercode {

struct BaseVectorHash {
  std::size_t operator()(const BaseVector& v) const noexcept {
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(v.data()), v.size()));
  }
};

using VectorSet = std::unordered_set<BaseVector, BaseVectorHash>;

/// Minimum distance; nullopt stands for "infinite" (no nonzero word / no pair).
using Distance = std::optional<std::size_t>;

/// Row space over GF(p), stored as its reduced row echelon basis.
class Subspace {
 public:
  Subspace(unsigned p, std::size_t ambient_len) : p_(p), ambient_len_(ambient_len) {}
  /// Row space of `rows` (any number of rows, possibly dependent).
  static Subspace span(const BaseMatrix& rows, std::size_t ambient_len, unsigned p);

  [[nodiscard]] unsigned characteristic() const noexcept { return p_; }
  [[nodiscard]] std::size_t ambient_len() const noexcept { return ambient_len_; }
  [[nodiscard]] std::size_t dimension() const noexcept { return basis_.size(); }
  [[nodiscard]] const BaseMatrix& basis() const noexcept { return basis_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  [[nodiscard]] bool contains(std::span<const Digit> v) const;

  /// Every vector of the space, enumerated by coefficient digits with the
  /// first basis row fastest.
  [[nodiscard]] std::vector<BaseVector> elements() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.p_ == b.p_ && a.ambient_len_ == b.ambient_len_ && a.basis_ == b.basis_;
  }

 private:
  unsigned p_;
  std::size_t ambient_len_;
  BaseMatrix basis_;
  std::vector<std::size_t> pivots_;
};

[[nodiscard]] std::size_t hamming_weight(std::span<const Digit> x);
[[nodiscard]] std::size_t hamming_distance(std::span<const Digit> x, std::span<const Digit> y);

/// GF(p)-rank of the |x| x n coordinate matrix of x.
[[nodiscard]] std::size_t rank_over_base(std::span<const FieldElement> x);
[[nodiscard]] std::size_t rank_distance(std::span<const FieldElement> x, std::span<const FieldElement> y);

[[nodiscard]] std::size_t sum_dimension(const Subspace& u, const Subspace& v);
[[nodiscard]] std::size_t intersection_dimension(const Subspace& u, const Subspace& v);
[[nodiscard]] std::size_t subspace_distance(const Subspace& u, const Subspace& v);
[[nodiscard]] std::size_t injection_distance(const Subspace& u, const Subspace& v);

enum class MinDistanceMode {
  automatic,  // linear shortcut when the set is a subspace, else pairwise
  pairwise,   // all pairs
  neighborhood,  // Hamming balls of growing radius around each vector
};

/// Minimum pairwise Hamming distance of a set of distinct equal-length
/// vectors over GF(p). Throws on sets with fewer than two vectors.
[[nodiscard]] std::size_t min_distance(const VectorSet& s, unsigned p,
                                       MinDistanceMode mode = MinDistanceMode::automatic);

/// True when the set is closed under addition (hence a GF(p)-subspace).
[[nodiscard]] bool is_linear(const VectorSet& s, unsigned p);

/// Minimum weight of a nonzero vector in the row space; nullopt for {0}.
[[nodiscard]] Distance min_weight(const Subspace& s);

/// Calls f(neighbor) for every vector at Hamming distance exactly r from x.
/// Stops early when f returns false; returns false iff stopped.
bool for_each_at_distance(const BaseVector& x, std::size_t r, unsigned p,
                          const std::function<bool(const BaseVector&)>& f);

}  // namespace tiercode
