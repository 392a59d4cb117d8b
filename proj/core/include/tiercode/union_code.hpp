#pragma once

// The union code: every valid packet of every component code, with the set of
// components that contain it.

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tiercode/codes.hpp"
#include "tiercode/metrics.hpp"

namespace tiercode {

struct Component {
  std::size_t index = 0;  // codeword index in the codebook
  BaseMatrix generator;
  std::size_t dimension = 0;
};

class UnionCode {
 public:
  using Provenance = std::vector<std::uint32_t>;

  [[nodiscard]] unsigned characteristic() const noexcept { return p_; }
  [[nodiscard]] std::size_t ambient_len() const noexcept { return ambient_len_; }
  [[nodiscard]] std::size_t size() const noexcept { return provenance_.size(); }
  [[nodiscard]] bool contains(const BaseVector& v) const { return provenance_.contains(v); }
  /// Component indices containing v (ascending); empty if v is not valid.
  [[nodiscard]] const Provenance& provenance(const BaseVector& v) const;
  [[nodiscard]] const std::vector<Component>& components() const noexcept { return components_; }
  [[nodiscard]] const Component& component(std::size_t index) const;
  /// All vectors, sorted lexicographically.
  [[nodiscard]] std::vector<BaseVector> sorted_vectors() const;
  [[nodiscard]] VectorSet vector_set() const;
  /// Minimum Hamming distance; nullopt when the union holds a single vector.
  [[nodiscard]] Distance min_distance() const noexcept { return min_distance_; }
  /// floor((d - 1) / 2), or the ambient length for a single-vector union.
  [[nodiscard]] std::size_t correction_radius() const noexcept;

  template <class F>
  void for_each(F&& f) const {
    for (const auto& [v, prov] : provenance_) f(v, prov);
  }

 private:
  friend UnionCode build_union(const Codebook&, std::uint64_t);
  friend UnionCode restrict(const UnionCode&, std::span<const std::size_t>);
  void finalize();

  unsigned p_ = 2;
  std::size_t ambient_len_ = 0;
  std::vector<Component> components_;
  std::unordered_map<BaseVector, Provenance, BaseVectorHash> provenance_;
  Distance min_distance_;
};

inline constexpr std::uint64_t kDefaultUnionBudget = std::uint64_t{1} << 26;

/// Exact deduplicated union of all component codes. Throws BudgetExceeded
/// when the summed component sizes exceed `budget`.
[[nodiscard]] UnionCode build_union(const Codebook& book, std::uint64_t budget = kDefaultUnionBudget);

/// Union over the listed components only. Throws SpecError on an empty or
/// invalid list.
[[nodiscard]] UnionCode restrict(const UnionCode& u, std::span<const std::size_t> components);

[[nodiscard]] std::size_t union_min_distance(const UnionCode& u);

/// Minimum Hamming weight of each component code (components are linear).
[[nodiscard]] std::vector<std::pair<std::size_t, Distance>> component_min_distances(const UnionCode& u);

}  // namespace tiercode
