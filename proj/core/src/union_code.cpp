#include "tiercode/union_code.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace tiercode {

namespace {
const UnionCode::Provenance kEmptyProvenance;

std::uint64_t component_size(unsigned p, std::size_t dim) {
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (s > std::numeric_limits<std::uint64_t>::max() / p) return std::numeric_limits<std::uint64_t>::max();
    s *= p;
  }
  return s;
}
}  // namespace

const UnionCode::Provenance& UnionCode::provenance(const BaseVector& v) const {
  auto it = provenance_.find(v);
  return it == provenance_.end() ? kEmptyProvenance : it->second;
}

const Component& UnionCode::component(std::size_t index) const {
  auto it = std::find_if(components_.begin(), components_.end(),
                         [&](const Component& c) { return c.index == index; });
  if (it == components_.end()) throw SpecError("no component with index " + std::to_string(index));
  return *it;
}

std::vector<BaseVector> UnionCode::sorted_vectors() const {
  std::vector<BaseVector> out;
  out.reserve(provenance_.size());
  for (const auto& [v, _] : provenance_) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

VectorSet UnionCode::vector_set() const {
  VectorSet s;
  s.reserve(provenance_.size());
  for (const auto& [v, _] : provenance_) s.insert(v);
  return s;
}

std::size_t UnionCode::correction_radius() const noexcept {
  if (!min_distance_) return ambient_len_;
  return (*min_distance_ - 1) / 2;
}

void UnionCode::finalize() {
  for (auto& [_, prov] : provenance_) {
    std::sort(prov.begin(), prov.end());
    prov.erase(std::unique(prov.begin(), prov.end()), prov.end());
  }
  if (provenance_.size() >= 2)
    min_distance_ = tiercode::min_distance(vector_set(), p_);
  else
    min_distance_.reset();
}

UnionCode build_union(const Codebook& book, std::uint64_t budget) {
  std::uint64_t total = 0;
  for (const auto& s : book.spaces) {
    total += component_size(book.p, s.dimension());
    if (total > budget)
      throw BudgetExceeded("union enumeration needs more than " + std::to_string(budget) + " vectors");
  }
  UnionCode u;
  u.p_ = book.p;
  u.ambient_len_ = book.ambient_len;
  u.components_.reserve(book.words.size());
  for (std::size_t i = 0; i < book.words.size(); ++i) {
    u.components_.push_back({i, book.words[i].generator, book.spaces[i].dimension()});
    for (auto& v : book.spaces[i].elements()) u.provenance_[std::move(v)].push_back(static_cast<std::uint32_t>(i));
  }
  if (u.provenance_.empty()) u.provenance_[BaseVector(u.ambient_len_, 0)] = {};
  u.finalize();
  return u;
}

UnionCode restrict(const UnionCode& u, std::span<const std::size_t> components) {
  if (components.empty()) throw SpecError("restrict: empty component list");
  UnionCode r;
  r.p_ = u.p_;
  r.ambient_len_ = u.ambient_len_;
  std::vector<std::size_t> keep(components.begin(), components.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (auto idx : keep) r.components_.push_back(u.component(idx));
  for (const auto& [v, prov] : u.provenance_) {
    UnionCode::Provenance kept;
    for (auto c : prov)
      if (std::binary_search(keep.begin(), keep.end(), c)) kept.push_back(c);
    if (!kept.empty()) r.provenance_.emplace(v, std::move(kept));
  }
  r.finalize();
  return r;
}

std::size_t union_min_distance(const UnionCode& u) {
  if (!u.min_distance()) throw SpecError("union code has fewer than two vectors");
  return *u.min_distance();
}

std::vector<std::pair<std::size_t, Distance>> component_min_distances(const UnionCode& u) {
  std::vector<std::pair<std::size_t, Distance>> out;
  out.reserve(u.components().size());
  for (const auto& c : u.components())
    out.emplace_back(c.index, min_weight(Subspace::span(c.generator, u.ambient_len(), u.characteristic())));
  return out;
}

}  // namespace tiercode
