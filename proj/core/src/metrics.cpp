#include "tiercode/metrics.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "tiercode/linalg.hpp"

namespace tiercode {

Subspace Subspace::span(const BaseMatrix& rows, std::size_t ambient_len, unsigned p) {
  for (const auto& r : rows)
    if (r.size() != ambient_len) throw std::invalid_argument("row length differs from ambient length");
  Subspace s(p, ambient_len);
  auto e = linalg::reduce(rows, ambient_len, p);
  s.basis_ = std::move(e.rows);
  s.pivots_ = std::move(e.pivots);
  return s;
}

bool Subspace::contains(std::span<const Digit> v) const {
  if (v.size() != ambient_len_) throw std::invalid_argument("vector length differs from ambient length");
  // Eliminate against the pivots; v is in the space iff the residue is zero.
  BaseVector r(v.begin(), v.end());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Digit c = r[pivots_[i]];
    if (c != 0) linalg::axpy(r, p_ - c, basis_[i], p_);
  }
  return linalg::is_zero(r);
}

std::vector<BaseVector> Subspace::elements() const {
  std::size_t count = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i) count *= p_;
  std::vector<BaseVector> out;
  out.reserve(count);
  BaseVector coeffs(basis_.size(), 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t t = idx;
    for (auto& c : coeffs) {
      c = static_cast<Digit>(t % p_);
      t /= p_;
    }
    out.push_back(linalg::combine(coeffs, basis_, ambient_len_, p_));
  }
  return out;
}

std::size_t hamming_weight(std::span<const Digit> x) {
  return static_cast<std::size_t>(std::count_if(x.begin(), x.end(), [](Digit d) { return d != 0; }));
}

std::size_t hamming_distance(std::span<const Digit> x, std::span<const Digit> y) {
  if (x.size() != y.size()) throw std::invalid_argument("hamming_distance: length mismatch");
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
  return d;
}

std::size_t rank_over_base(std::span<const FieldElement> x) {
  if (x.empty()) return 0;
  const auto& ctx = x.front().context();
  BaseMatrix rows;
  rows.reserve(x.size());
  for (const auto& e : x) {
    ctx.check_same(e);
    rows.push_back(e.coeffs());
  }
  return linalg::rank(std::move(rows), ctx.degree(), ctx.characteristic());
}

std::size_t rank_distance(std::span<const FieldElement> x, std::span<const FieldElement> y) {
  if (x.size() != y.size()) throw std::invalid_argument("rank_distance: length mismatch");
  std::vector<FieldElement> diff;
  diff.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) diff.push_back(x[i] - y[i]);
  return rank_over_base(diff);
}

namespace {
void check_compatible(const Subspace& u, const Subspace& v) {
  if (u.ambient_len() != v.ambient_len() || u.characteristic() != v.characteristic())
    throw std::invalid_argument("subspaces live in different ambient spaces");
}
}  // namespace

std::size_t sum_dimension(const Subspace& u, const Subspace& v) {
  check_compatible(u, v);
  BaseMatrix rows = u.basis();
  rows.insert(rows.end(), v.basis().begin(), v.basis().end());
  return linalg::rank(std::move(rows), u.ambient_len(), u.characteristic());
}

std::size_t intersection_dimension(const Subspace& u, const Subspace& v) {
  return u.dimension() + v.dimension() - sum_dimension(u, v);
}

std::size_t subspace_distance(const Subspace& u, const Subspace& v) {
  const std::size_t s = sum_dimension(u, v);
  const std::size_t i = u.dimension() + v.dimension() - s;
  return s - i;
}

std::size_t injection_distance(const Subspace& u, const Subspace& v) {
  return std::max(u.dimension(), v.dimension()) - intersection_dimension(u, v);
}

bool for_each_at_distance(const BaseVector& x, std::size_t r, unsigned p,
                          const std::function<bool(const BaseVector&)>& f) {
  const std::size_t n = x.size();
  if (r > n) return true;
  BaseVector y = x;
  std::vector<std::size_t> pos(r);
  std::vector<unsigned> off(r);
  // Recursive walk over position sets (increasing) and nonzero offsets.
  std::function<bool(std::size_t, std::size_t)> walk = [&](std::size_t depth, std::size_t start) -> bool {
    if (depth == r) return f(y);
    for (std::size_t i = start; i + (r - depth) <= n; ++i) {
      for (unsigned o = 1; o < p; ++o) {
        y[i] = static_cast<Digit>((x[i] + o) % p);
        if (!walk(depth + 1, i + 1)) {
          y[i] = x[i];
          return false;
        }
      }
      y[i] = x[i];
    }
    return true;
  };
  return walk(0, 0);
}

bool is_linear(const VectorSet& s, unsigned p) {
  if (s.empty()) return false;
  const std::size_t len = s.begin()->size();
  BaseMatrix rows(s.begin(), s.end());
  const std::size_t r = linalg::rank(std::move(rows), len, p);
  // s is contained in its span; equal cardinality means s is the span.
  long double size = 1;
  for (std::size_t i = 0; i < r; ++i) size *= p;
  return size == static_cast<long double>(s.size());
}

Distance min_weight(const Subspace& s) {
  if (s.dimension() == 0) return std::nullopt;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& v : s.elements()) {
    const std::size_t w = hamming_weight(v);
    if (w != 0) best = std::min(best, w);
  }
  return best;
}

namespace {

std::size_t pairwise_min(const VectorSet& s) {
  const std::vector<const BaseVector*> v = [&] {
    std::vector<const BaseVector*> out;
    out.reserve(s.size());
    for (const auto& x : s) out.push_back(&x);
    return out;
  }();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < v.size() && best > 1; ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) best = std::min(best, hamming_distance(*v[i], *v[j]));
  return best;
}

double ball_shell_size(std::size_t n, std::size_t r, unsigned p) {
  double c = 1;
  for (std::size_t i = 0; i < r; ++i) c = c * static_cast<double>(n - i) / static_cast<double>(i + 1) * (p - 1);
  return c;
}

// Returns 0 when the cost budget is exhausted before a pair is found.
std::size_t neighborhood_min(const VectorSet& s, unsigned p, double budget) {
  const std::size_t n = s.begin()->size();
  double spent = 0;
  for (std::size_t r = 1; r <= n; ++r) {
    spent += static_cast<double>(s.size()) * ball_shell_size(n, r, p);
    if (spent > budget) return 0;
    for (const auto& x : s) {
      const bool finished = for_each_at_distance(x, r, p, [&](const BaseVector& y) { return !s.contains(y); });
      if (!finished) return r;
    }
  }
  return 0;
}

}  // namespace

std::size_t min_distance(const VectorSet& s, unsigned p, MinDistanceMode mode) {
  if (s.size() < 2) throw std::invalid_argument("min_distance needs at least two vectors");
  const std::size_t len = s.begin()->size();
  for (const auto& v : s)
    if (v.size() != len) throw std::invalid_argument("min_distance: vectors differ in length");

  switch (mode) {
    case MinDistanceMode::pairwise:
      return pairwise_min(s);
    case MinDistanceMode::neighborhood: {
      const auto d = neighborhood_min(s, p, std::numeric_limits<double>::infinity());
      if (d == 0) throw std::logic_error("neighborhood search found no pair");
      return d;
    }
    case MinDistanceMode::automatic:
      break;
  }
  if (is_linear(s, p)) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (const auto& v : s) {
      const auto w = hamming_weight(v);
      if (w != 0) best = std::min(best, w);
    }
    return best;
  }
  const double pair_cost = 0.5 * static_cast<double>(s.size()) * static_cast<double>(s.size());
  if (const auto d = neighborhood_min(s, p, pair_cost); d != 0) return d;
  return pairwise_min(s);
}

}  // namespace tiercode
