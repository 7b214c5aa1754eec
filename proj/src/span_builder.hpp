#pragma once

// Incremental echelon basis of a base-field subspace of a tower level, for
// membership tests and subfield closure.

#include <optional>
#include <vector>

#include "galois/field.hpp"

namespace galois::detail {

class SpanBuilder {
 public:
  explicit SpanBuilder(Field field) : field_(std::move(field)) {}

  /// Adds y when it is not already in the span; returns whether it was added.
  bool add(const FieldElement& y) {
    auto r = reduce(y);
    if (!r) return false;
    rows_.push_back(std::move(r->first));
    pivots_.push_back(r->second);
    return true;
  }

  bool contains(const FieldElement& y) const { return !reduce(y).has_value(); }
  std::size_t dimension() const { return rows_.size(); }

 private:
  // Reduced, pivot-normalized coordinates and pivot index, or nullopt if y
  // lies in the span.
  std::optional<std::pair<std::vector<Scalar>, std::size_t>> reduce(const FieldElement& y) const {
    std::vector<Scalar> v(y.coordinates().begin(), y.coordinates().end());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Scalar c = v[pivots_[i]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (!rows_[i][j].is_zero()) v[j] -= c * rows_[i][j];
      }
    }
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j].is_zero()) continue;
      const Scalar inv = v[j].inverse();
      for (auto& s : v) s *= inv;
      return std::make_pair(std::move(v), j);
    }
    return std::nullopt;
  }

  Field field_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Calls visit(v) for integer vectors of the given length in increasing
/// max-norm 0, 1, ..., bound. Within a shell, entries run through
/// 0, 1, -1, 2, -2, ... with the first entry varying fastest. Stops early
/// when visit returns true; returns whether it did.
template <class Visit>
bool for_each_small_vector(std::size_t length, int bound, Visit&& visit) {
  auto value = [](int index) { return index % 2 == 1 ? (index + 1) / 2 : -(index / 2); };
  std::vector<std::int64_t> v(length, 0);
  if (visit(v)) return true;
  if (length == 0) return false;
  for (int r = 1; r <= bound; ++r) {
    const int top = 2 * r;  // indices 0..2r cover values -r..r
    std::vector<int> idx(length, 0);
    while (true) {
      bool on_shell = false;
      for (int i : idx) on_shell = on_shell || i >= top - 1;
      if (on_shell) {
        for (std::size_t i = 0; i < length; ++i) v[i] = value(idx[i]);
        if (visit(v)) return true;
      }
      std::size_t pos = 0;
      while (pos < length && idx[pos] == top) idx[pos++] = 0;
      if (pos == length) break;
      ++idx[pos];
    }
  }
  return false;
}

}  // namespace galois::detail
