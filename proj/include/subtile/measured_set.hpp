#pragma once

#include "subtile/group.hpp"

#include <vector>

namespace subtile {

/// A finite subset of G with its Haar measure (#points * w).
class MeasuredSet {
 public:
  /// Indices are sorted; duplicates or out-of-range indices throw StructuralError.
  MeasuredSet(FiniteAbelianGroup parent, std::vector<std::size_t> indices);
  static MeasuredSet from_elements(const FiniteAbelianGroup& parent,
                                   const std::vector<GroupElement>& points);

  const FiniteAbelianGroup& parent() const { return parent_; }
  const std::vector<std::size_t>& indices() const { return indices_; }
  std::vector<GroupElement> points() const;
  std::size_t count() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  Rational measure() const {
    return Rational(static_cast<std::int64_t>(indices_.size())) * parent_.weight_g();
  }
  bool contains_index(std::size_t g) const { return member_[g] != 0; }
  /// Position of g in indices(), or count() when absent.
  std::size_t rank_of(std::size_t g) const;

  FunctionTable indicator() const;

  friend bool operator==(const MeasuredSet& a, const MeasuredSet& b) {
    return a.parent_ == b.parent_ && a.indices_ == b.indices_;
  }

 private:
  FiniteAbelianGroup parent_;
  std::vector<std::size_t> indices_;
  std::vector<unsigned char> member_;
};

}  // namespace subtile
