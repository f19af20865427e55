#include "subtile/measured_set.hpp"

#include <algorithm>

namespace subtile {

MeasuredSet::MeasuredSet(FiniteAbelianGroup parent, std::vector<std::size_t> indices)
    : parent_(std::move(parent)), indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw StructuralError("measured set contains a repeated point");
  }
  if (!indices_.empty() && indices_.back() >= parent_.order()) {
    throw StructuralError("measured set point index out of range");
  }
  member_.assign(parent_.order(), 0);
  for (auto i : indices_) member_[i] = 1;
}

MeasuredSet MeasuredSet::from_elements(const FiniteAbelianGroup& parent,
                                       const std::vector<GroupElement>& points) {
  std::vector<std::size_t> indices;
  indices.reserve(points.size());
  for (const auto& p : points) indices.push_back(parent.index_of(p));
  return MeasuredSet(parent, std::move(indices));
}

std::vector<GroupElement> MeasuredSet::points() const {
  std::vector<GroupElement> out;
  out.reserve(indices_.size());
  for (auto i : indices_) out.push_back(parent_.element_at(i));
  return out;
}

std::size_t MeasuredSet::rank_of(std::size_t g) const {
  const auto it = std::lower_bound(indices_.begin(), indices_.end(), g);
  if (it == indices_.end() || *it != g) return indices_.size();
  return static_cast<std::size_t>(it - indices_.begin());
}

FunctionTable MeasuredSet::indicator() const {
  FunctionTable f(parent_.order(), 0.0);
  for (auto i : indices_) f[i] = 1.0;
  return f;
}

}  // namespace subtile
