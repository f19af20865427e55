#include "subtile/tiling.hpp"

#include "subtile/detail/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace subtile {

namespace {

void require_nonempty(const MeasuredSet& omega) {
  if (omega.empty()) throw PreconditionError("Omega must have positive measure");
}

void require_same_group(const LatticeSubgroup& lattice, const MeasuredSet& omega) {
  if (!(lattice.parent() == omega.parent())) {
    throw StructuralError("lattice and set live in different groups");
  }
}

std::int64_t overlap_count(const MeasuredSet& omega, std::size_t lambda) {
  const auto& group = omega.parent();
  std::int64_t count = 0;
  for (auto g : omega.indices()) count += omega.contains_index(group.sub_index(g, lambda));
  return count;
}

}  // namespace

Rational overlap_measure(const MeasuredSet& omega, std::size_t lambda) {
  return Rational(overlap_count(omega, lambda)) * omega.parent().weight_g();
}

TilingVerdict check_subtiling(const LatticeSubgroup& lattice, const MeasuredSet& omega) {
  require_same_group(lattice, omega);
  require_nonempty(omega);
  const auto& group = lattice.parent();

  TilingVerdict verdict;
  for (auto lambda : lattice.element_indices()) {
    if (lambda == 0) continue;
    const auto overlap = overlap_measure(omega, lambda);
    if (overlap > 0) verdict.violating_pairs.push_back({group.element_at(lambda), overlap});
  }
  verdict.is_subtiling = verdict.violating_pairs.empty();

  // Pointwise form: the periodization never exceeds 1.
  const auto counts = periodization(lattice, omega);
  const bool pointwise = std::all_of(counts.begin(), counts.end(), [](auto c) { return c <= 1; });
  if (pointwise != verdict.is_subtiling) {
    throw std::logic_error("overlap and periodization forms of sub-tiling disagree");
  }

  verdict.is_tiling = verdict.is_subtiling && omega.count() * lattice.size() == group.order();
  return verdict;
}

Condition2Result check_condition2(const LatticeSubgroup& lattice, const MeasuredSet& omega,
                                  double tolerance) {
  require_same_group(lattice, omega);
  require_nonempty(omega);
  Condition2Result result;
  result.target = lattice_sizes(lattice).primal * omega.measure();
  const double target = to_double(result.target);
  const auto h = periodized_power_spectrum(lattice, omega);
  for (const auto& v : h) result.max_deviation = std::max(result.max_deviation, std::abs(v - target));
  result.is_constant = result.max_deviation < tolerance;
  return result;
}

TranslateOrthonormality translate_orthonormality_evidence(const LatticeSubgroup& lattice,
                                                          const MeasuredSet& omega,
                                                          double tolerance) {
  require_same_group(lattice, omega);
  require_nonempty(omega);
  TranslateOrthonormality out;

  const Rational measure = omega.measure();
  out.by_gram = true;
  for (auto lambda : lattice.element_indices()) {
    const Rational entry = overlap_measure(omega, lambda) / measure;
    out.gram_row.push_back(entry);
    const Rational expected = lambda == 0 ? Rational(1) : Rational(0);
    if (entry != expected) out.by_gram = false;
  }

  // Spectral route: sum of |F(phi)(chi + mu)|^2 over the annihilator equals |Q_L|.
  const double target = to_double(lattice_sizes(lattice).primal);
  const double norm = to_double(measure);
  const auto h = periodized_power_spectrum(lattice, omega);
  for (const auto& v : h) {
    out.spectral_deviation = std::max(out.spectral_deviation, std::abs(v.real() / norm - target));
  }
  out.by_spectrum = out.spectral_deviation < tolerance;
  return out;
}

bool check_translate_orthonormality(const LatticeSubgroup& lattice, const MeasuredSet& omega,
                                    double tolerance) {
  const auto evidence = translate_orthonormality_evidence(lattice, omega, tolerance);
  if (evidence.by_gram != evidence.by_spectrum) {
    throw std::logic_error("Gram and spectral orthonormality tests disagree");
  }
  return evidence.by_gram;
}

std::uint64_t subtiling_count(std::size_t index, std::size_t size, std::size_t k) {
  if (k > index) return 0;
  std::uint64_t binom = 1;
  for (std::size_t i = 0; i < k; ++i) binom = binom * (index - i) / (i + 1);
  std::uint64_t power = 1;
  for (std::size_t i = 0; i < k; ++i) power *= size;
  return binom * power;
}

std::vector<MeasuredSet> enumerate_subtilings(const LatticeSubgroup& lattice, std::size_t k) {
  const auto& group = lattice.parent();
  if (k > lattice.index()) {
    throw PreconditionError("subset size " + std::to_string(k) + " exceeds [G:L] = " +
                            std::to_string(lattice.index()));
  }
  if (k == 0) return {MeasuredSet(group, {})};

  const std::size_t n = group.order();
  // Points are chosen in increasing index order, so each branch emits
  // lexicographically sorted sets; branches are merged by first point.
  std::vector<std::vector<MeasuredSet>> by_first(n);
  detail::parallel_for(n, [&](std::size_t first) {
    std::vector<std::size_t> chosen{first};
    std::vector<unsigned char> used(lattice.index(), 0);
    used[lattice.coset_of(first)] = 1;
    auto& out = by_first[first];
    auto descend = [&](auto&& self, std::size_t from) -> void {
      if (chosen.size() == k) {
        out.emplace_back(group, chosen);
        return;
      }
      for (std::size_t g = from; g < n; ++g) {
        const auto c = lattice.coset_of(g);
        if (used[c]) continue;
        used[c] = 1;
        chosen.push_back(g);
        self(self, g + 1);
        chosen.pop_back();
        used[c] = 0;
      }
    };
    descend(descend, first + 1);
  });

  std::vector<MeasuredSet> all;
  for (auto& part : by_first) {
    for (auto& s : part) all.push_back(std::move(s));
  }
  return all;
}

MeasuredSet extend_to_tiling(const LatticeSubgroup& lattice, const MeasuredSet& omega) {
  require_same_group(lattice, omega);
  std::vector<unsigned char> hit(lattice.index(), 0);
  for (auto g : omega.indices()) {
    auto& h = hit[lattice.coset_of(g)];
    if (h) throw PreconditionError("set is not sub-tiling; it cannot extend to a tiling set");
    h = 1;
  }
  auto points = omega.indices();
  for (std::size_t c = 0; c < hit.size(); ++c) {
    if (!hit[c]) points.push_back(lattice.coset_leaders()[c]);
  }
  return MeasuredSet(omega.parent(), std::move(points));
}

}  // namespace subtile
