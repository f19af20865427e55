#include "subtile/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace subtile {

namespace {

// Adds generator g to the closed set `members`, returning the enlarged closed set.
// H' = H + {0, g, 2g, ..., (m-1)g} where m is the least positive multiple with mg in H.
void extend_closure(const FiniteAbelianGroup& group, std::vector<std::size_t>& elements,
                    std::vector<unsigned char>& member, std::size_t g) {
  if (member[g]) return;
  const std::vector<std::size_t> base = elements;
  std::size_t multiple = g;
  while (!member[multiple]) {
    for (std::size_t h : base) {
      const std::size_t x = group.add_index(h, multiple);
      member[x] = 1;
      elements.push_back(x);
    }
    multiple = group.add_index(multiple, g);
  }
}

}  // namespace

LatticeSubgroup::LatticeSubgroup(FiniteAbelianGroup parent, std::vector<GroupElement> generators,
                                 std::vector<std::size_t> elements)
    : parent_(std::move(parent)), generators_(std::move(generators)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  const std::size_t n = parent_.order();
  member_.assign(n, 0);
  for (auto e : elements_) member_[e] = 1;

  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  coset_.assign(n, unassigned);
  for (std::size_t g = 0; g < n; ++g) {
    if (coset_[g] != unassigned) continue;
    const std::size_t label = leaders_.size();
    leaders_.push_back(g);
    for (auto lambda : elements_) coset_[parent_.add_index(g, lambda)] = label;
  }
}

std::vector<GroupElement> LatticeSubgroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(elements_.size());
  for (auto e : elements_) out.push_back(parent_.element_at(e));
  return out;
}

LatticeSubgroup subgroup_from_index_generators(const FiniteAbelianGroup& group,
                                               std::span<const std::size_t> generators) {
  std::vector<std::size_t> elements{0};
  std::vector<unsigned char> member(group.order(), 0);
  member[0] = 1;
  std::vector<GroupElement> gens;
  for (auto g : generators) {
    if (g >= group.order()) throw StructuralError("generator index out of range");
    gens.push_back(group.element_at(g));
    extend_closure(group, elements, member, g);
  }
  return LatticeSubgroup(group, std::move(gens), std::move(elements));
}

LatticeSubgroup subgroup_from_generators(const FiniteAbelianGroup& group,
                                         std::span<const GroupElement> generators) {
  std::vector<std::size_t> indices;
  indices.reserve(generators.size());
  for (const auto& g : generators) indices.push_back(group.index_of(g));
  return subgroup_from_index_generators(group, indices);
}

std::vector<LatticeSubgroup> all_subgroups(const FiniteAbelianGroup& group) {
  // Breadth-first over <H, g>, deduplicated on the sorted element list.
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> seen;  // elements -> generators
  std::vector<std::vector<std::size_t>> frontier{{}};
  seen.emplace(std::vector<std::size_t>{0}, std::vector<std::size_t>{});
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& gens : frontier) {
      const auto h = subgroup_from_index_generators(group, gens);
      for (std::size_t g = 0; g < group.order(); ++g) {
        if (h.contains_index(g)) continue;
        auto extended = gens;
        extended.push_back(g);
        auto bigger = subgroup_from_index_generators(group, extended);
        if (seen.emplace(bigger.element_indices(), extended).second) next.push_back(extended);
      }
    }
    frontier = std::move(next);
  }
  std::vector<LatticeSubgroup> out;
  out.reserve(seen.size());
  for (const auto& [elements, gens] : seen) out.push_back(subgroup_from_index_generators(group, gens));
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.element_indices() < b.element_indices();
  });
  return out;
}

std::vector<Character> DualLattice::characters() const {
  std::vector<Character> out;
  out.reserve(size());
  for (auto i : character_indices()) out.push_back(subgroup_.parent().character_at(i));
  return out;
}

DualLattice annihilator(const LatticeSubgroup& lattice) {
  const auto& group = lattice.parent();
  const auto dual = group.dual();
  std::vector<std::size_t> gen_indices;
  for (const auto& g : lattice.generators()) gen_indices.push_back(group.index_of(g));

  // Greedy generating set: each new annihilating character not yet in the
  // closure becomes a generator.
  std::vector<std::size_t> elements{0};
  std::vector<unsigned char> member(group.order(), 0);
  member[0] = 1;
  std::vector<std::size_t> dual_gens;
  for (std::size_t chi = 0; chi < group.order(); ++chi) {
    if (member[chi]) continue;
    const bool annihilates = std::all_of(gen_indices.begin(), gen_indices.end(), [&](auto g) {
      return group.pairing_exponent(chi, g) == 0;
    });
    if (!annihilates) continue;
    dual_gens.push_back(chi);
    extend_closure(dual, elements, member, chi);
  }
  return DualLattice(subgroup_from_index_generators(dual, dual_gens));
}

CrossSection cross_section(const LatticeSubgroup& lattice) {
  CrossSection section;
  section.indices = lattice.coset_leaders();
  for (auto q : section.indices) section.representatives.push_back(lattice.parent().element_at(q));
  section.size = Rational(static_cast<std::int64_t>(lattice.index())) * lattice.parent().weight_g();
  return section;
}

CrossSection randomized_cross_section(const LatticeSubgroup& lattice, std::mt19937_64& rng) {
  const auto& group = lattice.parent();
  CrossSection section = cross_section(lattice);
  std::uniform_int_distribution<std::size_t> pick(0, lattice.size() - 1);
  for (std::size_t i = 0; i < section.indices.size(); ++i) {
    const auto shift = lattice.element_indices()[pick(rng)];
    section.indices[i] = group.add_index(section.indices[i], shift);
    section.representatives[i] = group.element_at(section.indices[i]);
  }
  return section;
}

LatticeSizes lattice_sizes(const LatticeSubgroup& lattice) {
  const auto& group = lattice.parent();
  return {Rational(static_cast<std::int64_t>(lattice.index())) * group.weight_g(),
          Rational(static_cast<std::int64_t>(lattice.size())) * group.weight_dual()};
}

WeilSides weil_check(const LatticeSubgroup& lattice, const FunctionTable& f) {
  return weil_check(lattice, f, cross_section(lattice));
}

WeilSides weil_check(const LatticeSubgroup& lattice, const FunctionTable& f,
                     const CrossSection& section) {
  const auto& group = lattice.parent();
  if (f.size() != group.order()) throw StructuralError("function table size does not match |G|");
  Complex total = 0.0;
  for (const auto& v : f) total += v;

  Complex quotient = 0.0;
  for (auto q : section.indices) {
    Complex fiber = 0.0;
    for (auto lambda : lattice.element_indices()) fiber += f[group.add_index(q, lambda)];
    quotient += fiber;
  }
  quotient /= static_cast<double>(lattice.index());
  return {group.weight() * total, to_double(section.size) * quotient};
}

}  // namespace subtile
