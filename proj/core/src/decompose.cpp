#include "mvq/decompose.hpp"

#include <map>
#include <stdexcept>

#include "mvq/hom.hpp"

namespace mvq {

Signature canonical_decomposition(const ProductAlgebra& algebra) { return algebra.signature(); }

namespace {

/// Kernel of a map as a partition in normal form: classes numbered by first
/// occurrence, so equal partitions compare equal as vectors.
std::vector<std::uint32_t> kernel_partition(const std::vector<std::uint32_t>& map) {
  std::vector<std::uint32_t> classes(map.size());
  std::map<std::uint32_t, std::uint32_t> seen;
  for (std::size_t i = 0; i < map.size(); ++i) {
    const auto it = seen.emplace(map[i], static_cast<std::uint32_t>(seen.size())).first;
    classes[i] = it->second;
  }
  return classes;
}

}  // namespace

Signature decompose_table(const TableAlgebra& table, const std::vector<int>& candidate_moduli,
                          const Budget& budget) {
  if (table.size == 1) return Signature{};

  std::map<std::vector<std::uint32_t>, int> factor_of_kernel;
  for (int m : candidate_moduli) {
    const TableAlgebra chain = make_table(ProductAlgebra::chain(m), budget);
    for (const Homomorphism& h : enumerate_homomorphisms(table, chain)) {
      if (!is_surjective(chain, h.map)) continue;
      auto kernel = kernel_partition(h.map);
      const auto [it, fresh] = factor_of_kernel.emplace(std::move(kernel), m);
      if (!fresh && it->second != m) {
        throw std::logic_error("decomposition: one kernel reached two distinct chains");
      }
    }
  }

  std::vector<int> factors;
  std::uint64_t product = 1;
  for (const auto& [kernel, m] : factor_of_kernel) {
    factors.push_back(m);
    product *= static_cast<std::uint64_t>(m) + 1;
  }
  if (product != table.size) {
    throw std::logic_error("decomposition: factor carriers do not multiply to the carrier size");
  }
  return Signature(std::move(factors));
}

Signature canonical_decomposition(const Subuniverse& sub, const Budget& budget) {
  const TableAlgebra table = make_table(sub, budget);
  return decompose_table(table, chain_divisors(sub.parent().signature()), budget);
}

}  // namespace mvq
