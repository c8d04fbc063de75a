#ifndef MVQ_HOM_HPP
#define MVQ_HOM_HPP

#include <cstdint>
#include <vector>

#include "mvq/algebra.hpp"
#include "mvq/budget.hpp"
#include "mvq/table.hpp"

namespace mvq {

/// A homomorphism between finite MV-algebras, as the total map on source
/// carrier indices. map[i] is the target index of source element i.
struct Homomorphism {
  std::vector<std::uint32_t> map;

  friend bool operator==(const Homomorphism&, const Homomorphism&) = default;
};

bool is_homomorphism(const TableAlgebra& source, const TableAlgebra& target,
                     const std::vector<std::uint32_t>& map);
bool is_surjective(const TableAlgebra& target, const std::vector<std::uint32_t>& map);
bool is_injective(const std::vector<std::uint32_t>& map);

/// Complete list of homomorphisms source -> target, sorted by map table.
/// Backtracking over a greedily chosen generating set of the source, with
/// closure propagation after each image choice.
std::vector<Homomorphism> enumerate_homomorphisms(const TableAlgebra& source,
                                                  const TableAlgebra& target);

std::vector<Homomorphism> enumerate_homomorphisms(const ProductAlgebra& source,
                                                  const ProductAlgebra& target,
                                                  const Budget& budget = {});

/// Greedy generating sequence: repeatedly adjoin the smallest element not in
/// the closure of what was picked so far.
std::vector<std::uint32_t> greedy_generators(const TableAlgebra& algebra);

}  // namespace mvq

#endif  // MVQ_HOM_HPP
