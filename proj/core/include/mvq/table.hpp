#ifndef MVQ_TABLE_HPP
#define MVQ_TABLE_HPP

#include <cstdint>
#include <vector>

#include "mvq/algebra.hpp"
#include "mvq/budget.hpp"

namespace mvq {

class Subuniverse;

/// Dense operation tables over carrier indices 0..size-1. This is the
/// working representation for subuniverse lattices, homomorphism search and
/// the criticality oracle; building one is gated by the carrier budget.
struct TableAlgebra {
  std::uint32_t size = 1;
  std::uint32_t zero = 0;
  std::uint32_t one = 0;
  std::vector<std::uint32_t> add_table;  // size * size entries
  std::vector<std::uint32_t> neg_table;  // size entries

  std::uint32_t add(std::uint32_t i, std::uint32_t j) const { return add_table[i * size + j]; }
  std::uint32_t neg(std::uint32_t i) const { return neg_table[i]; }
};

TableAlgebra make_table(const ProductAlgebra& algebra, const Budget& budget = {});
TableAlgebra make_table(const Subuniverse& sub, const Budget& budget = {});

}  // namespace mvq

#endif  // MVQ_TABLE_HPP
