#include "mvq/table.hpp"

#include <algorithm>

#include "mvq/errors.hpp"
#include "mvq/subuniverse.hpp"

namespace mvq {

namespace {

void check_budget(std::uint64_t size, const Budget& budget) {
  if (size > budget.carrier_cap) {
    throw budget_exceeded("carrier too large for table-based search", size, budget.carrier_cap);
  }
}

}  // namespace

TableAlgebra make_table(const ProductAlgebra& algebra, const Budget& budget) {
  const std::uint64_t size = algebra.carrier_size();
  check_budget(size, budget);

  TableAlgebra t;
  t.size = static_cast<std::uint32_t>(size);
  t.zero = static_cast<std::uint32_t>(algebra.index_of(algebra.zero()));
  t.one = static_cast<std::uint32_t>(algebra.index_of(algebra.one()));
  t.add_table.resize(t.size * t.size);
  t.neg_table.resize(t.size);

  std::vector<Element> elems;
  elems.reserve(t.size);
  for (std::uint32_t i = 0; i < t.size; ++i) elems.push_back(algebra.element_at(i));

  for (std::uint32_t i = 0; i < t.size; ++i) {
    t.neg_table[i] = static_cast<std::uint32_t>(algebra.index_of(algebra.neg(elems[i])));
    for (std::uint32_t j = 0; j < t.size; ++j) {
      t.add_table[i * t.size + j] =
          static_cast<std::uint32_t>(algebra.index_of(algebra.add(elems[i], elems[j])));
    }
  }
  return t;
}

TableAlgebra make_table(const Subuniverse& sub, const Budget& budget) {
  check_budget(sub.size(), budget);

  const ProductAlgebra& parent = sub.parent();
  const auto& indices = sub.element_indices();

  auto local_index = [&indices](std::uint64_t parent_index) {
    const auto it = std::lower_bound(indices.begin(), indices.end(), parent_index);
    return static_cast<std::uint32_t>(it - indices.begin());
  };

  TableAlgebra t;
  t.size = static_cast<std::uint32_t>(indices.size());
  t.zero = local_index(parent.index_of(parent.zero()));
  t.one = local_index(parent.index_of(parent.one()));
  t.add_table.resize(t.size * t.size);
  t.neg_table.resize(t.size);

  std::vector<Element> elems = sub.elements();
  for (std::uint32_t i = 0; i < t.size; ++i) {
    t.neg_table[i] = local_index(parent.index_of(parent.neg(elems[i])));
    for (std::uint32_t j = 0; j < t.size; ++j) {
      t.add_table[i * t.size + j] = local_index(parent.index_of(parent.add(elems[i], elems[j])));
    }
  }
  return t;
}

}  // namespace mvq
