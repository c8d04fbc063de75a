#ifndef MVQ_SUBUNIVERSE_HPP
#define MVQ_SUBUNIVERSE_HPP

#include <cstdint>
#include <vector>

#include "mvq/algebra.hpp"
#include "mvq/budget.hpp"

namespace mvq {

/// A subset of a product algebra containing 0 and closed under the truncated
/// sum and the involution (hence also containing 1 = ¬0). Elements are kept
/// as sorted parent carrier indices.
class Subuniverse {
 public:
  Subuniverse(ProductAlgebra parent, std::vector<std::uint64_t> sorted_indices);

  const ProductAlgebra& parent() const noexcept { return parent_; }
  const std::vector<std::uint64_t>& element_indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  bool contains(std::uint64_t parent_index) const;
  bool is_whole() const;
  std::vector<Element> elements() const;

  friend bool operator==(const Subuniverse&, const Subuniverse&) = default;

 private:
  ProductAlgebra parent_;
  std::vector<std::uint64_t> indices_;
};

/// Least subuniverse containing the generators: the closure of
/// generators ∪ {0} under ⊕ and ¬. Pure fixed-point computation, no budget.
Subuniverse generate_subuniverse(const ProductAlgebra& algebra,
                                 const std::vector<Element>& generators);

/// Every subuniverse, by iterated one-point extensions of the minimal
/// subuniverse. Sorted by (size, element list). Budget-gated on the carrier.
std::vector<Subuniverse> all_subuniverses(const ProductAlgebra& algebra,
                                          const Budget& budget = {});

/// Proper subuniverses with nothing strictly between them and the whole
/// algebra. The trivial algebra and L_1 have none.
std::vector<Subuniverse> maximal_proper_subuniverses(const ProductAlgebra& algebra,
                                                     const Budget& budget = {});

}  // namespace mvq

#endif  // MVQ_SUBUNIVERSE_HPP
