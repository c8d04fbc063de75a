#ifndef MVQ_DECOMPOSE_HPP
#define MVQ_DECOMPOSE_HPP

#include <vector>

#include "mvq/algebra.hpp"
#include "mvq/budget.hpp"
#include "mvq/signature.hpp"
#include "mvq/subuniverse.hpp"
#include "mvq/table.hpp"

namespace mvq {

/// A product algebra is definitionally the product of its chains.
Signature canonical_decomposition(const ProductAlgebra& algebra);

/// Decompose a subuniverse into its chain factors. Kernels of surjections
/// onto chains are the maximal congruences; one distinct kernel per factor,
/// and the factor modulus is the chain surjected onto.
Signature canonical_decomposition(const Subuniverse& sub, const Budget& budget = {});

/// Worker on tables: candidate moduli must cover every possible chain factor
/// (divisors of the parent moduli suffice).
Signature decompose_table(const TableAlgebra& table, const std::vector<int>& candidate_moduli,
                          const Budget& budget = {});

}  // namespace mvq

#endif  // MVQ_DECOMPOSE_HPP
