#ifndef MVQ_EVAL_HPP
#define MVQ_EVAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "mvq/algebra.hpp"
#include "mvq/budget.hpp"
#include "mvq/term.hpp"

namespace mvq {

/// Structural evaluation through the coordinatewise operations. The
/// assignment is indexed by variable number; a variable outside it raises
/// std::invalid_argument.
Element eval_term(const ProductAlgebra& algebra, const Term& term,
                  const std::vector<Element>& assignment);

struct SatisfactionResult {
  bool satisfied = true;
  std::vector<int> variables;                    // occurring variables, ascending
  std::optional<std::vector<Element>> witness;   // parallel to `variables`
};

/// Exhaustive check over all assignments, in lexicographic order with the
/// lowest-numbered variable most significant; the witness is the first
/// failing assignment. A variety-atom conclusion holds for an assignment iff
/// the algebra lies in the variety of the atom's chains. Budgeted by
/// |carrier|^{#variables}.
SatisfactionResult satisfies(const ProductAlgebra& algebra, const Quasiequation& q,
                             const Budget& budget = {});

/// "x0=2/3, x1=0/2" — witness rendering for diagnostics.
std::string format_witness(const ProductAlgebra& algebra, const SatisfactionResult& result);

}  // namespace mvq

#endif  // MVQ_EVAL_HPP
