#ifndef MVQ_CRITICALITY_HPP
#define MVQ_CRITICALITY_HPP

#include <vector>

#include "mvq/algebra.hpp"
#include "mvq/budget.hpp"
#include "mvq/signature.hpp"

namespace mvq {

/// Breakdown of the divisibility criterion for criticality on a signature:
/// (1) the moduli are pairwise distinct, and (2) at most one modulus is
/// divisible by another one.
struct CriticalityBreakdown {
  bool distinct = false;
  std::vector<int> divisible_entries;  // values n_j with some other n_i | n_j
  bool critical = false;
};

/// Throws std::invalid_argument on the empty signature (the trivial algebra
/// is not critical, but the criterion does not speak about it).
CriticalityBreakdown criticality_breakdown(const Signature& s);
bool check_critical_signature(const Signature& s);

/// Closed form: the trivial algebra is not critical, everything else is
/// decided by check_critical_signature on its decomposition. No budget.
bool is_critical(const ProductAlgebra& algebra);
bool is_critical(const Signature& s);

/// Brute-force oracle straight from the definition: A fails to be critical
/// exactly when homomorphisms into proper subalgebras — equivalently,
/// non-surjective endomorphisms — separate all pairs of points.
bool critical_oracle(const ProductAlgebra& algebra, const Budget& budget = {});

/// All critical signatures inside the variety generated by the chains of
/// `variety`: subsets of the divisor set that are divisibility antichains,
/// possibly extended by a single element that is a multiple of some member
/// and divides none. Sorted by (length, lex).
std::vector<Signature> enumerate_criticals(const Signature& variety);

}  // namespace mvq

#endif  // MVQ_CRITICALITY_HPP
