#ifndef MVQ_ALGEBRA_HPP
#define MVQ_ALGEBRA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mvq/signature.hpp"

namespace mvq {

/// An element of a finite product of Lukasiewicz chains, stored as its
/// vector of numerators: entry i holds the integer k_i denoting k_i / n_i.
/// Elements are exact; no rationals or floats anywhere.
using Element = std::vector<int>;

/// The finite MV-algebra L_{n_0} x ... x L_{n_{l-1}}, presented by its
/// ordered list of chain moduli. All operations act coordinatewise with
/// truncation at the unit. The empty list is the one-element algebra.
class ProductAlgebra {
 public:
  ProductAlgebra() = default;
  explicit ProductAlgebra(std::vector<int> moduli);

  /// The chain L_n as a one-factor product.
  static ProductAlgebra chain(int n) { return ProductAlgebra(std::vector<int>{n}); }

  const std::vector<int>& moduli() const noexcept { return moduli_; }
  std::size_t arity() const noexcept { return moduli_.size(); }
  bool is_trivial() const noexcept { return moduli_.empty(); }

  /// Product of (n_i + 1); throws std::overflow_error past 2^63.
  std::uint64_t carrier_size() const;

  bool is_valid(const Element& a) const noexcept;
  void require_valid(const Element& a) const;  // throws invalid_element

  Element zero() const;
  Element one() const;

  /// Truncated sum: coordinatewise min(n_i, a_i + b_i).
  Element add(const Element& a, const Element& b) const;
  /// Involution: coordinatewise n_i - a_i.
  Element neg(const Element& a) const;
  /// Dual product: coordinatewise max(0, a_i + b_i - n_i).
  Element odot(const Element& a, const Element& b) const;
  Element join(const Element& a, const Element& b) const;
  Element meet(const Element& a, const Element& b) const;
  bool leq(const Element& a, const Element& b) const;
  /// m-fold truncated sum: coordinatewise min(n_i, m * a_i); scalar(0, a) = 0.
  Element scalar(unsigned m, const Element& a) const;

  /// Rank of `a` in lexicographic order (first coordinate most significant).
  std::uint64_t index_of(const Element& a) const;
  Element element_at(std::uint64_t index) const;

  /// The isomorphism invariant: the moduli as a sorted multiset.
  Signature signature() const { return Signature(moduli_); }

  /// "2/3" for chains, "(1/2,2/3)" for longer products, "()" when trivial.
  std::string format_element(const Element& a) const;

  friend bool operator==(const ProductAlgebra&, const ProductAlgebra&) = default;

 private:
  std::vector<int> moduli_;
};

/// L_n is (isomorphic to) a subalgebra of L_m exactly when n divides m.
bool chain_embeds(int n, int m);

}  // namespace mvq

#endif  // MVQ_ALGEBRA_HPP
