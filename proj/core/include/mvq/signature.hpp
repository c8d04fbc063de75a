#ifndef MVQ_SIGNATURE_HPP
#define MVQ_SIGNATURE_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace mvq {

/// The multiset of chain moduli of a finite MV-algebra, kept sorted
/// ascending. Two finite MV-algebras are isomorphic exactly when their
/// signatures are equal; the empty signature is the trivial algebra.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<int> moduli);

  const std::vector<int>& moduli() const noexcept { return moduli_; }
  bool empty() const noexcept { return moduli_.empty(); }
  std::size_t size() const noexcept { return moduli_.size(); }

  /// "2,3" — factors joined by commas; empty string for the trivial algebra.
  std::string str() const;

  friend bool operator==(const Signature&, const Signature&) = default;

  /// Canonical order: shorter signatures first, then lexicographic.
  friend bool operator<(const Signature& a, const Signature& b);

 private:
  std::vector<int> moduli_;
};

/// Sorted distinct divisors of the entries of `s` (the moduli of all chains
/// inside the variety generated by the corresponding product algebra).
std::vector<int> chain_divisors(const Signature& s);

}  // namespace mvq

#endif  // MVQ_SIGNATURE_HPP
