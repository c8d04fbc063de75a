#ifndef MVQ_LEX_HPP
#define MVQ_LEX_HPP

#include <cstdint>
#include <vector>

namespace mvq {

/// An element (k/n, i) of the unit interval of the lexicographic product of
/// the chain group and the integers, with first coordinate dominant:
/// (0,0) <= (k/n, i) <= (1,0). These algebras are infinite but finitely
/// generated, witnessing that the full MV variety is not locally finite.
struct LexElement {
  int numerator = 0;        // k, with 0 <= k <= n
  long long second = 0;     // i, constrained by the interval bounds

  friend bool operator==(const LexElement&, const LexElement&) = default;
  friend auto operator<=>(const LexElement&, const LexElement&) = default;
};

/// Arithmetic of the lexicographic extension of L_n.
class LexChain {
 public:
  explicit LexChain(int modulus);

  int modulus() const noexcept { return n_; }
  bool is_valid(const LexElement& a) const noexcept;
  void require_valid(const LexElement& a) const;

  LexElement zero() const { return {0, 0}; }
  LexElement one() const { return {n_, 0}; }
  /// Truncated sum: the lexicographic minimum of (1,0) and the group sum.
  LexElement add(const LexElement& a, const LexElement& b) const;
  LexElement neg(const LexElement& a) const;

 private:
  int n_;
};

/// Size of the closure of `generators` under ⊕ and ¬ in the lexicographic
/// extension of L_n, stopping once it exceeds `bound`. Returns the closure
/// size when it stabilises at or below the bound, and bound + 1 otherwise.
std::uint64_t lex_closure_growth(int n, const std::vector<LexElement>& generators,
                                 std::uint64_t bound);

}  // namespace mvq

#endif  // MVQ_LEX_HPP
