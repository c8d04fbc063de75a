#ifndef MVQ_TERM_HPP
#define MVQ_TERM_HPP

#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace mvq {

enum class TermKind : unsigned char { Zero, One, Var, Neg, Add, Scalar };

struct TermNode;

/// Immutable shared term tree over the MV signature: variables, the
/// constants 0 and 1 (1 abbreviates ¬0), negation, truncated sum, and
/// scalar multiples n*t (the n-fold sum, with 0*t = 0).
using Term = std::shared_ptr<const TermNode>;

struct TermNode {
  TermKind kind;
  int var = 0;         // Var
  unsigned coeff = 0;  // Scalar
  Term lhs;            // Neg, Scalar, Add
  Term rhs;            // Add
};

Term t_zero();
Term t_one();
Term t_var(int index);
Term t_neg(Term t);
Term t_add(Term lhs, Term rhs);
Term t_scalar(unsigned coeff, Term t);

// Derived connectives, expanded into the core signature on construction.
Term t_odot(Term lhs, Term rhs);  // ¬(¬x ⊕ ¬y)
Term t_join(Term lhs, Term rhs);  // ¬(¬x ⊕ y) ⊕ y
Term t_meet(Term lhs, Term rhs);  // ¬(¬x ∨ ¬y)

bool term_equal(const Term& a, const Term& b);
void collect_variables(const Term& t, std::set<int>& out);

/// Syntactic elimination of One and Scalar: 1 becomes ¬0, n*t the n-fold
/// sum (0*t becomes 0). Idempotent.
Term desugar(const Term& t);

std::string to_string(const Term& t);

struct Equation {
  Term lhs;
  Term rhs;
};

/// Formal conclusion "the algebra lies in the variety of these chains",
/// evaluated structurally rather than through an explicit one-variable term.
struct VarietyAtom {
  std::vector<int> moduli;
  int var = 0;
};

/// Horn clause of equations: premises imply the conclusion, which is either
/// an equation or a variety atom. An equation alone has no premises.
struct Quasiequation {
  std::vector<Equation> premises;
  std::variant<Equation, VarietyAtom> conclusion;
};

bool quasiequation_equal(const Quasiequation& a, const Quasiequation& b);
std::string to_string(const Quasiequation& q);

/// Variables occurring in the quasiequation, ascending.
std::vector<int> quasiequation_variables(const Quasiequation& q);

/// Remaps variable indices to 0,1,... by first occurrence (premises in
/// order, then the conclusion).
Quasiequation normalize_variables(const Quasiequation& q);

}  // namespace mvq

#endif  // MVQ_TERM_HPP
