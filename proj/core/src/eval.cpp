#include "mvq/eval.hpp"

#include <stdexcept>

#include "mvq/errors.hpp"
#include "mvq/quasivariety.hpp"

namespace mvq {

Element eval_term(const ProductAlgebra& algebra, const Term& term,
                  const std::vector<Element>& assignment) {
  switch (term->kind) {
    case TermKind::Zero:
      return algebra.zero();
    case TermKind::One:
      return algebra.one();
    case TermKind::Var:
      if (static_cast<std::size_t>(term->var) >= assignment.size()) {
        throw std::invalid_argument("unassigned variable x" + std::to_string(term->var));
      }
      return assignment[static_cast<std::size_t>(term->var)];
    case TermKind::Neg:
      return algebra.neg(eval_term(algebra, term->lhs, assignment));
    case TermKind::Scalar:
      return algebra.scalar(term->coeff, eval_term(algebra, term->lhs, assignment));
    case TermKind::Add:
      return algebra.add(eval_term(algebra, term->lhs, assignment),
                         eval_term(algebra, term->rhs, assignment));
  }
  throw std::logic_error("unreachable term kind");
}

SatisfactionResult satisfies(const ProductAlgebra& algebra, const Quasiequation& q,
                             const Budget& budget) {
  SatisfactionResult result;
  result.variables = quasiequation_variables(q);

  const std::uint64_t carrier = algebra.carrier_size();
  std::uint64_t assignments = 1;
  for (std::size_t i = 0; i < result.variables.size(); ++i) {
    if (carrier != 0 && assignments > budget.assignment_cap / carrier) {
      throw budget_exceeded("assignment space " + std::to_string(result.variables.size()) +
                                " variables over carrier " + std::to_string(carrier),
                            0, budget.assignment_cap);
    }
    assignments *= carrier;
  }
  if (assignments > budget.assignment_cap) {
    throw budget_exceeded("assignment space " + std::to_string(result.variables.size()) +
                              " variables over carrier " + std::to_string(carrier),
                          assignments, budget.assignment_cap);
  }

  // Variety-atom conclusions do not depend on the assignment.
  bool conclusion_atom_holds = false;
  const bool atom_conclusion = std::holds_alternative<VarietyAtom>(q.conclusion);
  if (atom_conclusion) {
    const auto& atom = std::get<VarietyAtom>(q.conclusion);
    conclusion_atom_holds = variety_membership(algebra.signature(), Signature(atom.moduli));
  }

  const int max_var = result.variables.empty() ? -1 : result.variables.back();
  std::vector<Element> assignment(static_cast<std::size_t>(max_var + 1), algebra.zero());
  std::vector<std::uint64_t> odometer(result.variables.size(), 0);

  const auto set_assignment = [&]() {
    for (std::size_t i = 0; i < result.variables.size(); ++i) {
      assignment[static_cast<std::size_t>(result.variables[i])] =
          algebra.element_at(odometer[i]);
    }
  };

  for (std::uint64_t step = 0; step < assignments; ++step) {
    set_assignment();

    bool premises_hold = true;
    for (const Equation& eq : q.premises) {
      if (eval_term(algebra, eq.lhs, assignment) != eval_term(algebra, eq.rhs, assignment)) {
        premises_hold = false;
        break;
      }
    }
    if (premises_hold) {
      bool conclusion_holds;
      if (atom_conclusion) {
        conclusion_holds = conclusion_atom_holds;
      } else {
        const auto& eq = std::get<Equation>(q.conclusion);
        conclusion_holds =
            eval_term(algebra, eq.lhs, assignment) == eval_term(algebra, eq.rhs, assignment);
      }
      if (!conclusion_holds) {
        result.satisfied = false;
        std::vector<Element> witness;
        for (std::size_t i = 0; i < result.variables.size(); ++i) {
          witness.push_back(assignment[static_cast<std::size_t>(result.variables[i])]);
        }
        result.witness = std::move(witness);
        return result;
      }
    }

    // Advance the odometer; the last variable varies fastest.
    for (std::size_t i = result.variables.size(); i-- > 0;) {
      if (++odometer[i] < carrier) break;
      odometer[i] = 0;
    }
  }
  return result;
}

std::string format_witness(const ProductAlgebra& algebra, const SatisfactionResult& result) {
  if (!result.witness) return {};
  std::string out;
  for (std::size_t i = 0; i < result.variables.size(); ++i) {
    if (i > 0) out += ", ";
    out += "x" + std::to_string(result.variables[i]) + "=" +
           algebra.format_element((*result.witness)[i]);
  }
  return out;
}

}  // namespace mvq
