// mvq — decision procedures for finite MV-algebras and their quasivarieties.
//
// Subcommands:
//   critical    divisibility criterion for criticality, optional brute-force oracle
//   inclusion   inclusion between quasivarieties given by generator families
//   lattice     the full subquasivariety lattice of a finite-chain variety
//   eval        exhaustive quasiequation checking over a product algebra
//   verify      built-in axiomatization families "3.1" (two primes) and "3.2" (prime power)
//   demo-nonlf  finitely generated infinite witness in the lexicographic chain extension
//
// Exit codes: 0 success, 1 usage or parse error, 2 criterion/oracle
// disagreement, 3 search budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mvq/mvq.hpp"

namespace {

using nlohmann::ordered_json;

std::vector<int> parse_moduli_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream stream(text);
  std::string part;
  while (std::getline(stream, part, ',')) {
    std::size_t used = 0;
    const int value = std::stoi(part, &used);
    if (used != part.size() || value < 1) {
      throw std::invalid_argument("invalid modulus '" + part + "'");
    }
    out.push_back(value);
  }
  if (out.empty()) throw std::invalid_argument("empty signature in family");
  return out;
}

// Families on the command line: ';' separates generators, ',' separates the
// factors of one generator. The empty string is the empty family.
std::vector<mvq::Signature> parse_family(const std::string& text) {
  std::vector<mvq::Signature> out;
  if (text.empty()) return out;
  std::stringstream stream(text);
  std::string part;
  while (std::getline(stream, part, ';')) {
    out.emplace_back(parse_moduli_list(part));
  }
  return out;
}

std::string node_label(const mvq::QuasivarietySpec& spec) {
  if (spec.trivial()) return "∅";
  std::string out = "{";
  for (std::size_t i = 0; i < spec.generators().size(); ++i) {
    if (i > 0) out += ';';
    out += spec.generators()[i].str();
  }
  return out + "}";
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file " + path);
  file << content;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

int run_critical(const std::vector<int>& moduli, bool with_oracle, const mvq::Budget& budget) {
  const mvq::Signature signature(moduli);
  const auto breakdown = mvq::criticality_breakdown(signature);

  std::cout << "signature: " << signature.str() << "\n";
  std::cout << "condition 1 (pairwise distinct): " << (breakdown.distinct ? "pass" : "fail")
            << "\n";
  std::cout << "condition 2 (at most one entry divisible by another): "
            << (breakdown.divisible_entries.size() <= 1 ? "pass" : "fail");
  if (breakdown.divisible_entries.empty()) {
    std::cout << " (none)";
  } else {
    std::cout << " (";
    for (std::size_t i = 0; i < breakdown.divisible_entries.size(); ++i) {
      if (i > 0) std::cout << ", ";
      std::cout << breakdown.divisible_entries[i];
    }
    std::cout << ")";
  }
  std::cout << "\n";

  if (!with_oracle) {
    std::cout << "critical: " << (breakdown.critical ? "true" : "false") << "\n";
    return 0;
  }
  const bool oracle = mvq::critical_oracle(mvq::ProductAlgebra(moduli), budget);
  const bool agree = oracle == breakdown.critical;
  std::cout << "critical: " << (breakdown.critical ? "true" : "false")
            << "; oracle: " << (oracle ? "true" : "false") << "; "
            << (agree ? "agree" : "DISAGREE") << "\n";
  return agree ? 0 : 2;
}

int run_inclusion(const std::string& left_text, const std::string& right_text) {
  const auto left = parse_family(left_text);
  const auto right = parse_family(right_text);

  if (left.empty()) {
    std::cout << "inclusion: true\n  (the trivial quasivariety lies below everything)\n";
    return 0;
  }
  if (right.empty()) {
    std::cout << "inclusion: false\n  (only the trivial quasivariety lies below the trivial "
                 "quasivariety)\n";
    return 0;
  }

  const auto report = mvq::qv_leq_explain(left, right);
  std::cout << "inclusion: " << (report.leq ? "true" : "false") << "\n";
  for (const auto& row : report.rows) {
    std::cout << "  generator " << row.generator.str() << ": ";
    if (row.ok) {
      std::cout << "H =";
      for (std::size_t i = 0; i < row.witness_h.size(); ++i) {
        std::cout << (i > 0 ? "; " : " ") << row.witness_h[i].str();
      }
      std::cout << "\n";
    } else {
      std::cout << "condition (" << row.failed_condition << ") fails at factor "
                << row.failing_factor << "\n";
    }
  }
  return 0;
}

int run_lattice(const std::vector<int>& moduli, const std::string& format,
                const std::string& output, const mvq::Budget& budget) {
  const mvq::QvLattice lattice = mvq::enumerate_subquasivarieties(mvq::Signature(moduli), budget);

  std::string content;
  if (format == "json") {
    ordered_json doc;
    doc["ambient"] = lattice.ambient.moduli();
    doc["nodes"] = ordered_json::array();
    for (std::size_t i = 0; i < lattice.node_count(); ++i) {
      ordered_json node;
      node["id"] = i;
      node["generators"] = ordered_json::array();
      for (const mvq::Signature& g : lattice.nodes[i].generators()) {
        node["generators"].push_back(g.moduli());
      }
      doc["nodes"].push_back(std::move(node));
    }
    doc["covers"] = ordered_json::array();
    for (const auto& [lower, upper] : lattice.cover_edges) {
      doc["covers"].push_back(ordered_json::array({lower, upper}));
    }
    content = doc.dump(2) + "\n";
  } else if (format == "dot") {
    std::ostringstream dot;
    dot << "digraph subquasivarieties {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < lattice.node_count(); ++i) {
      dot << "  q" << i << " [label=\"" << node_label(lattice.nodes[i]) << "\"];\n";
    }
    for (const auto& [lower, upper] : lattice.cover_edges) {
      dot << "  q" << lower << " -> q" << upper << ";\n";
    }
    dot << "}\n";
    content = dot.str();
  } else {
    std::ostringstream text;
    text << "ambient: " << lattice.ambient.str() << "\n";
    text << "criticals:";
    for (std::size_t i = 0; i < lattice.criticals.size(); ++i) {
      text << (i > 0 ? "; " : " ") << lattice.criticals[i].str();
    }
    text << "\nnodes: " << lattice.node_count() << "\n";
    for (std::size_t i = 0; i < lattice.node_count(); ++i) {
      text << "  " << i << ": " << node_label(lattice.nodes[i]) << "\n";
    }
    text << "covers (lower < upper):\n";
    for (const auto& [lower, upper] : lattice.cover_edges) {
      text << "  " << lower << " < " << upper << "\n";
    }
    content = text.str();
  }
  write_output(output, content);
  return 0;
}

int run_eval(const std::string& algebra_text, const std::string& qe_text,
             const mvq::Budget& budget) {
  const mvq::ProductAlgebra algebra(parse_moduli_list(algebra_text));
  const mvq::Quasiequation qe = mvq::parse_quasiequation(qe_text);
  const auto result = mvq::satisfies(algebra, qe, budget);
  if (result.satisfied) {
    std::cout << "true\n";
  } else {
    std::cout << "false; witness " << mvq::format_witness(algebra, result) << "\n";
  }
  return 0;
}

void print_axiomatization_report(const std::string& name, const mvq::AxiomatizationReport& report,
                                 const std::vector<mvq::Quasiequation>& axioms) {
  std::cout << name << " ... " << (report.pass ? "pass" : "FAIL") << "\n";
  if (report.pass) return;
  const auto* row = report.first_counterexample();
  if (row == nullptr) return;
  const std::string algebra =
      row->algebra.empty() ? std::string("trivial") : row->algebra.str();
  std::cout << "    counterexample: algebra " << algebra << " is "
            << (row->in_quasivariety ? "in" : "not in") << " the quasivariety but "
            << (row->satisfies_axioms ? "satisfies" : "fails") << " the axioms";
  if (!row->satisfies_axioms && row->failing_axiom >= 0) {
    std::cout << "; failing axiom: "
              << mvq::to_string(axioms[static_cast<std::size_t>(row->failing_axiom)]);
  }
  std::cout << "\n";
}

int run_verify_two_primes(int p, int q, const mvq::Budget& budget) {
  const mvq::Signature ambient({p, q});
  const auto items = mvq::two_primes_family(p, q);
  std::cout << "ambient variety: V(L_" << p << ", L_" << q << "); criticals: "
            << mvq::enumerate_criticals(ambient).size() << "\n";
  int passed = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto report = mvq::verify_axiomatization(items[i].spec, items[i].axioms, ambient, budget);
    std::cout << "item " << (i + 1) << ": ";
    print_axiomatization_report(items[i].name, report, items[i].axioms);
    if (report.pass) ++passed;
  }
  std::cout << passed << "/" << items.size() << " pass\n";
  return passed == static_cast<int>(items.size()) ? 0 : 2;
}

int run_verify_prime_power(int p, int r, const mvq::Budget& budget) {
  std::int64_t ambient_modulus = 1;
  for (int i = 0; i < r; ++i) ambient_modulus *= p;
  const mvq::Signature ambient({static_cast<int>(ambient_modulus)});
  const mvq::QvLattice lattice = mvq::enumerate_subquasivarieties(ambient, budget);

  std::cout << "ambient variety: V(L_" << ambient_modulus
            << "); nodes: " << lattice.node_count() << "\n";
  int verified = 0;
  bool all_ok = true;
  for (std::size_t i = 0; i < lattice.node_count(); ++i) {
    const auto cls = mvq::classify_prime_power_node(lattice.nodes[i], p, r);
    std::cout << "node " << i << " " << node_label(lattice.nodes[i]) << ": ";
    if (!cls.has_value()) {
      std::cout << "UNCLASSIFIED\n";
      all_ok = false;
      continue;
    }
    const auto axioms = mvq::prime_power_node_axioms(*cls, p);
    const auto report = mvq::verify_axiomatization(lattice.nodes[i], axioms, ambient, budget);
    print_axiomatization_report(mvq::describe(*cls, p), report, axioms);
    if (report.pass) {
      ++verified;
    } else {
      all_ok = false;
    }
  }
  std::cout << verified << "/" << lattice.node_count() << " classified and verified\n";
  return all_ok ? 0 : 2;
}

int run_demo_nonlf(std::uint64_t bound) {
  std::cout << "algebra: lexicographic extension of L_1; generators: (0,1)\n";
  const std::uint64_t size = mvq::lex_closure_growth(1, {{0, 1}}, bound);
  if (size > bound) {
    std::cout << "closure size > " << bound << ": non-locally-finite witness\n";
  } else {
    std::cout << "closure stabilised at " << size << " elements\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decision procedures for finite MV-algebras and their quasivarieties"};
  app.require_subcommand(1);

  const mvq::Budget budget = mvq::Budget::from_env();

  std::vector<int> critical_moduli;
  bool critical_oracle_flag = false;
  auto* critical = app.add_subcommand("critical", "decide criticality of a product of chains");
  critical->add_option("moduli", critical_moduli, "chain moduli of the product")
      ->required()
      ->check(CLI::PositiveNumber);
  critical->add_flag("--oracle", critical_oracle_flag,
                     "cross-check with the brute-force separation oracle");

  std::string left_family, right_family;
  auto* inclusion =
      app.add_subcommand("inclusion", "decide Q(left) <= Q(right) for generator families");
  inclusion->add_option("--left", left_family, "left family, e.g. \"2,3\" or \"2;3\"")
      ->required();
  inclusion->add_option("--right", right_family, "right family")->required();

  std::vector<int> lattice_moduli;
  std::string lattice_format = "text";
  std::string lattice_output;
  auto* lattice = app.add_subcommand("lattice", "enumerate the subquasivariety lattice");
  lattice->add_option("moduli", lattice_moduli, "chain moduli of the ambient variety")
      ->required()
      ->check(CLI::PositiveNumber);
  lattice->add_option("--format", lattice_format, "output format")
      ->check(CLI::IsMember({"json", "dot", "text"}));
  lattice->add_option("-o,--output", lattice_output, "output path (default: stdout)");

  std::string eval_algebra, eval_qe;
  auto* eval = app.add_subcommand("eval", "evaluate a quasiequation over a product algebra");
  eval->add_option("--algebra", eval_algebra, "chain moduli, e.g. \"2,3\"")->required();
  eval->add_option("--qe", eval_qe, "quasiequation text")->required();

  std::string verify_which;
  int verify_p = 0, verify_q = 0, verify_r = 0;
  auto* verify = app.add_subcommand("verify", "verify a built-in axiomatization family");
  verify->add_option("family", verify_which, "family id: 3.1 or 3.2")
      ->required()
      ->check(CLI::IsMember({"3.1", "3.2"}));
  verify->add_option("--p", verify_p, "prime p")->required();
  verify->add_option("--q", verify_q, "prime q (family 3.1)");
  verify->add_option("--r", verify_r, "exponent r (family 3.2)");

  std::uint64_t demo_bound = 1000;
  auto* demo = app.add_subcommand("demo-nonlf", "closure growth in the lexicographic extension");
  demo->add_option("--bound", demo_bound, "growth bound")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (critical->parsed()) return run_critical(critical_moduli, critical_oracle_flag, budget);
    if (inclusion->parsed()) return run_inclusion(left_family, right_family);
    if (lattice->parsed())
      return run_lattice(lattice_moduli, lattice_format, lattice_output, budget);
    if (eval->parsed()) return run_eval(eval_algebra, eval_qe, budget);
    if (verify->parsed()) {
      if (!is_prime(verify_p) || verify_p > 7) {
        std::cerr << "error: --p must be a prime at most 7\n";
        return 1;
      }
      if (verify_which == "3.1") {
        if (!is_prime(verify_q) || verify_q > 7 || verify_q == verify_p) {
          std::cerr << "error: --q must be a prime at most 7, distinct from --p\n";
          return 1;
        }
        return run_verify_two_primes(verify_p, verify_q, budget);
      }
      if (verify_r < 1 || verify_r > 4) {
        std::cerr << "error: --r must lie in 1..4\n";
        return 1;
      }
      return run_verify_prime_power(verify_p, verify_r, budget);
    }
    if (demo->parsed()) return run_demo_nonlf(demo_bound);
  } catch (const mvq::budget_exceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const mvq::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
