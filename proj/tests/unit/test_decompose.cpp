#include "doctest.h"
#include "mvq/decompose.hpp"
#include "mvq/hom.hpp"
#include "mvq/subuniverse.hpp"

using namespace mvq;

namespace {

Subuniverse whole(const ProductAlgebra& a) {
  std::vector<std::uint64_t> indices(a.carrier_size());
  for (std::uint64_t i = 0; i < indices.size(); ++i) indices[i] = i;
  return Subuniverse(a, std::move(indices));
}

}  // namespace

TEST_CASE("decomposition of generated subuniverses") {
  const ProductAlgebra l4 = ProductAlgebra::chain(4);
  const Subuniverse copy_of_l2 = generate_subuniverse(l4, {Element{2}});
  CHECK(canonical_decomposition(copy_of_l2) == Signature({2}));

  CHECK(canonical_decomposition(ProductAlgebra({2, 3})) == Signature({2, 3}));
  CHECK(canonical_decomposition(ProductAlgebra{}) == Signature{});

  // The two-element constants subalgebra is a copy of L_1.
  const Subuniverse constants = generate_subuniverse(ProductAlgebra({2, 3}), {});
  CHECK(canonical_decomposition(constants) == Signature({1}));

  // The diagonal of L_2 x L_2 is a copy of L_2, not of the full square.
  const ProductAlgebra square({2, 2});
  const Subuniverse diagonal = generate_subuniverse(square, {Element{1, 1}});
  CHECK(diagonal.size() == 3);
  CHECK(canonical_decomposition(diagonal) == Signature({2}));
}

TEST_CASE("kernel algorithm reproduces product signatures") {
  Budget roomy;
  roomy.carrier_cap = 400;
  std::vector<int> moduli;
  auto recurse = [&](auto&& self, int least) -> void {
    if (!moduli.empty()) {
      const ProductAlgebra a(moduli);
      CHECK(canonical_decomposition(whole(a), roomy) == a.signature());
    }
    if (moduli.size() == 3) return;
    for (int n = least; n <= 6; ++n) {
      moduli.push_back(n);
      self(self, n);
      moduli.pop_back();
    }
  };
  recurse(recurse, 1);
}

TEST_CASE("decomposed subuniverses are isomorphic to their signature product") {
  const ProductAlgebra a({2, 4});
  for (const Subuniverse& s : all_subuniverses(a)) {
    const Signature sig = canonical_decomposition(s);
    std::uint64_t expected_size = 1;
    for (int m : sig.moduli()) expected_size *= static_cast<std::uint64_t>(m) + 1;
    REQUIRE(expected_size == s.size());

    // An isomorphism onto the signature product must exist.
    const TableAlgebra st = make_table(s);
    const TableAlgebra pt = make_table(ProductAlgebra(sig.moduli()));
    bool bijective_found = false;
    for (const Homomorphism& h : enumerate_homomorphisms(st, pt)) {
      if (is_injective(h.map) && is_surjective(pt, h.map)) bijective_found = true;
    }
    CHECK(bijective_found);
  }
}
