#include "doctest.h"
#include "mvq/hom.hpp"

#include <cmath>

using namespace mvq;

namespace {

// Independent oracle: filter every one of the |B|^|A| total maps by the
// exhaustive preservation predicate. Only for tiny pairs.
std::vector<std::vector<std::uint32_t>> brute_force_homs(const TableAlgebra& a,
                                                         const TableAlgebra& b) {
  REQUIRE(std::pow(static_cast<double>(b.size), static_cast<double>(a.size)) < 5e7);
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> map(a.size, 0);
  while (true) {
    if (is_homomorphism(a, b, map)) out.push_back(map);
    std::size_t i = map.size();
    while (i-- > 0) {
      if (++map[i] < b.size) break;
      map[i] = 0;
      if (i == 0) return out;
    }
  }
}

TableAlgebra table_of(std::vector<int> moduli) { return make_table(ProductAlgebra(std::move(moduli))); }

}  // namespace

TEST_CASE("homomorphism counts on chains") {
  // L_2 -> L_3: no image for the fixed point of ¬, so no homomorphism.
  CHECK(enumerate_homomorphisms(table_of({2}), table_of({3})).empty());

  // L_2 -> L_4: exactly the doubling embedding.
  const auto into_l4 = enumerate_homomorphisms(table_of({2}), table_of({4}));
  REQUIRE(into_l4.size() == 1);
  CHECK(into_l4[0].map == std::vector<std::uint32_t>{0, 2, 4});

  // L_1 -> L_1: only the identity.
  const auto rigid = enumerate_homomorphisms(table_of({1}), table_of({1}));
  REQUIRE(rigid.size() == 1);
  CHECK(rigid[0].map == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("search agrees with the brute-force oracle") {
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs = {
      {{2}, {2}}, {{2}, {4}}, {{2}, {3}}, {{3}, {6}}, {{1}, {2}},
      {{4}, {2}}, {{1, 2}, {2}}, {{2}, {1, 2}}, {{6}, {2, 3}}, {{}, {2}}, {{2}, {}},
  };
  for (const auto& [src, dst] : pairs) {
    const TableAlgebra a = table_of(src);
    const TableAlgebra b = table_of(dst);
    const auto expected = brute_force_homs(a, b);
    const auto got = enumerate_homomorphisms(a, b);
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].map == expected[i]);
  }
}

TEST_CASE("every returned map passes the preservation check; identity present") {
  for (const std::vector<int>& moduli : {std::vector<int>{2, 3}, {1, 4}, {2, 2}, {6}}) {
    const TableAlgebra t = table_of(moduli);
    const auto endos = enumerate_homomorphisms(t, t);
    bool identity_found = false;
    for (const Homomorphism& h : endos) {
      CHECK(is_homomorphism(t, t, h.map));
      std::vector<std::uint32_t> identity(t.size);
      for (std::uint32_t i = 0; i < t.size; ++i) identity[i] = i;
      if (h.map == identity) identity_found = true;
    }
    CHECK(identity_found);
  }
}

TEST_CASE("output is sorted by map table") {
  const auto homs = enumerate_homomorphisms(table_of({2, 3}), table_of({2, 3}));
  for (std::size_t i = 1; i < homs.size(); ++i) CHECK(homs[i - 1].map < homs[i].map);
}

TEST_CASE("chain embedding criterion matches injective hom existence") {
  for (int n = 1; n <= 8; ++n) {
    for (int m = 1; m <= 8; ++m) {
      const auto homs = enumerate_homomorphisms(table_of({n}), table_of({m}));
      bool injective_exists = false;
      for (const Homomorphism& h : homs) {
        if (is_injective(h.map)) injective_exists = true;
      }
      CHECK(chain_embeds(n, m) == injective_exists);
    }
  }
}

TEST_CASE("no homomorphism out of the trivial algebra into a nontrivial one") {
  CHECK(enumerate_homomorphisms(table_of({}), table_of({2})).empty());
  // Into the trivial algebra: exactly the collapse map.
  CHECK(enumerate_homomorphisms(table_of({2}), table_of({})).size() == 1);
}
