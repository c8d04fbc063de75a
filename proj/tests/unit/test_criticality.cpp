#include "doctest.h"
#include "mvq/criticality.hpp"
#include "mvq/errors.hpp"

#include <algorithm>

using namespace mvq;

TEST_CASE("divisibility criterion on signatures") {
  CHECK(check_critical_signature(Signature({2, 3})));      // two distinct primes
  CHECK(check_critical_signature(Signature({1, 2})));
  CHECK_FALSE(check_critical_signature(Signature({1, 2, 3})));
  CHECK_FALSE(check_critical_signature(Signature({2, 2})));
  CHECK(check_critical_signature(Signature({2, 4})));      // one divisible entry
  CHECK_FALSE(check_critical_signature(Signature({1, 2, 4})));
  CHECK(check_critical_signature(Signature({2, 3, 6})));   // 6 is the unique divisible entry
  for (int n = 1; n <= 8; ++n) CHECK(check_critical_signature(Signature({n})));

  CHECK_THROWS_AS(check_critical_signature(Signature{}), std::invalid_argument);
  CHECK_FALSE(is_critical(ProductAlgebra{}));  // the trivial algebra is not critical
}

TEST_CASE("breakdown reports the divisible entries") {
  const auto b = criticality_breakdown(Signature({1, 2, 4}));
  CHECK(b.distinct);
  CHECK(b.divisible_entries == std::vector<int>{2, 4});
  CHECK_FALSE(b.critical);
}

TEST_CASE("oracle matches the criterion on pinned cases") {
  CHECK(critical_oracle(ProductAlgebra({2, 3})));
  CHECK_FALSE(critical_oracle(ProductAlgebra({1, 2, 4})));
  CHECK_FALSE(critical_oracle(ProductAlgebra({2, 2})));
  CHECK_FALSE(critical_oracle(ProductAlgebra{}));
  for (int n = 1; n <= 6; ++n) CHECK(critical_oracle(ProductAlgebra::chain(n)));
}

TEST_CASE("oracle respects the carrier budget") {
  Budget tight;
  tight.carrier_cap = 10;
  CHECK_THROWS_AS(critical_oracle(ProductAlgebra({2, 3}), tight), budget_exceeded);
}

TEST_CASE("critical enumeration for two primes") {
  const auto criticals = enumerate_criticals(Signature({2, 3}));
  const std::vector<Signature> expected = {Signature({1}),    Signature({2}),
                                           Signature({3}),    Signature({1, 2}),
                                           Signature({1, 3}), Signature({2, 3})};
  CHECK(criticals == expected);
}

TEST_CASE("critical enumeration for a prime power") {
  const auto criticals = enumerate_criticals(Signature({8}));
  std::vector<Signature> expected;
  for (int s : {1, 2, 4, 8}) expected.emplace_back(std::vector<int>{s});
  for (int n : {1, 2, 4}) {
    for (int m : {2, 4, 8}) {
      if (n < m) expected.emplace_back(std::vector<int>{n, m});
    }
  }
  std::sort(expected.begin(), expected.end());
  CHECK(criticals == expected);
  CHECK(criticals.size() == 10);
}

TEST_CASE("critical enumeration properties") {
  for (const std::vector<int>& variety : {std::vector<int>{1}, {4}, {6}, {2, 3}, {12}}) {
    const Signature v(variety);
    const auto criticals = enumerate_criticals(v);
    CHECK(!criticals.empty());
    for (const Signature& c : criticals) CHECK(check_critical_signature(c));
    CHECK(std::find(criticals.begin(), criticals.end(), Signature({1})) != criticals.end());
    for (int m : variety) {
      CHECK(std::find(criticals.begin(), criticals.end(), Signature({m})) != criticals.end());
    }
  }
  CHECK(enumerate_criticals(Signature({1})) == std::vector<Signature>{Signature({1})});
}

TEST_CASE("critical enumeration is monotone in the divisor closure") {
  const auto subset = [](const std::vector<Signature>& a, const std::vector<Signature>& b) {
    for (const Signature& s : a) {
      if (std::find(b.begin(), b.end(), s) == b.end()) return false;
    }
    return true;
  };
  CHECK(subset(enumerate_criticals(Signature({2})), enumerate_criticals(Signature({4}))));
  CHECK(subset(enumerate_criticals(Signature({2, 3})), enumerate_criticals(Signature({6}))));
  CHECK(subset(enumerate_criticals(Signature({4})), enumerate_criticals(Signature({4, 6}))));
}

TEST_CASE("criterion agrees with the oracle on every small signature") {
  // Entries up to 4, length up to 2 here; the acceptance suite widens this
  // to entries up to 6 and length 3.
  std::vector<std::vector<int>> sigs;
  for (int a = 1; a <= 4; ++a) {
    sigs.push_back({a});
    for (int b = a; b <= 4; ++b) sigs.push_back({a, b});
  }
  for (const auto& moduli : sigs) {
    const ProductAlgebra algebra(moduli);
    CHECK(is_critical(algebra) == critical_oracle(algebra));
  }
}
