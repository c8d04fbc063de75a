#include "mvq/lex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "mvq/errors.hpp"

namespace mvq {

LexChain::LexChain(int modulus) : n_(modulus) {
  if (modulus < 1) throw std::invalid_argument("lex chain modulus must be positive");
}

bool LexChain::is_valid(const LexElement& a) const noexcept {
  if (a.numerator < 0 || a.numerator > n_) return false;
  if (a.numerator == 0) return a.second >= 0;
  if (a.numerator == n_) return a.second <= 0;
  return true;
}

void LexChain::require_valid(const LexElement& a) const {
  if (!is_valid(a)) {
    throw invalid_element("(" + std::to_string(a.numerator) + "/" + std::to_string(n_) + ", " +
                          std::to_string(a.second) + ") lies outside the unit interval");
  }
}

LexElement LexChain::add(const LexElement& a, const LexElement& b) const {
  require_valid(a);
  require_valid(b);
  const int k = a.numerator + b.numerator;
  const long long i = a.second + b.second;
  if (k > n_) return one();
  if (k == n_) return {n_, std::min<long long>(0, i)};
  return {k, i};
}

LexElement LexChain::neg(const LexElement& a) const {
  require_valid(a);
  return {n_ - a.numerator, -a.second};
}

std::uint64_t lex_closure_growth(int n, const std::vector<LexElement>& generators,
                                 std::uint64_t bound) {
  const LexChain chain(n);

  std::set<LexElement> closure;
  std::vector<LexElement> worklist;
  auto insert = [&](const LexElement& e) {
    if (closure.insert(e).second) worklist.push_back(e);
  };

  insert(chain.zero());
  for (const LexElement& g : generators) {
    chain.require_valid(g);
    insert(g);
  }

  for (std::size_t next = 0; next < worklist.size(); ++next) {
    if (closure.size() > bound) return bound + 1;
    const LexElement x = worklist[next];
    insert(chain.neg(x));
    const std::size_t known = worklist.size();
    for (std::size_t j = 0; j < known; ++j) {
      insert(chain.add(x, worklist[j]));
      if (closure.size() > bound) return bound + 1;
    }
  }
  return closure.size();
}

}  // namespace mvq
