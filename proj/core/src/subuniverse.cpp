#include "mvq/subuniverse.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "mvq/errors.hpp"
#include "mvq/table.hpp"

namespace mvq {

Subuniverse::Subuniverse(ProductAlgebra parent, std::vector<std::uint64_t> sorted_indices)
    : parent_(std::move(parent)), indices_(std::move(sorted_indices)) {
  if (!std::is_sorted(indices_.begin(), indices_.end())) {
    throw std::invalid_argument("subuniverse element indices must be sorted");
  }
}

bool Subuniverse::contains(std::uint64_t parent_index) const {
  return std::binary_search(indices_.begin(), indices_.end(), parent_index);
}

bool Subuniverse::is_whole() const { return indices_.size() == parent_.carrier_size(); }

std::vector<Element> Subuniverse::elements() const {
  std::vector<Element> out;
  out.reserve(indices_.size());
  for (std::uint64_t i : indices_) out.push_back(parent_.element_at(i));
  return out;
}

Subuniverse generate_subuniverse(const ProductAlgebra& algebra,
                                 const std::vector<Element>& generators) {
  std::map<std::uint64_t, Element> closure;
  std::vector<std::uint64_t> worklist;

  auto insert = [&](const Element& e) {
    const std::uint64_t idx = algebra.index_of(e);
    if (closure.emplace(idx, e).second) worklist.push_back(idx);
  };

  insert(algebra.zero());
  for (const Element& g : generators) {
    algebra.require_valid(g);
    insert(g);
  }

  // One-step closure until fixed point: ¬x and x ⊕ y for all known x, y.
  for (std::size_t next = 0; next < worklist.size(); ++next) {
    const Element x = closure.at(worklist[next]);
    insert(algebra.neg(x));
    const std::size_t known = worklist.size();
    for (std::size_t j = 0; j < known; ++j) {
      const Element y = closure.at(worklist[j]);
      insert(algebra.add(x, y));
    }
  }

  std::vector<std::uint64_t> sorted;
  sorted.reserve(closure.size());
  for (const auto& [idx, elem] : closure) sorted.push_back(idx);
  return Subuniverse(algebra, std::move(sorted));
}

namespace {

std::vector<std::uint32_t> close_set(const TableAlgebra& t, std::vector<std::uint32_t> seed) {
  std::vector<bool> in(t.size, false);
  std::vector<std::uint32_t> members;
  auto insert = [&](std::uint32_t x) {
    if (!in[x]) {
      in[x] = true;
      members.push_back(x);
    }
  };
  insert(t.zero);
  for (std::uint32_t x : seed) insert(x);
  for (std::size_t next = 0; next < members.size(); ++next) {
    const std::uint32_t x = members[next];
    insert(t.neg(x));
    for (std::size_t j = 0; j <= next; ++j) insert(t.add(x, members[j]));
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

std::vector<Subuniverse> all_subuniverses(const ProductAlgebra& algebra, const Budget& budget) {
  const TableAlgebra t = make_table(algebra, budget);

  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::vector<std::uint32_t>> queue;
  queue.push_back(close_set(t, {}));
  seen.insert(queue.front());

  // One-point extension: every subuniverse arises by repeatedly adjoining a
  // single new element to a smaller one and closing.
  for (std::size_t next = 0; next < queue.size(); ++next) {
    const std::vector<std::uint32_t> current = queue[next];
    for (std::uint32_t x = 0; x < t.size; ++x) {
      if (std::binary_search(current.begin(), current.end(), x)) continue;
      std::vector<std::uint32_t> seed = current;
      seed.push_back(x);
      auto extended = close_set(t, std::move(seed));
      if (seen.insert(extended).second) queue.push_back(std::move(extended));
    }
  }

  std::vector<std::vector<std::uint32_t>> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  std::vector<Subuniverse> out;
  out.reserve(sorted.size());
  for (const auto& members : sorted) {
    std::vector<std::uint64_t> indices(members.begin(), members.end());
    out.emplace_back(algebra, std::move(indices));
  }
  return out;
}

std::vector<Subuniverse> maximal_proper_subuniverses(const ProductAlgebra& algebra,
                                                     const Budget& budget) {
  const std::vector<Subuniverse> all = all_subuniverses(algebra, budget);
  const std::uint64_t whole = algebra.carrier_size();

  auto subset = [](const Subuniverse& a, const Subuniverse& b) {
    return std::includes(b.element_indices().begin(), b.element_indices().end(),
                         a.element_indices().begin(), a.element_indices().end());
  };

  std::vector<Subuniverse> out;
  for (const Subuniverse& s : all) {
    if (s.size() == whole) continue;
    bool maximal = true;
    for (const Subuniverse& larger : all) {
      if (larger.size() == whole || larger.size() <= s.size()) continue;
      if (subset(s, larger)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

}  // namespace mvq
