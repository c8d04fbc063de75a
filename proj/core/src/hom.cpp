#include "mvq/hom.hpp"

#include <algorithm>

namespace mvq {

bool is_homomorphism(const TableAlgebra& source, const TableAlgebra& target,
                     const std::vector<std::uint32_t>& map) {
  if (map.size() != source.size) return false;
  if (map[source.zero] != target.zero) return false;
  for (std::uint32_t i = 0; i < source.size; ++i) {
    if (map[source.neg(i)] != target.neg(map[i])) return false;
    for (std::uint32_t j = 0; j < source.size; ++j) {
      if (map[source.add(i, j)] != target.add(map[i], map[j])) return false;
    }
  }
  return true;
}

bool is_surjective(const TableAlgebra& target, const std::vector<std::uint32_t>& map) {
  std::vector<bool> hit(target.size, false);
  std::uint32_t count = 0;
  for (std::uint32_t v : map) {
    if (!hit[v]) {
      hit[v] = true;
      ++count;
    }
  }
  return count == target.size;
}

bool is_injective(const std::vector<std::uint32_t>& map) {
  std::vector<std::uint32_t> sorted = map;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::vector<std::uint32_t> greedy_generators(const TableAlgebra& algebra) {
  std::vector<bool> closed(algebra.size, false);
  std::vector<std::uint32_t> members;

  auto insert = [&](std::uint32_t x) {
    if (!closed[x]) {
      closed[x] = true;
      members.push_back(x);
    }
  };
  auto close = [&]() {
    for (std::size_t next = 0; next < members.size(); ++next) {
      const std::uint32_t x = members[next];
      insert(algebra.neg(x));
      for (std::size_t j = 0; j <= next; ++j) insert(algebra.add(x, members[j]));
    }
  };

  insert(algebra.zero);
  close();

  std::vector<std::uint32_t> gens;
  for (std::uint32_t x = 0; x < algebra.size; ++x) {
    if (!closed[x]) {
      gens.push_back(x);
      insert(x);
      close();
    }
  }
  return gens;
}

namespace {

constexpr std::uint32_t kUndefined = 0xffffffffu;

/// Partial-map search state. Images are propagated to the closure of the
/// assigned elements; a conflict anywhere prunes the branch.
struct HomSearch {
  const TableAlgebra& source;
  const TableAlgebra& target;
  std::vector<std::uint32_t> image;
  std::vector<std::uint32_t> defined;  // definition order, doubles as undo trail
  std::vector<Homomorphism>& out;

  HomSearch(const TableAlgebra& s, const TableAlgebra& t, std::vector<Homomorphism>& o)
      : source(s), target(t), image(s.size, kUndefined), out(o) {}

  bool define(std::uint32_t x, std::uint32_t v) {
    if (image[x] != kUndefined) return image[x] == v;
    image[x] = v;
    defined.push_back(x);
    return true;
  }

  // Derive images for everything generated by the defined part, starting the
  // pair scan at position `from` in the definition order.
  bool propagate(std::size_t from) {
    for (std::size_t next = from; next < defined.size(); ++next) {
      const std::uint32_t x = defined[next];
      if (!define(source.neg(x), target.neg(image[x]))) return false;
      for (std::size_t j = 0; j <= next; ++j) {
        const std::uint32_t y = defined[j];
        if (!define(source.add(x, y), target.add(image[x], image[y]))) return false;
      }
    }
    return true;
  }

  void rewind(std::size_t mark) {
    for (std::size_t i = mark; i < defined.size(); ++i) image[defined[i]] = kUndefined;
    defined.resize(mark);
  }

  void search(const std::vector<std::uint32_t>& gens, std::size_t gen_index) {
    if (gen_index == gens.size()) {
      out.push_back(Homomorphism{image});
      return;
    }
    const std::uint32_t g = gens[gen_index];
    const std::size_t mark = defined.size();
    for (std::uint32_t v = 0; v < target.size; ++v) {
      if (define(g, v) && propagate(mark)) search(gens, gen_index + 1);
      rewind(mark);
    }
  }
};

}  // namespace

std::vector<Homomorphism> enumerate_homomorphisms(const TableAlgebra& source,
                                                  const TableAlgebra& target) {
  std::vector<Homomorphism> out;
  HomSearch state(source, target, out);
  if (!state.define(source.zero, target.zero) || !state.propagate(0)) return out;

  const std::vector<std::uint32_t> gens = greedy_generators(source);
  state.search(gens, 0);

  std::sort(out.begin(), out.end(),
            [](const Homomorphism& a, const Homomorphism& b) { return a.map < b.map; });
  return out;
}

std::vector<Homomorphism> enumerate_homomorphisms(const ProductAlgebra& source,
                                                  const ProductAlgebra& target,
                                                  const Budget& budget) {
  return enumerate_homomorphisms(make_table(source, budget), make_table(target, budget));
}

}  // namespace mvq
