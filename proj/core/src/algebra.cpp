#include "mvq/algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "mvq/errors.hpp"

namespace mvq {

ProductAlgebra::ProductAlgebra(std::vector<int> moduli) : moduli_(std::move(moduli)) {
  for (int n : moduli_) {
    if (n < 1) {
      throw std::invalid_argument("chain modulus must be positive, got " + std::to_string(n));
    }
  }
}

std::uint64_t ProductAlgebra::carrier_size() const {
  std::uint64_t size = 1;
  for (int n : moduli_) {
    const auto factor = static_cast<std::uint64_t>(n) + 1;
    if (size > (std::uint64_t{1} << 63) / factor) {
      throw std::overflow_error("carrier size does not fit in 64 bits");
    }
    size *= factor;
  }
  return size;
}

bool ProductAlgebra::is_valid(const Element& a) const noexcept {
  if (a.size() != moduli_.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 || a[i] > moduli_[i]) return false;
  }
  return true;
}

void ProductAlgebra::require_valid(const Element& a) const {
  if (!is_valid(a)) {
    std::string got;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i > 0) got += ',';
      got += std::to_string(a[i]);
    }
    throw invalid_element("element (" + got + ") is not valid in the product with moduli " +
                          signature().str());
  }
}

Element ProductAlgebra::zero() const { return Element(moduli_.size(), 0); }

Element ProductAlgebra::one() const {
  Element u(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) u[i] = moduli_[i];
  return u;
}

Element ProductAlgebra::add(const Element& a, const Element& b) const {
  require_valid(a);
  require_valid(b);
  Element r(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) r[i] = std::min(moduli_[i], a[i] + b[i]);
  return r;
}

Element ProductAlgebra::neg(const Element& a) const {
  require_valid(a);
  Element r(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) r[i] = moduli_[i] - a[i];
  return r;
}

Element ProductAlgebra::odot(const Element& a, const Element& b) const {
  require_valid(a);
  require_valid(b);
  Element r(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) r[i] = std::max(0, a[i] + b[i] - moduli_[i]);
  return r;
}

Element ProductAlgebra::join(const Element& a, const Element& b) const {
  require_valid(a);
  require_valid(b);
  Element r(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Element ProductAlgebra::meet(const Element& a, const Element& b) const {
  require_valid(a);
  require_valid(b);
  Element r(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

bool ProductAlgebra::leq(const Element& a, const Element& b) const {
  return join(a, b) == b;
}

Element ProductAlgebra::scalar(unsigned m, const Element& a) const {
  require_valid(a);
  Element r(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    const std::int64_t value = static_cast<std::int64_t>(m) * a[i];
    r[i] = static_cast<int>(std::min<std::int64_t>(moduli_[i], value));
  }
  return r;
}

std::uint64_t ProductAlgebra::index_of(const Element& a) const {
  require_valid(a);
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    index = index * (static_cast<std::uint64_t>(moduli_[i]) + 1) + static_cast<std::uint64_t>(a[i]);
  }
  return index;
}

Element ProductAlgebra::element_at(std::uint64_t index) const {
  Element a(moduli_.size());
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    const auto base = static_cast<std::uint64_t>(moduli_[i]) + 1;
    a[i] = static_cast<int>(index % base);
    index /= base;
  }
  if (index != 0) throw invalid_element("element index out of range");
  return a;
}

std::string ProductAlgebra::format_element(const Element& a) const {
  require_valid(a);
  if (moduli_.empty()) return "()";
  std::string out;
  const bool wrap = moduli_.size() > 1;
  if (wrap) out += '(';
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(a[i]) + "/" + std::to_string(moduli_[i]);
  }
  if (wrap) out += ')';
  return out;
}

bool chain_embeds(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("chain moduli must be positive");
  return m % n == 0;
}

}  // namespace mvq
