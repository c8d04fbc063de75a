#include "mvq/signature.hpp"

#include <algorithm>
#include <stdexcept>

namespace mvq {

Signature::Signature(std::vector<int> moduli) : moduli_(std::move(moduli)) {
  for (int n : moduli_) {
    if (n < 1) {
      throw std::invalid_argument("signature entries must be positive, got " + std::to_string(n));
    }
  }
  std::sort(moduli_.begin(), moduli_.end());
}

std::string Signature::str() const {
  std::string out;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(moduli_[i]);
  }
  return out;
}

bool operator<(const Signature& a, const Signature& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.moduli_ < b.moduli_;
}

std::vector<int> chain_divisors(const Signature& s) {
  std::vector<int> out;
  for (int n : s.moduli()) {
    for (int d = 1; d <= n; ++d) {
      if (n % d == 0) out.push_back(d);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace mvq
