#include "mvq/budget.hpp"

#include <cstdlib>
#include <string>

namespace mvq {

namespace {

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0) return fallback;
  return static_cast<std::uint64_t>(value);
}

}  // namespace

Budget Budget::from_env() {
  Budget b;
  b.carrier_cap = env_or("MVQ_BUDGET_CARRIER", b.carrier_cap);
  b.assignment_cap = env_or("MVQ_BUDGET_ASSIGN", b.assignment_cap);
  return b;
}

}  // namespace mvq
