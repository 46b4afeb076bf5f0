#include "dblcat/common.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace dblcat {

namespace {

std::size_t limit_from_env() {
  constexpr std::size_t kDefault = 100000;
  const char* raw = std::getenv("DBLCAT_MAX_CELLS");
  if (raw == nullptr || *raw == '\0') return kDefault;
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(raw, &pos);
    if (pos != std::string(raw).size() || v == 0) return kDefault;
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    return kDefault;
  }
}

std::atomic<std::size_t>& limit_slot() {
  static std::atomic<std::size_t> slot{limit_from_env()};
  return slot;
}

}  // namespace

std::size_t cell_limit() { return limit_slot().load(std::memory_order_relaxed); }

void set_cell_limit(std::size_t limit) { limit_slot().store(limit, std::memory_order_relaxed); }

void check_cell_budget(std::size_t count, std::string_view what) {
  const std::size_t limit = cell_limit();
  if (count > limit) {
    throw CellLimitExceeded(std::string(what) + ": " + std::to_string(count) +
                            " cells exceeds DBLCAT_MAX_CELLS=" + std::to_string(limit));
  }
}

std::string tuple_label(const std::vector<std::string>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ',';
    out += parts[i];
  }
  out += ')';
  return out;
}

}  // namespace dblcat
