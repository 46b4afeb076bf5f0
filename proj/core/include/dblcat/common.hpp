#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dblcat {

using ObjId = std::uint32_t;
using MorId = std::uint32_t;

inline constexpr std::uint32_t kInvalidId = std::numeric_limits<std::uint32_t>::max();

/// Raised when an input violates a mathematical precondition (not a sieve,
/// functor does not preserve composition, ...). The CLI maps it to exit 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an enumeration would exceed the cell budget
/// (DBLCAT_MAX_CELLS, default 100000).
class CellLimitExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Current cell budget; reads DBLCAT_MAX_CELLS on first use.
std::size_t cell_limit();

/// Overrides the budget for the rest of the process (tests, CLI flag).
void set_cell_limit(std::size_t limit);

/// Throws CellLimitExceeded when `count` exceeds the budget.
void check_cell_budget(std::size_t count, std::string_view what);

/// Hash for vectors of small integers; used to index tuples of cells.
struct VectorHash {
  template <typename T>
  std::size_t operator()(const std::vector<T>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL ^ v.size();
    for (const auto& x : v) {
      h ^= std::hash<T>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// "(a,b,c)" style label for tuples.
std::string tuple_label(const std::vector<std::string>& parts);

}  // namespace dblcat
