#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace downset {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad argument to a constructor or operation (n out of range, k > n,
// face outside the ground set, non-bijective permutation, ...).
struct invalid_parameter_error : error {
  using error::error;
};

// Chomp move naming a face that is not in the position, or the empty face.
struct illegal_move_error : error {
  using error::error;
};

// Game queried on a family that is not a legal position (missing the empty face).
struct invalid_position_error : error {
  using error::error;
};

// Involution reduction hypotheses not met.
struct not_applicable_error : error {
  using error::error;
};

// Malformed textual input (position files, cycle notation).
struct parse_error : error {
  using error::error;
};

struct RunStats {
  std::uint64_t positions_stored = 0;
  std::uint64_t positions_visited = 0;
  std::chrono::nanoseconds elapsed{0};

  [[nodiscard]] std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  }
};

// Memo table hit its configured entry cap (or allocation failed); carries the
// statistics gathered up to the abort so callers can report partial progress.
struct resource_limit_error : error {
  RunStats partial;
  explicit resource_limit_error(const std::string& what, RunStats s)
      : error(what), partial(s) {}
};

}  // namespace downset
