#pragma once

// Test-only reference scans. These deliberately avoid the library's index
// structures and use only point_in_disk.

#include <doctest.h>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hitset/error.hpp"
#include "hitset/geometry.hpp"
#include "stab_oracle.hpp"

namespace test_support {

template <class F>
void expect_error(hitset::ErrorCode code, F&& f, std::optional<std::size_t> index = std::nullopt) {
  bool thrown = false;
  try {
    f();
  } catch (const hitset::Error& e) {
    thrown = true;
    CHECK(e.code() == code);
    if (index) CHECK(e.index() == index);
  }
  CHECK_MESSAGE(thrown, "expected ", hitset::to_string(code));
}

/// 0-based (first, last) inside positions, or nullopt when empty.
inline std::optional<std::pair<std::size_t, std::size_t>> scan_extremes(std::span<const hitset::Point> points,
                                                                        const hitset::Disk& s) {
  std::optional<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (!hitset::point_in_disk(points[k], s)) continue;
    if (!out) out = std::make_pair(k, k);
    out->second = k;
  }
  return out;
}

}  // namespace test_support
