#pragma once

#include <vector>

namespace cub5 {

/// All exponent vectors of length n with total degree <= max_degree, in graded
/// lexicographic order: degree ascending, lexicographically descending within
/// a degree (so degree d starts at (d,0,...,0)).
inline std::vector<std::vector<int>> multi_indices_up_to(int n, int max_degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(static_cast<std::size_t>(n), 0);
  auto emit = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n - 1) {
      current[static_cast<std::size_t>(pos)] = remaining;
      out.push_back(current);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      current[static_cast<std::size_t>(pos)] = e;
      self(self, pos + 1, remaining - e);
    }
  };
  for (int degree = 0; degree <= max_degree; ++degree) emit(emit, 0, degree);
  return out;
}

}  // namespace cub5
