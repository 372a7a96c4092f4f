#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "c1p/matrix.hpp"

namespace c1p {

inline constexpr std::size_t kDefaultTableCap = 12;
inline constexpr std::size_t kStressColumnCap = 30;

/// Worst-case shortest odd cycle over matrices with k columns: 3 for k = 3,
/// otherwise k + 2 for odd k and k + 3 for even k. Throws
/// std::invalid_argument for k < 3 (every such matrix is C1P).
std::size_t theorem_bound(std::size_t k);

/// Shortest odd-cycle length of a canonical Tucker pattern in closed form.
std::size_t expected_pattern_length(TuckerKind kind);

struct BoundRow {
  TuckerKind kind;
  std::size_t columns = 0;
  std::size_t computed = 0;
  std::size_t expected = 0;
  std::size_t bound = 0;
  bool tight = false;
};

struct BoundReport {
  std::vector<BoundRow> rows;
  bool pass = false;
};

/// Families I (k >= 3), II and III (k >= 4) for every k in range, plus IV
/// and V once when k_max >= 4. Rows are ordered by family, then k.
BoundReport reproduce_table(std::size_t k_min, std::size_t k_max,
                            std::size_t cap = kDefaultTableCap);

std::string format_table(const BoundReport& report);
/// Header "kind,k,n_cols,computed,expected,bound,tight".
std::string format_csv(const BoundReport& report);

struct StressViolation {
  std::size_t trial = 0;
  std::size_t length = 0;
  std::string matrix;  // serialized
};

struct StressReport {
  std::size_t trials = 0;
  std::size_t non_c1p = 0;
  std::size_t bound = 0;
  std::size_t max_length = 0;
  std::map<std::size_t, std::size_t> length_histogram;
  std::vector<StressViolation> violations;

  bool pass() const { return violations.empty(); }
};

/// Trial t uses random_matrix(rows, cols, density, seed + t) and checks its
/// shortest odd cycle (if any) against theorem_bound(cols). Requires
/// 4 <= cols <= kStressColumnCap.
StressReport stress_bound(std::size_t trials, std::size_t rows, std::size_t cols, double density,
                          std::uint64_t seed);

std::string format_stress(const StressReport& report);

}  // namespace c1p
