#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace c1p {

/// Thrown when matrix or certificate text does not follow its file format.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by the exhaustive C1P oracle when n exceeds its configured cap.
class OracleLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense m x n 0/1 matrix. Dimensions are fixed at construction.
///
/// Indices are 0-based in the API; every text format and report prints
/// them 1-based.
class BinaryMatrix {
 public:
  /// Zero matrix. Both dimensions must be at least 1.
  BinaryMatrix(std::size_t rows, std::size_t cols);
  /// Rows must be nonempty, of equal length, and contain only 0 and 1.
  explicit BinaryMatrix(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value);

  /// Row r as a column bitmask (bit c set iff entry (r, c) is 1). Requires cols() <= 64.
  std::uint64_t row_mask(std::size_t r) const;

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint8_t> entries_;
};

enum class TuckerFamily { I, II, III, IV, V };

/// A Tucker pattern family plus its size parameter. `k` is meaningful for
/// families I, II and III only and is 0 for the fixed-size IV and V.
struct TuckerKind {
  TuckerFamily family;
  std::size_t k = 0;

  static TuckerKind I(std::size_t k) { return {TuckerFamily::I, k}; }
  static TuckerKind II(std::size_t k) { return {TuckerFamily::II, k}; }
  static TuckerKind III(std::size_t k) { return {TuckerFamily::III, k}; }
  static TuckerKind IV() { return {TuckerFamily::IV, 0}; }
  static TuckerKind V() { return {TuckerFamily::V, 0}; }

  bool has_parameter() const;
  std::size_t pattern_rows() const;
  std::size_t pattern_cols() const;

  friend bool operator==(const TuckerKind&, const TuckerKind&) = default;
};

std::string_view family_name(TuckerFamily family);
/// Accepts "I".."V" (case-sensitive).
std::optional<TuckerFamily> parse_family(std::string_view text);
/// Smallest legal k for a parameterized family.
std::size_t min_parameter(TuckerFamily family);

/// A column order: order[p] is the column placed at position p (0-based).
struct ColumnPermutation {
  std::vector<std::size_t> order;

  friend bool operator==(const ColumnPermutation&, const ColumnPermutation&) = default;
};

inline constexpr std::size_t kDefaultOracleCap = 9;

/// Reads the "m n" header followed by m rows of n space-separated 0/1 tokens.
BinaryMatrix parse_matrix(std::istream& in);
BinaryMatrix parse_matrix(std::string_view text);
std::string serialize_matrix(const BinaryMatrix& m);

/// Canonical Tucker pattern in the column order used throughout the library.
/// Throws std::invalid_argument if k is below the family minimum.
BinaryMatrix tucker_pattern(TuckerKind kind);

/// True iff every row's 1s are contiguous when columns are laid out in `p`.
bool check_ordering(const BinaryMatrix& m, const ColumnPermutation& p);

/// Exhaustive search over column permutations in lexicographic order.
/// Returns the first ordering that makes every row consecutive, or nullopt.
std::optional<ColumnPermutation> brute_force_c1p(const BinaryMatrix& m,
                                                 std::size_t cap = kDefaultOracleCap);

/// Entries at the selected rows/columns, in the order given.
BinaryMatrix submatrix(const BinaryMatrix& m, const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols);

/// Entry is 1 with probability `density`; a pure function of its arguments.
BinaryMatrix random_matrix(std::size_t rows, std::size_t cols, double density,
                           std::uint64_t seed);

}  // namespace c1p
