#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "c1p/matrix.hpp"

namespace c1p {

/// Raised when a reduced non-C1P matrix matches no Tucker family. That
/// would contradict Tucker's characterization, so it signals a bug.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Permutations taking a matrix onto a canonical Tucker pattern:
/// pattern(r, c) == matrix(row_perm[r], col_perm[c]).
struct PatternMapping {
  TuckerKind kind;
  std::vector<std::size_t> row_perm;
  std::vector<std::size_t> col_perm;
};

/// A Tucker pattern located inside a host matrix. With
/// S = submatrix(host, rows, cols), the pattern satisfies
/// pattern(r, c) == S(row_perm[r], col_perm[c]).
struct TuckerMatch {
  TuckerKind kind;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  std::vector<std::size_t> row_perm;
  std::vector<std::size_t> col_perm;
};

/// C1P test through bipartiteness of the incompatibility graph.
bool has_c1p(const BinaryMatrix& m);

/// Greedy ascending-index row deletion keeping the matrix non-C1P. The
/// result is minimal: dropping any one of its rows leaves a C1P matrix.
/// Throws std::invalid_argument if `m` is C1P.
std::vector<std::size_t> minimal_nonc1p_rows(const BinaryMatrix& m);

/// Same reduction over columns, with rows restricted to `rows`.
/// Throws std::invalid_argument if m[rows, all columns] is C1P.
std::vector<std::size_t> minimal_nonc1p_cols(const BinaryMatrix& m,
                                             const std::vector<std::size_t>& rows);

/// Finds row and column permutations of `m` that give a canonical Tucker
/// pattern of the same dimensions. Families are tried in order I..V.
std::optional<PatternMapping> classify_pattern(const BinaryMatrix& m);

/// Reduces rows, then columns, then rows again (column deletion can make
/// further rows redundant), and classifies the remainder.
/// Throws std::invalid_argument if `m` is C1P and InternalConsistencyError
/// if classification fails.
TuckerMatch find_tucker(const BinaryMatrix& m);

/// True iff the match reproduces its canonical pattern entry-wise in `m`.
bool match_reproduces_pattern(const BinaryMatrix& m, const TuckerMatch& match);

/// Lines "kind=<I..V> k=<k>", "rows=", "cols=", "row_perm=", "col_perm=",
/// all indices 1-based and comma-separated. k is "-" for IV and V.
std::string format_match(const TuckerMatch& match);

}  // namespace c1p
