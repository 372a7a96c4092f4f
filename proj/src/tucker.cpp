#include "c1p/tucker.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <variant>

#include "c1p/graph.hpp"

namespace c1p {

bool has_c1p(const BinaryMatrix& m) {
  return std::holds_alternative<TwoColoring>(is_bipartite(build_incompatibility_graph(m)));
}

namespace {

std::vector<std::size_t> all_indices(std::size_t count) {
  std::vector<std::size_t> idx(count);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return idx;
}

// Drops entries of `kept` in ascending order while `still_bad(kept minus x)`
// holds. One pass is enough: C1P is inherited by submatrices, so an element
// that was needed stays needed as the set shrinks.
template <typename StillBad>
std::vector<std::size_t> greedy_reduce(std::vector<std::size_t> kept, StillBad&& still_bad) {
  for (std::size_t pos = 0; pos < kept.size() && kept.size() > 1;) {
    std::vector<std::size_t> trial = kept;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(pos));
    if (still_bad(trial)) {
      kept = std::move(trial);
    } else {
      ++pos;
    }
  }
  return kept;
}

std::vector<std::size_t> reduce_rows(const BinaryMatrix& m, std::vector<std::size_t> rows,
                                     const std::vector<std::size_t>& cols) {
  return greedy_reduce(std::move(rows), [&](const std::vector<std::size_t>& trial) {
    return !has_c1p(submatrix(m, trial, cols));
  });
}

std::vector<std::size_t> reduce_cols(const BinaryMatrix& m, const std::vector<std::size_t>& rows,
                                     std::vector<std::size_t> cols) {
  return greedy_reduce(std::move(cols), [&](const std::vector<std::size_t>& trial) {
    return !has_c1p(submatrix(m, rows, trial));
  });
}

std::vector<TuckerKind> candidate_kinds(std::size_t rows, std::size_t cols) {
  std::vector<TuckerKind> out;
  if (rows == cols && cols >= 3) out.push_back(TuckerKind::I(cols));
  if (rows == cols && cols >= 4) out.push_back(TuckerKind::II(cols));
  if (rows + 1 == cols && cols >= 4) out.push_back(TuckerKind::III(cols));
  if (rows == 4 && cols == 5) out.push_back(TuckerKind::IV());
  if (rows == 4 && cols == 6) out.push_back(TuckerKind::V());
  return out;
}

// Backtracking column assignment. After fixing the images of pattern
// columns 0..c, the multiset of row prefixes must agree on both sides.
class ColumnMatcher {
 public:
  ColumnMatcher(const BinaryMatrix& host, const BinaryMatrix& pattern)
      : host_(host), pattern_(pattern), image_(pattern.cols()), used_(host.cols(), false),
        host_prefix_(host.rows(), 0), pattern_prefix_(pattern.rows(), 0) {
    for (std::size_t c = 0; c < host.cols(); ++c) host_col_sum_.push_back(column_sum(host, c));
    for (std::size_t c = 0; c < pattern.cols(); ++c) {
      pattern_col_sum_.push_back(column_sum(pattern, c));
    }
  }

  std::optional<std::vector<std::size_t>> solve() {
    if (extend(0)) return image_;
    return std::nullopt;
  }

 private:
  static std::size_t column_sum(const BinaryMatrix& m, std::size_t c) {
    std::size_t sum = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) sum += m.at(r, c) ? 1 : 0;
    return sum;
  }

  bool prefixes_agree() const {
    auto a = host_prefix_;
    auto b = pattern_prefix_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  bool extend(std::size_t c) {
    if (c == pattern_.cols()) return true;
    const std::uint64_t bit = std::uint64_t{1} << c;
    for (std::size_t r = 0; r < pattern_.rows(); ++r) {
      if (pattern_.at(r, c)) pattern_prefix_[r] |= bit;
    }
    for (std::size_t h = 0; h < host_.cols(); ++h) {
      if (used_[h] || host_col_sum_[h] != pattern_col_sum_[c]) continue;
      for (std::size_t r = 0; r < host_.rows(); ++r) {
        if (host_.at(r, h)) host_prefix_[r] |= bit;
      }
      used_[h] = true;
      image_[c] = h;
      if (prefixes_agree() && extend(c + 1)) return true;
      used_[h] = false;
      for (auto& p : host_prefix_) p &= ~bit;
    }
    for (auto& p : pattern_prefix_) p &= ~bit;
    return false;
  }

  const BinaryMatrix& host_;
  const BinaryMatrix& pattern_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
  std::vector<std::uint64_t> host_prefix_;
  std::vector<std::uint64_t> pattern_prefix_;
  std::vector<std::size_t> host_col_sum_;
  std::vector<std::size_t> pattern_col_sum_;
};

bool is_index_permutation(const std::vector<std::size_t>& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto i : p) {
    if (i >= p.size() || seen[i]) return false;
    seen[i] = true;
  }
  return true;
}

std::string join(const std::vector<std::size_t>& idx) {
  std::string out;
  for (std::size_t t = 0; t < idx.size(); ++t) {
    if (t > 0) out += ',';
    out += std::to_string(idx[t] + 1);
  }
  return out;
}

}  // namespace

std::vector<std::size_t> minimal_nonc1p_rows(const BinaryMatrix& m) {
  if (has_c1p(m)) throw std::invalid_argument("matrix is C1P");
  return reduce_rows(m, all_indices(m.rows()), all_indices(m.cols()));
}

std::vector<std::size_t> minimal_nonc1p_cols(const BinaryMatrix& m,
                                             const std::vector<std::size_t>& rows) {
  const auto cols = all_indices(m.cols());
  if (has_c1p(submatrix(m, rows, cols))) {
    throw std::invalid_argument("matrix restricted to the given rows is C1P");
  }
  return reduce_cols(m, rows, cols);
}

std::optional<PatternMapping> classify_pattern(const BinaryMatrix& m) {
  if (m.cols() > 64) return std::nullopt;
  for (const auto& kind : candidate_kinds(m.rows(), m.cols())) {
    const BinaryMatrix pattern = tucker_pattern(kind);
    auto col_perm = ColumnMatcher(m, pattern).solve();
    if (!col_perm) continue;

    std::vector<std::size_t> row_perm(pattern.rows());
    std::vector<bool> taken(m.rows(), false);
    bool complete = true;
    for (std::size_t r = 0; r < pattern.rows() && complete; ++r) {
      complete = false;
      for (std::size_t h = 0; h < m.rows(); ++h) {
        if (taken[h]) continue;
        bool same = true;
        for (std::size_t c = 0; c < pattern.cols() && same; ++c) {
          same = pattern.at(r, c) == m.at(h, (*col_perm)[c]);
        }
        if (same) {
          taken[h] = true;
          row_perm[r] = h;
          complete = true;
          break;
        }
      }
    }
    if (complete) return PatternMapping{kind, std::move(row_perm), std::move(*col_perm)};
  }
  return std::nullopt;
}

TuckerMatch find_tucker(const BinaryMatrix& m) {
  auto rows = minimal_nonc1p_rows(m);
  auto cols = minimal_nonc1p_cols(m, rows);
  rows = reduce_rows(m, std::move(rows), cols);

  const BinaryMatrix reduced = submatrix(m, rows, cols);
  auto mapping = classify_pattern(reduced);
  if (!mapping) {
    throw InternalConsistencyError("minimal non-C1P submatrix matches no Tucker pattern:\n" +
                                   serialize_matrix(reduced));
  }
  TuckerMatch match{mapping->kind, std::move(rows), std::move(cols),
                    std::move(mapping->row_perm), std::move(mapping->col_perm)};
  if (!match_reproduces_pattern(m, match)) {
    throw InternalConsistencyError("Tucker match does not reproduce its pattern");
  }
  return match;
}

bool match_reproduces_pattern(const BinaryMatrix& m, const TuckerMatch& match) {
  const BinaryMatrix pattern = tucker_pattern(match.kind);
  if (match.rows.size() != pattern.rows() || match.cols.size() != pattern.cols() ||
      match.row_perm.size() != pattern.rows() || match.col_perm.size() != pattern.cols()) {
    return false;
  }
  if (!is_index_permutation(match.row_perm) || !is_index_permutation(match.col_perm)) {
    return false;
  }
  const BinaryMatrix selected = submatrix(m, match.rows, match.cols);
  for (std::size_t r = 0; r < pattern.rows(); ++r) {
    for (std::size_t c = 0; c < pattern.cols(); ++c) {
      if (pattern.at(r, c) != selected.at(match.row_perm[r], match.col_perm[c])) return false;
    }
  }
  return true;
}

std::string format_match(const TuckerMatch& match) {
  std::ostringstream out;
  out << "kind=" << family_name(match.kind.family) << " k=";
  if (match.kind.has_parameter()) {
    out << match.kind.k;
  } else {
    out << '-';
  }
  out << "\nrows=" << join(match.rows) << "\ncols=" << join(match.cols)
      << "\nrow_perm=" << join(match.row_perm) << "\ncol_perm=" << join(match.col_perm) << "\n";
  return out.str();
}

}  // namespace c1p
