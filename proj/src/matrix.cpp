#include "c1p/matrix.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <random>
#include <sstream>

namespace c1p {

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("matrix dimensions must be at least 1x1");
  }
}

BinaryMatrix::BinaryMatrix(const std::vector<std::vector<int>>& rows)
    : BinaryMatrix(rows.size(), rows.empty() ? 0 : rows.front().size()) {
  for (std::size_t r = 0; r < rows_; ++r) {
    if (rows[r].size() != cols_) {
      throw std::invalid_argument("matrix rows have unequal lengths");
    }
    for (std::size_t c = 0; c < cols_; ++c) {
      const int v = rows[r][c];
      if (v != 0 && v != 1) {
        throw std::invalid_argument("matrix entries must be 0 or 1");
      }
      entries_[r * cols_ + c] = static_cast<std::uint8_t>(v);
    }
  }
}

bool BinaryMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  return entries_[r * cols_ + c] != 0;
}

void BinaryMatrix::set(std::size_t r, std::size_t c, bool value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  entries_[r * cols_ + c] = value ? 1 : 0;
}

std::uint64_t BinaryMatrix::row_mask(std::size_t r) const {
  if (cols_ > 64) throw std::invalid_argument("row_mask requires at most 64 columns");
  std::uint64_t mask = 0;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (at(r, c)) mask |= std::uint64_t{1} << c;
  }
  return mask;
}

bool TuckerKind::has_parameter() const {
  return family == TuckerFamily::I || family == TuckerFamily::II || family == TuckerFamily::III;
}

std::size_t TuckerKind::pattern_rows() const {
  switch (family) {
    case TuckerFamily::I:
    case TuckerFamily::II: return k;
    case TuckerFamily::III: return k - 1;
    case TuckerFamily::IV:
    case TuckerFamily::V: return 4;
  }
  return 0;
}

std::size_t TuckerKind::pattern_cols() const {
  switch (family) {
    case TuckerFamily::I:
    case TuckerFamily::II:
    case TuckerFamily::III: return k;
    case TuckerFamily::IV: return 5;
    case TuckerFamily::V: return 6;
  }
  return 0;
}

std::string_view family_name(TuckerFamily family) {
  switch (family) {
    case TuckerFamily::I: return "I";
    case TuckerFamily::II: return "II";
    case TuckerFamily::III: return "III";
    case TuckerFamily::IV: return "IV";
    case TuckerFamily::V: return "V";
  }
  return "?";
}

std::optional<TuckerFamily> parse_family(std::string_view text) {
  for (auto f : {TuckerFamily::I, TuckerFamily::II, TuckerFamily::III, TuckerFamily::IV,
                 TuckerFamily::V}) {
    if (family_name(f) == text) return f;
  }
  return std::nullopt;
}

std::size_t min_parameter(TuckerFamily family) {
  return family == TuckerFamily::I ? 3 : 4;
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

std::size_t parse_count(std::string_view token, std::string_view what) {
  std::size_t value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError("invalid " + std::string(what) + " '" + std::string(token) + "'");
  }
  return value;
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

}  // namespace

BinaryMatrix parse_matrix(std::istream& in) {
  std::string line;
  auto next_line = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  };

  if (!next_line() || is_blank(line)) throw ParseError("empty matrix: missing header line");
  const auto header = split_tokens(line);
  if (header.size() != 2) {
    throw ParseError("header must be 'm n', got " + std::to_string(header.size()) + " tokens");
  }
  const std::size_t m = parse_count(header[0], "row count");
  const std::size_t n = parse_count(header[1], "column count");
  if (m == 0 || n == 0) throw ParseError("empty matrix: dimensions must be at least 1x1");

  BinaryMatrix result(m, n);
  for (std::size_t r = 0; r < m; ++r) {
    if (!next_line()) {
      throw ParseError("expected " + std::to_string(m) + " rows, found " + std::to_string(r));
    }
    const auto tokens = split_tokens(line);
    if (tokens.size() != n) {
      throw ParseError("row " + std::to_string(r + 1) + " has " + std::to_string(tokens.size()) +
                       (tokens.size() == 1 ? " token" : " tokens") + ", expected " +
                       std::to_string(n));
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (tokens[c] == "1") {
        result.set(r, c, true);
      } else if (tokens[c] != "0") {
        throw ParseError("row " + std::to_string(r + 1) + " column " + std::to_string(c + 1) +
                         ": token '" + std::string(tokens[c]) + "' is not 0 or 1");
      }
    }
  }
  while (next_line()) {
    if (!is_blank(line)) throw ParseError("unexpected content after row " + std::to_string(m));
  }
  return result;
}

BinaryMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_matrix(in);
}

std::string serialize_matrix(const BinaryMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ' ';
      out += m.at(r, c) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

BinaryMatrix tucker_pattern(TuckerKind kind) {
  if (kind.has_parameter() && kind.k < min_parameter(kind.family)) {
    throw std::invalid_argument("Tucker pattern " + std::string(family_name(kind.family)) +
                                " requires k >= " + std::to_string(min_parameter(kind.family)));
  }
  const std::size_t k = kind.k;
  switch (kind.family) {
    case TuckerFamily::I: {
      BinaryMatrix m(k, k);
      for (std::size_t i = 0; i + 1 < k; ++i) {
        m.set(i, i, true);
        m.set(i, i + 1, true);
      }
      m.set(k - 1, 0, true);
      m.set(k - 1, k - 1, true);
      return m;
    }
    case TuckerFamily::II: {
      BinaryMatrix m(k, k);
      for (std::size_t i = 0; i + 2 < k; ++i) {
        m.set(i, i, true);
        m.set(i, i + 1, true);
      }
      for (std::size_t c = 0; c < k; ++c) {
        m.set(k - 2, c, c != k - 2);
        m.set(k - 1, c, c != 0);
      }
      return m;
    }
    case TuckerFamily::III: {
      BinaryMatrix m(k - 1, k);
      for (std::size_t i = 0; i + 2 < k; ++i) {
        m.set(i, i, true);
        m.set(i, i + 1, true);
      }
      for (std::size_t c = 0; c < k; ++c) m.set(k - 2, c, c != 0 && c != k - 2);
      return m;
    }
    case TuckerFamily::IV:
      return BinaryMatrix({{1, 1, 0, 0, 0}, {1, 1, 1, 1, 0}, {0, 0, 1, 1, 0}, {1, 0, 0, 1, 1}});
    case TuckerFamily::V:
      return BinaryMatrix(
          {{1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1}, {0, 1, 0, 1, 0, 1}});
  }
  throw std::invalid_argument("unknown Tucker family");
}

namespace {

void require_permutation(const ColumnPermutation& p, std::size_t n) {
  if (p.order.size() != n) {
    throw std::invalid_argument("permutation has length " + std::to_string(p.order.size()) +
                                ", matrix has " + std::to_string(n) + " columns");
  }
  std::vector<bool> seen(n, false);
  for (auto c : p.order) {
    if (c >= n || seen[c]) throw std::invalid_argument("order is not a permutation of the columns");
    seen[c] = true;
  }
}

bool consecutive_under(const BinaryMatrix& m, const std::vector<std::size_t>& order) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    // 0 = before the block, 1 = inside, 2 = after
    int state = 0;
    for (auto c : order) {
      const bool one = m.at(r, c);
      if (state == 0 && one) {
        state = 1;
      } else if (state == 1 && !one) {
        state = 2;
      } else if (state == 2 && one) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool check_ordering(const BinaryMatrix& m, const ColumnPermutation& p) {
  require_permutation(p, m.cols());
  return consecutive_under(m, p.order);
}

std::optional<ColumnPermutation> brute_force_c1p(const BinaryMatrix& m, std::size_t cap) {
  if (m.cols() > cap) {
    throw OracleLimitExceeded("oracle limit exceeded: " + std::to_string(m.cols()) +
                              " columns, cap is " + std::to_string(cap));
  }
  std::vector<std::size_t> order(m.cols());
  std::iota(order.begin(), order.end(), std::size_t{0});
  do {
    if (consecutive_under(m, order)) return ColumnPermutation{order};
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

namespace {

void require_index_set(const std::vector<std::size_t>& idx, std::size_t bound, const char* what) {
  if (idx.empty()) throw std::invalid_argument(std::string(what) + " set is empty");
  std::vector<bool> seen(bound, false);
  for (auto i : idx) {
    if (i >= bound) {
      throw std::invalid_argument(std::string(what) + " index " + std::to_string(i + 1) +
                                  " out of range");
    }
    if (seen[i]) {
      throw std::invalid_argument("duplicate " + std::string(what) + " index " +
                                  std::to_string(i + 1));
    }
    seen[i] = true;
  }
}

}  // namespace

BinaryMatrix submatrix(const BinaryMatrix& m, const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) {
  require_index_set(rows, m.rows(), "row");
  require_index_set(cols, m.cols(), "column");
  BinaryMatrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out.set(r, c, m.at(rows[r], cols[c]));
  }
  return out;
}

BinaryMatrix random_matrix(std::size_t rows, std::size_t cols, double density,
                           std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw std::invalid_argument("density must lie in [0, 1]");
  }
  // mt19937_64's output sequence is fixed by the standard; distributions are
  // not, so the uniform draw is done by hand.
  std::mt19937_64 rng(seed);
  BinaryMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      out.set(r, c, u < density);
    }
  }
  return out;
}

}  // namespace c1p
