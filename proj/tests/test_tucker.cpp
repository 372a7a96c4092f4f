#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "c1p/tucker.hpp"
#include "oracles.hpp"

using namespace c1p;

namespace {

BinaryMatrix append_row(const BinaryMatrix& m, std::size_t copied) {
  BinaryMatrix out(m.rows() + 1, m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, m.at(r, c));
  }
  for (std::size_t c = 0; c < m.cols(); ++c) out.set(m.rows(), c, m.at(copied, c));
  return out;
}

BinaryMatrix append_zero_column(const BinaryMatrix& m) {
  BinaryMatrix out(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, m.at(r, c));
  }
  return out;
}

std::vector<std::size_t> iota_vec(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

bool oracle_c1p(const BinaryMatrix& m, const std::vector<std::size_t>& rows,
                const std::vector<std::size_t>& cols) {
  return brute_force_c1p(submatrix(m, rows, cols)).has_value();
}

// Every single-element deletion from rows or cols restores C1P.
bool is_minimal(const BinaryMatrix& m, const std::vector<std::size_t>& rows,
                const std::vector<std::size_t>& cols) {
  if (oracle_c1p(m, rows, cols)) return false;
  for (std::size_t t = 0; t < rows.size(); ++t) {
    auto fewer = rows;
    fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(t));
    if (!fewer.empty() && !oracle_c1p(m, fewer, cols)) return false;
  }
  for (std::size_t t = 0; t < cols.size(); ++t) {
    auto fewer = cols;
    fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(t));
    if (!fewer.empty() && !oracle_c1p(m, rows, fewer)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("has_c1p") {
  CHECK(has_c1p(BinaryMatrix({{1, 1, 0}, {0, 1, 1}})));
  CHECK_FALSE(has_c1p(tucker_pattern(TuckerKind::V())));
}

TEST_CASE("minimal_nonc1p_rows") {
  CHECK(minimal_nonc1p_rows(tucker_pattern(TuckerKind::V())) ==
        std::vector<std::size_t>{0, 1, 2, 3});

  const auto t3 = tucker_pattern(TuckerKind::III(4));
  const auto dup = append_row(t3, 1);
  REQUIRE_FALSE(brute_force_c1p(dup));
  const auto rows = minimal_nonc1p_rows(dup);
  REQUIRE(rows.size() == 3);
  const auto reduced = submatrix(dup, rows, iota_vec(4));
  CHECK_FALSE(brute_force_c1p(reduced));
  auto mapping = classify_pattern(reduced);
  REQUIRE(mapping);
  CHECK(mapping->kind == TuckerKind::III(4));

  CHECK_THROWS_AS(minimal_nonc1p_rows(BinaryMatrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})),
                  std::invalid_argument);
}

TEST_CASE("minimal_nonc1p_cols") {
  const auto padded = append_zero_column(tucker_pattern(TuckerKind::III(4)));
  REQUIRE_FALSE(brute_force_c1p(padded));
  CHECK(minimal_nonc1p_cols(padded, {0, 1, 2}) == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(minimal_nonc1p_cols(tucker_pattern(TuckerKind::IV()), {0, 1, 2, 3}) ==
        std::vector<std::size_t>{0, 1, 2, 3, 4});
  CHECK_THROWS_AS(minimal_nonc1p_cols(tucker_pattern(TuckerKind::IV()), {0, 1}),
                  std::invalid_argument);
}

TEST_CASE("classify_pattern") {
  const BinaryMatrix m({{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 1, 0, 1}});
  auto direct = classify_pattern(m);
  REQUIRE(direct);
  CHECK(direct->kind == TuckerKind::III(4));
  CHECK(direct->row_perm == std::vector<std::size_t>{0, 1, 2});
  CHECK(direct->col_perm == std::vector<std::size_t>{0, 1, 2, 3});

  // Columns listed as (2,1,3,4).
  const auto swapped = submatrix(m, {0, 1, 2}, {1, 0, 2, 3});
  auto mapped = classify_pattern(swapped);
  REQUIRE(mapped);
  CHECK(mapped->kind == TuckerKind::III(4));
  const auto pattern = tucker_pattern(TuckerKind::III(4));
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      CHECK(pattern.at(r, c) == swapped.at(mapped->row_perm[r], mapped->col_perm[c]));
    }
  }
  CHECK(mapped->col_perm == std::vector<std::size_t>{1, 0, 2, 3});

  CHECK_FALSE(classify_pattern(BinaryMatrix({{1, 1}, {1, 1}})));
  CHECK_FALSE(classify_pattern(BinaryMatrix({{1, 1, 0}, {0, 1, 1}, {1, 1, 1}})));
}

TEST_CASE("classify_pattern recovers shuffled patterns") {
  std::mt19937_64 rng(9);
  for (const auto& kind : oracle::patterns_up_to(8)) {
    const auto pattern = tucker_pattern(kind);
    auto rows = iota_vec(pattern.rows());
    auto cols = iota_vec(pattern.cols());
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    const auto shuffled = submatrix(pattern, rows, cols);
    auto mapping = classify_pattern(shuffled);
    REQUIRE(mapping);
    CHECK(mapping->kind == kind);
  }
}

TEST_CASE("find_tucker on generated patterns") {
  for (const auto& kind : oracle::patterns_up_to(8)) {
    const auto pattern = tucker_pattern(kind);
    const auto match = find_tucker(pattern);
    CAPTURE(family_name(kind.family));
    CAPTURE(kind.k);
    CHECK(match.kind == kind);
    CHECK(match_reproduces_pattern(pattern, match));
  }
  const auto t1 = find_tucker(tucker_pattern(TuckerKind::I(3)));
  CHECK(t1.row_perm == std::vector<std::size_t>{0, 1, 2});
  CHECK(t1.col_perm == std::vector<std::size_t>{0, 1, 2});
  CHECK(find_tucker(tucker_pattern(TuckerKind::III(6))).kind == TuckerKind::III(6));
  CHECK_THROWS_AS(find_tucker(BinaryMatrix({{1, 1}})), std::invalid_argument);
}

TEST_CASE("find_tucker locates T_IV in a larger host") {
  // Columns 1..5 carry T_IV in shuffled row order, column 6 is all zero,
  // column 7 extends a consecutive block; the extra rows are harmless.
  const BinaryMatrix host({{0, 0, 0, 0, 0, 0, 1},
                           {1, 1, 1, 1, 0, 0, 0},
                           {1, 1, 0, 0, 0, 0, 0},
                           {0, 0, 1, 1, 0, 0, 0},
                           {1, 0, 0, 1, 1, 0, 0},
                           {1, 1, 1, 1, 1, 0, 0}});
  REQUIRE_FALSE(brute_force_c1p(host));
  const auto match = find_tucker(host);
  CHECK(match.kind == TuckerKind::IV());
  CHECK(match_reproduces_pattern(host, match));
  CHECK(match.cols == std::vector<std::size_t>{0, 1, 2, 3, 4});
  CHECK(match.rows == std::vector<std::size_t>{1, 2, 3, 4});
  CHECK(is_minimal(host, match.rows, match.cols));
}

TEST_CASE("find_tucker on random non-C1P matrices") {
  std::mt19937_64 sizes(77);
  std::size_t found = 0;
  for (std::uint64_t seed = 0; found < 120; ++seed) {
    const std::size_t rows = 3 + sizes() % 4;
    const std::size_t cols = 3 + sizes() % 4;
    const auto m = random_matrix(rows, cols, 0.5, seed);
    if (brute_force_c1p(m)) continue;
    ++found;
    const auto match = find_tucker(m);
    REQUIRE(match_reproduces_pattern(m, match));
    REQUIRE(is_minimal(m, match.rows, match.cols));
  }
}

TEST_CASE("match_reproduces_pattern rejects broken matches") {
  const auto pattern = tucker_pattern(TuckerKind::I(4));
  auto match = find_tucker(pattern);
  REQUIRE(match_reproduces_pattern(pattern, match));
  auto dup = match;
  dup.row_perm[1] = dup.row_perm[0];
  CHECK_FALSE(match_reproduces_pattern(pattern, dup));
  auto wrong_kind = match;
  wrong_kind.kind = TuckerKind::II(4);
  CHECK_FALSE(match_reproduces_pattern(pattern, wrong_kind));
}

TEST_CASE("match report format") {
  const auto match = find_tucker(tucker_pattern(TuckerKind::III(4)));
  CHECK(format_match(match) ==
        "kind=III k=4\nrows=1,2,3\ncols=1,2,3,4\nrow_perm=1,2,3\ncol_perm=1,2,3,4\n");
  const auto v = find_tucker(tucker_pattern(TuckerKind::V()));
  CHECK(format_match(v).rfind("kind=V k=-\n", 0) == 0);
}
