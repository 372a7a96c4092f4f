#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "c1p/matrix.hpp"
#include "oracles.hpp"

using namespace c1p;

namespace {

BinaryMatrix without_row(const BinaryMatrix& m, std::size_t dropped) {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r != dropped) rows.push_back(r);
  }
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(c);
  return submatrix(m, rows, cols);
}

}  // namespace

TEST_CASE("parse_matrix reads the header and rows") {
  const auto m = parse_matrix("3 4\n1 1 0 0\n0 1 1 0\n0 1 0 1");
  CHECK(m == BinaryMatrix({{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 1, 0, 1}}));
  CHECK(parse_matrix("1 1\n1") == BinaryMatrix(std::vector<std::vector<int>>{{1}}));
  CHECK(parse_matrix("2 2\r\n1 0\r\n0 1\r\n\n") == BinaryMatrix({{1, 0}, {0, 1}}));
}

TEST_CASE("parse_matrix rejects malformed input") {
  CHECK_THROWS_WITH_AS(parse_matrix("2 2\n1 1\n1"), "row 2 has 1 token, expected 2", ParseError);
  CHECK_THROWS_AS(parse_matrix(""), ParseError);
  CHECK_THROWS_AS(parse_matrix("0 3\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("2 2\n1 2\n0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("2\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1 2\n1 1\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("3 2\n1 1\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("x 2\n1 1\n"), ParseError);
}

TEST_CASE("serialize_matrix writes the exact file format") {
  CHECK(serialize_matrix(BinaryMatrix({{1, 0, 1}, {0, 0, 1}})) == "2 3\n1 0 1\n0 0 1\n");
}

TEST_CASE("parse inverts serialize on every 3x3 matrix") {
  std::size_t seen = 0;
  oracle::for_each_matrix(3, 3, [&](const BinaryMatrix& m) {
    REQUIRE(parse_matrix(serialize_matrix(m)) == m);
    ++seen;
  });
  CHECK(seen == 512);
}

TEST_CASE("BinaryMatrix validates its entries") {
  CHECK_THROWS_AS(BinaryMatrix({{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(BinaryMatrix({{1, 0}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(BinaryMatrix(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(BinaryMatrix(std::vector<std::vector<int>>{}), std::invalid_argument);
}

TEST_CASE("tucker_pattern builds the canonical families") {
  CHECK(tucker_pattern(TuckerKind::III(4)) ==
        BinaryMatrix({{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 1, 0, 1}}));
  CHECK(tucker_pattern(TuckerKind::I(3)) == BinaryMatrix({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}));
  CHECK(tucker_pattern(TuckerKind::II(5)) == BinaryMatrix({{1, 1, 0, 0, 0},
                                                          {0, 1, 1, 0, 0},
                                                          {0, 0, 1, 1, 0},
                                                          {1, 1, 1, 0, 1},
                                                          {0, 1, 1, 1, 1}}));
  CHECK(tucker_pattern(TuckerKind::IV()) ==
        BinaryMatrix({{1, 1, 0, 0, 0}, {1, 1, 1, 1, 0}, {0, 0, 1, 1, 0}, {1, 0, 0, 1, 1}}));
  CHECK(tucker_pattern(TuckerKind::V()) == BinaryMatrix({{1, 1, 0, 0, 0, 0},
                                                        {0, 0, 1, 1, 0, 0},
                                                        {0, 0, 0, 0, 1, 1},
                                                        {0, 1, 0, 1, 0, 1}}));
  CHECK_THROWS_AS(tucker_pattern(TuckerKind::I(2)), std::invalid_argument);
  CHECK_THROWS_AS(tucker_pattern(TuckerKind::II(3)), std::invalid_argument);
  CHECK_THROWS_AS(tucker_pattern(TuckerKind::III(3)), std::invalid_argument);
}

TEST_CASE("tucker pattern dimensions") {
  for (std::size_t k = 4; k <= 12; ++k) {
    CHECK(tucker_pattern(TuckerKind::I(k)).rows() == k);
    CHECK(tucker_pattern(TuckerKind::I(k)).cols() == k);
    CHECK(tucker_pattern(TuckerKind::II(k)).rows() == k);
    CHECK(tucker_pattern(TuckerKind::II(k)).cols() == k);
    CHECK(tucker_pattern(TuckerKind::III(k)).rows() == k - 1);
    CHECK(tucker_pattern(TuckerKind::III(k)).cols() == k);
  }
  CHECK(tucker_pattern(TuckerKind::IV()).rows() == 4);
  CHECK(tucker_pattern(TuckerKind::IV()).cols() == 5);
  CHECK(tucker_pattern(TuckerKind::V()).rows() == 4);
  CHECK(tucker_pattern(TuckerKind::V()).cols() == 6);
}

TEST_CASE("check_ordering") {
  const BinaryMatrix gap({{1, 0, 1}});
  CHECK(check_ordering(gap, ColumnPermutation{{0, 2, 1}}));
  CHECK_FALSE(check_ordering(gap, ColumnPermutation{{0, 1, 2}}));
  CHECK_THROWS_AS(check_ordering(gap, ColumnPermutation{{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(check_ordering(gap, ColumnPermutation{{0, 1, 1}}), std::invalid_argument);

  const auto t3 = tucker_pattern(TuckerKind::III(4));
  std::vector<std::size_t> order{0, 1, 2, 3};
  std::size_t tried = 0;
  do {
    CHECK_FALSE(check_ordering(t3, ColumnPermutation{order}));
    ++tried;
  } while (std::next_permutation(order.begin(), order.end()));
  CHECK(tried == 24);
}

TEST_CASE("brute_force_c1p") {
  const BinaryMatrix identity({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  auto order = brute_force_c1p(identity);
  REQUIRE(order);
  CHECK(order->order == std::vector<std::size_t>{0, 1, 2});

  CHECK_FALSE(brute_force_c1p(tucker_pattern(TuckerKind::IV())));
  CHECK(brute_force_c1p(without_row(tucker_pattern(TuckerKind::I(3)), 2)));

  // Lexicographically first witness: [[1,0,1]] needs columns 1 and 3 adjacent.
  auto first = brute_force_c1p(BinaryMatrix({{1, 0, 1}}));
  REQUIRE(first);
  CHECK(first->order == std::vector<std::size_t>{0, 2, 1});

  CHECK_THROWS_AS(brute_force_c1p(BinaryMatrix(1, 10)), OracleLimitExceeded);
  CHECK(brute_force_c1p(BinaryMatrix(1, 10), 10));
}

TEST_CASE("oracle witnesses pass check_ordering") {
  oracle::for_each_matrix(3, 3, [](const BinaryMatrix& m) {
    if (auto p = brute_force_c1p(m)) REQUIRE(check_ordering(m, *p));
  });
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto m = random_matrix(5, 6, 0.45, seed);
    if (auto p = brute_force_c1p(m)) REQUIRE(check_ordering(m, *p));
  }
}

TEST_CASE("patterns are non-C1P and row-minimal") {
  for (const auto& kind : oracle::patterns_up_to(8)) {
    const auto pattern = tucker_pattern(kind);
    CAPTURE(family_name(kind.family));
    CAPTURE(kind.k);
    CHECK_FALSE(brute_force_c1p(pattern));
    for (std::size_t r = 0; r < pattern.rows(); ++r) {
      CHECK(brute_force_c1p(without_row(pattern, r)));
    }
  }
}

TEST_CASE("submatrix") {
  const auto t4 = tucker_pattern(TuckerKind::IV());
  CHECK(submatrix(t4, {0, 1, 2, 3}, {0, 1, 2, 3, 4}) == t4);
  CHECK(submatrix(t4, {0}, {0, 1}) == BinaryMatrix({{1, 1}}));
  CHECK(submatrix(t4, {3, 0}, {4, 0}) == BinaryMatrix({{1, 1}, {0, 1}}));

  BinaryMatrix padded(3, 5);
  const auto t3 = tucker_pattern(TuckerKind::III(4));
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 4; ++c) padded.set(r, c, t3.at(r, c));
  }
  CHECK(submatrix(padded, {0, 1, 2}, {0, 1, 2, 3}) == t3);

  CHECK_THROWS_AS(submatrix(t4, {4}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(submatrix(t4, {0, 0}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(submatrix(t4, {}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(submatrix(t4, {0}, {5}), std::invalid_argument);
}

TEST_CASE("random_matrix") {
  const auto zeros = random_matrix(4, 5, 0.0, 3);
  const auto ones = random_matrix(4, 5, 1.0, 3);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 5; ++c) {
      CHECK_FALSE(zeros.at(r, c));
      CHECK(ones.at(r, c));
    }
  }
  CHECK(brute_force_c1p(ones));
  CHECK(random_matrix(5, 5, 0.5, 11) == random_matrix(5, 5, 0.5, 11));
  CHECK_FALSE(random_matrix(5, 5, 0.5, 11) == random_matrix(5, 5, 0.5, 12));
  CHECK_THROWS_AS(random_matrix(2, 2, 1.5, 0), std::invalid_argument);
  CHECK_THROWS_AS(random_matrix(2, 2, -0.1, 0), std::invalid_argument);

  std::size_t ones_seen = 0;
  const auto big = random_matrix(100, 100, 0.3, 5);
  for (std::size_t r = 0; r < 100; ++r) {
    for (std::size_t c = 0; c < 100; ++c) ones_seen += big.at(r, c) ? 1 : 0;
  }
  CHECK(ones_seen > 2700);
  CHECK(ones_seen < 3300);
}
