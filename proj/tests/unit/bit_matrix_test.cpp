#include "detcap/bit_matrix.hpp"

#include <doctest.h>

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "detcap/rng.hpp"

using detcap::BitMatrix;

namespace {

BitMatrix column(const std::vector<int>& bits) {
  BitMatrix m(bits.size(), 1);
  for (std::size_t i = 0; i < bits.size(); ++i) m.set(i, 0, bits[i] != 0);
  return m;
}

BitMatrix from_rows(const std::vector<std::string>& rows) {
  BitMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, rows[r][c] == '1');
  }
  return m;
}

// Independent rank oracle: the row span of a rank-r matrix has exactly
// 2^r elements. Feasible up to ~12 rows.
std::size_t rank_by_span(const BitMatrix& m) {
  REQUIRE(m.rows() <= 12);
  std::vector<std::uint64_t> rows(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.get(r, c)) rows[r] |= 1ULL << c;
    }
  }
  std::set<std::uint64_t> span;
  for (std::uint64_t subset = 0; subset < (1ULL << m.rows()); ++subset) {
    std::uint64_t acc = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if ((subset >> r) & 1) acc ^= rows[r];
    }
    span.insert(acc);
  }
  std::size_t rank = 0;
  while ((std::size_t{1} << rank) < span.size()) ++rank;
  return rank;
}

// Two-hop relay-layer transfer matrix with a known rank of 6.
const std::vector<std::string> kTwoHopCutMatrix = {
    "0000000000", "0000000000", "1000000000", "0100010000", "0010001000",
    "0000000000", "0000000000", "0000010000", "0000001000", "1000000100",
};

}  // namespace

TEST_CASE("shift matrix basics") {
  CHECK(detcap::shift_matrix(3, 0) == BitMatrix::identity(3));

  const BitMatrix s53 = detcap::shift_matrix(5, 3);
  for (std::size_t r = 0; r < 5; ++r) {
    for (std::size_t c = 0; c < 5; ++c) {
      CHECK(s53.get(r, c) == (r == c + 3));
    }
  }

  CHECK(detcap::shift_matrix(4, 2) * column({1, 0, 1, 1}) == column({0, 0, 1, 0}));
  CHECK(detcap::shift_matrix(3, 5).is_zero());
  CHECK(detcap::shift_matrix(3, 3).is_zero());
}

TEST_CASE("shift matrix rank is the surviving level count") {
  for (std::size_t q = 1; q <= 8; ++q) {
    for (std::size_t k = 0; k <= q + 2; ++k) {
      CHECK(detcap::shift_matrix(q, k).rank() == q - std::min(k, q));
    }
  }
}

TEST_CASE("shift matrices compose additively") {
  const std::size_t q = 6;
  for (std::size_t j = 0; j <= q; ++j) {
    for (std::size_t k = 0; j + k <= q; ++k) {
      CHECK(detcap::shift_matrix(q, j) * detcap::shift_matrix(q, k) ==
            detcap::shift_matrix(q, j + k));
    }
  }
}

TEST_CASE("rank of identity and the two-hop reference matrix") {
  for (std::size_t q : {1u, 3u, 10u, 64u, 65u}) {
    CHECK(BitMatrix::identity(q).rank() == q);
  }
  CHECK(from_rows(kTwoHopCutMatrix).rank() == 6);
}

TEST_CASE("rank agrees with the row-span oracle on random matrices") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    detcap::SplitMix64 rng(seed * 977 + 13);
    const std::size_t rows = 1 + rng.next() % 12;
    const std::size_t cols = 1 + rng.next() % 12;
    const BitMatrix m = detcap::random_bit_matrix(rows, cols, rng.next());
    CHECK(m.rank() == rank_by_span(m));
  }
}

TEST_CASE("product") {
  const BitMatrix b = detcap::random_bit_matrix(4, 7, 99);
  CHECK(BitMatrix::identity(4) * b == b);
  CHECK(detcap::shift_matrix(2, 1) * column({1, 1}) == column({0, 1}));
  CHECK_THROWS_AS(detcap::shift_matrix(3, 0) * detcap::shift_matrix(4, 0),
                  std::invalid_argument);
}

TEST_CASE("product rank never exceeds factor ranks") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const BitMatrix a = detcap::random_bit_matrix(5 + seed % 6, 4 + seed % 5, seed);
    const BitMatrix b = detcap::random_bit_matrix(4 + seed % 5, 6 + seed % 4, seed + 1000);
    CHECK((a * b).rank() <= std::min(a.rank(), b.rank()));
  }
}

TEST_CASE("GF(2) addition") {
  const BitMatrix a = detcap::random_bit_matrix(5, 9, 7);
  CHECK((a + a).is_zero());
  CHECK(a + BitMatrix(5, 9) == a);
  CHECK(column({1, 1}) + column({0, 1}) == column({1, 0}));
  CHECK_THROWS_AS(a + BitMatrix(5, 8), std::invalid_argument);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const BitMatrix x = detcap::random_bit_matrix(6, 6, seed);
    const BitMatrix y = detcap::random_bit_matrix(6, 6, seed + 500);
    CHECK((x + y) + y == x);  // involution
  }
}

TEST_CASE("block assembly") {
  const BitMatrix a = detcap::random_bit_matrix(3, 4, 1);
  const BitMatrix b = detcap::random_bit_matrix(2, 2, 2);

  CHECK(detcap::block_assemble({{a}}, {3}, {4}) == a);

  const BitMatrix stacked = detcap::block_assemble({{a}, {a}}, {3, 3}, {4});
  CHECK(stacked.rows() == 6);
  CHECK(stacked.cols() == 4);
  CHECK(stacked.get(4, 1) == a.get(1, 1));

  const BitMatrix zeros =
      detcap::block_assemble({{std::nullopt, std::nullopt}}, {2}, {3, 1});
  CHECK(zeros.rows() == 2);
  CHECK(zeros.cols() == 4);
  CHECK(zeros.is_zero());

  CHECK_THROWS_AS(detcap::block_assemble({{a}}, {2}, {4}), std::invalid_argument);

  const BitMatrix diag =
      detcap::block_assemble({{a, std::nullopt}, {std::nullopt, b}}, {3, 2}, {4, 2});
  CHECK(diag.rank() == a.rank() + b.rank());
}

TEST_CASE("block-diagonal rank splits over random blocks") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const BitMatrix a = detcap::random_bit_matrix(3 + seed % 5, 3 + seed % 4, seed);
    const BitMatrix b = detcap::random_bit_matrix(2 + seed % 6, 2 + seed % 5, seed + 111);
    const BitMatrix diag = detcap::block_assemble({{a, std::nullopt}, {std::nullopt, b}},
                                                  {a.rows(), b.rows()}, {a.cols(), b.cols()});
    CHECK(diag.rank() == a.rank() + b.rank());
  }
}

TEST_CASE("random matrices are reproducible") {
  CHECK(detcap::random_bit_matrix(17, 70, 42) == detcap::random_bit_matrix(17, 70, 42));
  CHECK(detcap::random_bit_matrix(17, 70, 42) != detcap::random_bit_matrix(17, 70, 43));

  const BitMatrix empty = detcap::random_bit_matrix(0, 5, 3);
  CHECK(empty.rows() == 0);
  CHECK(empty.cols() == 5);

  // Regression value for the frozen generator.
  CHECK(detcap::random_bit_matrix(64, 64, 12345).rank() == 64);
}

TEST_CASE("entry access is bounds-checked") {
  BitMatrix m(2, 3);
  CHECK_THROWS_AS(m.get(2, 0), std::out_of_range);
  CHECK_THROWS_AS(m.set(0, 3, true), std::out_of_range);
}
