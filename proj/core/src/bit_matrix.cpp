#include "detcap/bit_matrix.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

#include "detcap/rng.hpp"

namespace detcap {

namespace {

std::uint64_t tail_mask(std::size_t cols) {
  const std::size_t rem = cols % 64;
  return rem == 0 ? ~0ULL : (1ULL << rem) - 1;
}

}  // namespace

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

void BitMatrix::check_bounds(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw std::out_of_range("BitMatrix: entry (" + std::to_string(r) + ", " + std::to_string(c) +
                            ") outside " + std::to_string(rows_) + " x " + std::to_string(cols_));
  }
}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
  check_bounds(r, c);
  return (row_words(r)[c / 64] >> (c % 64)) & 1;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
  check_bounds(r, c);
  const std::uint64_t bit = 1ULL << (c % 64);
  if (value) {
    row_words(r)[c / 64] |= bit;
  } else {
    row_words(r)[c / 64] &= ~bit;
  }
}

std::size_t BitMatrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  std::vector<std::uint64_t> work(bits_);
  auto row = [&](std::size_t r) { return work.data() + r * words_; };

  std::size_t rk = 0;
  for (std::size_t col = 0; col < cols_ && rk < rows_; ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = 1ULL << (col % 64);

    std::size_t pivot = rk;
    while (pivot < rows_ && !(row(pivot)[w] & bit)) ++pivot;
    if (pivot == rows_) continue;

    if (pivot != rk) {
      for (std::size_t k = 0; k < words_; ++k) std::swap(row(pivot)[k], row(rk)[k]);
    }
    for (std::size_t r = rk + 1; r < rows_; ++r) {
      if (row(r)[w] & bit) {
        for (std::size_t k = w; k < words_; ++k) row(r)[k] ^= row(rk)[k];
      }
    }
    ++rk;
  }
  return rk;
}

bool BitMatrix::is_zero() const {
  for (std::uint64_t w : bits_) {
    if (w != 0) return false;
  }
  return true;
}

std::string BitMatrix::to_string() const {
  std::string out;
  out.reserve(rows_ * (cols_ + 1));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(get(r, c) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

BitMatrix operator+(const BitMatrix& a, const BitMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("BitMatrix: GF(2) add needs equal shapes, got " +
                                std::to_string(a.rows_) + " x " + std::to_string(a.cols_) +
                                " and " + std::to_string(b.rows_) + " x " +
                                std::to_string(b.cols_));
  }
  BitMatrix out = a;
  for (std::size_t i = 0; i < out.bits_.size(); ++i) out.bits_[i] ^= b.bits_[i];
  return out;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw std::invalid_argument("BitMatrix: product needs a.cols == b.rows, got " +
                                std::to_string(a.cols_) + " and " + std::to_string(b.rows_));
  }
  BitMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    const std::uint64_t* arow = a.row_words(i);
    std::uint64_t* orow = out.row_words(i);
    for (std::size_t w = 0; w < a.words_; ++w) {
      std::uint64_t word = arow[w];
      while (word != 0) {
        const std::size_t k = 64 * w + static_cast<std::size_t>(std::countr_zero(word));
        const std::uint64_t* brow = b.row_words(k);
        for (std::size_t j = 0; j < b.words_; ++j) orow[j] ^= brow[j];
        word &= word - 1;
      }
    }
  }
  return out;
}

BitMatrix shift_matrix(std::size_t q, std::size_t k) {
  BitMatrix m(q, q);
  for (std::size_t i = k; i < q; ++i) m.set(i, i - k, true);
  return m;
}

BitMatrix block_assemble(const std::vector<std::vector<std::optional<BitMatrix>>>& blocks,
                         const std::vector<std::size_t>& row_dims,
                         const std::vector<std::size_t>& col_dims) {
  if (blocks.size() != row_dims.size()) {
    throw std::invalid_argument("block_assemble: grid has " + std::to_string(blocks.size()) +
                                " block rows but " + std::to_string(row_dims.size()) +
                                " row dims");
  }
  std::size_t total_rows = 0;
  for (std::size_t d : row_dims) total_rows += d;
  std::size_t total_cols = 0;
  for (std::size_t d : col_dims) total_cols += d;

  BitMatrix out(total_rows, total_cols);
  std::size_t r0 = 0;
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    if (blocks[bi].size() != col_dims.size()) {
      throw std::invalid_argument("block_assemble: block row " + std::to_string(bi) + " has " +
                                  std::to_string(blocks[bi].size()) + " blocks but " +
                                  std::to_string(col_dims.size()) + " col dims");
    }
    std::size_t c0 = 0;
    for (std::size_t bj = 0; bj < col_dims.size(); ++bj) {
      const auto& blk = blocks[bi][bj];
      if (blk.has_value()) {
        if (blk->rows() != row_dims[bi] || blk->cols() != col_dims[bj]) {
          throw std::invalid_argument(
              "block_assemble: block (" + std::to_string(bi) + ", " + std::to_string(bj) +
              ") is " + std::to_string(blk->rows()) + " x " + std::to_string(blk->cols()) +
              ", expected " + std::to_string(row_dims[bi]) + " x " + std::to_string(col_dims[bj]));
        }
        for (std::size_t r = 0; r < blk->rows(); ++r) {
          for (std::size_t c = 0; c < blk->cols(); ++c) {
            if (blk->get(r, c)) out.set(r0 + r, c0 + c, true);
          }
        }
      }
      c0 += col_dims[bj];
    }
    r0 += row_dims[bi];
  }
  return out;
}

BitMatrix random_bit_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  BitMatrix m(rows, cols);
  if (rows == 0 || cols == 0) return m;
  SplitMix64 rng(seed);
  const std::size_t words = (cols + 63) / 64;
  const std::uint64_t mask = tail_mask(cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t word = rng.next();
      if (w == words - 1) word &= mask;
      m.row_words(r)[w] = word;
    }
  }
  return m;
}

}  // namespace detcap
