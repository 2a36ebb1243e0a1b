#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace detcap {

/// Dense matrix over GF(2).
///
/// Rows are packed into 64-bit words (bit c of word c/64 is column c).
/// Row 0 is the most significant signal level; the shift matrix moves
/// bits toward higher row indices, i.e. down toward the least
/// significant level. Addition is XOR, multiplication is AND-XOR.
/// Instances are plain values: every operation returns a fresh matrix
/// and never mutates its inputs, so sharing across threads is safe.
class BitMatrix {
public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);  // zero-filled

  static BitMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value);

  /// Dimension of the row space, by Gaussian elimination on a copy.
  std::size_t rank() const;

  bool is_zero() const;

  /// '0'/'1' grid, one row per line.
  std::string to_string() const;

  friend BitMatrix operator+(const BitMatrix& a, const BitMatrix& b);  // XOR
  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
  friend bool operator==(const BitMatrix& a, const BitMatrix& b) = default;
  friend BitMatrix random_bit_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed);

private:
  void check_bounds(std::size_t r, std::size_t c) const;
  const std::uint64_t* row_words(std::size_t r) const { return bits_.data() + r * words_; }
  std::uint64_t* row_words(std::size_t r) { return bits_.data() + r * words_; }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;  // words per row; tail bits are kept zero
  std::vector<std::uint64_t> bits_;
};

/// S^k for the q x q down-shift matrix S: entry (i, j) = 1 iff i = j + k.
/// k = 0 gives the identity; k >= q gives the zero matrix.
BitMatrix shift_matrix(std::size_t q, std::size_t k);

/// Assemble a block matrix. blocks[i][j] occupies row_dims[i] x col_dims[j];
/// an absent block stands for all zeros. Shape mismatches throw
/// std::invalid_argument.
BitMatrix block_assemble(const std::vector<std::vector<std::optional<BitMatrix>>>& blocks,
                         const std::vector<std::size_t>& row_dims,
                         const std::vector<std::size_t>& col_dims);

/// I.i.d. uniform bits from SplitMix64(seed), drawn row-major one 64-bit
/// word at a time with the last word of each row masked to the column
/// count. Identical (rows, cols, seed) always produce identical matrices.
BitMatrix random_bit_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed);

}  // namespace detcap
