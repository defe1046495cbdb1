// Dense GF(2) linear algebra on bit-packed rows.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tbcc/errors.hpp"

namespace tbcc {

// Width limit keeps word-packed rows cheap; nothing at desk scale comes close.
inline constexpr std::size_t kMaxBitCols = 4096;

// Fixed-width bit vector over GF(2).
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(std::size_t n);

    // Builds from a string of '0'/'1' characters, leftmost = index 0.
    static BitVec from_string(const std::string& bits);

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool v);

    BitVec& operator^=(const BitVec& o);
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

    bool is_zero() const;
    std::size_t popcount() const;

    // Index of the first / last set bit; -1 when zero.
    int first_set() const;
    int last_set() const;

    // Cyclic shifts on Z_n: rotated_right(j) sends bit i to bit i+j (rho_j),
    // rotated_left(j) is the inverse (sigma_j).
    BitVec rotated_right(std::size_t j) const;
    BitVec rotated_left(std::size_t j) const;

    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
    // Lexicographic by bit string, index 0 most significant.
    bool operator<(const BitVec& o) const;

    std::string to_string() const;

  private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Dense row-major GF(2) matrix.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    // One string per row, all the same length.
    static BitMatrix from_strings(const std::vector<std::string>& rows);

    std::size_t rows() const { return r_.size(); }
    std::size_t cols() const { return cols_; }
    const BitVec& row(std::size_t i) const { return r_[i]; }
    BitVec& row(std::size_t i) { return r_[i]; }
    bool get(std::size_t i, std::size_t j) const { return r_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool v) { r_[i].set(j, v); }

    void append_row(const BitVec& v);

    bool operator==(const BitMatrix& o) const = default;

    std::string to_string() const;  // one row per line

  private:
    std::size_t cols_ = 0;
    std::vector<BitVec> r_;
};

std::size_t rank(const BitMatrix& m);

// Reduced row echelon form with the fixed leftmost-pivot rule; zero rows are
// dropped, so equal row spaces give byte-identical results.
BitMatrix rref(const BitMatrix& m);

bool row_space_equal(const BitMatrix& a, const BitMatrix& b);
bool in_row_space(const BitMatrix& m, const BitVec& v);

// Basis of the right null space, one basis vector per RREF-canonical row.
BitMatrix null_space(const BitMatrix& m);

// Minimal span form of a full-row-rank matrix: row operations until all row
// starts are pairwise distinct and all row ends are pairwise distinct.
// Deterministic greedy: resolve the leftmost start collision first (pivot =
// smallest end), then the rightmost end collision (pivot = largest start),
// repeating until stable. Throws DegenerateBasisError when rows are dependent.
BitMatrix minimal_span_form(const BitMatrix& m);

}  // namespace tbcc
