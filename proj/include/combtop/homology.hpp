#pragma once

#include <cstdint>
#include <vector>

#include "combtop/complex.hpp"

namespace combtop {

/// Dense matrix over GF(2), stored as bit rows.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool get(int r, int c) const { return (data_[index(r, c)] >> (c % 64)) & 1U; }
  void set(int r, int c, bool value);

  /// Rank by Gaussian elimination on a copy.
  int rank() const;
  /// Matrix product over GF(2).
  Gf2Matrix operator*(const Gf2Matrix& other) const;
  bool is_zero() const;

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * words_ + static_cast<std::size_t>(c / 64); }

  int rows_ = 0;
  int cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

/// Reduced Betti numbers (b̃_0, ..., b̃_d) over GF(2).
struct BettiVector {
  std::vector<int> reduced_betti;

  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

/// ∂_q: rows are the (q-1)-faces and columns the q-faces, both in
/// lexicographic order. Throws unless 1 <= q <= dim(K).
Gf2Matrix boundary_matrix(const SimplicialComplex& k, int q);

/// Exact reduced GF(2) Betti numbers; b̃_0 comes from the component count.
/// The void complex yields an empty vector.
BettiVector reduced_betti(const SimplicialComplex& k);

/// All reduced Betti numbers vanish (false for the void complex).
bool is_z2_acyclic(const SimplicialComplex& k);
/// b̃_d = 1 and every other reduced Betti number is 0, with dim(K) = d.
bool is_z2_homology_sphere(const SimplicialComplex& k, int d);

std::string to_string(const BettiVector& b);

}  // namespace combtop
