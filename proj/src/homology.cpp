#include "combtop/homology.hpp"

#include <algorithm>
#include <unordered_map>

namespace combtop {

Gf2Matrix::Gf2Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_(static_cast<std::size_t>((cols + 63) / 64)),
      data_(static_cast<std::size_t>(rows) * words_, 0) {}

void Gf2Matrix::set(int r, int c, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << (c % 64);
  if (value)
    data_[index(r, c)] |= bit;
  else
    data_[index(r, c)] &= ~bit;
}

int Gf2Matrix::rank() const {
  std::vector<std::uint64_t> m = data_;
  int rank = 0;
  for (int c = 0; c < cols_ && rank < rows_; ++c) {
    const std::size_t w = static_cast<std::size_t>(c / 64);
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    int pivot = -1;
    for (int r = rank; r < rows_; ++r) {
      if (m[static_cast<std::size_t>(r) * words_ + w] & bit) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      std::swap_ranges(m.begin() + static_cast<std::ptrdiff_t>(pivot * words_),
                       m.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * words_),
                       m.begin() + static_cast<std::ptrdiff_t>(rank * words_));
    }
    const std::uint64_t* prow = &m[static_cast<std::size_t>(rank) * words_];
    for (int r = rank + 1; r < rows_; ++r) {
      std::uint64_t* row = &m[static_cast<std::size_t>(r) * words_];
      if (row[w] & bit) {
        for (std::size_t j = w; j < words_; ++j) row[j] ^= prow[j];
      }
    }
    ++rank;
  }
  return rank;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& other) const {
  if (cols_ != other.rows_) throw Error("Gf2Matrix: dimension mismatch");
  Gf2Matrix out(rows_, other.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int k = 0; k < cols_; ++k) {
      if (!get(r, k)) continue;
      for (std::size_t j = 0; j < out.words_; ++j)
        out.data_[static_cast<std::size_t>(r) * out.words_ + j] ^= other.data_[static_cast<std::size_t>(k) * other.words_ + j];
    }
  }
  return out;
}

bool Gf2Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint64_t w) { return w == 0; });
}

Gf2Matrix boundary_matrix(const SimplicialComplex& k, int q) {
  if (q < 1 || q > k.dim()) throw Error("boundary_matrix: q out of range");
  const std::vector<Face> lower = k.faces(q - 1);
  const std::vector<Face> upper = k.faces(q);
  std::unordered_map<Face, int> row_of;
  row_of.reserve(lower.size());
  for (std::size_t i = 0; i < lower.size(); ++i) row_of.emplace(lower[i], static_cast<int>(i));
  Gf2Matrix m(static_cast<int>(lower.size()), static_cast<int>(upper.size()));
  for (std::size_t c = 0; c < upper.size(); ++c) {
    upper[c].for_each_vertex([&](int v) { m.set(row_of.at(upper[c].without(v)), static_cast<int>(c), true); });
  }
  return m;
}

BettiVector reduced_betti(const SimplicialComplex& k) {
  BettiVector b;
  if (k.empty()) return b;
  const int d = k.dim();
  // ranks[q] = rank ∂_q for 1 <= q <= d; ranks[0] and ranks[d+1] are zero.
  std::vector<int> ranks(static_cast<std::size_t>(d + 2), 0);
  for (int q = 1; q <= d; ++q) ranks[q] = boundary_matrix(k, q).rank();
  const FVector f = k.f_vector();
  b.reduced_betti.resize(static_cast<std::size_t>(d + 1));
  const int components = static_cast<int>(connected_components(k).size());
  if (f[0] - ranks[1] != components) throw InvariantViolation("reduced_betti: rank of boundary_1 disagrees with component count");
  b.reduced_betti[0] = components - 1;
  for (int q = 1; q <= d; ++q) b.reduced_betti[q] = static_cast<int>(f[q]) - ranks[q] - ranks[q + 1];
  return b;
}

bool is_z2_acyclic(const SimplicialComplex& k) {
  if (k.empty()) return false;
  const BettiVector b = reduced_betti(k);
  return std::all_of(b.reduced_betti.begin(), b.reduced_betti.end(), [](int x) { return x == 0; });
}

bool is_z2_homology_sphere(const SimplicialComplex& k, int d) {
  if (k.empty() || k.dim() != d) return false;
  const BettiVector b = reduced_betti(k);
  for (int q = 0; q <= d; ++q) {
    if (b.reduced_betti[q] != (q == d ? 1 : 0)) return false;
  }
  return true;
}

std::string to_string(const BettiVector& b) {
  std::string out = "(";
  for (std::size_t i = 0; i < b.reduced_betti.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(b.reduced_betti[i]);
  }
  return out + ")";
}

}  // namespace combtop
