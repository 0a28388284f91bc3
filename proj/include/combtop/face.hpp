#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace combtop {

/// Vertex identifiers live in [0, kMaxVertices).
inline constexpr int kMaxVertices = 64;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal self-check fails (a bug, never bad input).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A finite vertex set stored as a 64-bit mask. The empty face only appears
/// as an intermediate value; complexes never store it.
class Face {
 public:
  constexpr Face() = default;
  Face(std::initializer_list<int> vertices) : Face(std::span<const int>(vertices.begin(), vertices.size())) {}
  explicit Face(std::span<const int> vertices) {
    for (int v : vertices) {
      check_vertex(v);
      bits_ |= bit(v);
    }
  }

  static constexpr Face from_bits(std::uint64_t bits) {
    Face f;
    f.bits_ = bits;
    return f;
  }
  static Face single(int v) {
    check_vertex(v);
    return from_bits(bit(v));
  }
  /// {0, 1, ..., n-1}
  static Face prefix(int n) {
    if (n < 0 || n > kMaxVertices) throw Error("vertex cap");
    return from_bits(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr int dim() const { return size() - 1; }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr bool is_subset_of(Face other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool is_proper_subset_of(Face other) const { return is_subset_of(other) && bits_ != other.bits_; }
  constexpr bool intersects(Face other) const { return (bits_ & other.bits_) != 0; }

  constexpr Face operator|(Face o) const { return from_bits(bits_ | o.bits_); }
  constexpr Face operator&(Face o) const { return from_bits(bits_ & o.bits_); }
  constexpr Face operator-(Face o) const { return from_bits(bits_ & ~o.bits_); }
  Face with(int v) const { return *this | single(v); }
  Face without(int v) const { return *this - single(v); }

  /// Smallest vertex; undefined on the empty face.
  constexpr int min_vertex() const { return std::countr_zero(bits_); }
  constexpr int max_vertex() const { return 63 - std::countl_zero(bits_); }

  std::vector<int> vertices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <class F>
  void for_each_vertex(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

  /// Space-separated vertex list, e.g. "1 2 3".
  std::string to_string() const;

  friend constexpr bool operator==(Face, Face) = default;

 private:
  static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }
  static void check_vertex(int v) {
    if (v < 0 || v >= kMaxVertices) throw Error("vertex cap");
  }

  std::uint64_t bits_ = 0;
};

/// Lexicographic order on increasing vertex sequences ({1,2} < {1,2,3} < {1,3}).
constexpr bool lex_less(Face a, Face b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const std::uint64_t low = diff & (~diff + 1);
  const std::uint64_t above = ~((low << 1) - 1);
  // The first mismatch x is in exactly one of the two; the holder is smaller
  // unless the other sequence has already ended.
  if (a.bits() & low) return (b.bits() & above) != 0;
  return (a.bits() & above) == 0;
}

struct LexLess {
  constexpr bool operator()(Face a, Face b) const { return lex_less(a, b); }
};

/// Orders by dimension first, then lexicographically.
struct DimLexLess {
  constexpr bool operator()(Face a, Face b) const {
    return a.size() != b.size() ? a.size() < b.size() : lex_less(a, b);
  }
};

/// All subsets of `f` with exactly `k` vertices, in lexicographic order.
std::vector<Face> subsets_of_size(Face f, int k);

/// All non-empty subsets of `f` (2^|f| - 1 of them), in mask order.
template <class F>
void for_each_nonempty_subset(Face f, F&& fn) {
  const std::uint64_t m = f.bits();
  for (std::uint64_t s = m; s != 0; s = (s - 1) & m) fn(Face::from_bits(s));
}

}  // namespace combtop

template <>
struct std::hash<combtop::Face> {
  std::size_t operator()(combtop::Face f) const noexcept {
    std::uint64_t x = f.bits() * 0x9E3779B97F4A7C15ULL;
    return static_cast<std::size_t>(x ^ (x >> 29));
  }
};
