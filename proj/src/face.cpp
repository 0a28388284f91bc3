#include "combtop/face.hpp"

namespace combtop {

std::string Face::to_string() const {
  std::string out;
  for_each_vertex([&](int v) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  });
  return out;
}

std::vector<Face> subsets_of_size(Face f, int k) {
  std::vector<Face> out;
  const std::vector<int> verts = f.vertices();
  const int n = static_cast<int>(verts.size());
  if (k < 0 || k > n) return out;
  if (k == 0) {
    out.push_back(Face{});
    return out;
  }
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::uint64_t bits = 0;
    for (int i : idx) bits |= std::uint64_t{1} << verts[i];
    out.push_back(Face::from_bits(bits));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace combtop
