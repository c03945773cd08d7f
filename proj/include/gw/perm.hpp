#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gw {

/// Permutation of {0, ..., n-1} stored as the image list img[x].
struct Perm {
  std::vector<std::uint32_t> img;

  static Perm identity(std::size_t n);

  std::size_t degree() const { return img.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return img[x]; }

  /// Function composition: (a.compose(b))(x) = a(b(x)).
  Perm compose(const Perm& b) const;
  Perm inverse() const;
  bool is_identity() const;
  std::uint64_t order() const;

  bool operator==(const Perm& o) const { return img == o.img; }
  bool operator!=(const Perm& o) const { return img != o.img; }
  bool operator<(const Perm& o) const { return img < o.img; }
};

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

/// Parses disjoint-cycle notation with 0-based points, e.g. "(0 1)(2 3)".
/// "()" or an empty string denotes the identity.
Perm perm_from_cycles(std::size_t degree, const std::string& text);
std::string to_cycle_string(const Perm& p);

} // namespace gw
