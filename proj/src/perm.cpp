#include "gw/perm.hpp"

#include <numeric>
#include <sstream>

#include "gw/error.hpp"

namespace gw {

Perm Perm::identity(std::size_t n) {
  Perm p;
  p.img.resize(n);
  std::iota(p.img.begin(), p.img.end(), 0);
  return p;
}

Perm Perm::compose(const Perm& b) const {
  require(degree() == b.degree(), "composing permutations of unequal degree");
  Perm r;
  r.img.resize(degree());
  for (std::size_t x = 0; x < degree(); ++x) r.img[x] = img[b.img[x]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img.resize(degree());
  for (std::size_t x = 0; x < degree(); ++x) r.img[img[x]] = static_cast<std::uint32_t>(x);
  return r;
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < degree(); ++x)
    if (img[x] != x) return false;
  return true;
}

std::uint64_t Perm::order() const {
  // lcm of cycle lengths
  std::vector<char> seen(degree(), 0);
  std::uint64_t ord = 1;
  for (std::size_t x = 0; x < degree(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    std::uint32_t y = static_cast<std::uint32_t>(x);
    while (!seen[y]) {
      seen[y] = 1;
      y = img[y];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::size_t PermHash::operator()(const Perm& p) const {
  // FNV-1a over the image bytes
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint32_t v : p.img) {
    for (int k = 0; k < 4; ++k) {
      h ^= (v >> (8 * k)) & 0xffu;
      h *= 1099511628211ull;
    }
  }
  return static_cast<std::size_t>(h);
}

Perm perm_from_cycles(std::size_t degree, const std::string& text) {
  Perm p = Perm::identity(degree);
  std::vector<std::uint32_t> cycle;
  std::string num;
  bool in_cycle = false;

  auto flush_num = [&]() {
    if (num.empty()) return;
    std::uint64_t v = std::stoull(num);
    require(v < degree, "cycle point " + num + " out of range for degree " +
                            std::to_string(degree));
    cycle.push_back(static_cast<std::uint32_t>(v));
    num.clear();
  };
  auto close_cycle = [&]() {
    flush_num();
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      std::uint32_t from = cycle[i];
      std::uint32_t to = cycle[(i + 1) % cycle.size()];
      require(p.img[from] == from, "point repeated across cycles: " + std::to_string(from));
      p.img[from] = to;
    }
    cycle.clear();
  };

  for (char c : text) {
    if (c == '(') {
      require(!in_cycle, "nested '(' in cycle notation");
      in_cycle = true;
    } else if (c == ')') {
      require(in_cycle, "unmatched ')' in cycle notation");
      close_cycle();
      in_cycle = false;
    } else if (c >= '0' && c <= '9') {
      require(in_cycle, "digit outside cycle in cycle notation");
      num += c;
    } else if (c == ' ' || c == ',' || c == '\t') {
      flush_num();
    } else {
      require(false, std::string("unexpected character '") + c + "' in cycle notation");
    }
  }
  require(!in_cycle, "unterminated cycle in cycle notation");
  // fixed points mapped by identity; multi-point cycles already applied
  return p;
}

std::string to_cycle_string(const Perm& p) {
  std::ostringstream os;
  std::vector<char> seen(p.degree(), 0);
  bool any = false;
  for (std::size_t x = 0; x < p.degree(); ++x) {
    if (seen[x] || p.img[x] == x) {
      seen[x] = 1;
      continue;
    }
    any = true;
    os << '(';
    std::uint32_t y = static_cast<std::uint32_t>(x);
    bool first = true;
    while (!seen[y]) {
      seen[y] = 1;
      if (!first) os << ' ';
      os << y;
      first = false;
      y = p.img[y];
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

} // namespace gw
