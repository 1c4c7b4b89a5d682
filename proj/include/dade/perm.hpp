#pragma once

#include <string>
#include <vector>

#include "dade/common.hpp"

namespace dade {

/// A permutation of {0, ..., n-1}, stored as its image vector.
struct Perm {
  std::vector<int> img;

  Perm() = default;
  explicit Perm(std::vector<int> images) : img(std::move(images)) {}

  static Perm identity(int degree) {
    Perm p;
    p.img.resize(degree);
    for (int i = 0; i < degree; ++i) p.img[i] = i;
    return p;
  }

  int degree() const { return static_cast<int>(img.size()); }
  int operator()(int x) const { return img[x]; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img[i] != i) return false;
    return true;
  }

  friend bool operator==(const Perm& a, const Perm& b) { return a.img == b.img; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img < b.img; }
};

/// (a * b)(x) = a(b(x)).
inline Perm compose(const Perm& a, const Perm& b) {
  Perm r;
  r.img.resize(a.degree());
  for (int x = 0; x < a.degree(); ++x) r.img[x] = a(b(x));
  return r;
}

inline Perm inverse(const Perm& a) {
  Perm r;
  r.img.resize(a.degree());
  for (int x = 0; x < a.degree(); ++x) r.img[a(x)] = x;
  return r;
}

/// Parses cycle notation over 0-based points, e.g. "(0 1 2)(3 4)".
/// Commas and whitespace both separate points.  Returns the list of cycles;
/// the caller fixes the degree (cycles only mention moved points).
std::vector<std::vector<int>> parse_cycles(const std::string& text);

Perm perm_from_cycles(const std::vector<std::vector<int>>& cycles, int degree);

std::string to_cycle_string(const Perm& p);

}  // namespace dade
