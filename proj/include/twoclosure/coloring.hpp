#pragma once

#include <string>
#include <vector>

#include "twoclosure/perm.hpp"

namespace twoclosure {

/// An n x n matrix of colors on pairs of points. Colors are numbered
/// canonically: scanning cells row by row, each new color gets the next id.
class OrbitalColoring {
public:
  OrbitalColoring() = default;

  /// Takes arbitrary labels and renumbers them canonically.
  OrbitalColoring(std::size_t n, const std::vector<int> &labels) : n_(n), color_(n * n) {
    if (labels.size() != n * n)
      throw InputError("coloring must have n*n cells");
    std::vector<int> remap;
    for (std::size_t c = 0; c < n * n; ++c) {
      int l = labels[c];
      if (l < 0)
        throw InputError("negative color label");
      if (static_cast<std::size_t>(l) >= remap.size())
        remap.resize(l + 1, -1);
      if (remap[l] < 0)
        remap[l] = num_colors_++;
      color_[c] = remap[l];
    }
  }

  std::size_t degree() const { return n_; }
  int num_colors() const { return num_colors_; }
  int operator()(Point a, Point b) const { return color_[static_cast<std::size_t>(a) * n_ + b]; }
  const std::vector<int> &cells() const { return color_; }

  /// The coloring transported by p: result(a,b) = this(a^p, b^p).
  OrbitalColoring pulled_back(const Permutation &p) const {
    std::vector<int> lab(n_ * n_);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        lab[a * n_ + b] = (*this)(p[static_cast<Point>(a)], p[static_cast<Point>(b)]);
    return OrbitalColoring(n_, lab);
  }

  /// Raw colors are kept (not renumbered) so that the result is comparable
  /// cell by cell with this coloring.
  std::vector<int> raw_pulled_back(const Permutation &p) const {
    std::vector<int> lab(n_ * n_);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        lab[a * n_ + b] = (*this)(p[static_cast<Point>(a)], p[static_cast<Point>(b)]);
    return lab;
  }

  bool preserved_by(const Permutation &p) const {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        if ((*this)(static_cast<Point>(a), static_cast<Point>(b)) !=
            (*this)(p[static_cast<Point>(a)], p[static_cast<Point>(b)]))
          return false;
    return true;
  }

  friend bool operator==(const OrbitalColoring &, const OrbitalColoring &) = default;

private:
  std::size_t n_ = 0;
  std::vector<int> color_;
  int num_colors_ = 0;
};

} // namespace twoclosure
