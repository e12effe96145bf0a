#pragma once

#include <string>
#include <vector>

#include "twoclosure/perm.hpp"

namespace twoclosure {

/// A partition of {0..n-1}. Classes are indexed in order of their least
/// element, so two equal partitions always have identical `class_of` arrays.
class EquivRelation {
public:
  EquivRelation() = default;

  /// Any labelling whose equal labels mark equal classes.
  static EquivRelation from_labels(const std::vector<int> &labels) {
    EquivRelation e;
    e.class_of_.assign(labels.size(), -1);
    std::vector<int> remap;
    int maxlab = -1;
    for (int l : labels)
      maxlab = std::max(maxlab, l);
    remap.assign(static_cast<std::size_t>(maxlab + 1), -1);
    for (std::size_t a = 0; a < labels.size(); ++a) {
      if (labels[a] < 0)
        throw InputError("negative class label");
      int &r = remap[labels[a]];
      if (r < 0) {
        r = static_cast<int>(e.classes_.size());
        e.classes_.emplace_back();
      }
      e.class_of_[a] = r;
      e.classes_[r].push_back(static_cast<Point>(a));
    }
    return e;
  }

  /// Classes must partition {0..degree-1}.
  static EquivRelation from_classes(std::size_t degree,
                                    const std::vector<std::vector<Point>> &classes) {
    std::vector<int> lab(degree, -1);
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (Point a : classes[c]) {
        if (a < 0 || static_cast<std::size_t>(a) >= degree || lab[a] >= 0)
          throw InputError("classes do not partition the domain");
        lab[a] = static_cast<int>(c);
      }
    for (int l : lab)
      if (l < 0)
        throw InputError("classes do not cover the domain");
    return from_labels(lab);
  }

  static EquivRelation identity(std::size_t degree) {
    std::vector<int> lab(degree);
    for (std::size_t i = 0; i < degree; ++i)
      lab[i] = static_cast<int>(i);
    return from_labels(lab);
  }

  static EquivRelation full(std::size_t degree) {
    return from_labels(std::vector<int>(degree, 0));
  }

  std::size_t degree() const { return class_of_.size(); }
  std::size_t num_classes() const { return classes_.size(); }
  int class_of(Point a) const { return class_of_[a]; }
  const std::vector<int> &labels() const { return class_of_; }
  const std::vector<Point> &class_members(int c) const { return classes_[c]; }
  const std::vector<std::vector<Point>> &classes() const { return classes_; }

  bool is_identity() const { return classes_.size() == class_of_.size(); }

  /// True iff every class of *this lies inside a class of `coarser`.
  bool refines(const EquivRelation &coarser) const {
    if (coarser.degree() != degree())
      return false;
    for (const auto &cls : classes_)
      for (Point a : cls)
        if (coarser.class_of_[a] != coarser.class_of_[cls.front()])
          return false;
    return true;
  }

  bool strictly_refines(const EquivRelation &coarser) const {
    return refines(coarser) && num_classes() > coarser.num_classes();
  }

  /// Partition text: classes as {a,b,c} joined by spaces.
  std::string to_string() const {
    std::string s;
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      if (c)
        s += ' ';
      s += '{';
      for (std::size_t i = 0; i < classes_[c].size(); ++i)
        s += (i ? "," : "") + std::to_string(classes_[c][i]);
      s += '}';
    }
    return s;
  }

  friend bool operator==(const EquivRelation &a, const EquivRelation &b) {
    return a.class_of_ == b.class_of_;
  }

private:
  std::vector<int> class_of_;
  std::vector<std::vector<Point>> classes_;
};

} // namespace twoclosure
