#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace twoclosure {

using Point = std::int32_t;
using BigInt = boost::multiprecision::cpp_int;

/// Malformed input: bad permutation images, degree mismatch, parse failures.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};

/// A structural assertion that the algorithms guarantee was violated.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

#define TWOCLOSURE_ASSERT(cond, msg)                                           \
  do {                                                                         \
    if (!(cond))                                                               \
      throw ::twoclosure::InternalError(std::string("assertion failed: ") +    \
                                        (msg));                                \
  } while (0)

/// A bijection of {0..n-1} stored as its image array.
///
/// Products act on the right: (p * q) maps a to q(p(a)), so `a^(pq) = (a^p)^q`.
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  /// Validates that `images` is a bijection; throws InputError otherwise.
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (Point p : images_) {
      if (p < 0 || static_cast<std::size_t>(p) >= images_.size() || seen[p])
        throw InputError("images do not form a permutation of 0.." +
                         std::to_string(images_.size() - 1));
      seen[p] = 1;
    }
  }

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Builds from disjoint cycles, e.g. {{0,1,2},{3,4}}.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>> &cycles) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    for (const auto &c : cycles)
      for (std::size_t i = 0; i < c.size(); ++i)
        img.at(c[i]) = c[(i + 1) % c.size()];
    return Permutation(std::move(img));
  }

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point a) const { return images_[a]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != static_cast<Point>(i))
        return false;
    return true;
  }

  Permutation inverse() const {
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      r.images_[images_[i]] = static_cast<Point>(i);
    return r;
  }

  friend Permutation operator*(const Permutation &a, const Permutation &b) {
    if (a.degree() != b.degree())
      throw InputError("degree mismatch in permutation product");
    Permutation r;
    r.images_.resize(a.images_.size());
    for (std::size_t i = 0; i < a.images_.size(); ++i)
      r.images_[i] = b.images_[a.images_[i]];
    return r;
  }

  Permutation pow(long long e) const {
    Permutation base = e < 0 ? inverse() : *this;
    unsigned long long k = e < 0 ? -static_cast<unsigned long long>(e) : e;
    Permutation r(degree());
    while (k) {
      if (k & 1)
        r = r * base;
      base = base * base;
      k >>= 1;
    }
    return r;
  }

  /// x^-1 * p * x
  Permutation conjugate_by(const Permutation &x) const { return x.inverse() * *this * x; }

  /// Element order (lcm of cycle lengths).
  BigInt order() const {
    std::vector<char> seen(degree(), 0);
    BigInt r = 1;
    for (std::size_t i = 0; i < degree(); ++i) {
      if (seen[i])
        continue;
      long long len = 0;
      for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
        seen[j] = 1;
        ++len;
      }
      BigInt l = len;
      r = r / boost::multiprecision::gcd(r, l) * l;
    }
    return r;
  }

  std::vector<std::vector<Point>> cycles() const {
    std::vector<char> seen(degree(), 0);
    std::vector<std::vector<Point>> out;
    for (std::size_t i = 0; i < degree(); ++i) {
      if (seen[i] || images_[i] == static_cast<Point>(i))
        continue;
      std::vector<Point> c;
      for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
        seen[j] = 1;
        c.push_back(j);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  std::string to_cycle_string() const {
    auto cs = cycles();
    if (cs.empty())
      return "()";
    std::string s;
    for (const auto &c : cs) {
      s += '(';
      for (std::size_t i = 0; i < c.size(); ++i)
        s += (i ? " " : "") + std::to_string(c[i]);
      s += ')';
    }
    return s;
  }

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &a, const Permutation &b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Point x : p.images())
      h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

/// Commutator a^-1 b^-1 a b.
inline Permutation commutator(const Permutation &a, const Permutation &b) {
  return a.inverse() * b.inverse() * a * b;
}

inline std::vector<std::pair<BigInt, int>> factorize(BigInt n) {
  std::vector<std::pair<BigInt, int>> out;
  for (BigInt p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e)
      out.emplace_back(p, e);
  }
  if (n > 1)
    out.emplace_back(n, 1);
  return out;
}

inline bool is_prime(long long n) {
  if (n < 2)
    return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

inline BigInt factorial(long long n) {
  BigInt r = 1;
  for (long long i = 2; i <= n; ++i)
    r *= i;
  return r;
}

} // namespace twoclosure
