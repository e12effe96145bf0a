#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "twoclosure/actions.hpp"

namespace twoclosure {

namespace detail {

// Row vectors over F_p; a matrix acts on the right, v -> v * A.
using Vec = std::vector<int>;
using Mat = std::vector<Vec>;

inline int inv_mod(int a, int p) {
  long r = 1, b = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1)
      r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<int>(r);
}

inline Vec vec_times(const Vec &v, const Mat &A, int p) {
  Vec r(A.empty() ? 0 : A[0].size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i])
      for (std::size_t j = 0; j < r.size(); ++j)
        r[j] = static_cast<int>((r[j] + static_cast<long>(v[i]) * A[i][j]) % p);
  return r;
}

inline bool is_zero(const Vec &v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

/// Basis of {c : c * M = 0} for a k x m matrix M.
inline Mat left_kernel(const Mat &M, int p) {
  const std::size_t k = M.size();
  if (k == 0)
    return {};
  const std::size_t m = M[0].size();
  Mat aug(k, Vec(m + k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    std::copy(M[i].begin(), M[i].end(), aug[i].begin());
    aug[i][m + i] = 1;
  }
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < k; ++col) {
    std::size_t piv = row;
    while (piv < k && aug[piv][col] == 0)
      ++piv;
    if (piv == k)
      continue;
    std::swap(aug[piv], aug[row]);
    int inv = inv_mod(aug[row][col], p);
    for (auto &x : aug[row])
      x = static_cast<int>(static_cast<long>(x) * inv % p);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == row || aug[r][col] == 0)
        continue;
      long f = aug[r][col];
      for (std::size_t c = 0; c < m + k; ++c)
        aug[r][c] = static_cast<int>(((aug[r][c] - f * aug[row][c]) % p + p) % p);
    }
    ++row;
  }
  Mat out;
  for (std::size_t r = row; r < k; ++r)
    out.emplace_back(aug[r].begin() + static_cast<long>(m), aug[r].end());
  return out;
}

/// A subspace kept in reduced echelon form.
class Subspace {
public:
  Subspace(std::size_t dim, int p) : dim_(dim), p_(p) {}

  Vec reduce(Vec v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      long f = v[pivots_[r]];
      if (f)
        for (std::size_t c = 0; c < dim_; ++c)
          v[c] = static_cast<int>(((v[c] - f * rows_[r][c]) % p_ + p_) % p_);
    }
    return v;
  }

  bool insert(const Vec &v) {
    Vec w = reduce(v);
    std::size_t piv = 0;
    while (piv < dim_ && w[piv] == 0)
      ++piv;
    if (piv == dim_)
      return false;
    int inv = inv_mod(w[piv], p_);
    for (auto &x : w)
      x = static_cast<int>(static_cast<long>(x) * inv % p_);
    for (auto &r : rows_) {
      long f = r[piv];
      if (f)
        for (std::size_t c = 0; c < dim_; ++c)
          r[c] = static_cast<int>(((r[c] - f * w[c]) % p_ + p_) % p_);
    }
    rows_.push_back(std::move(w));
    pivots_.push_back(piv);
    return true;
  }

  std::size_t size() const { return rows_.size(); }
  const Mat &rows() const { return rows_; }

private:
  std::size_t dim_;
  int p_;
  Mat rows_;
  std::vector<std::size_t> pivots_;
};

/// Smallest subspace containing v and invariant under all matrices.
inline Subspace spin(const Vec &v, const std::vector<Mat> &mats, int p) {
  Subspace S(v.size(), p);
  std::vector<Vec> queue;
  if (S.insert(v))
    queue.push_back(v);
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto &A : mats) {
      Vec w = vec_times(queue[i], A, p);
      if (S.insert(w))
        queue.push_back(std::move(w));
    }
  return S;
}

/// A vector spanning a line invariant under every matrix in `mats`, if one
/// exists. `derived` holds the matrices of the derived subgroup: an invariant
/// line is fixed pointwise by it, and on that fixed space the group acts
/// through an abelian quotient, so eigenspaces can be intersected one
/// generator at a time.
inline std::optional<Vec> common_eigenvector(const std::vector<Mat> &mats,
                                             const std::vector<Mat> &derived, int p,
                                             std::size_t dim) {
  Mat basis;
  {
    Mat stacked(dim, Vec{});
    for (const auto &A : derived)
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
          stacked[i].push_back(((A[i][j] - (i == j ? 1 : 0)) % p + p) % p);
    if (derived.empty()) {
      for (std::size_t i = 0; i < dim; ++i) {
        Vec e(dim, 0);
        e[i] = 1;
        basis.push_back(e);
      }
    } else {
      basis = left_kernel(stacked, p);
    }
  }
  auto span_times = [&](const Mat &S, const Mat &A, int lambda) {
    Mat M;
    for (const auto &s : S) {
      Vec w = vec_times(s, A, p);
      for (std::size_t j = 0; j < dim; ++j)
        w[j] = static_cast<int>(((w[j] - static_cast<long>(lambda) * s[j]) % p + p) % p);
      M.push_back(std::move(w));
    }
    return M;
  };
  std::function<std::optional<Vec>(const Mat &, std::size_t)> rec =
      [&](const Mat &S, std::size_t t) -> std::optional<Vec> {
    if (S.empty())
      return std::nullopt;
    if (t == mats.size())
      return S.front();
    for (int lambda = 1; lambda < p; ++lambda) {
      Mat C = left_kernel(span_times(S, mats[t], lambda), p);
      if (C.empty())
        continue;
      Mat E;
      for (const auto &c : C) {
        Vec v(dim, 0);
        for (std::size_t i = 0; i < S.size(); ++i)
          if (c[i])
            for (std::size_t j = 0; j < dim; ++j)
              v[j] = static_cast<int>((v[j] + static_cast<long>(c[i]) * S[i][j]) % p);
        E.push_back(std::move(v));
      }
      if (auto r = rec(E, t + 1))
        return r;
    }
    return std::nullopt;
  };
  return rec(basis, 0);
}

/// Matrices of the action on V / <v>.
inline std::vector<Mat> quotient_by_line(const std::vector<Mat> &mats, const Vec &v, int p) {
  const std::size_t d = v.size();
  std::size_t k = 0;
  while (v[k] == 0)
    ++k;
  int inv = inv_mod(v[k], p);
  std::vector<Mat> out;
  for (const auto &A : mats) {
    Mat Q;
    for (std::size_t j = 0; j < d; ++j) {
      if (j == k)
        continue;
      Vec row = A[j];
      long f = static_cast<long>(row[k]) * inv % p;
      Vec r;
      for (std::size_t c = 0; c < d; ++c)
        if (c != k)
          r.push_back(static_cast<int>(((row[c] - f * v[c]) % p + p) % p));
      Q.push_back(std::move(r));
    }
    out.push_back(std::move(Q));
  }
  return out;
}

} // namespace detail

/// An elementary abelian section M/N (N <= M, both normal in the ambient
/// group) with coordinates: a basis b_1..b_d of M modulo N and the chain
/// N < N<b_1> < ... < M used to read coordinates off by membership tests.
class ElementaryLayer {
public:
  ElementaryLayer(const PermGroup &M, const PermGroup &N, int p) : p_(p) {
    chain_.push_back(N);
    for (const auto &g : M.generators()) {
      if (chain_.back().contains(g))
        continue;
      basis_.push_back(g);
      PermGroup next = chain_.back();
      next.add_generator(g);
      chain_.push_back(std::move(next));
    }
    TWOCLOSURE_ASSERT(chain_.back().order() == M.order(), "layer basis does not span M/N");
    BigInt expect = 1;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      expect *= p;
    TWOCLOSURE_ASSERT(expect * N.order() == M.order(), "layer is not elementary abelian");
  }

  int prime() const { return p_; }
  std::size_t dim() const { return basis_.size(); }
  const PermGroup &bottom() const { return chain_.front(); }
  const PermGroup &top() const { return chain_.back(); }

  detail::Vec coords(Permutation x) const {
    detail::Vec v(dim(), 0);
    for (std::size_t k = dim(); k-- > 0;) {
      Permutation binv = basis_[k].inverse();
      int c = 0;
      while (!chain_[k].contains(x)) {
        x = x * binv;
        TWOCLOSURE_ASSERT(++c < p_, "element is not in the layer");
      }
      v[k] = c;
    }
    return v;
  }

  Permutation element(const detail::Vec &v) const {
    Permutation x(basis_.empty() ? bottom().degree() : basis_[0].degree());
    for (std::size_t k = 0; k < dim(); ++k)
      x = x * basis_[k].pow(v[k]);
    return x;
  }

  /// Matrix of conjugation by g (right action b -> g^-1 b g).
  detail::Mat matrix(const Permutation &g) const {
    detail::Mat A;
    for (const auto &b : basis_)
      A.push_back(coords(b.conjugate_by(g)));
    return A;
  }

private:
  int p_;
  std::vector<Permutation> basis_;
  std::vector<PermGroup> chain_;
};

inline int least_prime_factor(const BigInt &n) {
  for (int p = 2;; ++p)
    if (n % p == 0)
      return p;
}

/// One step of an elementary abelian refinement: for M/N abelian and p the
/// least prime dividing [M:N], returns N(M^p), so that M / N(M^p) is
/// elementary abelian of exponent p.
inline PermGroup frattini_step(const PermGroup &M, const PermGroup &N, int p) {
  std::vector<Permutation> gens = N.generators();
  for (const auto &g : M.generators())
    gens.push_back(g.pow(p));
  return PermGroup(M.degree(), gens);
}

struct LayerSpec {
  PermGroup top, bottom;
  int p;
};

/// A G-normal series with elementary abelian factors, top to bottom,
/// refining the derived series. G must be solvable.
inline std::vector<LayerSpec> elementary_series(const PermGroup &G) {
  auto ds = derived_series(G);
  if (!ds.back().is_trivial())
    throw PreconditionError("group is not solvable");
  std::vector<LayerSpec> out;
  for (std::size_t k = 0; k + 1 < ds.size(); ++k) {
    PermGroup M = ds[k];
    const PermGroup &N = ds[k + 1];
    while (M.order() != N.order()) {
      int p = least_prime_factor(M.order() / N.order());
      PermGroup M1 = frattini_step(M, N, p);
      out.push_back({M, M1, p});
      M = std::move(M1);
    }
  }
  return out;
}

struct SupersolvabilityVerdict {
  bool supersolvable = false;
  std::string witness; // empty when supersolvable
};

/// Whether every chief factor has prime order. Each elementary abelian layer
/// of a solvable group is an F_p G-module; the chief factors inside it are its
/// composition factors, all of dimension 1 iff a full invariant flag exists.
inline SupersolvabilityVerdict supersolvability(const PermGroup &G) {
  if (G.is_trivial())
    return {true, ""};
  if (!is_solvable(G))
    return {false, "group is not solvable"};
  PermGroup D = derived_subgroup(G);
  for (const auto &L : elementary_series(G)) {
    ElementaryLayer layer(L.top, L.bottom, L.p);
    std::vector<detail::Mat> mats, dmats;
    for (const auto &g : G.generators())
      mats.push_back(layer.matrix(g));
    for (const auto &g : D.generators())
      dmats.push_back(layer.matrix(g));
    std::size_t d = layer.dim();
    while (d > 0) {
      auto v = detail::common_eigenvector(mats, dmats, L.p, d);
      if (!v)
        return {false, "chief factor of order " + std::to_string(L.p) + "^" +
                           std::to_string(d) + " or larger has no invariant line"};
      mats = detail::quotient_by_line(mats, *v, L.p);
      dmats = detail::quotient_by_line(dmats, *v, L.p);
      --d;
    }
  }
  return {true, ""};
}

inline bool is_supersolvable(const PermGroup &G) { return supersolvability(G).supersolvable; }

/// A normal subgroup N of G with 1 < N <= M that is minimal normal in G.
/// M must be a nontrivial normal subgroup of G.
///
/// The search descends to the last nontrivial term D of the derived series of
/// M (characteristic in M, so normal in G). For abelian D the answer is an
/// irreducible submodule of its socle layer: found exactly by an invariant
/// line when one exists, else by spinning all vectors when the layer has at
/// most 2^16 elements, else by a greedy spin that may stop early. For perfect
/// D, normal closures of prime-order elements are shrunk until stable and,
/// when |N| <= 5000, checked element by element.
inline PermGroup minimal_normal_subgroup_within(const PermGroup &G, const PermGroup &M) {
  if (M.is_trivial())
    throw PreconditionError("minimal normal subgroup of a trivial group");
  auto ds = derived_series(M);
  PermGroup D = ds.back().is_trivial() ? ds[ds.size() - 2] : ds.back();
  const std::size_t n = G.degree();
  if (is_abelian(D)) {
    int p = least_prime_factor(D.order());
    BigInt q = D.order();
    while (q % p == 0)
      q /= p;
    std::vector<Permutation> pg;
    for (const auto &g : D.generators())
      pg.push_back(g.pow(static_cast<long long>(q)));
    PermGroup E(n, pg);
    while (true) {
      std::vector<Permutation> pw;
      for (const auto &g : E.generators())
        pw.push_back(g.pow(p));
      PermGroup next(n, pw);
      if (next.is_trivial())
        break;
      E = std::move(next);
    }
    ElementaryLayer layer(E, PermGroup(n), p);
    std::vector<detail::Mat> mats, dmats;
    for (const auto &g : G.generators())
      mats.push_back(layer.matrix(g));
    PermGroup DG = derived_subgroup(G);
    for (const auto &g : DG.generators())
      dmats.push_back(layer.matrix(g));
    const std::size_t d = layer.dim();
    auto from_rows = [&](const detail::Mat &rows) {
      std::vector<Permutation> gens;
      for (const auto &r : rows)
        gens.push_back(layer.element(r));
      return PermGroup(n, gens);
    };
    if (auto v = detail::common_eigenvector(mats, dmats, p, d))
      return from_rows({*v});
    BigInt size = 1;
    for (std::size_t i = 0; i < d; ++i)
      size *= p;
    std::optional<detail::Subspace> best;
    if (size <= 65536) {
      // every vector whose first nonzero entry is 1
      for (std::size_t lead = 0; lead < d; ++lead) {
        long count = 1;
        for (std::size_t i = lead + 1; i < d; ++i)
          count *= p;
        for (long t = 0; t < count; ++t) {
          detail::Vec v(d, 0);
          v[lead] = 1;
          long r = t;
          for (std::size_t i = d; i-- > lead + 1;) {
            v[i] = static_cast<int>(r % p);
            r /= p;
          }
          auto S = detail::spin(v, mats, p);
          if (!best || S.size() < best->size())
            best = S;
        }
      }
    } else {
      detail::Vec e(d, 0);
      e[0] = 1;
      best = detail::spin(e, mats, p);
      bool shrunk = true;
      while (shrunk) {
        shrunk = false;
        for (const auto &r : best->rows()) {
          auto S = detail::spin(r, mats, p);
          if (S.size() < best->size()) {
            best = S;
            shrunk = true;
            break;
          }
        }
      }
    }
    return from_rows(best->rows());
  }
  PermGroup N = D;
  auto prime_power_seeds = [&](const PermGroup &H) {
    std::vector<Permutation> seeds;
    for (const auto &x : H.generators()) {
      BigInt o = x.order();
      for (const auto &[r, e] : factorize(o))
        seeds.push_back(x.pow(static_cast<long long>(o / r)));
    }
    return seeds;
  };
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (const auto &y : prime_power_seeds(N)) {
      PermGroup C = normal_closure(G, {y});
      if (C.order() < N.order()) {
        N = std::move(C);
        shrunk = true;
        break;
      }
    }
  }
  if (N.order() <= 5000) {
    bool again = true;
    while (again) {
      again = false;
      for (const auto &x : N.elements()) {
        BigInt o = x.order();
        if (o == 1 || factorize(o).size() != 1 || factorize(o)[0].second != 1)
          continue;
        PermGroup C = normal_closure(G, {x});
        if (C.order() < N.order()) {
          N = std::move(C);
          again = true;
          break;
        }
      }
    }
  }
  return N;
}

inline PermGroup minimal_normal_subgroup(const PermGroup &G) {
  if (G.is_trivial())
    throw PreconditionError("trivial group has no minimal normal subgroup");
  return minimal_normal_subgroup_within(G, G);
}

/// A nontrivial block system of a transitive group, or nothing if primitive.
/// Tries the blocks generated by {a0, b} for b = 1, 2, ... (a0 the least
/// point) and returns the first proper one.
inline std::optional<EquivRelation> nontrivial_blocks(const PermGroup &G) {
  const std::size_t n = G.degree();
  if (n < 3)
    return std::nullopt;
  for (std::size_t b = 1; b < n; ++b) {
    std::vector<int> parent(n);
    for (std::size_t i = 0; i < n; ++i)
      parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
      while (parent[x] != x)
        x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<std::pair<int, int>> queue{{0, static_cast<int>(b)}};
    parent[b] = 0;
    std::size_t classes = n - 1;
    for (std::size_t i = 0; i < queue.size() && classes > 1; ++i)
      for (const auto &g : G.generators()) {
        int x = find(g[queue[i].first]), y = find(g[queue[i].second]);
        if (x != y) {
          parent[std::max(x, y)] = std::min(x, y);
          queue.emplace_back(x, y);
          --classes;
        }
      }
    if (classes > 1) {
      std::vector<int> lab(n);
      for (std::size_t i = 0; i < n; ++i)
        lab[i] = find(static_cast<int>(i));
      return EquivRelation::from_labels(lab);
    }
  }
  return std::nullopt;
}

/// Orders of the composition factors, ascending. Solvable groups are read
/// off an elementary abelian series; otherwise the group is split along an
/// orbit or a block system. A nonsolvable primitive piece must be Alt(n) or
/// Sym(n) (recognized by order); anything else is refused.
inline std::vector<BigInt> composition_factor_orders(const PermGroup &G) {
  std::vector<BigInt> out;
  if (G.is_trivial())
    return out;
  if (is_solvable(G)) {
    for (const auto &L : elementary_series(G)) {
      BigInt idx = L.top.order() / L.bottom.order();
      while (idx > 1) {
        out.push_back(L.p);
        idx /= L.p;
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  auto merge = [&](std::vector<BigInt> a, const std::vector<BigInt> &b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    return a;
  };
  auto orbits = G.orbit_partition();
  for (const auto &orb : orbits.classes()) {
    if (orb.size() < 2)
      continue;
    if (orb.size() == G.degree())
      break;
    auto r = restrict_to_invariant(G, orb);
    return merge(composition_factor_orders(r.image), composition_factor_orders(r.kernel));
  }
  // transitive from here on
  if (auto blocks = nontrivial_blocks(G)) {
    auto q = kernel_of_quotient_action(G, *blocks);
    return merge(composition_factor_orders(q.image), composition_factor_orders(q.kernel));
  }
  const long long n = static_cast<long long>(G.degree());
  BigInt half = factorial(n) / 2;
  if (n >= 5 && G.order() == half)
    return {half};
  if (n >= 5 && G.order() == factorial(n))
    return {BigInt(2), half};
  throw PreconditionError("composition factors of a primitive group of degree " +
                          std::to_string(n) + " and order " + G.order().str() +
                          " are not supported");
}

} // namespace twoclosure
