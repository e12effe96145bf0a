#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "twoclosure/certificate.hpp"

namespace twoclosure {

inline bool verify_two_equivalent(const PermGroup &A, const PermGroup &B) {
  if (A.degree() != B.degree())
    throw InputError("groups have different degrees");
  return same_two_orbits(two_orbits(A), two_orbits(B));
}

/// Every composition factor is cyclic of prime order or has order p!/2 for a
/// prime p >= 5 (the only simple group of that order is Alt(p)).
inline bool factor_check(const PermGroup &H) {
  for (const auto &f : composition_factor_orders(H)) {
    if (f <= BigInt(std::numeric_limits<long long>::max()) &&
        is_prime(static_cast<long long>(f)))
      continue;
    bool alt = false;
    BigInt half = 60; // 5!/2
    for (long long p = 5; half <= f; ++p) {
      if (p > 5)
        half *= p;
      if (half == f && is_prime(p)) {
        alt = true;
        break;
      }
    }
    if (!alt)
      return false;
  }
  return true;
}

struct SectionSummary {
  std::size_t index = 0;
  std::vector<std::size_t> orbit_sizes;
  bool plain = false;
  bool feasible = false;
  std::size_t xbar = 0;
  std::size_t certificate = 0;
  EmptyReason empty_reason = EmptyReason::none;
};

struct Verification {
  bool two_equivalent = false;
  bool contains_input = false;
  bool factor_check = false;
  std::optional<bool> oracle_check;
};

struct ClosureReport {
  PermGroup input;
  Flag flag;
  PermGroup relative_closure;
  PermGroup majorant;
  Flag extended_flag;
  std::vector<SectionSummary> sections;
  std::vector<Certificate> certificates;
  PermGroup output;
  Verification verification;
};

struct ClosureOptions {
  bool oracle = false;       // compare with brute_force_closure (degree <= kOracleMaxDegree)
  bool factor_check = true;  // composition factors of the output
};

/// The 2-closure of a supersolvable group: maximal normal flag, relative
/// closure, extended flag, one certificate per section, and the join.
inline ClosureReport two_closure(const PermGroup &G, const ClosureOptions &opt = {}) {
  auto ss = supersolvability(G);
  if (!ss.supersolvable)
    throw PreconditionError("input group is not supersolvable: " + ss.witness);
  ClosureReport r;
  r.input = G;
  r.flag = maximal_normal_flag(G);
  auto rc = relative_closure_data(G, r.flag);
  const PermGroup &K = rc.group;
  r.relative_closure = K;
  r.extended_flag = extend_to_maximal_k_flag(K, r.flag);
  {
    const EquivRelation orbits = K.orbit_partition();
    for (const auto &lam : orbits.classes())
      TWOCLOSURE_ASSERT(induced_flag_on_set(r.extended_flag, lam) == induced_flag_on_set(r.flag, lam),
                        "extended flag differs from the original on an orbit");
  }
  auto coloring = two_orbits(K);
  TWOCLOSURE_ASSERT(coloring == two_orbits(G), "relative closure changed the 2-orbits");
  Identification id = r.extended_flag == r.flag ? rc.id : build_identification(K, r.extended_flag);
  PermGroup W = r.extended_flag == r.flag ? rc.majorant : majorant(id);
  r.majorant = W;
  std::vector<Permutation> extra;
  for (const auto &S : sections_of(K, r.extended_flag)) {
    TWOCLOSURE_ASSERT(section_orbit_sizes_prime(S), "section orbits are not all of one prime size");
    TWOCLOSURE_ASSERT(faithful_on_invariant_sets(S, K), "section is not faithful on an invariant set");
    SectionSummary sum;
    sum.index = S.index;
    for (const auto &o : S.orbits)
      sum.orbit_sizes.push_back(o.size());
    sum.plain = is_plain(S);
    sum.feasible = is_feasible(S);
    auto cert = find_certificate(S, id, W, coloring);
    sum.xbar = cert.xbar.size();
    sum.certificate = cert.X.size();
    sum.empty_reason = cert.empty_reason;
    extra.insert(extra.end(), cert.X.begin(), cert.X.end());
    r.sections.push_back(sum);
    r.certificates.push_back(std::move(cert));
  }
  r.output = join(K, extra);
  auto &v = r.verification;
  v.two_equivalent = two_orbits(r.output) == coloring;
  TWOCLOSURE_ASSERT(v.two_equivalent, "output is not 2-equivalent to the input");
  v.contains_input = r.output.contains_group(G);
  TWOCLOSURE_ASSERT(v.contains_input, "output does not contain the input");
  if (opt.factor_check)
    v.factor_check = factor_check(r.output);
  if (opt.oracle && G.degree() <= kOracleMaxDegree) {
    auto C = brute_force_closure(G);
    v.oracle_check = C.order() == r.output.order() && C.contains_group(r.output);
  }
  return r;
}

} // namespace twoclosure
