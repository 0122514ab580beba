#pragma once

// Socle decomposition of a finite group as a module: when the socle S is
// elementary abelian, the quotient H = G/S acts on S by conjugation, and
// this file analyses S as an F_p[H]-module — its minimal submodules, whether
// it is semisimple and homogeneous (S isomorphic to V^t for an irreducible
// V), the endomorphism field of V, and the family of submodules isomorphic
// to V^(t-1). A constructive complement of S (coprime order case) realizes
// submodule-times-complement subgroups back inside the group.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nonf/common.hpp"
#include "nonf/group.hpp"
#include "nonf/modules.hpp"
#include "nonf/subgroup.hpp"

namespace nonf {

// --------------------------------------------------- socle as an H-module ---

struct SocleModule {
  GroupPtr g;                    // analysed group
  std::vector<element_t> socle;  // sorted members of soc(g)
  std::uint32_t p = 0, dim = 0;  // socle = elementary abelian p^dim
  GroupPtr h;                    // g / socle
  Homomorphism to_h;             // the quotient map
  ModuleAction action;           // h acting on F_p^dim by conjugation
  std::vector<element_t> vec_to_elem;              // packed vector -> socle element
  std::unordered_map<element_t, std::uint32_t> elem_to_vec;

  element_t element_of(std::uint32_t packed) const { return vec_to_elem[packed]; }
  std::uint32_t vector_of(element_t s) const { return elem_to_vec.at(s); }
};

// Builds the module view of the socle. Throws ValidationError when the
// socle is not elementary abelian of prime-power order (the analysis needs
// a vector-space structure).
inline SocleModule build_socle_module(const GroupPtr& g) {
  SocleModule sm;
  sm.g = g;
  sm.socle = socle(*g);
  const std::size_t n = sm.socle.size();
  auto fact = factorize(static_cast<std::uint64_t>(n));
  if (fact.size() != 1) throw ValidationError("socle is not a p-group");
  sm.p = static_cast<std::uint32_t>(fact[0].first);
  sm.dim = fact[0].second;
  for (element_t s : sm.socle)
    if (s != kIdentity && g->order_of(s) != sm.p)
      throw ValidationError("socle is not elementary abelian");
  for (element_t a : sm.socle)
    for (element_t b : sm.socle)
      if (g->mul(a, b) != g->mul(b, a))
        throw ValidationError("socle is not abelian");

  // Group basis: greedily pick socle elements independent of the span so
  // far; enumerate the whole space as words in the basis.
  sm.vec_to_elem.assign(n, kIdentity);
  sm.elem_to_vec.reserve(2 * n);
  sm.elem_to_vec.emplace(kIdentity, 0);
  std::vector<element_t> basis;
  std::uint32_t filled = 1;  // p^(basis size)
  for (element_t s : sm.socle) {
    if (basis.size() == sm.dim) break;
    if (sm.elem_to_vec.count(s)) continue;
    // Extend: new coordinates (k, x) -> b^k * old_x for k in 1..p-1.
    element_t pw = kIdentity;
    for (std::uint32_t k = 1; k < sm.p; ++k) {
      pw = g->mul(pw, s);
      for (std::uint32_t x = 0; x < filled; ++x) {
        const element_t e = g->mul(pw, sm.vec_to_elem[x]);
        const std::uint32_t packed = k * filled + x;
        sm.vec_to_elem[packed] = e;
        sm.elem_to_vec.emplace(e, packed);
      }
    }
    basis.push_back(s);
    filled *= sm.p;
  }
  if (filled != n) throw ValidationError("socle basis construction failed");

  auto [hq, hom] = quotient(g, sm.socle);
  sm.h = hq;
  sm.to_h = std::move(hom);

  // Conjugation matrices for the quotient generators, via arbitrary
  // preimages (the action of g on its socle factors through g/socle).
  std::vector<FpMat> gen_mats;
  for (element_t hg : hq->generators()) {
    element_t pre = kIdentity;
    for (element_t x = 0; x < g->order(); ++x)
      if (sm.to_h(x) == hg) {
        pre = x;
        break;
      }
    FpMat m(sm.p, sm.dim, sm.dim);
    const element_t inv_pre = g->inv(pre);
    for (std::uint32_t j = 0; j < sm.dim; ++j) {
      std::uint32_t unit = 1;
      for (std::uint32_t i = 0; i < j; ++i) unit *= sm.p;
      const element_t img = g->mul(g->mul(pre, sm.vec_to_elem[unit]), inv_pre);
      const auto coords = fp_unpack(sm.vector_of(img), sm.p, sm.dim);
      for (std::uint32_t i = 0; i < sm.dim; ++i) m.at(i, j) = coords[i];
    }
    gen_mats.push_back(std::move(m));
  }
  sm.action = build_module_action(hq, sm.p, sm.dim, std::move(gen_mats));
  return sm;
}

// ------------------------------------------------------ submodule analysis ---

// A submodule stored as its sorted list of packed vectors.
using PackedSubspace = std::vector<std::uint32_t>;

namespace detail {

inline PackedSubspace subspace_members(const EchelonBasis& basis, std::uint32_t p,
                                       std::uint32_t dim) {
  const auto& rows = basis.rows();
  PackedSubspace out;
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < rows.size(); ++i) total *= p;
  out.reserve(total);
  std::vector<std::uint32_t> combo(rows.size(), 0), acc(dim, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t t = idx;
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::uint32_t c = static_cast<std::uint32_t>(t % p);
      t /= p;
      if (c)
        for (std::uint32_t i = 0; i < dim; ++i)
          acc[i] = (acc[i] + c * rows[r][i]) % p;
    }
    out.push_back(fp_pack(acc, p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// All minimal (nonzero, irreducible) submodules, each as sorted packed
// members; exact by spinning every nonzero vector.
inline std::vector<PackedSubspace> minimal_submodules(const ModuleAction& act) {
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < act.dim; ++i) {
    total *= act.p;
    if (total > caps().module_vector_cap) throw CapExceeded("module too large for vector sweep");
  }
  std::map<PackedSubspace, std::uint32_t> spins;  // members -> dimension
  for (std::uint32_t x = 1; x < total; ++x) {
    EchelonBasis basis(act.p, act.dim);
    std::vector<std::vector<std::uint32_t>> queue;
    auto v = fp_unpack(x, act.p, act.dim);
    basis.insert(v);
    queue.push_back(v);
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (const FpMat& m : act.gen_mats) {
        auto img = fp_mat_vec(m, queue[head]);
        if (basis.insert(img)) queue.push_back(std::move(img));
      }
    spins.emplace(detail::subspace_members(basis, act.p, act.dim), basis.dim());
  }
  // Minimal spins contain no smaller spin: every proper nonzero submodule
  // of spin(v) would itself appear as some spin.
  std::vector<PackedSubspace> out;
  for (const auto& [members, d] : spins) {
    bool minimal = true;
    for (const auto& [other, od] : spins) {
      if (od >= d || !minimal) continue;
      if (std::includes(members.begin(), members.end(), other.begin(), other.end()))
        minimal = false;
    }
    if (minimal) out.push_back(members);
  }
  return out;
}

// Join-closure of the minimal submodules: for a semisimple module this is
// the full submodule lattice (every submodule is a join of minimals). The
// zero submodule {0} is included.
inline std::vector<PackedSubspace> submodule_lattice_of_semisimple(const ModuleAction& act) {
  auto minimals = minimal_submodules(act);
  std::map<PackedSubspace, EchelonBasis> known;
  known.emplace(PackedSubspace{0}, EchelonBasis(act.p, act.dim));
  std::vector<std::pair<PackedSubspace, EchelonBasis>> queue(known.begin(), known.end());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& atom : minimals) {
      EchelonBasis joined = queue[head].second;
      bool grew = false;
      for (std::uint32_t m : atom)
        if (joined.insert(fp_unpack(m, act.p, act.dim))) grew = true;
      if (!grew) continue;
      auto members = detail::subspace_members(joined, act.p, act.dim);
      if (known.emplace(members, joined).second) queue.emplace_back(std::move(members), std::move(joined));
    }
  }
  std::vector<PackedSubspace> out;
  for (auto& [members, basis] : known) out.push_back(members);
  return out;
}

// Restriction of the action to an invariant subspace, in the basis of the
// subspace's echelon rows. Throws when the subspace is not invariant.
inline ModuleAction restrict_action(const ModuleAction& act, const PackedSubspace& members) {
  EchelonBasis basis(act.p, act.dim);
  for (std::uint32_t m : members) basis.insert(fp_unpack(m, act.p, act.dim));
  const std::uint32_t k = basis.dim();
  // Coordinates in the echelon basis: peel leading entries in order.
  FpMat bmat(act.p, act.dim, k);
  for (std::uint32_t j = 0; j < k; ++j)
    for (std::uint32_t i = 0; i < act.dim; ++i) bmat.at(i, j) = basis.rows()[j][i];
  auto coords_of = [&](const std::vector<std::uint32_t>& v) {
    auto c = fp_solve(bmat, v);
    if (!c) throw ValidationError("subspace is not invariant under the action");
    return *c;
  };
  std::vector<FpMat> gen_mats;
  for (const FpMat& m : act.gen_mats) {
    FpMat r(act.p, k, k);
    for (std::uint32_t j = 0; j < k; ++j) {
      auto img = coords_of(fp_mat_vec(m, basis.rows()[j]));
      for (std::uint32_t i = 0; i < k; ++i) r.at(i, j) = img[i];
    }
    gen_mats.push_back(std::move(r));
  }
  ModuleAction out;
  out.h = act.h;
  out.p = act.p;
  out.dim = k;
  out.gen_mats = std::move(gen_mats);
  out.mats.clear();  // per-element matrices not materialized for restrictions
  return out;
}

// F_p-dimension of the space of module homomorphisms between two actions of
// the same group (same generator order).
inline std::uint32_t hom_space_dim(const ModuleAction& a, const ModuleAction& b) {
  const std::uint32_t ra = a.dim, rb = b.dim, n = ra * rb;
  if (a.gen_mats.size() != b.gen_mats.size() || a.p != b.p)
    throw ShapeMismatch("actions are not comparable");
  FpMat sys(a.p, static_cast<std::uint32_t>(a.gen_mats.size()) * n, n);
  std::uint32_t row = 0;
  // phi a_g = b_g phi, phi a (rb x ra) matrix: entries phi[i,j].
  for (std::size_t g = 0; g < a.gen_mats.size(); ++g) {
    const FpMat& ag = a.gen_mats[g];
    const FpMat& bg = b.gen_mats[g];
    for (std::uint32_t i = 0; i < rb; ++i)
      for (std::uint32_t j = 0; j < ra; ++j) {
        for (std::uint32_t k = 0; k < ra; ++k)
          sys.at(row, i * ra + k) = (sys.at(row, i * ra + k) + ag.at(k, j)) % a.p;
        for (std::uint32_t k = 0; k < rb; ++k)
          sys.at(row, k * ra + j) = (sys.at(row, k * ra + j) + (a.p - bg.at(i, k) % a.p)) % a.p;
        ++row;
      }
  }
  return static_cast<std::uint32_t>(fp_nullspace(std::move(sys)).size());
}

// Two irreducible actions are isomorphic iff a nonzero homomorphism exists.
inline bool irreducibles_isomorphic(const ModuleAction& a, const ModuleAction& b) {
  return a.dim == b.dim && hom_space_dim(a, b) > 0;
}

// --------------------------------------------------------- the decomposition ---

struct ModuleDecomposition {
  SocleModule base;
  bool faithful = false;       // h acts faithfully on the socle
  bool semisimple = false;     // socle = join of its minimal submodules
  bool homogeneous = false;    // all minimal submodules isomorphic
  std::uint32_t vdim = 0;      // F_p-dimension of the common irreducible V
  std::uint32_t t = 0;         // multiplicity: socle isomorphic to V^t
  std::uint32_t endo_e = 0;    // dim_Fp End(V)
  std::uint32_t u = 0;         // dim of V over its endomorphism field
  bool t_is_u_plus_1 = false;  // the shape arising in minimal disconnected groups
  std::vector<PackedSubspace> minimals;
  std::vector<PackedSubspace> w_family;  // submodules isomorphic to V^(t-1)

  // Socle elements of a packed submodule.
  std::vector<element_t> elements_of(const PackedSubspace& s) const {
    std::vector<element_t> out;
    out.reserve(s.size());
    for (std::uint32_t v : s) out.push_back(base.element_of(v));
    std::sort(out.begin(), out.end());
    return out;
  }
};

inline ModuleDecomposition decompose_socle(const GroupPtr& g) {
  ModuleDecomposition d;
  d.base = build_socle_module(g);
  const ModuleAction& act = d.base.action;
  d.faithful = is_faithful(act);
  d.minimals = minimal_submodules(act);

  EchelonBasis joined(act.p, act.dim);
  for (const auto& s : d.minimals)
    for (std::uint32_t m : s) joined.insert(fp_unpack(m, act.p, act.dim));
  d.semisimple = joined.dim() == act.dim;

  if (d.minimals.empty()) return d;
  ModuleAction vact = restrict_action(act, d.minimals.front());
  d.vdim = vact.dim;
  d.homogeneous = true;
  for (std::size_t i = 1; i < d.minimals.size(); ++i) {
    ModuleAction other = restrict_action(act, d.minimals[i]);
    if (!irreducibles_isomorphic(vact, other)) {
      d.homogeneous = false;
      break;
    }
  }
  if (!d.semisimple || !d.homogeneous || d.vdim == 0 || act.dim % d.vdim) return d;
  d.t = act.dim / d.vdim;
  d.endo_e = endo_dim(vact);
  if (d.endo_e == 0 || d.vdim % d.endo_e) return d;
  d.u = d.vdim / d.endo_e;
  d.t_is_u_plus_1 = d.t == d.u + 1;

  // Submodules isomorphic to V^(t-1): in a homogeneous semisimple module
  // every submodule is a power of V, so the dimension pins the type; the
  // multiplicity is cross-checked through the homomorphism space.
  for (const auto& s : submodule_lattice_of_semisimple(act)) {
    const std::uint64_t want = static_cast<std::uint64_t>(d.t - 1) * d.vdim;
    EchelonBasis b(act.p, act.dim);
    for (std::uint32_t m : s) b.insert(fp_unpack(m, act.p, act.dim));
    if (b.dim() != want) continue;
    ModuleAction sub = restrict_action(act, s);
    if (hom_space_dim(vact, sub) == d.endo_e * (d.t - 1)) d.w_family.push_back(s);
  }
  return d;
}

// ------------------------------------------- complement of the socle (coprime) ---

// Constructive Schur-Zassenhaus for an abelian normal subgroup S of coprime
// index: corrects an arbitrary transversal of G/S into a complement using
// the averaged coboundary (sum of the cocycle over the quotient, scaled by
// the inverse of |G/S| modulo the exponent of S).
inline std::optional<std::vector<element_t>> socle_complement(const SocleModule& sm) {
  const FiniteGroup& g = *sm.g;
  const FiniteGroup& h = *sm.h;
  const std::uint32_t hn = h.order();
  if (std::gcd<std::uint64_t>(hn, sm.socle.size()) != 1) return std::nullopt;

  // Transversal: one preimage per quotient element.
  std::vector<element_t> sec(hn, kIdentity);
  std::vector<char> have(hn, 0);
  have[kIdentity] = 1;
  std::uint32_t found = 1;
  for (element_t x = 0; x < g.order() && found < hn; ++x) {
    const element_t q = sm.to_h(x);
    if (!have[q]) {
      have[q] = 1;
      sec[q] = x;
      ++found;
    }
  }

  // d(a) = sum_k c(a, k) with cocycle c(a, b) = sec(a) sec(b) sec(ab)^-1,
  // written additively in socle coordinates.
  const std::uint32_t inv_n = fp_inv_scalar(hn % sm.p, sm.p);
  std::vector<std::vector<std::uint32_t>> dsum(hn, std::vector<std::uint32_t>(sm.dim, 0));
  for (element_t a = 0; a < hn; ++a)
    for (element_t b = 0; b < hn; ++b) {
      const element_t c =
          g.mul(g.mul(sec[a], sec[b]), g.inv(sec[h.mul(a, b)]));
      const auto coords = fp_unpack(sm.vector_of(c), sm.p, sm.dim);
      for (std::uint32_t i = 0; i < sm.dim; ++i)
        dsum[a][i] = (dsum[a][i] + coords[i]) % sm.p;
    }

  // Corrected transversal tau(a) = (-(1/n) d(a)) + sec(a) is a homomorphism:
  // the cocycle identity summed over the quotient shows n*c(a,b) is the
  // coboundary of d, so dividing by n kills the cocycle entirely.
  std::vector<element_t> members;
  members.reserve(hn);
  for (element_t a = 0; a < hn; ++a) {
    std::vector<std::uint32_t> corr(sm.dim);
    for (std::uint32_t i = 0; i < sm.dim; ++i)
      corr[i] = static_cast<std::uint32_t>(
          static_cast<std::uint64_t>((sm.p - dsum[a][i]) % sm.p) * inv_n % sm.p);
    members.push_back(g.mul(sm.element_of(fp_pack(corr, sm.p)), sec[a]));
  }
  std::sort(members.begin(), members.end());

  // Verify honestly: closed, right size, trivial intersection with the socle.
  Bits in(g.order());
  for (element_t m : members) in.set(m);
  if (members.size() != hn) return std::nullopt;
  for (element_t a : members)
    for (element_t b : members)
      if (!in.test(g.mul(a, b))) return std::nullopt;
  std::size_t common = 0;
  for (element_t s : sm.socle)
    if (in.test(s)) ++common;
  if (common != 1) return std::nullopt;
  return members;
}

}  // namespace nonf
