#pragma once

// Group family constructors and the built-in test corpus.
//
// Families: cyclic(n), abelian(d1,d2,...), ea(p,r), dihedral(n) [order 2n],
// genquat(n) [generalized quaternion / dicyclic of order n], sym(k), alt(k),
// frob(n,k) [C_n x| C_k by the least multiplier of order k], a4xc5, w72
// [EA(3,2) x| Q8], ea52s3 [EA(5,2) x| S3], ea52c12 [EA(5,2) x| C12 by a
// Singer element], v16s3 [EA(2,4) x| S3 permuting
// coordinates], syl2s8 [Sylow 2-subgroup of Sym(8)], ex1inner(k)
// [EA(3,2k) x| Q8 acting diagonally, default k=3], ex2 and its marked
// subgroups ex2B, ex2C.
//
// All constructions are deterministic: fixed generator orders, fixed search
// orders, no randomness.

#include <array>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "nonf/common.hpp"
#include "nonf/group.hpp"
#include "nonf/perm.hpp"
#include "nonf/subgroup.hpp"

namespace nonf {

// ------------------------------------------------------------ elementary ---

inline GroupPtr cyclic_group(std::uint32_t n) {
  if (n == 0) throw ValidationError("cyclic group order must be positive");
  std::vector<element_t> t(static_cast<std::size_t>(n) * n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      t[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  Provenance prov;
  prov.kind = "family";
  prov.detail = "cyclic(" + std::to_string(n) + ")";
  return FiniteGroup::from_table(std::move(t), {}, std::move(prov));
}

inline GroupPtr elementary_abelian(std::uint32_t p, std::uint32_t r) {
  std::uint64_t n = 1;
  for (std::uint32_t i = 0; i < r; ++i) n *= p;
  if (n > caps().dense_table_max) throw CapExceeded("elementary abelian group too large");
  const std::uint32_t nn = static_cast<std::uint32_t>(n);
  std::vector<element_t> t(static_cast<std::size_t>(nn) * nn);
  for (std::uint32_t a = 0; a < nn; ++a)
    for (std::uint32_t b = 0; b < nn; ++b) {
      std::uint32_t s = 0, pw = 1, x = a, y = b;
      for (std::uint32_t i = 0; i < r; ++i) {
        s += ((x + y) % p) * pw;
        x /= p;
        y /= p;
        pw *= p;
      }
      t[static_cast<std::size_t>(a) * nn + b] = s;
    }
  Provenance prov;
  prov.kind = "family";
  prov.detail = "ea(" + std::to_string(p) + "," + std::to_string(r) + ")";
  return FiniteGroup::from_table(std::move(t), {}, std::move(prov));
}

inline GroupPtr abelian_group(const std::vector<std::uint32_t>& invariants) {
  if (invariants.empty()) return FiniteGroup::trivial();
  GroupPtr g = cyclic_group(invariants[0]);
  for (std::size_t i = 1; i < invariants.size(); ++i)
    g = FiniteGroup::direct_product(g, cyclic_group(invariants[i]));
  return g;
}

inline GroupPtr dihedral_group(std::uint32_t n) {
  // Order 2n: rotations C_n, reflection inverting them.
  GroupPtr rot = cyclic_group(n);
  std::vector<element_t> identity(n), invert(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    identity[x] = x;
    invert[x] = (n - x) % n;
  }
  return FiniteGroup::semidirect_product(rot, cyclic_group(2), {identity, invert},
                                         "semidirect", "dihedral(" + std::to_string(n) + ")");
}

// Dicyclic group of order n = 4m: <a, b | a^{2m} = 1, b^2 = a^m, bab^{-1} =
// a^{-1}>. For n a power of two this is the generalized quaternion group.
inline GroupPtr generalized_quaternion(std::uint32_t n) {
  if (n < 8 || n % 4 != 0) throw ValidationError("dicyclic order must be 4m >= 8");
  // Elements: a^s at index s (s < m) and a^s b at index m + s, where m = n/2
  // is the order of a and b^2 = a^{m/2}.
  const std::uint32_t m = n / 2;
  std::vector<element_t> t(static_cast<std::size_t>(n) * n);
  auto idx = [&](bool hasb, std::uint32_t s) { return (hasb ? m : 0) + s % m; };
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      bool bi = i >= m, bj = j >= m;
      std::uint32_t si = i % m, sj = j % m;
      element_t r;
      if (!bi && !bj) r = idx(false, si + sj);
      else if (!bi && bj) r = idx(true, si + sj);
      else if (bi && !bj) r = idx(true, si + m - sj);
      else r = idx(false, si + m - sj + m / 2);
      t[static_cast<std::size_t>(i) * n + j] = r;
    }
  Provenance prov;
  prov.kind = "family";
  prov.detail = "genquat(" + std::to_string(n) + ")";
  return FiniteGroup::from_table(std::move(t), {}, std::move(prov));
}

inline GroupPtr symmetric_group(std::uint32_t k) {
  if (k < 2) return FiniteGroup::trivial();
  Permutation swap = perm_identity(k), cycle = perm_identity(k);
  std::swap(swap[0], swap[1]);
  for (std::uint32_t i = 0; i < k; ++i) cycle[i] = (i + 1) % k;
  return FiniteGroup::from_permutation_generators({swap, cycle},
                                                  "sym(" + std::to_string(k) + ")");
}

inline GroupPtr alternating_group(std::uint32_t k) {
  if (k < 3) return FiniteGroup::trivial();
  Permutation three = perm_identity(k);
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  if (k == 3)
    return FiniteGroup::from_permutation_generators({three}, "alt(3)");
  Permutation big = perm_identity(k);
  if (k % 2 == 1) {
    for (std::uint32_t i = 0; i < k; ++i) big[i] = (i + 1) % k;  // k-cycle (even perm)
  } else {
    for (std::uint32_t i = 1; i < k; ++i) big[i] = 1 + (i % (k - 1));  // (k-1)-cycle
  }
  return FiniteGroup::from_permutation_generators({three, big},
                                                  "alt(" + std::to_string(k) + ")");
}

// -------------------------------------------------- action helper bricks ---

// Extend generator images to an automorphism of N by breadth-first word
// transport; throws if the images do not define a bijection.
inline std::vector<element_t> automorphism_from_gen_images(
    const FiniteGroup& n, const std::vector<element_t>& images) {
  const auto& gens = n.generators();
  if (images.size() != gens.size())
    throw NotAnAction("need one image per generator");
  std::vector<element_t> map(n.order(), static_cast<element_t>(-1));
  map[kIdentity] = kIdentity;
  std::vector<element_t> queue{kIdentity};
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      element_t v = n.mul(queue[head], gens[gi]);
      element_t w = n.mul(map[queue[head]], images[gi]);
      if (map[v] == static_cast<element_t>(-1)) {
        map[v] = w;
        queue.push_back(v);
      } else if (map[v] != w) {
        throw NotAnAction("generator images are inconsistent");
      }
    }
  if (!perm_is_valid(map)) throw NotAnAction("generator images do not give a bijection");
  return map;
}

// One automorphism per generator of H -> full action table (one map per
// element of H), following the left action law act[h1*h2] = act[h1] o act[h2].
inline std::vector<std::vector<element_t>> action_from_gen_automorphisms(
    const FiniteGroup& n, const FiniteGroup& h,
    const std::vector<std::vector<element_t>>& per_gen) {
  const auto& gens = h.generators();
  if (per_gen.size() != gens.size())
    throw NotAnAction("need one automorphism per generator");
  std::vector<std::vector<element_t>> act(h.order());
  std::vector<char> known(h.order(), 0);
  act[kIdentity] = perm_identity(n.order());
  known[kIdentity] = 1;
  std::vector<element_t> queue{kIdentity};
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      element_t v = h.mul(queue[head], gens[gi]);
      if (known[v]) continue;
      const auto& base = act[queue[head]];
      const auto& gmap = per_gen[gi];
      std::vector<element_t> comp(n.order());
      for (element_t x = 0; x < n.order(); ++x) comp[x] = base[gmap[x]];
      act[v] = std::move(comp);
      known[v] = 1;
      queue.push_back(v);
    }
  for (element_t v = 0; v < h.order(); ++v)
    if (!known[v]) throw NotAnAction("generators do not generate the acting group");
  return act;
}

// Linear map on EA(p, r) given by a row-major r x r matrix over F_p; indices
// encode vectors in little-endian base-p digits.
inline std::vector<element_t> matrix_automorphism(std::uint32_t p, std::uint32_t r,
                                                  const std::vector<std::uint32_t>& mat) {
  if (mat.size() != static_cast<std::size_t>(r) * r) throw ShapeMismatch("matrix shape");
  std::uint32_t n = 1;
  for (std::uint32_t i = 0; i < r; ++i) n *= p;
  std::vector<element_t> map(n);
  std::vector<std::uint32_t> v(r), w(r);
  for (std::uint32_t x = 0; x < n; ++x) {
    std::uint32_t t = x;
    for (std::uint32_t i = 0; i < r; ++i) {
      v[i] = t % p;
      t /= p;
    }
    for (std::uint32_t i = 0; i < r; ++i) {
      std::uint64_t s = 0;
      for (std::uint32_t j = 0; j < r; ++j) s += static_cast<std::uint64_t>(mat[i * r + j]) * v[j];
      w[i] = static_cast<std::uint32_t>(s % p);
    }
    std::uint32_t y = 0, pw = 1;
    for (std::uint32_t i = 0; i < r; ++i) {
      y += w[i] * pw;
      pw *= p;
    }
    map[x] = y;
  }
  return map;
}

// EA(p, r) x| H with H's generators acting by the given matrices.
inline GroupPtr semidirect_by_matrices(std::uint32_t p, std::uint32_t r, GroupPtr h,
                                       const std::vector<std::vector<std::uint32_t>>& mats,
                                       std::string detail) {
  GroupPtr v = elementary_abelian(p, r);
  std::vector<std::vector<element_t>> per_gen;
  for (const auto& m : mats) per_gen.push_back(matrix_automorphism(p, r, m));
  auto act = action_from_gen_automorphisms(*v, *h, per_gen);
  return FiniteGroup::semidirect_product(v, h, act, "semidirect", std::move(detail));
}

// --------------------------------------------------------- small corpus ---

inline GroupPtr frobenius_group(std::uint32_t n, std::uint32_t k) {
  // C_n x| C_k via the least multiplier u with multiplicative order k mod n.
  std::uint32_t u = 0;
  for (std::uint32_t c = 2; c < n && !u; ++c) {
    if (std::gcd(c, n) != 1) continue;
    std::uint64_t x = c;
    std::uint32_t ord = 1;
    while (x % n != 1) {
      x = x * c % n;
      ++ord;
    }
    if (ord == k) u = c;
  }
  if (!u) throw ValidationError("no multiplier of the requested order");
  GroupPtr base = cyclic_group(n);
  GroupPtr top = cyclic_group(k);
  std::vector<element_t> mult(n);
  for (std::uint32_t x = 0; x < n; ++x) mult[x] = static_cast<element_t>(
      static_cast<std::uint64_t>(x) * u % n);
  auto act = action_from_gen_automorphisms(*base, *top, {mult});
  return FiniteGroup::semidirect_product(base, top, act, "semidirect",
                                         "frob(" + std::to_string(n) + "," +
                                             std::to_string(k) + ")");
}

// EA(3,2) x| Q8, the quaternion group acting faithfully on 9 points.
inline GroupPtr w72_group() {
  GroupPtr q = generalized_quaternion(8);
  // Generators of the dicyclic table: a (index 1, order 4) and b (index 4).
  return semidirect_by_matrices(3, 2, q, {{0, 2, 1, 0}, {1, 1, 1, 2}}, "w72");
}

// EA(5,2) x| S3 via the 2-dimensional representation over F_5.
inline GroupPtr ea52s3_group() {
  GroupPtr s3 = symmetric_group(3);
  // sym(3) generators: the transposition then the 3-cycle.
  return semidirect_by_matrices(5, 2, s3, {{0, 1, 1, 0}, {0, 4, 1, 4}}, "ea52s3");
}

// EA(5,2) x| C12: the cyclic group acts by a matrix of multiplicative order
// 12 (a Singer element), so the action is irreducible and fixed-point free.
inline GroupPtr ea52c12_group() {
  GroupPtr c12 = cyclic_group(12);
  return semidirect_by_matrices(5, 2, c12, {{0, 1, 1, 2}}, "ea52c12");
}

// EA(2,4) x| S3, permuting the first three coordinates.
inline GroupPtr v16s3_group() {
  GroupPtr s3 = symmetric_group(3);
  return semidirect_by_matrices(
      2, 4, s3,
      {{0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1},
       {0, 0, 1, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1}},
      "v16s3");
}

inline GroupPtr sylow2_sym8_group() {
  std::vector<Permutation> gens = {
      perm_parse_cycles("(0 1)", 8),
      perm_parse_cycles("(2 3)", 8),
      perm_parse_cycles("(0 2)(1 3)", 8),
      perm_parse_cycles("(4 5)", 8),
      perm_parse_cycles("(6 7)", 8),
      perm_parse_cycles("(4 6)(5 7)", 8),
      perm_parse_cycles("(0 4)(1 5)(2 6)(3 7)", 8),
  };
  return FiniteGroup::from_permutation_generators(gens, "syl2s8");
}

// ------------------------------------------------------- worked examples ---

// EA(3, 2k) x| Q8 with the quaternion generators acting by the same 2x2
// blocks on every 2-dimensional slice.
inline GroupPtr example1_inner(std::uint32_t k = 3) {
  if (k == 0 || k > 3) throw ValidationError("block count must be 1..3");
  static std::array<GroupPtr, 4> cache;
  if (cache[k]) return cache[k];
  const std::uint32_t r = 2 * k;
  auto block = [&](const std::array<std::uint32_t, 4>& m) {
    std::vector<std::uint32_t> big(static_cast<std::size_t>(r) * r, 0);
    for (std::uint32_t s = 0; s < k; ++s) {
      big[(2 * s) * r + 2 * s] = m[0];
      big[(2 * s) * r + 2 * s + 1] = m[1];
      big[(2 * s + 1) * r + 2 * s] = m[2];
      big[(2 * s + 1) * r + 2 * s + 1] = m[3];
    }
    return big;
  };
  GroupPtr q = generalized_quaternion(8);
  cache[k] = semidirect_by_matrices(3, r, q, {block({0, 2, 1, 0}), block({1, 1, 1, 2})},
                                    "ex1inner(" + std::to_string(k) + ")");
  return cache[k];
}

namespace detail {

// 2x2 matrices over F_p as flat arrays {m00, m01, m10, m11}.
using Mat2 = std::array<std::uint32_t, 4>;

inline Mat2 mat2_mul(const Mat2& a, const Mat2& b, std::uint32_t p) {
  return {(a[0] * b[0] + a[1] * b[2]) % p, (a[0] * b[1] + a[1] * b[3]) % p,
          (a[2] * b[0] + a[3] * b[2]) % p, (a[2] * b[1] + a[3] * b[3]) % p};
}

// The order-3 matrix tying the quaternion action over F_7 together:
// T^3 = 1, T Mi T^-1 = Mj, T Mj T^-1 = Mi*Mj, and T fixes a nonzero vector.
// Deterministic: the lexicographically first solution.
inline Mat2 example2_rotation(const Mat2& mi, const Mat2& mj, std::uint32_t p) {
  const Mat2 id{1, 0, 0, 1};
  const Mat2 mij = mat2_mul(mi, mj, p);
  for (std::uint32_t t0 = 0; t0 < p; ++t0)
    for (std::uint32_t t1 = 0; t1 < p; ++t1)
      for (std::uint32_t t2 = 0; t2 < p; ++t2)
        for (std::uint32_t t3 = 0; t3 < p; ++t3) {
          Mat2 t{t0, t1, t2, t3};
          if ((t0 * t3 + p * p - t1 * t2) % p == 0) continue;  // singular
          if (mat2_mul(mat2_mul(t, t, p), t, p) != id) continue;
          if (mat2_mul(t, mi, p) != mat2_mul(mj, t, p)) continue;
          if (mat2_mul(t, mj, p) != mat2_mul(mij, t, p)) continue;
          // Fixed vector: (T - I) singular.
          Mat2 d{(t0 + p - 1) % p, t1, t2, (t3 + p - 1) % p};
          if ((d[0] * d[3] + p * p - d[1] * d[2]) % p != 0) continue;
          return t;
        }
  throw ValidationError("internal: no rotation matrix found");
}

}  // namespace detail

// Order 75264 = 7^2 * 2^9 * 3: G = W x| X with W = EA(7,2) and
// X = (A x Q) x| C3, A = C8 x C8, Q = Q8. The C3 part permutes the
// quaternion units and twists A; A acts trivially on W, Q and C3 act by the
// 2x2 matrices below. Marked subsets record the structurally interesting
// subgroups for later analysis.
inline GroupPtr example2_group() {
  static const GroupPtr cached = [] {
    const std::uint32_t p = 7;
    const detail::Mat2 mi{0, 6, 1, 0};
    const detail::Mat2 mj{2, 3, 3, 5};
    const detail::Mat2 t = detail::example2_rotation(mi, mj, p);

    // A = C8 x C8 with the order-3 twist a1 -> a2 -> (a1 a2)^-1.
    GroupPtr a = abelian_group({8, 8});
    const element_t a1 = a->provenance().left_embed[1];   // (1,0)
    const element_t a2 = a->provenance().right_embed[1];  // (0,1)
    GroupPtr q = generalized_quaternion(8);
    const element_t qi = 1, qj = 4, qk = q->mul(qi, qj);
    GroupPtr nx = FiniteGroup::direct_product(a, q);
    // Generators of nx: {a1, a2 embedded left} then {i, j embedded right}.
    auto embl = [&](element_t v) { return nx->provenance().left_embed[v]; };
    auto embr = [&](element_t v) { return nx->provenance().right_embed[v]; };
    element_t tau_a1 = embl(a2);
    element_t tau_a2 = embl(a->mul(a->inv(a1), a->inv(a2)));
    std::vector<element_t> twist = automorphism_from_gen_images(
        *nx, {tau_a1, tau_a2, embr(qj), embr(qk)});
    GroupPtr c3 = cyclic_group(3);
    auto act_x = action_from_gen_automorphisms(*nx, *c3, {twist});
    GroupPtr x = FiniteGroup::semidirect_product(nx, c3, act_x, "semidirect", "ex2:X");

    // W-action: A trivial, i -> Mi, j -> Mj, the C3 generator -> T.
    auto xembl = [&](element_t v) { return x->provenance().left_embed[v]; };
    const element_t xa1 = xembl(embl(a1)), xa2 = xembl(embl(a2));
    const element_t xi = xembl(embr(qi)), xj = xembl(embr(qj));
    const element_t xt = x->provenance().right_embed[1];
    const std::vector<std::uint32_t> ident{1, 0, 0, 1};
    auto matv = [](const detail::Mat2& m) {
      return std::vector<std::uint32_t>{m[0], m[1], m[2], m[3]};
    };
    GroupPtr w = elementary_abelian(p, 2);
    std::vector<std::vector<element_t>> per_gen;
    // x->generators() order: nx generators embedded, then the C3 generator.
    for (element_t xg : x->generators()) {
      if (xg == xa1 || xg == xa2) per_gen.push_back(matrix_automorphism(p, 2, ident));
      else if (xg == xi) per_gen.push_back(matrix_automorphism(p, 2, matv(mi)));
      else if (xg == xj) per_gen.push_back(matrix_automorphism(p, 2, matv(mj)));
      else if (xg == xt) per_gen.push_back(matrix_automorphism(p, 2, matv(t)));
      else throw ValidationError("internal: unexpected generator");
    }
    auto act_g = action_from_gen_automorphisms(*w, *x, per_gen);
    GroupPtr g = FiniteGroup::semidirect_product(w, x, act_g, "semidirect", "ex2");

    // Mark the structurally interesting subsets (indices in G).
    auto& marked = g->provenance().marked;
    auto gw = [&](element_t v) { return g->provenance().left_embed[v]; };
    auto gx = [&](element_t v) { return g->provenance().right_embed[v]; };
    ClosureEngine e(*g);
    // Fixed vector of T: the least nonzero w with T w = w.
    auto tmap = matrix_automorphism(p, 2, matv(t));
    element_t zvec = 0;
    for (element_t v = 1; v < w->order() && !zvec; ++v)
      if (tmap[v] == v) zvec = v;
    if (!zvec) throw ValidationError("internal: rotation fixes no vector");

    marked["W"] = e.closure({gw(1), gw(p)});
    marked["A"] = e.closure({gx(xa1), gx(xa2)});
    marked["Q"] = e.closure({gx(xi), gx(xj)});
    marked["H"] = e.closure({gx(xt)});
    marked["Z"] = e.closure({gw(zvec)});
    marked["B"] = e.closure({gx(xa1), gx(xa2), gx(xt), gw(zvec)});
    element_t xa1i = g->mul(gx(xa1), gx(xi));
    marked["C"] = e.closure({gw(1), gw(p), xa1i, gx(xj)});
    element_t qc = gx(xembl(embr(q->mul(qi, qi))));  // the central unit -1 of Q
    marked["M0"] = e.closure({gx(xa1), gx(xa2), gx(xi), gx(xj)});
    marked["M1"] = e.closure({gx(xa1), gx(xa2), qc, gx(xt)});
    marked["I"] = e.closure({gw(1), gw(p), g->mul(gx(xa1), gx(xa1)),
                             g->mul(gx(xa2), gx(xa2)), qc});
    return g;
  }();
  return cached;
}

inline GroupPtr example2_marked(const std::string& key) {
  GroupPtr g = example2_group();
  auto it = g->provenance().marked.find(key);
  if (it == g->provenance().marked.end()) throw ValidationError("unknown marked subset");
  return materialize_subgroup(*g, it->second, "family", "ex2" + key).group;
}

// ------------------------------------------------------------- the corpus ---

struct FamilyEntry {
  std::string spec;
  std::function<GroupPtr()> build;
};

// Groups of order <= 512 (plus a few larger), spanning the structural range
// the analyses exercise: cyclic, dihedral, dicyclic, symmetric, alternating,
// elementary abelian, mixed abelian, Frobenius and affine-type semidirects.
inline const std::vector<FamilyEntry>& corpus() {
  static const std::vector<FamilyEntry> list = [] {
    std::vector<FamilyEntry> v;
    auto add = [&](std::string spec, std::function<GroupPtr()> b) {
      v.push_back({std::move(spec), std::move(b)});
    };
    for (std::uint32_t n : {1,  2,  3,  4,  5,  6,  7,  8,  9,  10, 11, 12,
                            14, 15, 16, 18, 20, 21, 24, 27, 30, 32, 36, 48,
                            60, 64, 100, 128, 210, 256, 512})
      add("cyclic(" + std::to_string(n) + ")", [n] { return cyclic_group(n); });
    for (std::uint32_t n : {2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16, 24, 32, 64, 128, 256})
      add("dihedral(" + std::to_string(n) + ")", [n] { return dihedral_group(n); });
    for (std::uint32_t n : {8, 16, 32, 64, 128, 256, 512})
      add("genquat(" + std::to_string(n) + ")", [n] { return generalized_quaternion(n); });
    for (std::uint32_t k : {3, 4, 5})
      add("sym(" + std::to_string(k) + ")", [k] { return symmetric_group(k); });
    for (std::uint32_t k : {4, 5, 6})
      add("alt(" + std::to_string(k) + ")", [k] { return alternating_group(k); });
    add("ea(2,2)", [] { return elementary_abelian(2, 2); });
    add("ea(2,3)", [] { return elementary_abelian(2, 3); });
    add("ea(2,4)", [] { return elementary_abelian(2, 4); });
    add("ea(3,2)", [] { return elementary_abelian(3, 2); });
    add("ea(3,3)", [] { return elementary_abelian(3, 3); });
    add("ea(5,2)", [] { return elementary_abelian(5, 2); });
    add("ea(7,2)", [] { return elementary_abelian(7, 2); });
    add("abelian(4,2)", [] { return abelian_group({4, 2}); });
    add("abelian(8,8)", [] { return abelian_group({8, 8}); });
    add("abelian(6,6)", [] { return abelian_group({6, 6}); });
    add("abelian(12,2)", [] { return abelian_group({12, 2}); });
    add("frob(7,3)", [] { return frobenius_group(7, 3); });
    add("frob(5,4)", [] { return frobenius_group(5, 4); });
    add("frob(13,4)", [] { return frobenius_group(13, 4); });
    add("w72", [] { return w72_group(); });
    add("ea52s3", [] { return ea52s3_group(); });
    add("ea52c12", [] { return ea52c12_group(); });
    add("v16s3", [] { return v16s3_group(); });
    add("syl2s8", [] { return sylow2_sym8_group(); });
    add("a4xc5", [] { return FiniteGroup::direct_product(alternating_group(4), cyclic_group(5)); });
    add("s3xc4", [] { return FiniteGroup::direct_product(symmetric_group(3), cyclic_group(4)); });
    add("d4xc2", [] { return FiniteGroup::direct_product(dihedral_group(4), cyclic_group(2)); });
    return v;
  }();
  return list;
}

// Larger one-off groups exercised by the wider sweeps.
inline const std::vector<FamilyEntry>& corpus_extras() {
  static const std::vector<FamilyEntry> list = {
      {"sym(6)", [] { return symmetric_group(6); }},
      {"dihedral(512)", [] { return dihedral_group(512); }},
      {"genquat(1024)", [] { return generalized_quaternion(1024); }},
      {"cyclic(2000)", [] { return cyclic_group(2000); }},
      {"ex1inner(3)", [] { return example1_inner(3); }},
  };
  return list;
}

// -------------------------------------------------------------- the parser ---

inline GroupPtr build_family(const std::string& spec) {
  auto args_of = [&](const std::string& name) -> std::vector<std::uint32_t> {
    if (spec.size() < name.size() + 2 || spec.compare(0, name.size(), name) != 0 ||
        spec[name.size()] != '(' || spec.back() != ')')
      return {};
    std::vector<std::uint32_t> args;
    std::string inner = spec.substr(name.size() + 1, spec.size() - name.size() - 2);
    std::istringstream in(inner);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      std::uint32_t x = 0;
      std::istringstream tin(tok);
      if (!(tin >> x)) throw ParseError("bad family argument: " + spec);
      args.push_back(x);
    }
    return args;
  };
  auto expect = [&](const std::vector<std::uint32_t>& a, std::size_t k) {
    if (a.size() != k) throw ParseError("wrong argument count: " + spec);
  };
  if (spec == "trivial") return FiniteGroup::trivial();
  if (auto a = args_of("cyclic"); !a.empty()) {
    expect(a, 1);
    return cyclic_group(a[0]);
  }
  if (auto a = args_of("dihedral"); !a.empty()) {
    expect(a, 1);
    return dihedral_group(a[0]);
  }
  if (auto a = args_of("genquat"); !a.empty()) {
    expect(a, 1);
    return generalized_quaternion(a[0]);
  }
  if (auto a = args_of("generalized_quaternion"); !a.empty()) {
    expect(a, 1);
    return generalized_quaternion(a[0]);
  }
  if (auto a = args_of("sym"); !a.empty()) {
    expect(a, 1);
    return symmetric_group(a[0]);
  }
  if (auto a = args_of("symmetric"); !a.empty()) {
    expect(a, 1);
    return symmetric_group(a[0]);
  }
  if (auto a = args_of("alt"); !a.empty()) {
    expect(a, 1);
    return alternating_group(a[0]);
  }
  if (auto a = args_of("alternating"); !a.empty()) {
    expect(a, 1);
    return alternating_group(a[0]);
  }
  if (auto a = args_of("ea"); !a.empty()) {
    expect(a, 2);
    return elementary_abelian(a[0], a[1]);
  }
  if (auto a = args_of("elementary_abelian"); !a.empty()) {
    expect(a, 2);
    return elementary_abelian(a[0], a[1]);
  }
  if (auto a = args_of("abelian"); !a.empty()) return abelian_group(a);
  if (auto a = args_of("frob"); !a.empty()) {
    expect(a, 2);
    return frobenius_group(a[0], a[1]);
  }
  if (auto a = args_of("ex1inner"); !a.empty()) {
    expect(a, 1);
    return example1_inner(a[0]);
  }
  if (auto a = args_of("example1_inner"); !a.empty()) {
    expect(a, 1);
    return example1_inner(a[0]);
  }
  if (spec == "w72") return w72_group();
  if (spec == "ea52s3") return ea52s3_group();
  if (spec == "ea52c12") return ea52c12_group();
  if (spec == "v16s3") return v16s3_group();
  if (spec == "syl2s8") return sylow2_sym8_group();
  if (spec == "sylow2_sym8") return sylow2_sym8_group();
  if (spec == "a4xc5")
    return FiniteGroup::direct_product(alternating_group(4), cyclic_group(5));
  if (spec == "s3xc4")
    return FiniteGroup::direct_product(symmetric_group(3), cyclic_group(4));
  if (spec == "d4xc2")
    return FiniteGroup::direct_product(dihedral_group(4), cyclic_group(2));
  if (spec == "ex1inner") return example1_inner(3);
  if (spec == "ex2") return example2_group();
  if (spec == "example2") return example2_group();
  if (spec == "ex2B") return example2_marked("B");
  if (spec == "ex2C") return example2_marked("C");
  if (spec == "ex2I") return example2_marked("I");
  throw ParseError("unknown family spec: " + spec);
}

}  // namespace nonf
