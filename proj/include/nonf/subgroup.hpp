#pragma once

// Subgroup machinery on top of FiniteGroup: closures, generator-tracked
// subgroups (derived / lower central series without materializing tables),
// centralizers, normalizers, Sylow subgroups, normal subgroup enumeration,
// socle, Fitting subgroup, soluble radical, full lattice enumeration, and
// minimal generator counts.
//
// Subgroups are represented by their sorted member lists (indices into the
// parent group); `Bits` views are built where subset tests dominate. Normal
// subgroups are unions of conjugacy classes, so they are enumerated as class
// bitsets — that keeps the search cheap even when the group itself is large.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "nonf/common.hpp"
#include "nonf/group.hpp"

namespace nonf {

// Reusable breadth-first closure with an epoch-stamped visited array, so
// repeated small closures (one per candidate pair) never clear O(n) memory.
class ClosureEngine {
 public:
  explicit ClosureEngine(const FiniteGroup& g) : g_(&g), stamp_(g.order(), 0) {}

  // Members of <gens>, sorted ascending.
  const std::vector<element_t>& closure(std::span<const element_t> gens) {
    run(gens, g_->order());
    std::sort(out_.begin(), out_.end());
    return out_;
  }

  const std::vector<element_t>& closure(std::initializer_list<element_t> gens) {
    return closure(std::span<const element_t>(gens.begin(), gens.size()));
  }

  const std::vector<element_t>& pair_closure(element_t x, element_t y) {
    const element_t gens[2] = {x, y};
    return closure(std::span<const element_t>(gens, 2));
  }

  // Size of <gens> if it is at most `limit`, otherwise nullopt (the closure
  // stops early). With limit = |G|/2, nullopt means <gens> is all of G.
  std::optional<std::size_t> bounded_size(std::span<const element_t> gens, std::size_t limit) {
    if (!run(gens, limit)) return std::nullopt;
    return out_.size();
  }

  bool generates(element_t x, element_t y) {
    const element_t gens[2] = {x, y};
    return !run(std::span<const element_t>(gens, 2), g_->order() / 2);
  }

 private:
  // Breadth-first orbit of the identity under right multiplication by gens.
  // Returns false when the closure grows past `limit` (out_ left partial).
  bool run(std::span<const element_t> gens, std::size_t limit) {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    out_.clear();
    auto mark = [&](element_t v) {
      if (stamp_[v] == epoch_) return false;
      stamp_[v] = epoch_;
      out_.push_back(v);
      return true;
    };
    mark(kIdentity);
    for (std::size_t head = 0; head < out_.size(); ++head) {
      for (element_t s : gens)
        if (mark(g_->mul(out_[head], s)) && out_.size() > limit) return false;
    }
    return true;
  }

  const FiniteGroup* g_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<element_t> out_;
};

inline std::vector<element_t> closure_of(const FiniteGroup& g, std::span<const element_t> gens) {
  ClosureEngine e(g);
  return e.closure(gens);
}

inline std::vector<element_t> closure_of(const FiniteGroup& g,
                                         std::initializer_list<element_t> gens) {
  ClosureEngine e(g);
  return e.closure(gens);
}

inline bool is_subgroup(const FiniteGroup& g, const std::vector<element_t>& elems) {
  if (elems.empty()) return false;
  Bits b(g.order());
  for (element_t x : elems) b.set(x);
  if (!b.test(kIdentity) || b.count() != elems.size()) return false;
  for (element_t x : elems)
    for (element_t y : elems)
      if (!b.test(g.mul(x, y))) return false;
  return true;
}

// Small generating set for a subgroup given by its members: greedily add the
// first member outside the running closure. `elems` must be a subgroup.
inline std::vector<element_t> subgroup_generators(const FiniteGroup& g,
                                                  const std::vector<element_t>& elems) {
  std::vector<element_t> gens;
  if (elems.size() <= 1) return gens;
  ClosureEngine e(g);
  Bits have(g.order());
  have.set(kIdentity);
  std::size_t have_count = 1;
  for (element_t x : elems) {
    if (have.test(x)) continue;
    gens.push_back(x);
    const auto& c = e.closure(std::span<const element_t>(gens.data(), gens.size()));
    have.clear();
    for (element_t v : c) have.set(v);
    have_count = c.size();
    if (have_count == elems.size()) break;
  }
  return gens;
}

// Subgroup tracked by generators and members (both in parent indexing).
struct GenSub {
  std::vector<element_t> gens;
  std::vector<element_t> elems;  // sorted

  std::size_t order() const { return elems.size(); }
  bool trivial() const { return elems.size() == 1; }
};

inline GenSub gen_sub(const FiniteGroup& g, std::vector<element_t> gens) {
  GenSub s;
  s.elems = closure_of(g, std::span<const element_t>(gens.data(), gens.size()));
  s.gens = std::move(gens);
  return s;
}

inline GenSub whole_group(const FiniteGroup& g) {
  GenSub s;
  s.gens = g.generators();
  s.elems.resize(g.order());
  std::iota(s.elems.begin(), s.elems.end(), 0);
  return s;
}

// Smallest subgroup containing `seed` and closed under conjugation by the
// subgroup generated by `conjugators` (normal closure when the conjugators
// generate the ambient group). Generator list grows by unabsorbed conjugates.
inline GenSub normal_closure_in(const FiniteGroup& g, std::span<const element_t> conjugators,
                                std::span<const element_t> seed) {
  std::vector<element_t> gens(seed.begin(), seed.end());
  ClosureEngine e(g);
  Bits have(g.order());
  std::vector<element_t> elems = e.closure(std::span<const element_t>(gens.data(), gens.size()));
  for (element_t v : elems) have.set(v);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t cur = gens.size();
    for (std::size_t i = 0; i < cur; ++i)
      for (element_t c : conjugators) {
        element_t z = g.conj(gens[i], c);
        if (!have.test(z)) {
          gens.push_back(z);
          elems = e.closure(std::span<const element_t>(gens.data(), gens.size()));
          have.clear();
          for (element_t v : elems) have.set(v);
          grew = true;
        }
      }
  }
  GenSub s;
  s.gens = std::move(gens);
  s.elems = std::move(elems);
  return s;
}

// Derived subgroup [H, H] of the subgroup with the given generators: the
// closure of generator commutators under conjugation by H.
inline GenSub derived_subgroup(const FiniteGroup& g, std::span<const element_t> sub_gens) {
  std::vector<element_t> seed;
  for (element_t x : sub_gens)
    for (element_t y : sub_gens) {
      element_t c = g.commutator(x, y);
      if (c != kIdentity) seed.push_back(c);
    }
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  if (seed.empty()) return GenSub{{}, {kIdentity}};
  return normal_closure_in(g, sub_gens, seed);
}

// H = H^(0) > H^(1) > ... until stable; soluble iff the last term is trivial.
inline std::vector<GenSub> derived_series(const FiniteGroup& g, const GenSub& h) {
  std::vector<GenSub> series{h};
  while (true) {
    const GenSub& top = series.back();
    GenSub d = derived_subgroup(g, top.gens);
    if (d.elems.size() == top.elems.size()) break;
    series.push_back(std::move(d));
    if (series.back().trivial()) break;
  }
  return series;
}

// H >= [H,H] >= [[H,H],H] >= ... until stable; nilpotent iff the last term
// is trivial.
inline std::vector<GenSub> lower_central_series(const FiniteGroup& g, const GenSub& h) {
  std::vector<GenSub> series{h};
  while (true) {
    const GenSub& top = series.back();
    std::vector<element_t> seed;
    for (element_t x : top.gens)
      for (element_t y : h.gens) {
        element_t c = g.commutator(x, y);
        if (c != kIdentity) seed.push_back(c);
      }
    std::sort(seed.begin(), seed.end());
    seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
    GenSub next = seed.empty() ? GenSub{{}, {kIdentity}} : normal_closure_in(g, h.gens, seed);
    if (next.elems.size() == top.elems.size()) break;
    series.push_back(std::move(next));
    if (series.back().trivial()) break;
  }
  return series;
}

// --------------------------------------------- centralizers / normalizers ---

inline std::vector<element_t> centralizer(const FiniteGroup& g,
                                          std::span<const element_t> xs) {
  std::vector<element_t> out;
  for (element_t c = 0; c < g.order(); ++c) {
    bool ok = true;
    for (element_t x : xs)
      if (g.mul(c, x) != g.mul(x, c)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(c);
  }
  return out;
}

inline std::vector<element_t> centralizer(const FiniteGroup& g, element_t x) {
  return centralizer(g, std::span<const element_t>(&x, 1));
}

inline std::vector<element_t> center(const FiniteGroup& g) {
  return centralizer(
      g, std::span<const element_t>(g.generators().data(), g.generators().size()));
}

// c normalizes H iff every generator's conjugate lands back in H.
inline std::vector<element_t> normalizer(const FiniteGroup& g, const Bits& h_bits,
                                         std::span<const element_t> h_gens) {
  std::vector<element_t> out;
  for (element_t c = 0; c < g.order(); ++c) {
    bool ok = true;
    for (element_t x : h_gens)
      if (!h_bits.test(g.conj(x, c))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(c);
  }
  return out;
}

inline Bits member_bits(const FiniteGroup& g, const std::vector<element_t>& elems) {
  Bits b(g.order());
  for (element_t x : elems) b.set(x);
  return b;
}

inline std::vector<element_t> conjugate_subgroup(const FiniteGroup& g,
                                                 const std::vector<element_t>& elems,
                                                 element_t c) {
  std::vector<element_t> out(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) out[i] = g.conj(elems[i], c);
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------------ Sylow ---

// Normalizer-growth: while P is not yet a full p-Sylow, its normalizer
// contains an element of p-power order outside P whose adjunction keeps a
// p-group. Deterministic: always the least such element.
inline std::vector<element_t> sylow_subgroup(const FiniteGroup& g, std::uint32_t p) {
  std::uint32_t pa = 1;
  for (std::uint32_t m = g.order(); m % p == 0; m /= p) pa *= p;
  std::vector<element_t> pgens;
  ClosureEngine e(g);
  std::vector<element_t> elems{kIdentity};
  auto is_p_power = [&](std::uint32_t k) {
    while (k % p == 0) k /= p;
    return k == 1;
  };
  while (elems.size() < pa) {
    Bits pb = member_bits(g, elems);
    std::vector<element_t> cand;
    if (elems.size() == 1) {
      cand.resize(g.order());
      std::iota(cand.begin(), cand.end(), 0);
    } else {
      cand = normalizer(g, pb, std::span<const element_t>(pgens.data(), pgens.size()));
    }
    bool grew = false;
    for (element_t x : cand) {
      if (pb.test(x) || !is_p_power(g.order_of(x))) continue;
      pgens.push_back(x);
      const auto& c = e.closure(std::span<const element_t>(pgens.data(), pgens.size()));
      if (is_p_power(static_cast<std::uint32_t>(c.size()))) {
        elems = c;
        grew = true;
        break;
      }
      pgens.pop_back();
    }
    if (!grew) throw ValidationError("internal: Sylow growth stalled");
  }
  return elems;
}

// Largest normal subgroup of G inside H: iterate C := C intersect C^s over
// generators until stable.
inline std::vector<element_t> normal_core(const FiniteGroup& g,
                                          const std::vector<element_t>& elems) {
  Bits c = member_bits(g, elems);
  bool changed = true;
  while (changed) {
    changed = false;
    for (element_t s : g.generators()) {
      Bits cs(g.order());
      c.for_each([&](element_t x) { cs.set(g.conj(x, s)); });
      std::size_t before = c.count();
      c &= cs;
      if (c.count() != before) changed = true;
    }
  }
  return c.to_vector();
}

inline std::vector<element_t> fitting_subgroup(const FiniteGroup& g) {
  std::vector<element_t> f{kIdentity};
  ClosureEngine e(g);
  for (std::uint32_t p : prime_divisors(g.order())) {
    std::vector<element_t> op = normal_core(g, sylow_subgroup(g, p));
    std::vector<element_t> gens = subgroup_generators(g, f);
    std::vector<element_t> opg = subgroup_generators(g, op);
    gens.insert(gens.end(), opg.begin(), opg.end());
    f = e.closure(std::span<const element_t>(gens.data(), gens.size()));
  }
  return f;
}

// ------------------------------------------------------- normal subgroups ---

// Products of conjugacy classes, one lazily cached row per class pair.
// Because yx is conjugate to xy, the row only depends on the unordered pair.
class ClassProducts {
 public:
  explicit ClassProducts(const FiniteGroup& g) : g_(&g), cc_(&g.conjugacy_classes()) {}

  std::size_t count() const { return cc_->count(); }

  // Classes met by {x*y : x in class i, y in class j}. Since every product
  // is conjugate to rep_i * y for some y in class j, one row scan suffices.
  const Bits& row(std::uint32_t i, std::uint32_t j) {
    if (i > j) std::swap(i, j);
    const std::uint64_t key = static_cast<std::uint64_t>(i) * cc_->count() + j;
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Bits b(cc_->count());
    const element_t rep = cc_->reps[i];
    auto [mb, me] = cc_->members_of(j);
    for (const element_t* y = mb; y != me; ++y) b.set(cc_->class_of[g_->mul(rep, *y)]);
    return cache_.emplace(key, std::move(b)).first->second;
  }

  // Smallest union of classes containing `seed` (plus the identity class)
  // that is closed under products — i.e. the normal subgroup generated by
  // the seed classes, represented as a class bitset.
  Bits closed_class_set(Bits seed) {
    seed.set(cc_->class_of[kIdentity]);
    std::vector<std::uint32_t> list = to_list(seed);
    for (std::size_t a = 0; a < list.size(); ++a)
      for (std::size_t b = 0; b <= a; ++b) {
        const Bits& r = row(list[a], list[b]);
        r.for_each([&](element_t c) {
          if (!seed.test(c)) {
            seed.set(c);
            list.push_back(c);
          }
        });
      }
    return seed;
  }

  std::uint64_t set_size(const Bits& class_set) const {
    std::uint64_t total = 0;
    class_set.for_each([&](element_t c) { total += cc_->class_size(c); });
    return total;
  }

  std::vector<element_t> set_members(const Bits& class_set) const {
    std::vector<element_t> out;
    out.reserve(set_size(class_set));
    class_set.for_each([&](element_t c) {
      auto [mb, me] = cc_->members_of(c);
      out.insert(out.end(), mb, me);
    });
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  static std::vector<std::uint32_t> to_list(const Bits& b) {
    std::vector<std::uint32_t> v;
    b.for_each([&](element_t c) { v.push_back(c); });
    return v;
  }

  const FiniteGroup* g_;
  const ConjugacyClasses* cc_;
  std::unordered_map<std::uint64_t, Bits> cache_;
};

// All normal subgroups as class bitsets, ascending by element count (ties:
// first differing class). Every normal subgroup is a join of single-class
// closures ("atoms"), so the join closure of the atoms is complete.
struct NormalFamily {
  std::vector<Bits> class_sets;
  std::vector<std::uint64_t> sizes;  // element counts, matching class_sets
};

inline NormalFamily normal_class_sets(ClassProducts& cp) {
  const std::size_t k = cp.count();
  std::unordered_map<SetDigest, std::size_t, SetDigest::Hash> seen;
  std::vector<Bits> sets;
  auto digest_of = [](const Bits& b) {
    SetDigest d;
    b.for_each([&](element_t c) { d.add(c); });
    return d;
  };
  auto push = [&](Bits b) {
    SetDigest d = digest_of(b);
    if (seen.count(d)) return;
    if (sets.size() >= caps().lattice_size_cap)
      throw CapExceeded("too many normal subgroups");
    seen.emplace(d, sets.size());
    sets.push_back(std::move(b));
  };
  Bits trivial(k);
  trivial.set(0);
  push(cp.closed_class_set(trivial));  // identity class alone
  std::vector<Bits> atoms;
  for (std::uint32_t c = 1; c < k; ++c) {
    Bits seed(k);
    seed.set(c);
    Bits atom = cp.closed_class_set(std::move(seed));
    atoms.push_back(atom);
    push(std::move(atom));
  }
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (const Bits& atom : atoms) {
      if (atom.subset_of(sets[i])) continue;
      Bits u = sets[i];
      u |= atom;
      push(cp.closed_class_set(std::move(u)));
    }
  NormalFamily fam;
  std::vector<std::size_t> order(sets.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::uint64_t> sizes(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) sizes[i] = cp.set_size(sets[i]);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (sizes[a] != sizes[b]) return sizes[a] < sizes[b];
    return sets[a].to_vector() < sets[b].to_vector();
  });
  for (std::size_t i : order) {
    fam.class_sets.push_back(std::move(sets[i]));
    fam.sizes.push_back(sizes[i]);
  }
  return fam;
}

inline std::vector<std::vector<element_t>> normal_subgroups(const FiniteGroup& g) {
  ClassProducts cp(g);
  NormalFamily fam = normal_class_sets(cp);
  std::vector<std::vector<element_t>> out;
  out.reserve(fam.class_sets.size());
  for (const Bits& s : fam.class_sets) out.push_back(cp.set_members(s));
  return out;
}

inline std::vector<std::vector<element_t>> minimal_normal_subgroups(const FiniteGroup& g) {
  ClassProducts cp(g);
  NormalFamily fam = normal_class_sets(cp);
  std::vector<std::vector<element_t>> out;
  for (std::size_t i = 0; i < fam.class_sets.size(); ++i) {
    if (fam.sizes[i] == 1 || fam.sizes[i] == g.order()) continue;
    bool minimal = true;
    for (std::size_t j = 0; j < fam.class_sets.size(); ++j) {
      if (j == i || fam.sizes[j] == 1 || fam.sizes[j] >= fam.sizes[i]) continue;
      if (fam.class_sets[j].subset_of(fam.class_sets[i])) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(cp.set_members(fam.class_sets[i]));
  }
  if (out.empty() && g.order() > 1)  // simple group: G is its own minimal normal
    out.push_back(cp.set_members(fam.class_sets.back()));
  return out;
}

inline std::vector<element_t> socle(const FiniteGroup& g) {
  if (g.order() == 1) return {kIdentity};
  ClassProducts cp(g);
  NormalFamily fam = normal_class_sets(cp);
  const std::size_t k = cp.count();
  Bits u(k);
  bool any = false;
  for (std::size_t i = 0; i < fam.class_sets.size(); ++i) {
    if (fam.sizes[i] == 1 || fam.sizes[i] == g.order()) continue;
    bool minimal = true;
    for (std::size_t j = 0; j < fam.class_sets.size(); ++j) {
      if (j == i || fam.sizes[j] == 1 || fam.sizes[j] >= fam.sizes[i]) continue;
      if (fam.class_sets[j].subset_of(fam.class_sets[i])) {
        minimal = false;
        break;
      }
    }
    if (minimal) {
      u |= fam.class_sets[i];
      any = true;
    }
  }
  if (!any) return cp.set_members(fam.class_sets.back());  // simple group
  return cp.set_members(cp.closed_class_set(std::move(u)));
}

// Largest soluble normal subgroup: the join of all soluble normal subgroups.
inline std::vector<element_t> soluble_radical(const FiniteGroup& g) {
  if (derived_series(g, whole_group(g)).back().trivial()) return whole_group(g).elems;
  ClosureEngine e(g);
  std::vector<element_t> rad{kIdentity};
  for (const auto& n : normal_subgroups(g)) {
    if (n.size() == 1) continue;
    if (std::includes(rad.begin(), rad.end(), n.begin(), n.end())) continue;
    GenSub s{subgroup_generators(g, n), n};
    if (!derived_series(g, s).back().trivial()) continue;
    // The join of two soluble normal subgroups is again soluble and normal.
    std::vector<element_t> jg = subgroup_generators(g, rad);
    jg.insert(jg.end(), s.gens.begin(), s.gens.end());
    rad = e.closure(std::span<const element_t>(jg.data(), jg.size()));
  }
  return rad;
}

// ------------------------------------------------------------ materialize ---

// Standalone group from a subgroup's members (indices remapped to 0..m-1 in
// ascending member order, so index 0 stays the identity).
struct Materialized {
  GroupPtr group;
  std::vector<element_t> to_parent;    // new index -> parent index
  std::vector<element_t> from_parent;  // parent index -> new index (or -1)
};

inline Materialized materialize_subgroup(const FiniteGroup& g,
                                         const std::vector<element_t>& elems,
                                         std::string kind = "subgroup",
                                         std::string detail = "") {
  const std::uint32_t m = static_cast<std::uint32_t>(elems.size());
  if (m > caps().dense_table_max) throw CapExceeded("subgroup too large to materialize");
  Materialized out;
  out.to_parent = elems;
  out.from_parent.assign(g.order(), static_cast<element_t>(-1));
  for (std::uint32_t i = 0; i < m; ++i) out.from_parent[elems[i]] = i;
  std::vector<element_t> table(static_cast<std::size_t>(m) * m);
  for (std::uint32_t a = 0; a < m; ++a)
    for (std::uint32_t b = 0; b < m; ++b) {
      element_t p = g.mul(elems[a], elems[b]);
      element_t q = out.from_parent[p];
      if (q == static_cast<element_t>(-1)) throw ValidationError("subset is not a subgroup");
      table[static_cast<std::size_t>(a) * m + b] = q;
    }
  Provenance prov;
  prov.kind = std::move(kind);
  prov.detail = std::move(detail);
  out.group = FiniteGroup::from_table(std::move(table), {}, std::move(prov));
  return out;
}

// ---------------------------------------------------------------- lattice ---

struct SubgroupLattice {
  struct Node {
    std::vector<element_t> elems;  // sorted
    std::vector<element_t> gens;
    Bits bits;
  };
  std::vector<Node> nodes;  // ascending by (size, members)

  std::size_t whole() const { return nodes.size() - 1; }
};

// All subgroups: start from the distinct cyclic subgroups and close under
// join-with-cyclic. Guarded by caps (group order and subgroup count).
inline SubgroupLattice all_subgroups(const FiniteGroup& g) {
  if (g.order() > caps().lattice_cap)
    throw CapExceeded("group too large for lattice enumeration");
  ClosureEngine e(g);
  std::unordered_map<SetDigest, std::size_t, SetDigest::Hash> seen;
  std::vector<SubgroupLattice::Node> nodes;
  auto digest_of = [](const std::vector<element_t>& v) {
    SetDigest d;
    for (element_t x : v) d.add(x);
    return d;
  };
  auto push = [&](const std::vector<element_t>& elems, std::vector<element_t> gens) {
    SetDigest d = digest_of(elems);
    auto it = seen.find(d);
    if (it != seen.end()) return it->second;
    if (nodes.size() >= caps().lattice_size_cap)
      throw CapExceeded("subgroup lattice exceeds size cap");
    SubgroupLattice::Node n;
    n.elems = elems;
    n.gens = std::move(gens);
    n.bits = member_bits(g, elems);
    nodes.push_back(std::move(n));
    seen.emplace(d, nodes.size() - 1);
    return nodes.size() - 1;
  };
  push({kIdentity}, {});
  // Distinct cyclic subgroups; remember one generator for each.
  std::vector<element_t> cyclic_gens;
  for (element_t x = 1; x < g.order(); ++x) {
    const auto& c = e.closure({x});
    std::size_t before = nodes.size();
    push(c, {x});
    if (nodes.size() > before) cyclic_gens.push_back(x);
  }
  // Join closure.
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].elems.size() == g.order()) continue;
    for (element_t x : cyclic_gens) {
      if (nodes[i].bits.test(x)) continue;
      std::vector<element_t> jg = nodes[i].gens;
      jg.push_back(x);
      const auto& join = e.closure(std::span<const element_t>(jg.data(), jg.size()));
      push(join, std::move(jg));
    }
  }
  std::sort(nodes.begin(), nodes.end(), [](const auto& a, const auto& b) {
    if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
    return a.elems < b.elems;
  });
  SubgroupLattice lat;
  lat.nodes = std::move(nodes);
  return lat;
}

// Indices of the maximal proper subgroups.
inline std::vector<std::size_t> maximal_subgroups(const SubgroupLattice& lat) {
  std::vector<std::size_t> out;
  const std::size_t whole = lat.whole();
  for (std::size_t i = 0; i + 1 < lat.nodes.size(); ++i) {
    const auto& h = lat.nodes[i];
    bool maximal = true;
    for (std::size_t j = i + 1; j < lat.nodes.size() && maximal; ++j) {
      if (j == whole) continue;
      const auto& k = lat.nodes[j];
      if (k.elems.size() <= h.elems.size() || k.elems.size() % h.elems.size() != 0) continue;
      if (h.bits.subset_of(k.bits)) maximal = false;
    }
    if (maximal) out.push_back(i);
  }
  return out;
}

inline std::vector<element_t> frattini_subgroup(const FiniteGroup& g,
                                                const SubgroupLattice& lat) {
  Bits f(g.order());
  for (element_t x = 0; x < g.order(); ++x) f.set(x);
  for (std::size_t i : maximal_subgroups(lat)) f &= lat.nodes[i].bits;
  return f.to_vector();
}

// ----------------------------------------------------- minimal generators ---

struct MinGenerators {
  std::uint32_t count = 0;
  bool exact = true;                   // false when caps forced a bounded answer
  std::uint32_t lower = 0, upper = 0;  // meaningful when !exact
};

// Number of invariant factors of an abelian subgroup = max over p of the
// p-rank, and the p-rank is log_p of the number of solutions of x^p = 1.
inline std::uint32_t abelian_min_generators(const FiniteGroup& g, const GenSub& h) {
  std::uint32_t best = 0;
  for (std::uint32_t p : prime_divisors(static_cast<std::uint32_t>(h.elems.size()))) {
    std::uint64_t cnt = 0;
    for (element_t x : h.elems)
      if (g.power(x, p) == kIdentity) ++cnt;
    std::uint32_t rank = 0;
    while (cnt > 1) {
      cnt /= p;
      ++rank;
    }
    best = std::max(best, rank);
  }
  return best;
}

inline MinGenerators min_generators(const FiniteGroup& g) {
  MinGenerators r;
  if (g.order() == 1) return r;
  for (element_t x = 0; x < g.order(); ++x)
    if (g.order_of(x) == g.order()) {
      r.count = 1;
      return r;
    }
  // Two-generation: the first generator may be taken up to conjugacy.
  ClosureEngine e(g);
  const auto& cc = g.conjugacy_classes();
  for (std::size_t c = 1; c < cc.count(); ++c) {
    element_t x = cc.reps[c];
    if (g.order() % g.order_of(x) != 0) continue;
    for (element_t y = 1; y < g.order(); ++y)
      if (e.generates(x, y)) {
        r.count = 2;
        return r;
      }
  }
  // Shortest chain of joins with cyclic subgroups, breadth-first over the
  // lattice: dist[H v C] <= dist[H] + 1 starting from the cyclic subgroups.
  if (g.order() <= caps().lattice_cap) {
    SubgroupLattice lat = all_subgroups(g);
    std::unordered_map<SetDigest, std::size_t, SetDigest::Hash> idx;
    auto digest_of = [](const std::vector<element_t>& v) {
      SetDigest d;
      for (element_t x : v) d.add(x);
      return d;
    };
    for (std::size_t i = 0; i < lat.nodes.size(); ++i)
      idx.emplace(digest_of(lat.nodes[i].elems), i);
    std::vector<std::uint32_t> dist(lat.nodes.size(), UINT32_MAX);
    std::vector<std::size_t> queue;
    std::vector<element_t> cyclic_gens;
    for (std::size_t i = 0; i < lat.nodes.size(); ++i)
      if (lat.nodes[i].gens.size() == 1) {
        dist[i] = 1;
        queue.push_back(i);
        cyclic_gens.push_back(lat.nodes[i].gens[0]);
      }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::size_t i = queue[head];
      if (lat.nodes[i].elems.size() == g.order()) {
        r.count = dist[i];
        return r;
      }
      for (element_t x : cyclic_gens) {
        if (lat.nodes[i].bits.test(x)) continue;
        std::vector<element_t> jg = lat.nodes[i].gens;
        jg.push_back(x);
        const auto& join = e.closure(std::span<const element_t>(jg.data(), jg.size()));
        auto it = idx.find(digest_of(join));
        if (it == idx.end()) throw ValidationError("internal: join missing from lattice");
        if (dist[it->second] > dist[i] + 1) {
          dist[it->second] = dist[i] + 1;
          queue.push_back(it->second);
        }
      }
    }
    throw ValidationError("internal: lattice join search did not reach the group");
  }
  // Beyond the lattice cap: greedy upper bound; lower bound from the number
  // of invariant factors of G/[G,G] (computed in place, no quotient built).
  GenSub whole = whole_group(g);
  GenSub der = derived_subgroup(g, whole.gens);
  std::uint32_t lower = 3;
  if (der.elems.size() < g.order()) {
    Bits derb = member_bits(g, der.elems);
    const std::uint64_t m = g.order() / der.elems.size();
    std::uint32_t ab_rank = 0;
    for (std::uint32_t p : prime_divisors(static_cast<std::uint32_t>(m))) {
      std::uint64_t cnt = 0;
      for (element_t x = 0; x < g.order(); ++x)
        if (derb.test(g.power(x, p))) ++cnt;
      cnt /= der.elems.size();  // solutions of a^p = 1 in G/[G,G]
      std::uint32_t rank = 0;
      while (cnt > 1) {
        cnt /= p;
        ++rank;
      }
      ab_rank = std::max(ab_rank, rank);
    }
    lower = std::max<std::uint32_t>(3, ab_rank);
  }
  std::vector<element_t> gens;
  Bits have(g.order());
  have.set(kIdentity);
  std::size_t have_count = 1;
  while (have_count < g.order()) {
    element_t best = 0;
    std::size_t best_size = have_count;
    for (element_t x = 0; x < g.order(); ++x) {
      if (have.test(x)) continue;
      std::vector<element_t> t = gens;
      t.push_back(x);
      auto sz = e.bounded_size(std::span<const element_t>(t.data(), t.size()), g.order());
      std::size_t got = sz ? *sz : g.order();
      if (got > best_size) {
        best_size = got;
        best = x;
      }
      if (best_size == g.order()) break;
    }
    gens.push_back(best);
    const auto& c = e.closure(std::span<const element_t>(gens.data(), gens.size()));
    have.clear();
    for (element_t v : c) have.set(v);
    have_count = c.size();
  }
  std::uint32_t upper = static_cast<std::uint32_t>(gens.size());
  if (upper == lower) {
    r.count = upper;
    return r;
  }
  r.exact = false;
  r.lower = lower;
  r.upper = upper;
  r.count = upper;
  return r;
}

}  // namespace nonf
