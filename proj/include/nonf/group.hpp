#pragma once

// Finite groups with O(1) multiplication on element indices.
//
// Representation: indices 0..n-1 with the identity at index 0. Three
// backends share one contract (mul/inv/order_of):
//   * Dense    — full multiplication table (n <= caps().dense_table_max);
//   * Product  — (outer) semidirect or direct product N x| H; element
//                (a, h) has index a*|H| + h and multiplication uses the
//                stored action table, so huge products never materialize
//                an n^2 table;
//   * Perm     — permutation closure above the dense cap; multiplication
//                composes permutations and looks the result up.
//
// Groups are immutable after construction and safe to share across threads.

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "nonf/common.hpp"
#include "nonf/perm.hpp"

namespace nonf {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Conjugation orbits, discovered in ascending element order; the class
// representative is the least member of its class.
struct ConjugacyClasses {
  std::vector<element_t> class_of;      // element -> class id
  std::vector<element_t> reps;          // class id -> least member
  std::vector<std::uint32_t> offsets;   // CSR offsets into `members`
  std::vector<element_t> members;       // members grouped by class

  std::size_t count() const { return reps.size(); }
  std::pair<const element_t*, const element_t*> members_of(std::size_t c) const {
    return {members.data() + offsets[c], members.data() + offsets[c + 1]};
  }
  std::size_t class_size(std::size_t c) const { return offsets[c + 1] - offsets[c]; }
};

struct Provenance {
  std::string kind;    // "table" | "permutation" | "direct" | "semidirect" | "quotient" | "family"
  std::string detail;  // free-form description (family spec, file name, ...)
  GroupPtr left, right;                 // factors (products) or parent (quotient)
  std::vector<element_t> left_embed;    // left factor element -> index here
  std::vector<element_t> right_embed;   // right factor element -> index here
  // Named element subsets; mutable so builders can annotate a finished group.
  mutable std::map<std::string, std::vector<element_t>> marked;
};

class FiniteGroup {
 public:
  enum class Backend { Dense, Product, Perm };

  std::uint32_t order() const { return n_; }
  Backend backend() const { return kind_; }

  element_t mul(element_t a, element_t b) const {
    switch (kind_) {
      case Backend::Dense:
        return table_[static_cast<std::size_t>(a) * n_ + b];
      case Backend::Product: {
        const element_t la = comp_left_[a], ha = comp_right_[a];
        const element_t lb = comp_left_[b], hb = comp_right_[b];
        const element_t l =
            left_->mul(la, act_[static_cast<std::size_t>(ha) * left_->order() + lb]);
        return l * right_n_ + right_->mul(ha, hb);
      }
      case Backend::Perm:
      default:
        return perm_mul(a, b);
    }
  }

  element_t inv(element_t a) const { return inv_[a]; }
  std::uint32_t order_of(element_t a) const { return ord_[a]; }

  // b^{-1} a b
  element_t conj(element_t a, element_t b) const { return mul(mul(inv(b), a), b); }

  element_t power(element_t a, std::uint64_t k) const {
    element_t r = kIdentity, base = a;
    while (k) {
      if (k & 1) r = mul(r, base);
      base = mul(base, base);
      k >>= 1;
    }
    return r;
  }

  element_t commutator(element_t a, element_t b) const {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }

  const std::vector<element_t>& generators() const { return gens_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Provenance& provenance() const { return prov_; }

  bool is_abelian() const {
    for (auto g : gens_)
      for (auto h : gens_)
        if (mul(g, h) != mul(h, g)) return false;
    return true;
  }

  std::uint32_t exponent() const {
    std::uint64_t e = 1;
    for (element_t x = 0; x < n_; ++x) e = std::lcm<std::uint64_t>(e, ord_[x]);
    return static_cast<std::uint32_t>(e);
  }

  const ConjugacyClasses& conjugacy_classes() const {
    std::call_once(cc_once_, [this] { cc_ = compute_classes(); });
    return cc_;
  }

  // Multiset of element orders as sorted (order, count) pairs.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> order_profile() const {
    std::map<std::uint32_t, std::uint32_t> m;
    for (element_t x = 0; x < n_; ++x) ++m[ord_[x]];
    return {m.begin(), m.end()};
  }

  // ----------------------------------------------------------- factories ---

  static GroupPtr trivial() {
    auto g = std::make_shared<FiniteGroup>(Private{});
    g->kind_ = Backend::Dense;
    g->n_ = 1;
    g->table_ = {0};
    g->prov_.kind = "table";
    g->prov_.detail = "trivial";
    g->finish();
    return g;
  }

  // Validates: shape, identity at index 0, Latin property, and associativity
  // via Light's test over a greedily chosen generating set (exact at any n).
  static GroupPtr from_table(std::vector<element_t> table, std::vector<std::string> labels = {},
                             Provenance prov = {}) {
    std::size_t n = 0;
    while (n * n < table.size()) ++n;
    if (n == 0 || n * n != table.size())
      throw ValidationError("multiplication table is not square");
    if (n > caps().order_cap) throw CapExceeded("table order exceeds cap");
    if (n > caps().dense_table_max)
      throw CapExceeded("table order exceeds dense backend cap");
    for (auto v : table)
      if (v >= n) throw ValidationError("table entry out of range");
    for (std::size_t j = 0; j < n; ++j) {
      if (table[j] != j) throw ValidationError("index 0 is not a left identity");
      if (table[j * n] != j) throw ValidationError("index 0 is not a right identity");
    }
    std::vector<char> seen(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t j = 0; j < n; ++j) {
        element_t v = table[i * n + j];
        if (seen[v]) throw ValidationError("row is not a permutation");
        seen[v] = 1;
      }
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t j = 0; j < n; ++j) {
        element_t v = table[j * n + i];
        if (seen[v]) throw ValidationError("column is not a permutation");
        seen[v] = 1;
      }
    }
    auto g = std::make_shared<FiniteGroup>(Private{});
    g->kind_ = Backend::Dense;
    g->n_ = static_cast<std::uint32_t>(n);
    g->table_ = std::move(table);
    g->labels_ = std::move(labels);
    g->prov_ = std::move(prov);
    if (g->prov_.kind.empty()) g->prov_.kind = "table";
    g->gens_ = g->greedy_generators();
    // Light's associativity test on the generating set.
    for (element_t s : g->gens_)
      for (element_t a = 0; a < g->n_; ++a)
        for (element_t b = 0; b < g->n_; ++b)
          if (g->mul(a, g->mul(s, b)) != g->mul(g->mul(a, s), b))
            throw ValidationError("multiplication table is not associative");
    g->finish();
    return g;
  }

  // Breadth-first closure from the identity, applying generators on the
  // right in input order; element 0 is the identity, generators get the
  // earliest indices their first appearance dictates.
  static GroupPtr from_permutation_generators(const std::vector<Permutation>& gens,
                                              std::string detail = "") {
    if (gens.empty()) throw ValidationError("no generators given");
    const std::size_t degree = gens[0].size();
    if (degree == 0) throw ValidationError("degree must be positive");
    for (const auto& p : gens) {
      if (p.size() != degree) throw ValidationError("generator degrees differ");
      if (!perm_is_valid(p)) throw ValidationError("generator is not a permutation");
    }
    std::vector<Permutation> elems;
    std::unordered_map<std::uint64_t, std::vector<element_t>> index;  // hash -> candidates
    auto hash_perm = [](const Permutation& p) {
      std::uint64_t h = 0x9e3779b97f4a7c15ULL;
      for (auto v : p) h = splitmix64(h ^ v);
      return h;
    };
    auto find = [&](const Permutation& p) -> std::optional<element_t> {
      auto it = index.find(hash_perm(p));
      if (it == index.end()) return std::nullopt;
      for (element_t i : it->second)
        if (elems[i] == p) return i;
      return std::nullopt;
    };
    auto add = [&](Permutation p) -> element_t {
      element_t id = static_cast<element_t>(elems.size());
      index[hash_perm(p)].push_back(id);
      elems.push_back(std::move(p));
      return id;
    };
    add(perm_identity(degree));
    std::vector<element_t> gen_ids;
    for (std::size_t head = 0; head < elems.size(); ++head) {
      for (const auto& gp : gens) {
        Permutation q = perm_compose(elems[head], gp);
        if (!find(q)) {
          if (elems.size() >= caps().order_cap)
            throw CapExceeded("permutation closure exceeds order cap");
          add(std::move(q));
        }
      }
    }
    for (const auto& gp : gens) gen_ids.push_back(*find(gp));

    const std::size_t n = elems.size();
    auto g = std::make_shared<FiniteGroup>(Private{});
    g->n_ = static_cast<std::uint32_t>(n);
    g->gens_ = gen_ids;
    g->prov_.kind = "permutation";
    g->prov_.detail = std::move(detail);
    if (n <= caps().dense_table_max) {
      g->kind_ = Backend::Dense;
      g->table_.resize(n * n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          g->table_[a * n + b] = *find(perm_compose(elems[a], elems[b]));
    } else {
      g->kind_ = Backend::Perm;
      g->degree_ = static_cast<std::uint32_t>(degree);
      g->perms_.resize(n * degree);
      for (std::size_t i = 0; i < n; ++i)
        std::copy(elems[i].begin(), elems[i].end(), g->perms_.begin() + i * degree);
      g->perm_index_ = std::move(index);
      g->perm_elems_ = std::move(elems);
    }
    g->finish();
    return g;
  }

  // N x| H with a left action of H by automorphisms of N:
  // action[h][x] is the image of x, and action[h1*h2] = action[h1] o action[h2].
  // Pass the trivial action (all identity maps) for a direct product.
  static GroupPtr semidirect_product(GroupPtr n, GroupPtr h,
                                     const std::vector<std::vector<element_t>>& action,
                                     std::string kind = "semidirect",
                                     std::string detail = "") {
    const std::uint32_t nn = n->order(), nh = h->order();
    if (static_cast<std::uint64_t>(nn) * nh > caps().order_cap)
      throw CapExceeded("product order exceeds cap");
    if (action.size() != nh) throw NotAnAction("need one map per acting element");
    for (const auto& m : action) {
      if (m.size() != nn) throw NotAnAction("action map has wrong size");
      if (!perm_is_valid(m)) throw NotAnAction("action map is not a bijection");
      if (m[kIdentity] != kIdentity) throw NotAnAction("action map moves the identity");
    }
    for (element_t x = 0; x < nn; ++x)
      if (action[kIdentity][x] != x) throw NotAnAction("identity must act trivially");
    // Automorphism check: f(g*y) = f(g)*f(y) for generators g and all y
    // suffices for a bijection fixing a generating set's closure.
    for (element_t hh = 0; hh < nh; ++hh)
      for (element_t g : n->generators())
        for (element_t y = 0; y < nn; ++y)
          if (action[hh][n->mul(g, y)] != n->mul(action[hh][g], action[hh][y]))
            throw NotAnAction("action map is not an automorphism");
    for (element_t h1 = 0; h1 < nh; ++h1)
      for (element_t h2 = 0; h2 < nh; ++h2)
        for (element_t g : n->generators())
          if (action[h->mul(h1, h2)][g] != action[h1][action[h2][g]])
            throw NotAHomomorphism("action is not a homomorphism into Aut(N)");

    auto g = std::make_shared<FiniteGroup>(Private{});
    g->kind_ = Backend::Product;
    g->n_ = nn * nh;
    g->left_ = n;
    g->right_ = h;
    g->right_n_ = nh;
    g->act_.resize(static_cast<std::size_t>(nh) * nn);
    for (element_t hh = 0; hh < nh; ++hh)
      std::copy(action[hh].begin(), action[hh].end(),
                g->act_.begin() + static_cast<std::size_t>(hh) * nn);
    g->comp_left_.resize(g->n_);
    g->comp_right_.resize(g->n_);
    for (element_t a = 0; a < nn; ++a)
      for (element_t b = 0; b < nh; ++b) {
        g->comp_left_[a * nh + b] = a;
        g->comp_right_[a * nh + b] = b;
      }
    g->prov_.kind = std::move(kind);
    g->prov_.detail = std::move(detail);
    g->prov_.left = n;
    g->prov_.right = h;
    g->prov_.left_embed.resize(nn);
    g->prov_.right_embed.resize(nh);
    for (element_t a = 0; a < nn; ++a) g->prov_.left_embed[a] = a * nh;
    for (element_t b = 0; b < nh; ++b) g->prov_.right_embed[b] = b;
    for (element_t a : n->generators()) g->gens_.push_back(a * nh);
    for (element_t b : h->generators()) g->gens_.push_back(b);
    g->densify_if_small();
    g->finish();
    return g;
  }

  static GroupPtr direct_product(GroupPtr a, GroupPtr b) {
    std::vector<std::vector<element_t>> triv(b->order());
    std::vector<element_t> id(a->order());
    for (element_t x = 0; x < a->order(); ++x) id[x] = x;
    for (auto& m : triv) m = id;
    return semidirect_product(std::move(a), std::move(b), triv, "direct");
  }

  struct Private {};  // make_shared helper
  explicit FiniteGroup(Private) {}

 private:
  element_t perm_mul(element_t a, element_t b) const {
    const std::size_t d = degree_;
    Permutation r(d);
    const element_t* pa = perms_.data() + static_cast<std::size_t>(a) * d;
    const element_t* pb = perms_.data() + static_cast<std::size_t>(b) * d;
    for (std::size_t i = 0; i < d; ++i) r[i] = pb[pa[i]];
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto v : r) h = splitmix64(h ^ v);
    auto it = perm_index_.find(h);
    if (it != perm_index_.end())
      for (element_t i : it->second)
        if (perm_elems_[i] == r) return i;
    throw ValidationError("internal: product left the closed set");
  }

  std::vector<element_t> greedy_generators() const {
    std::vector<element_t> gens;
    Bits closed(n_);
    std::vector<element_t> queue{kIdentity};
    closed.set(kIdentity);
    std::size_t closed_count = 1;
    auto grow = [&](element_t g) {
      gens.push_back(g);
      if (!closed.test(g)) {
        closed.set(g);
        queue.push_back(g);
        ++closed_count;
      }
      for (std::size_t head = 0; head < queue.size(); ++head)
        for (element_t s : gens) {
          element_t y = mul(queue[head], s);
          if (!closed.test(y)) {
            closed.set(y);
            queue.push_back(y);
            ++closed_count;
          }
        }
    };
    for (element_t x = 0; x < n_ && closed_count < n_; ++x)
      if (!closed.test(x)) grow(x);
    return gens;
  }

  ConjugacyClasses compute_classes() const {
    ConjugacyClasses cc;
    cc.class_of.assign(n_, static_cast<element_t>(-1));
    std::vector<std::vector<element_t>> classes;
    std::vector<element_t> stack;
    for (element_t x = 0; x < n_; ++x) {
      if (cc.class_of[x] != static_cast<element_t>(-1)) continue;
      const element_t cid = static_cast<element_t>(classes.size());
      classes.emplace_back();
      cc.class_of[x] = cid;
      stack.assign(1, x);
      classes.back().push_back(x);
      while (!stack.empty()) {
        element_t y = stack.back();
        stack.pop_back();
        for (element_t g : gens_) {
          element_t z = mul(mul(inv(g), y), g);
          if (cc.class_of[z] == static_cast<element_t>(-1)) {
            cc.class_of[z] = cid;
            classes.back().push_back(z);
            stack.push_back(z);
          }
        }
      }
    }
    cc.offsets.assign(classes.size() + 1, 0);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      std::sort(classes[c].begin(), classes[c].end());
      cc.reps.push_back(classes[c][0]);
      cc.offsets[c + 1] = cc.offsets[c] + static_cast<std::uint32_t>(classes[c].size());
    }
    cc.members.reserve(n_);
    for (auto& cls : classes) cc.members.insert(cc.members.end(), cls.begin(), cls.end());
    return cc;
  }

  void densify_if_small() {
    // Beyond ~2k elements the n^2 table costs more memory than the few extra
    // loads per product are worth.
    if (kind_ != Backend::Product || n_ > 2048) return;
    std::vector<element_t> t(static_cast<std::size_t>(n_) * n_);
    for (element_t a = 0; a < n_; ++a)
      for (element_t b = 0; b < n_; ++b) t[static_cast<std::size_t>(a) * n_ + b] = mul(a, b);
    table_ = std::move(t);
    kind_ = Backend::Dense;
  }

  // Fills inverses and element orders once multiplication works; also
  // normalizes the generator list (dedupe, drop identity).
  void finish() {
    inv_.resize(n_);
    if (kind_ == Backend::Product) {
      const std::uint32_t nn = left_->order();
      for (element_t a = 0; a < nn; ++a)
        for (element_t b = 0; b < right_n_; ++b) {
          element_t hb = right_->inv(b);
          element_t nb = act_[static_cast<std::size_t>(hb) * nn + left_->inv(a)];
          inv_[a * right_n_ + b] = nb * right_n_ + hb;
        }
    } else {
      for (element_t a = 0; a < n_; ++a) {
        element_t x = a, prev = kIdentity;
        while (x != kIdentity) {
          prev = x;
          x = mul(x, a);
        }
        // prev * a is the identity, so prev inverts a (identity inverts itself).
        inv_[a] = (a == kIdentity) ? kIdentity : prev;
      }
    }
    ord_.resize(n_);
    for (element_t a = 0; a < n_; ++a) {
      std::uint32_t k = 1;
      element_t x = a;
      while (x != kIdentity) {
        x = mul(x, a);
        ++k;
      }
      ord_[a] = k;
    }
    std::vector<element_t> gens;
    for (element_t g : gens_)
      if (g != kIdentity && std::find(gens.begin(), gens.end(), g) == gens.end())
        gens.push_back(g);
    if (gens.empty() && n_ > 1) gens = greedy_generators();
    gens_ = std::move(gens);
  }

  Backend kind_ = Backend::Dense;
  std::uint32_t n_ = 0;

  std::vector<element_t> table_;  // Dense

  GroupPtr left_, right_;  // Product
  std::uint32_t right_n_ = 0;
  std::vector<element_t> act_;
  std::vector<element_t> comp_left_, comp_right_;

  std::uint32_t degree_ = 0;  // Perm
  std::vector<element_t> perms_;
  std::vector<Permutation> perm_elems_;
  std::unordered_map<std::uint64_t, std::vector<element_t>> perm_index_;

  std::vector<element_t> inv_;
  std::vector<std::uint32_t> ord_;
  std::vector<element_t> gens_;
  std::vector<std::string> labels_;
  Provenance prov_;

  mutable std::once_flag cc_once_;
  mutable ConjugacyClasses cc_;
};

// Group homomorphism given by its value table.
struct Homomorphism {
  GroupPtr domain;
  GroupPtr codomain;
  std::vector<element_t> map;

  element_t operator()(element_t x) const { return map[x]; }

  bool check() const {
    if (map.size() != domain->order()) return false;
    if (map[kIdentity] != kIdentity) return false;
    for (element_t g : domain->generators())
      for (element_t y = 0; y < domain->order(); ++y)
        if (map[domain->mul(g, y)] != codomain->mul(map[g], map[y])) return false;
    return true;
  }
};

// G/N for a normal subgroup given as a sorted member list. Coset ids are
// assigned in ascending order of their least member, so the image of the
// identity is 0. Returns the quotient group and the natural projection.
inline std::pair<GroupPtr, Homomorphism> quotient(const GroupPtr& g,
                                                  const std::vector<element_t>& normal) {
  const std::uint32_t n = g->order();
  if (normal.empty() || normal[0] != kIdentity)
    throw ValidationError("normal subgroup must contain the identity first");
  Bits in_n(n);
  for (element_t x : normal) in_n.set(x);
  if (in_n.count() != normal.size()) throw ValidationError("duplicate members");
  for (element_t x : normal)
    for (element_t y : normal)
      if (!in_n.test(g->mul(x, y))) throw ValidationError("subset is not a subgroup");
  for (element_t s : g->generators())
    for (element_t x : normal)
      if (!in_n.test(g->mul(g->mul(g->inv(s), x), s)))
        throw NotNormal("subgroup is not normal");
  if (n % normal.size() != 0) throw ValidationError("order does not divide group order");
  const std::uint32_t m = n / static_cast<std::uint32_t>(normal.size());
  if (m > caps().dense_table_max) throw CapExceeded("quotient order exceeds dense cap");

  std::vector<element_t> coset_of(n, static_cast<element_t>(-1));
  std::vector<element_t> rep;
  for (element_t x = 0; x < n; ++x) {
    if (coset_of[x] != static_cast<element_t>(-1)) continue;
    const element_t cid = static_cast<element_t>(rep.size());
    rep.push_back(x);
    for (element_t y : normal) coset_of[g->mul(x, y)] = cid;
  }
  std::vector<element_t> table(static_cast<std::size_t>(m) * m);
  for (element_t a = 0; a < m; ++a)
    for (element_t b = 0; b < m; ++b)
      table[static_cast<std::size_t>(a) * m + b] = coset_of[g->mul(rep[a], rep[b])];

  Provenance prov;
  prov.kind = "quotient";
  prov.left = g;
  prov.marked["kernel"] = normal;
  prov.marked["coset_reps"] = rep;
  auto q = FiniteGroup::from_table(std::move(table), {}, std::move(prov));
  Homomorphism pi{g, q, std::move(coset_of)};
  return {q, std::move(pi)};
}

}  // namespace nonf
