#pragma once

// Embedding search: decide whether a subgroup H of an ambient group G
// contains a subgroup isomorphic to a fixed pattern group B.
//
// Strategy for 2-generated patterns (the common case): fix one generating
// pair (g1, g2) of B, enumerate candidate images — the first up to
// H-conjugacy, the second among order-matched elements — prune candidates by
// comparing the orders of a fixed list of short words in the pair, and
// certify survivors by a bounded closure plus a breadth-first isomorphism
// check. Patterns needing more than two generators fall back to a small
// backtracking search over generator images.
//
// All work is charged against a caller-supplied budget; exceeding it throws
// BudgetExceeded rather than ever returning a wrong answer.

#include <algorithm>
#include <map>
#include <span>
#include <unordered_map>
#include <vector>

#include "nonf/common.hpp"
#include "nonf/group.hpp"
#include "nonf/subgroup.hpp"

namespace nonf {

struct IsoBudget {
  std::uint64_t used = 0;
  std::uint64_t limit = 0;  // 0: use caps().iso_budget

  void charge(std::uint64_t units) {
    used += units;
    const std::uint64_t lim = limit ? limit : caps().iso_budget;
    if (used > lim) throw BudgetExceeded("embedding search budget exhausted");
  }
};

// Per-subgroup context shared across several pattern searches: members and
// conjugacy-class representatives of H bucketed by element order.
struct SubContext {
  const FiniteGroup* g = nullptr;
  const GenSub* h = nullptr;
  std::map<std::uint32_t, std::vector<element_t>> by_order;
  std::map<std::uint32_t, std::vector<element_t>> reps_by_order;
};

inline SubContext build_sub_context(const FiniteGroup& g, const GenSub& h) {
  SubContext ctx;
  ctx.g = &g;
  ctx.h = &h;
  for (element_t x : h.elems) ctx.by_order[g.order_of(x)].push_back(x);
  // Conjugacy classes of H via orbit search under conjugation by H's
  // generators; representatives are least members (ascending scan).
  std::unordered_map<element_t, char> seen;
  seen.reserve(h.elems.size() * 2);
  std::vector<element_t> stack;
  for (element_t x : h.elems) {
    if (seen.count(x)) continue;
    ctx.reps_by_order[g.order_of(x)].push_back(x);
    seen.emplace(x, 1);
    stack.assign(1, x);
    while (!stack.empty()) {
      element_t y = stack.back();
      stack.pop_back();
      for (element_t c : h.gens) {
        element_t z = g.conj(y, c);
        if (seen.emplace(z, 1).second) stack.push_back(z);
      }
    }
  }
  return ctx;
}

class EmbeddingFinder {
 public:
  EmbeddingFinder(const FiniteGroup& g, GroupPtr pattern)
      : g_(&g), b_(std::move(pattern)), stamp_(g.order(), 0) {
    const FiniteGroup& b = *b_;
    for (element_t x = 0; x < b.order(); ++x) ++profile_[b.order_of(x)];
    pick_generating_pair();
    // Breadth-first spanning structure of B over its generator tuple:
    // order of discovery, and (parent, generator) for every non-identity
    // element, used to transport candidate images.
    bfs_parent_.assign(b.order(), kIdentity);
    bfs_gen_.assign(b.order(), 0);
    bfs_order_.clear();
    std::vector<char> seen(b.order(), 0);
    seen[kIdentity] = 1;
    bfs_order_.push_back(kIdentity);
    for (std::size_t head = 0; head < bfs_order_.size(); ++head)
      for (std::size_t gi = 0; gi < bgens_.size(); ++gi) {
        element_t v = b.mul(bfs_order_[head], bgens_[gi]);
        if (!seen[v]) {
          seen[v] = 1;
          bfs_parent_[v] = bfs_order_[head];
          bfs_gen_[v] = static_cast<std::uint32_t>(gi);
          bfs_order_.push_back(v);
        }
      }
    if (bfs_order_.size() != b.order())
      throw ValidationError("internal: pattern generators do not generate");
  }

  const FiniteGroup& pattern() const { return *b_; }

  // True iff the pattern embeds into H. Memoized per distinct subgroup.
  bool embeds_in(const SubContext& ctx, IsoBudget& budget) {
    SetDigest d;
    for (element_t x : ctx.h->elems) d.add(x);
    auto it = memo_.find(d);
    if (it != memo_.end()) return it->second;
    bool r = search(ctx, budget);
    memo_.emplace(d, r);
    return r;
  }

 private:
  static constexpr const char* kWords[] = {"ab", "aB", "abb", "aab", "ABab", "AABaab", "aabb"};

  template <typename Mul, typename Inv>
  static element_t eval_word(const char* w, element_t x, element_t y, Mul&& mul, Inv&& inv) {
    element_t r = kIdentity;
    for (const char* p = w; *p; ++p) {
      element_t t;
      switch (*p) {
        case 'a': t = x; break;
        case 'A': t = inv(x); break;
        case 'b': t = y; break;
        default: t = inv(y); break;
      }
      r = mul(r, t);
    }
    return r;
  }

  // Choose a generating pair with the rarest (largest) element orders: order
  // pairs are visited by descending score, so the first pair that generates
  // wins. Falls back to the stored generating set if no pair generates.
  void pick_generating_pair() {
    const FiniteGroup& b = *b_;
    if (b.order() == 1) {
      bgens_ = {kIdentity, kIdentity};
      return;
    }
    ClosureEngine e(b);
    const auto& cc = b.conjugacy_classes();
    std::map<std::uint32_t, std::vector<element_t>> reps_by, all_by;
    for (std::size_t c = 0; c < cc.count(); ++c)
      reps_by[b.order_of(cc.reps[c])].push_back(cc.reps[c]);
    for (element_t y = 0; y < b.order(); ++y) all_by[b.order_of(y)].push_back(y);
    std::vector<std::pair<std::uint64_t, std::pair<std::uint32_t, std::uint32_t>>> order_pairs;
    for (const auto& [d1, r] : reps_by)
      for (const auto& [d2, a] : all_by) {
        std::uint64_t score = static_cast<std::uint64_t>(d1) * d2 + d1 + d2;
        order_pairs.push_back({score, {d1, d2}});
      }
    std::sort(order_pairs.begin(), order_pairs.end(),
              [](const auto& p, const auto& q) { return p.first > q.first; });
    for (const auto& [score, dd] : order_pairs)
      for (element_t x : reps_by[dd.first])
        for (element_t y : all_by[dd.second])
          if (e.generates(x, y)) {
            bgens_ = {x, y};
            return;
          }
    // Not 2-generated: fall back to the stored generating set.
    bgens_ = b.generators();
  }

  bool search(const SubContext& ctx, IsoBudget& budget) {
    const FiniteGroup& b = *b_;
    const GenSub& h = *ctx.h;
    if (h.elems.size() % b.order() != 0) return false;
    for (auto [ord, cnt] : profile_) {
      auto it = ctx.by_order.find(ord);
      if (it == ctx.by_order.end() || it->second.size() < cnt) return false;
    }
    if (b.order() == 1) return true;
    if (bgens_.size() == 2) return search_pairs(ctx, budget);
    std::vector<element_t> img(bgens_.size(), kIdentity);
    return search_tuple(ctx, budget, img, 0);
  }

  bool search_pairs(const SubContext& ctx, IsoBudget& budget) {
    const FiniteGroup& b = *b_;
    const FiniteGroup& g = *g_;
    auto bmul = [&](element_t p, element_t q) { return b.mul(p, q); };
    auto binv = [&](element_t p) { return b.inv(p); };
    auto gmul = [&](element_t p, element_t q) { return g.mul(p, q); };
    auto ginv = [&](element_t p) { return g.inv(p); };
    std::uint32_t word_orders[std::size(kWords)];
    for (std::size_t w = 0; w < std::size(kWords); ++w)
      word_orders[w] = b.order_of(eval_word(kWords[w], bgens_[0], bgens_[1], bmul, binv));
    auto it1 = ctx.reps_by_order.find(b.order_of(bgens_[0]));
    auto it2 = ctx.by_order.find(b.order_of(bgens_[1]));
    if (it1 == ctx.reps_by_order.end() || it2 == ctx.by_order.end()) return false;
    ClosureEngine e(g);
    for (element_t x : it1->second) {
      for (element_t y : it2->second) {
        budget.charge(1 + std::size(kWords));
        bool ok = true;
        for (std::size_t w = 0; w < std::size(kWords); ++w)
          if (g.order_of(eval_word(kWords[w], x, y, gmul, ginv)) != word_orders[w]) {
            ok = false;
            break;
          }
        if (!ok) continue;
        budget.charge(2 * b.order());
        const element_t pair_gens[2] = {x, y};
        auto sz = e.bounded_size(std::span<const element_t>(pair_gens, 2), b.order());
        if (!sz || *sz != b.order()) continue;
        element_t img[2] = {x, y};
        if (verify(std::span<const element_t>(img, 2))) return true;
      }
    }
    return false;
  }

  bool search_tuple(const SubContext& ctx, IsoBudget& budget, std::vector<element_t>& img,
                    std::size_t level) {
    const FiniteGroup& b = *b_;
    const FiniteGroup& g = *g_;
    if (level == bgens_.size()) {
      budget.charge(2 * b.order());
      ClosureEngine e(g);
      auto sz = e.bounded_size(std::span<const element_t>(img.data(), img.size()), b.order());
      if (!sz || *sz != b.order()) return false;
      return verify(std::span<const element_t>(img.data(), img.size()));
    }
    const auto& pool = level == 0 ? ctx.reps_by_order : ctx.by_order;
    auto it = pool.find(b.order_of(bgens_[level]));
    if (it == pool.end()) return false;
    for (element_t x : it->second) {
      budget.charge(4);
      img[level] = x;
      // Cheap pairwise pruning against already placed images.
      bool ok = true;
      for (std::size_t j = 0; j < level && ok; ++j) {
        if (g.order_of(g.mul(img[j], x)) != b.order_of(b.mul(bgens_[j], bgens_[level])))
          ok = false;
        else if (g.order_of(g.commutator(img[j], x)) !=
                 b.order_of(b.commutator(bgens_[j], bgens_[level])))
          ok = false;
      }
      if (ok && search_tuple(ctx, budget, img, level + 1)) return true;
    }
    return false;
  }

  // Exact check: transport the breadth-first structure of B along candidate
  // generator images, then confirm the map is injective and multiplicative
  // on every (element, generator) edge.
  bool verify(std::span<const element_t> img) {
    const FiniteGroup& b = *b_;
    const FiniteGroup& g = *g_;
    std::vector<element_t>& map = verify_map_;
    map.assign(b.order(), kIdentity);
    for (std::size_t i = 1; i < bfs_order_.size(); ++i) {
      element_t v = bfs_order_[i];
      map[v] = g.mul(map[bfs_parent_[v]], img[bfs_gen_[v]]);
    }
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    for (element_t v = 0; v < b.order(); ++v) {
      if (stamp_[map[v]] == epoch_) return false;  // not injective
      stamp_[map[v]] = epoch_;
    }
    for (element_t v = 0; v < b.order(); ++v)
      for (std::size_t gi = 0; gi < bgens_.size(); ++gi)
        if (map[b.mul(v, bgens_[gi])] != g.mul(map[v], img[gi])) return false;
    return true;
  }

  const FiniteGroup* g_;
  GroupPtr b_;
  std::map<std::uint32_t, std::uint32_t> profile_;  // order -> count in B
  std::vector<element_t> bgens_;
  std::vector<element_t> bfs_order_, bfs_parent_;
  std::vector<std::uint32_t> bfs_gen_;
  std::unordered_map<SetDigest, bool, SetDigest::Hash> memo_;
  std::vector<element_t> verify_map_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

}  // namespace nonf
