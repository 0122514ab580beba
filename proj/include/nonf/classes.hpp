#pragma once

// Group classes and membership tests.
//
// A ClassSpec describes a class of finite groups (cyclic, nilpotent, soluble,
// "avoids these forbidden subgroups", ...). A ClassOracle evaluates
// membership of subgroups of one fixed ambient group, memoized per distinct
// subgroup, including the derived class consisting of the groups all of
// whose 2-generated subgroups lie in the base class.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "nonf/common.hpp"
#include "nonf/group.hpp"
#include "nonf/iso.hpp"
#include "nonf/subgroup.hpp"

namespace nonf {

enum class ClassKind {
  Cyclic,
  OnePrime,          // prime-power order
  AtMostTwoPrimes,   // order has at most two prime divisors
  Abelian,
  Nilpotent,
  Supersoluble,
  Soluble,
  Metabelian,        // derived length at most 2
  NilpotentDerived,  // derived subgroup nilpotent
  FittingLength,     // soluble with Fitting length at most `fitting_bound`
  ForbiddenSubgroups
};

struct ClassSpec {
  ClassKind kind = ClassKind::Cyclic;
  std::uint32_t fitting_bound = 1;
  std::vector<GroupPtr> forbidden;
  std::vector<std::string> forbidden_names;
  bool forbidden_all_two_generated = true;  // maintained by make_forbidden_class

  std::string name() const {
    switch (kind) {
      case ClassKind::Cyclic: return "cyclic";
      case ClassKind::OnePrime: return "one-prime";
      case ClassKind::AtMostTwoPrimes: return "two-primes";
      case ClassKind::Abelian: return "abelian";
      case ClassKind::Nilpotent: return "nilpotent";
      case ClassKind::Supersoluble: return "supersoluble";
      case ClassKind::Soluble: return "soluble";
      case ClassKind::Metabelian: return "metabelian";
      case ClassKind::NilpotentDerived: return "nilpotent-derived";
      case ClassKind::FittingLength: return "fitting<=" + std::to_string(fitting_bound);
      case ClassKind::ForbiddenSubgroups: {
        std::string s = "forbid:";
        for (std::size_t i = 0; i < forbidden_names.size(); ++i) {
          if (i) s += ",";
          s += forbidden_names[i];
        }
        return s;
      }
    }
    return "?";
  }

  // Every kind here passes to subgroups (forbidden lists by construction).
  bool subgroup_closed() const { return true; }

  bool quotient_closed() const { return kind != ClassKind::ForbiddenSubgroups; }

  // Membership forces solubility (for two-primes orders this is the
  // two-prime solubility theorem; forbidden lists promise nothing).
  bool soluble_only() const { return kind != ClassKind::ForbiddenSubgroups; }

  bool order_determined() const {
    return kind == ClassKind::OnePrime || kind == ClassKind::AtMostTwoPrimes;
  }

  // Classes where membership follows from membership of all 2-generated
  // subgroups. Cyclic: locally cyclic finite groups are cyclic. One prime:
  // any two prime-power elements with distinct primes generate a two-prime
  // subgroup. Two primes: soluble groups with all elements of prime-power
  // order use at most two primes, and a minimal counterexample is
  // 2-generated. Abelian: commuting is a 2-variable condition. Nilpotent:
  // minimal non-nilpotent groups are 2-generated. Soluble: minimal
  // non-soluble groups are 2-generated. Forbidden lists: a copy of a
  // 2-generated pattern is itself a 2-generated subgroup.
  bool two_recognizable() const {
    switch (kind) {
      case ClassKind::Cyclic:
      case ClassKind::OnePrime:
      case ClassKind::AtMostTwoPrimes:
      case ClassKind::Abelian:
      case ClassKind::Nilpotent:
      case ClassKind::Soluble:
        return true;
      case ClassKind::ForbiddenSubgroups:
        return forbidden_all_two_generated;
      default:
        return false;
    }
  }
};

inline ClassSpec make_class(ClassKind kind) {
  ClassSpec s;
  s.kind = kind;
  return s;
}

inline ClassSpec make_fitting_class(std::uint32_t bound) {
  ClassSpec s;
  s.kind = ClassKind::FittingLength;
  s.fitting_bound = bound;
  return s;
}

inline ClassSpec make_forbidden_class(std::vector<GroupPtr> patterns,
                                      std::vector<std::string> names) {
  ClassSpec s;
  s.kind = ClassKind::ForbiddenSubgroups;
  s.forbidden = std::move(patterns);
  s.forbidden_names = std::move(names);
  for (const GroupPtr& b : s.forbidden) {
    if (b->order() < 2) throw ValidationError("forbidden pattern must be nontrivial");
    bool two_gen = false;
    ClosureEngine e(*b);
    const auto& cc = b->conjugacy_classes();
    for (std::size_t c = 0; c < cc.count() && !two_gen; ++c)
      for (element_t y = 0; y < b->order() && !two_gen; ++y)
        if (e.generates(cc.reps[c], y)) two_gen = true;
    if (!two_gen) s.forbidden_all_two_generated = false;
  }
  return s;
}

// ----------------------------------------------------------- chief series ---

struct ChiefFactor {
  std::uint64_t order = 0;
  bool elementary_abelian = false;
  std::uint32_t prime = 0;  // set when elementary abelian
  std::uint32_t rank = 0;   // ditto
};

// Factors from the bottom up; each step removes the smallest minimal normal
// subgroup (ties broken by least members) of the current quotient.
inline std::vector<ChiefFactor> chief_series(GroupPtr q) {
  std::vector<ChiefFactor> out;
  while (q->order() > 1) {
    auto mins = minimal_normal_subgroups(*q);
    const std::vector<element_t>& n = mins.front();
    ChiefFactor f;
    f.order = n.size();
    GenSub s{subgroup_generators(*q, n), n};
    bool abelian = true;
    for (element_t a : s.gens)
      for (element_t b : s.gens)
        if (q->mul(a, b) != q->mul(b, a)) abelian = false;
    if (abelian) {
      auto pd = prime_divisors(static_cast<std::uint32_t>(n.size()));
      if (pd.size() == 1) {
        std::uint32_t p = pd[0];
        bool elem = true;
        for (element_t x : n)
          if (x != kIdentity && q->order_of(x) != p) elem = false;
        if (elem) {
          f.elementary_abelian = true;
          f.prime = p;
          std::uint64_t m = n.size();
          while (m > 1) {
            m /= p;
            ++f.rank;
          }
        }
      }
    }
    out.push_back(f);
    if (n.size() == q->order()) break;  // simple: last factor recorded
    q = quotient(q, n).first;
  }
  return out;
}

// Fitting length of a soluble group; nullopt when the group is insoluble.
inline std::optional<std::uint32_t> fitting_length(GroupPtr q) {
  std::uint32_t len = 0;
  while (q->order() > 1) {
    auto f = fitting_subgroup(*q);
    if (f.size() == 1) return std::nullopt;
    ++len;
    if (f.size() == q->order()) break;
    q = quotient(q, f).first;
  }
  return len;
}

// ----------------------------------------------------------- class oracle ---

class ClassOracle {
 public:
  ClassOracle(const FiniteGroup& g, ClassSpec spec) : g_(&g), spec_(std::move(spec)) {
    for (const GroupPtr& b : spec_.forbidden) finders_.emplace_back(g, b);
  }

  const ClassSpec& spec() const { return spec_; }
  const FiniteGroup& group() const { return *g_; }

  // `limit` here sets the per-search allowance (0 meaning the global cap);
  // `used` accumulates the total work of all searches and is never itself
  // the thing that throws.
  IsoBudget& budget() { return budget_; }

  bool member(const GenSub& h) {
    if (spec_.order_determined())  // no memo needed
      return member_core(h);
    SetDigest d = digest_of(h.elems);
    auto it = memo_.find(d);
    if (it != memo_.end()) return it->second;
    bool r = member_core(h);
    memo_.emplace(d, r);
    return r;
  }

  // H in F2: every 2-generated subgroup of H lies in F. Coincides with
  // member() for 2-recognizable specs; otherwise checked literally over
  // subgroup generating pairs up to H-conjugacy.
  bool f2_member(const GenSub& h) {
    if (spec_.two_recognizable()) return member(h);
    SetDigest d = digest_of(h.elems);
    auto it = f2_memo_.find(d);
    if (it != f2_memo_.end()) return it->second;
    bool r = true;
    SubContext ctx = build_sub_context(*g_, h);
    ClosureEngine e(*g_);
    for (const auto& [ord, reps] : ctx.reps_by_order) {
      for (element_t x : reps) {
        for (element_t y : h.elems) {
          GenSub k;
          k.gens = {x, y};
          k.elems = e.pair_closure(x, y);
          if (!member(k)) {
            r = false;
            break;
          }
        }
        if (!r) break;
      }
      if (!r) break;
    }
    f2_memo_.emplace(d, r);
    return r;
  }

  // Membership of <x,y>, with pair-level shortcuts that decide the answer
  // from x and y alone (no closure) where the class allows it:
  //  - abelian: <x,y> is abelian iff x and y commute;
  //  - cyclic: commuting x,y generate a cyclic group iff |<x> ∩ <y>| =
  //    gcd(|x|,|y|) (then |<x,y>| = |x||y|/|∩| equals the exponent
  //    lcm(|x|,|y|));
  //  - prime-count classes: the primes of |x| and |y| already exceed the
  //    bound. The remaining cases fall through to the closure + memo path.
  bool pair_member(element_t x, element_t y, ClosureEngine& e) {
    const FiniteGroup& g = *g_;
    switch (spec_.kind) {
      case ClassKind::Abelian:
        return g.mul(x, y) == g.mul(y, x);
      case ClassKind::Cyclic: {
        if (g.mul(x, y) != g.mul(y, x)) return false;
        return cyclic_intersection(x, y) == std::gcd(g.order_of(x), g.order_of(y));
      }
      case ClassKind::OnePrime:
      case ClassKind::AtMostTwoPrimes: {
        auto px = prime_divisors(g.order_of(x));
        for (std::uint32_t q : prime_divisors(g.order_of(y)))
          if (std::find(px.begin(), px.end(), q) == px.end()) px.push_back(q);
        std::size_t bound = spec_.kind == ClassKind::OnePrime ? 1 : 2;
        if (px.size() > bound) return false;
        break;  // the closure can still pick up more primes
      }
      default:
        break;
    }
    GenSub k;
    k.gens = {x, y};
    k.elems = e.pair_closure(x, y);
    return member(k);
  }

 private:
  static SetDigest digest_of(const std::vector<element_t>& v) {
    SetDigest d;
    for (element_t x : v) d.add(x);
    return d;
  }

  // |<x> ∩ <y>| via stamped power walks (O(|x| + |y|), no allocation).
  std::uint32_t cyclic_intersection(element_t x, element_t y) {
    const FiniteGroup& g = *g_;
    if (mark_.size() != g.order()) {
      mark_.assign(g.order(), 0);
      mark_epoch_ = 0;
    }
    if (++mark_epoch_ == 0) {
      std::fill(mark_.begin(), mark_.end(), 0);
      mark_epoch_ = 1;
    }
    element_t p = kIdentity;
    do {
      mark_[p] = mark_epoch_;
      p = g.mul(p, x);
    } while (p != kIdentity);
    std::uint32_t hits = 0;
    p = kIdentity;
    do {
      if (mark_[p] == mark_epoch_) ++hits;
      p = g.mul(p, y);
    } while (p != kIdentity);
    return hits;
  }

  bool member_core(const GenSub& h) {
    const FiniteGroup& g = *g_;
    const std::uint32_t size = static_cast<std::uint32_t>(h.elems.size());
    switch (spec_.kind) {
      case ClassKind::Cyclic:
        for (element_t x : h.elems)
          if (g.order_of(x) == size) return true;
        return false;
      case ClassKind::OnePrime:
        return prime_divisors(size).size() <= 1;
      case ClassKind::AtMostTwoPrimes:
        return prime_divisors(size).size() <= 2;
      case ClassKind::Abelian:
        for (element_t a : h.gens)
          for (element_t b : h.gens)
            if (g.mul(a, b) != g.mul(b, a)) return false;
        return true;
      case ClassKind::Nilpotent:
        return lower_central_series(g, h).back().trivial();
      case ClassKind::Soluble:
        return derived_series(g, h).back().trivial();
      case ClassKind::Metabelian: {
        GenSub d = derived_subgroup(g, h.gens);
        if (d.trivial()) return true;
        return derived_subgroup(g, d.gens).trivial();
      }
      case ClassKind::NilpotentDerived: {
        GenSub d = derived_subgroup(g, h.gens);
        if (d.trivial()) return true;
        return lower_central_series(g, d).back().trivial();
      }
      case ClassKind::Supersoluble: {
        if (!derived_series(g, h).back().trivial()) return false;
        Materialized m = materialize_subgroup(g, h.elems);
        for (const ChiefFactor& f : chief_series(m.group))
          if (!f.elementary_abelian || f.rank != 1) return false;
        return true;
      }
      case ClassKind::FittingLength: {
        Materialized m = materialize_subgroup(g, h.elems);
        auto len = fitting_length(m.group);
        return len && *len <= spec_.fitting_bound;
      }
      case ClassKind::ForbiddenSubgroups: {
        SubContext ctx = build_sub_context(g, h);
        for (EmbeddingFinder& f : finders_) {
          // Fresh allowance per pattern search: a single pathological
          // search still throws, but many reasonable ones don't add up to
          // a spurious failure. budget_ accumulates totals for reporting.
          IsoBudget one;
          one.limit = budget_.limit;
          bool embeds = false;
          try {
            embeds = f.embeds_in(ctx, one);
          } catch (const BudgetExceeded&) {
            budget_.used += one.used;
            throw;
          }
          budget_.used += one.used;
          if (embeds) return false;
        }
        return true;
      }
    }
    return false;
  }

  const FiniteGroup* g_;
  ClassSpec spec_;
  std::vector<EmbeddingFinder> finders_;
  IsoBudget budget_;
  std::unordered_map<SetDigest, bool, SetDigest::Hash> memo_;
  std::unordered_map<SetDigest, bool, SetDigest::Hash> f2_memo_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t mark_epoch_ = 0;
};

// -------------------------------------------------------------- spec text ---

// Accepted: cyclic | one-prime | two-primes | abelian | nilpotent |
// supersoluble | soluble | metabelian | nilpotent-derived | fitting<=N |
// forbid:NAME[,NAME...]. The resolver turns each forbid NAME into a group.
inline ClassSpec parse_class_spec(
    const std::string& text,
    const std::function<GroupPtr(const std::string&)>& resolve = {}) {
  if (text == "cyclic") return make_class(ClassKind::Cyclic);
  if (text == "one-prime") return make_class(ClassKind::OnePrime);
  if (text == "two-primes") return make_class(ClassKind::AtMostTwoPrimes);
  if (text == "abelian") return make_class(ClassKind::Abelian);
  if (text == "nilpotent") return make_class(ClassKind::Nilpotent);
  if (text == "supersoluble") return make_class(ClassKind::Supersoluble);
  if (text == "soluble") return make_class(ClassKind::Soluble);
  if (text == "metabelian") return make_class(ClassKind::Metabelian);
  if (text == "nilpotent-derived") return make_class(ClassKind::NilpotentDerived);
  if (text.rfind("fitting<=", 0) == 0) {
    std::uint32_t b = 0;
    std::istringstream in(text.substr(9));
    if (!(in >> b) || b == 0) throw ParseError("bad fitting length bound: " + text);
    return make_fitting_class(b);
  }
  if (text.rfind("forbid:", 0) == 0) {
    if (!resolve) throw ParseError("no resolver for forbidden patterns");
    std::vector<GroupPtr> pats;
    std::vector<std::string> names;
    std::string rest = text.substr(7);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      std::size_t comma = rest.find(',', pos);
      std::string name = rest.substr(pos, comma == std::string::npos ? comma : comma - pos);
      if (name.empty()) throw ParseError("empty forbidden pattern name");
      names.push_back(name);
      pats.push_back(resolve(name));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (pats.empty()) throw ParseError("no forbidden patterns given");
    return make_forbidden_class(std::move(pats), std::move(names));
  }
  throw ParseError("unknown class spec: " + text);
}

}  // namespace nonf
