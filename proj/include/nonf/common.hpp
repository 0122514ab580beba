#pragma once

// Shared primitives: element indices, error types, resource caps, hashing,
// and a dense bit set used for element subsets.

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace nonf {

using element_t = std::uint32_t;
inline constexpr element_t kIdentity = 0;

// ---------------------------------------------------------------- errors ---

struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Search ran out of its node budget: the caller must treat this as
// "undecided", never as a membership answer.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

struct NotNormal : ValidationError {
  explicit NotNormal(const std::string& what) : ValidationError(what) {}
};

struct NotAnAction : ValidationError {
  explicit NotAnAction(const std::string& what) : ValidationError(what) {}
};

struct NotAHomomorphism : ValidationError {
  explicit NotAHomomorphism(const std::string& what) : ValidationError(what) {}
};

struct NotIrreducible : ValidationError {
  explicit NotIrreducible(const std::string& what) : ValidationError(what) {}
};

struct NotFaithful : ValidationError {
  explicit NotFaithful(const std::string& what) : ValidationError(what) {}
};

struct ShapeMismatch : std::runtime_error {
  explicit ShapeMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// ------------------------------------------------------------------ caps ---

struct Caps {
  // Largest group order any constructor will enumerate.
  std::uint64_t order_cap = 120000;
  // Largest order for which a full multiplication table is materialized.
  std::uint32_t dense_table_max = 6000;
  // Largest order for which the full subgroup lattice is enumerated.
  std::uint32_t lattice_cap = 2000;
  // Largest lattice size (subgroup count) tolerated during enumeration.
  std::uint32_t lattice_size_cap = 200000;
  // Largest order for which graphs are built in explicit (all-pairs) mode.
  std::uint32_t explicit_graph_cap = 5000;
  // Node budget for subgroup-isomorphism searches.
  std::uint64_t iso_budget = 400000000ULL;
  // Largest p^dim for exhaustive vector sweeps over a module.
  std::uint64_t module_vector_cap = 1000000ULL;
};

inline Caps& caps() {
  static Caps c = [] {
    Caps v;
    if (const char* e = std::getenv("NONF_CAP")) {
      char* end = nullptr;
      unsigned long long x = std::strtoull(e, &end, 10);
      if (end && *end == '\0' && x > 0) v.order_cap = x;
    }
    return v;
  }();
  return c;
}

// --------------------------------------------------------------- hashing ---

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// 128-bit digest of a sorted element sequence; used to key subgroup caches.
struct SetDigest {
  std::uint64_t a = 0x243f6a8885a308d3ULL;
  std::uint64_t b = 0x13198a2e03707344ULL;
  std::uint32_t size = 0;

  void add(element_t m) {
    a = splitmix64(a ^ splitmix64(m));
    b = splitmix64(b + 0x9e3779b97f4a7c15ULL * (m + 1));
    ++size;
  }
  friend bool operator==(const SetDigest& x, const SetDigest& y) {
    return x.a == y.a && x.b == y.b && x.size == y.size;
  }
  struct Hash {
    std::size_t operator()(const SetDigest& d) const noexcept {
      return static_cast<std::size_t>(d.a ^ (d.b * 0x9e3779b97f4a7c15ULL));
    }
  };
};

// ------------------------------------------------------------------ bits ---

// Dense bit set over indices [0, n).
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t universe() const { return n_; }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i) { w_[i >> 6] |= (1ULL << (i & 63)); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }
  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool intersects(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  friend bool operator==(const Bits& x, const Bits& y) {
    return x.n_ == y.n_ && x.w_ == y.w_;
  }

  // Visit set bits in increasing order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t w = w_[wi];
      while (w) {
        unsigned bit = static_cast<unsigned>(__builtin_ctzll(w));
        f(static_cast<element_t>((wi << 6) + bit));
        w &= w - 1;
      }
    }
  }

  std::vector<element_t> to_vector() const {
    std::vector<element_t> v;
    v.reserve(count());
    for_each([&](element_t e) { v.push_back(e); });
    return v;
  }

  SetDigest digest() const {
    SetDigest d;
    for_each([&](element_t e) { d.add(e); });
    return d;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Factorization helpers for the orders that occur here (<= order cap).
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> f;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      unsigned e = 0;
      while (n % p == 0) n /= p, ++e;
      f.emplace_back(p, e);
    }
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (auto& [p, e] : factorize(n)) ps.push_back(p);
  return ps;
}

}  // namespace nonf
