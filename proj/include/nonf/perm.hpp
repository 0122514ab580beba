#pragma once

// Permutations on {0, ..., degree-1} with cycle-notation parsing/printing.
// Composition convention: (p * q)(i) = q(p(i))  — apply p first, then q.

#include <sstream>
#include <string>
#include <vector>

#include "nonf/common.hpp"

namespace nonf {

using Permutation = std::vector<element_t>;

inline Permutation perm_identity(std::size_t degree) {
  Permutation p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<element_t>(i);
  return p;
}

inline bool perm_is_valid(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  for (auto v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

inline Permutation perm_compose(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

inline Permutation perm_inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<element_t>(i);
  return r;
}

// Parse one permutation in cycle notation, e.g. "(0 1 2)(3 4)" or "()".
// Points are 0-based integers; whitespace or commas separate points.
inline Permutation perm_parse_cycles(const std::string& text, std::size_t degree) {
  Permutation p = perm_identity(degree);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty permutation text");
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<element_t> cyc;
    while (true) {
      skip_ws();
      if (i == text.size()) throw ParseError("unterminated cycle: " + text);
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t j = i;
      while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
      if (j == i) throw ParseError("expected point in cycle: " + text);
      unsigned long v = std::stoul(text.substr(i, j - i));
      if (v >= degree) throw ParseError("point exceeds degree in: " + text);
      cyc.push_back(static_cast<element_t>(v));
      i = j;
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      element_t from = cyc[k], to = cyc[(k + 1) % cyc.size()];
      if (p[from] != from) throw ParseError("point repeated across cycles: " + text);
      p[from] = to;
    }
  }
  if (!perm_is_valid(p)) throw ParseError("not a permutation: " + text);
  return p;
}

// Print in canonical cycle notation: cycles ordered by least moved point,
// each cycle starting at its least point; identity prints as "()".
inline std::string perm_format_cycles(const Permutation& p) {
  std::ostringstream os;
  std::vector<char> done(p.size(), 0);
  bool any = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == i) continue;
    any = true;
    os << '(';
    element_t j = static_cast<element_t>(i);
    bool first = true;
    do {
      if (!first) os << ' ';
      os << j;
      done[j] = 1;
      j = p[j];
      first = false;
    } while (j != i);
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

}  // namespace nonf
