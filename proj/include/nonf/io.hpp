#pragma once
// Group file serialization and report persistence.
//
// Group file format (text, line-based, canonical):
//   group/v1 <order>
//   label <text>              (optional, single line)
//   hash <16 hex digits>      (FNV-1a 64 of everything after this line)
//   table                     (dense form: <order> rows of <order> integers)
//   ...
// or, instead of the table section:
//   gens <degree>             (one cycle-notation permutation per line)
//   ...
//
// The writer always emits the canonical form, so parse/format round trips
// are byte-exact. Files are written atomically (temp file + rename).

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "group.hpp"
#include "perm.hpp"

namespace nonf {

// ----------------------------------------------------------------- hashing ---

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return std::string(buf, 16);
}

// --------------------------------------------------------------- group file ---

struct GroupFile {
  std::uint32_t order = 0;
  std::string label;                          // optional
  std::uint32_t degree = 0;                   // generator form
  std::vector<Permutation> generators;        // generator form
  std::vector<element_t> table;               // dense form, row-major
  bool has_table() const { return !table.empty(); }

  friend bool operator==(const GroupFile& a, const GroupFile& b) {
    return a.order == b.order && a.label == b.label && a.degree == b.degree &&
           a.generators == b.generators && a.table == b.table;
  }
};

// Body of the file (everything the hash covers).
inline std::string format_group_file_body(const GroupFile& f) {
  std::ostringstream os;
  if (f.has_table()) {
    os << "table\n";
    for (std::uint32_t i = 0; i < f.order; ++i) {
      for (std::uint32_t j = 0; j < f.order; ++j) {
        if (j) os << ' ';
        os << f.table[static_cast<std::size_t>(i) * f.order + j];
      }
      os << '\n';
    }
  } else {
    os << "gens " << f.degree << '\n';
    for (const Permutation& p : f.generators) os << perm_format_cycles(p) << '\n';
  }
  return std::move(os).str();
}

inline std::string format_group_file(const GroupFile& f) {
  std::string body = format_group_file_body(f);
  std::string out = "group/v1 " + std::to_string(f.order) + "\n";
  if (!f.label.empty()) out += "label " + f.label + "\n";
  out += "hash " + hex64(fnv1a64(body)) + "\n";
  out += body;
  return out;
}

inline GroupFile parse_group_file(const std::string& text) {
  GroupFile f;
  std::size_t pos = 0;
  auto next_line = [&](std::string& line) {
    if (pos >= text.size()) return false;
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) {
      line = text.substr(pos);
      pos = text.size();
    } else {
      line = text.substr(pos, nl - pos);
      pos = nl + 1;
    }
    return true;
  };
  std::string line;
  if (!next_line(line)) throw ParseError("empty group file");
  {
    std::istringstream is(line);
    std::string magic;
    is >> magic >> f.order;
    if (magic != "group/v1" || is.fail() || f.order == 0)
      throw ParseError("bad group file header: " + line);
  }
  bool have_hash = false;
  std::uint64_t stated_hash = 0;
  std::size_t body_start = pos;
  while (next_line(line)) {
    if (line.rfind("label ", 0) == 0) {
      f.label = line.substr(6);
      body_start = pos;
      continue;
    }
    if (line.rfind("hash ", 0) == 0) {
      stated_hash = std::stoull(line.substr(5), nullptr, 16);
      have_hash = true;
      body_start = pos;
      continue;
    }
    break;  // first body line, already consumed into `line`
  }
  if (have_hash) {
    std::uint64_t actual = fnv1a64(std::string_view(text).substr(body_start));
    if (actual != stated_hash) throw ParseError("group file hash mismatch");
  }
  if (line.rfind("table", 0) == 0 && (line.size() == 5 || line[5] == ' ')) {
    f.table.reserve(static_cast<std::size_t>(f.order) * f.order);
    std::string row;
    for (std::uint32_t i = 0; i < f.order; ++i) {
      if (!next_line(row)) throw ParseError("truncated table");
      std::istringstream is(row);
      for (std::uint32_t j = 0; j < f.order; ++j) {
        std::uint64_t v = 0;
        if (!(is >> v) || v >= f.order) throw ParseError("bad table entry in row " +
                                                         std::to_string(i));
        f.table.push_back(static_cast<element_t>(v));
      }
      std::uint64_t extra;
      if (is >> extra) throw ParseError("excess entries in table row " + std::to_string(i));
    }
  } else if (line.rfind("gens ", 0) == 0) {
    f.degree = static_cast<std::uint32_t>(std::stoul(line.substr(5)));
    if (f.degree == 0) throw ParseError("generator degree must be positive");
    std::string g;
    while (next_line(g)) {
      if (g.empty()) continue;
      f.generators.push_back(perm_parse_cycles(g, f.degree));
    }
    if (f.generators.empty()) throw ParseError("generator section is empty");
  } else {
    throw ParseError("expected 'table' or 'gens <degree>' section, got: " + line);
  }
  return f;
}

inline GroupFile group_file_of(const FiniteGroup& g, std::string label = "") {
  if (g.order() > caps().dense_table_max)
    throw CapExceeded("group too large to serialize as a table");
  GroupFile f;
  f.order = g.order();
  f.label = std::move(label);
  f.table.reserve(static_cast<std::size_t>(f.order) * f.order);
  for (element_t a = 0; a < f.order; ++a)
    for (element_t b = 0; b < f.order; ++b) f.table.push_back(g.mul(a, b));
  return f;
}

// Builds the group (validating all table axioms on the way) from a parsed file.
inline GroupPtr group_from_file(const GroupFile& f) {
  if (f.has_table()) {
    Provenance prov;
    prov.kind = "file";
    prov.detail = f.label;
    GroupPtr g = FiniteGroup::from_table(f.table, {}, std::move(prov));
    if (g->order() != f.order) throw ParseError("table order disagrees with header");
    return g;
  }
  GroupPtr g = FiniteGroup::from_permutation_generators(f.generators,
                                                        f.label.empty() ? "file" : f.label);
  if (g->order() != f.order)
    throw ParseError("generated order " + std::to_string(g->order()) +
                     " disagrees with header " + std::to_string(f.order));
  return g;
}

// ------------------------------------------------------------ file plumbing ---

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return std::move(os).str();
}

// Atomic write: stage to a sibling temp file, then rename over the target.
inline void write_text_file_atomic(const std::filesystem::path& path,
                                   const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw ParseError("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

inline void write_group_file(const std::filesystem::path& path, const FiniteGroup& g,
                             std::string label = "") {
  write_text_file_atomic(path, format_group_file(group_file_of(g, std::move(label))));
}

inline GroupPtr read_group_file(const std::filesystem::path& path) {
  return group_from_file(parse_group_file(read_text_file(path)));
}

// ------------------------------------------------------------ report format ---

// Reports are flat "key value" lines grouped by blank-line-separated
// sections; lists use comma separation. Failure records carry a "fail."
// key prefix so scripts can grep for them.
class ReportBuilder {
 public:
  void kv(const std::string& key, const std::string& value) {
    out_ += key + " " + value + "\n";
  }
  void kv(const std::string& key, std::uint64_t value) {
    kv(key, std::to_string(value));
  }
  void kv(const std::string& key, double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", value);
    kv(key, std::string(buf));
  }
  void section(const std::string& name) {
    if (!out_.empty()) out_ += "\n";
    out_ += "[" + name + "]\n";
  }
  const std::string& str() const { return out_; }

 private:
  std::string out_;
};

}  // namespace nonf
