// Tests for the group file format, atomic writes, and the report builder.

#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "nonf/families.hpp"
#include "nonf/io.hpp"

using namespace nonf;

namespace {

std::filesystem::path temp_dir() {
  auto d = std::filesystem::temp_directory_path() / "nonf_io_tests";
  std::filesystem::create_directories(d);
  return d;
}

// Restores a cap value at scope exit.
struct CapGuard {
  std::uint32_t saved = caps().dense_table_max;
  ~CapGuard() { caps().dense_table_max = saved; }
};

}  // namespace

TEST_CASE("table form round trips byte for byte") {
  GroupPtr g = build_family("sym(3)");
  GroupFile f = group_file_of(*g, "sym3");
  std::string text = format_group_file(f);

  GroupFile parsed = parse_group_file(text);
  REQUIRE(parsed == f);
  REQUIRE(format_group_file(parsed) == text);

  GroupPtr back = group_from_file(parsed);
  REQUIRE(back->order() == g->order());
  for (element_t a = 0; a < g->order(); ++a)
    for (element_t b = 0; b < g->order(); ++b)
      REQUIRE(back->mul(a, b) == g->mul(a, b));
}

TEST_CASE("generator form round trips and validates the stated order") {
  GroupFile f;
  f.order = 24;
  f.label = "sym4 from two generators";
  f.degree = 4;
  f.generators = {perm_parse_cycles("(0 1)", 4), perm_parse_cycles("(0 1 2 3)", 4)};

  std::string text = format_group_file(f);
  GroupFile parsed = parse_group_file(text);
  REQUIRE(parsed == f);
  REQUIRE(format_group_file(parsed) == text);

  GroupPtr g = group_from_file(parsed);
  REQUIRE(g->order() == 24);

  // A wrong order in the header must be rejected after generation.
  GroupFile wrong = f;
  wrong.order = 10;
  REQUIRE_THROWS_AS(group_from_file(wrong), ParseError);
}

TEST_CASE("hash protects the body") {
  GroupPtr g = build_family("cyclic(4)");
  std::string text = format_group_file(group_file_of(*g));

  // Corrupt one digit inside the table body.
  std::string corrupted = text;
  std::size_t body = corrupted.find("table\n");
  REQUIRE(body != std::string::npos);
  std::size_t digit = corrupted.find_first_of("123", body);
  REQUIRE(digit != std::string::npos);
  corrupted[digit] = (corrupted[digit] == '1') ? '2' : '1';
  REQUIRE_THROWS_WITH(parse_group_file(corrupted),
                      Catch::Matchers::ContainsSubstring("hash mismatch"));

  // Corrupt the stated hash itself.
  std::string badhash = text;
  std::size_t h = badhash.find("hash ");
  REQUIRE(h != std::string::npos);
  badhash[h + 5] = (badhash[h + 5] == 'f') ? '0' : 'f';
  REQUIRE_THROWS_WITH(parse_group_file(badhash),
                      Catch::Matchers::ContainsSubstring("hash mismatch"));

  // A file without a hash line is accepted (hash is optional on input).
  std::string nohash = text;
  std::size_t hl = nohash.find("hash ");
  std::size_t nl = nohash.find('\n', hl);
  nohash.erase(hl, nl - hl + 1);
  GroupFile parsed = parse_group_file(nohash);
  REQUIRE(parsed.order == 4);
}

TEST_CASE("malformed files are rejected with parse errors") {
  REQUIRE_THROWS_AS(parse_group_file(""), ParseError);
  REQUIRE_THROWS_AS(parse_group_file("banana 6\ntable\n"), ParseError);
  REQUIRE_THROWS_AS(parse_group_file("group/v1 0\ntable\n"), ParseError);
  REQUIRE_THROWS_AS(parse_group_file("group/v1 2\nnonsense\n"), ParseError);

  // Truncated table (one row missing).
  REQUIRE_THROWS_AS(parse_group_file("group/v1 2\ntable\n0 1\n"), ParseError);
  // Entry out of range.
  REQUIRE_THROWS_AS(parse_group_file("group/v1 2\ntable\n0 1\n1 2\n"), ParseError);
  // Excess entries in a row.
  REQUIRE_THROWS_AS(parse_group_file("group/v1 2\ntable\n0 1 0\n1 0\n"), ParseError);
  // Table that parses but is not a group (not a Latin square).
  REQUIRE_THROWS_AS(group_from_file(parse_group_file("group/v1 2\ntable\n0 1\n0 1\n")),
                    ValidationError);

  // Generator form: zero degree and empty generator list.
  REQUIRE_THROWS_AS(parse_group_file("group/v1 2\ngens 0\n(0 1)\n"), ParseError);
  REQUIRE_THROWS_AS(parse_group_file("group/v1 2\ngens 2\n"), ParseError);
}

TEST_CASE("write is atomic and reads back identically") {
  auto dir = temp_dir();
  auto path = dir / "d8.group";
  GroupPtr g = build_family("dihedral(4)");

  write_group_file(path, *g, "dihedral of order 8");
  REQUIRE(std::filesystem::exists(path));
  REQUIRE_FALSE(std::filesystem::exists(dir / "d8.group.tmp"));

  GroupPtr back = read_group_file(path);
  REQUIRE(back->order() == 8);
  for (element_t a = 0; a < 8; ++a)
    for (element_t b = 0; b < 8; ++b) REQUIRE(back->mul(a, b) == g->mul(a, b));

  // Overwriting an existing file goes through the same temp-and-rename path.
  GroupPtr c6 = build_family("cyclic(6)");
  write_group_file(path, *c6);
  REQUIRE(read_group_file(path)->order() == 6);
  REQUIRE_FALSE(std::filesystem::exists(dir / "d8.group.tmp"));

  std::filesystem::remove(path);
}

TEST_CASE("missing files and oversized tables raise the right errors") {
  REQUIRE_THROWS_AS(read_group_file(temp_dir() / "does-not-exist.group"), ParseError);

  CapGuard guard;
  caps().dense_table_max = 5;
  GroupPtr g = build_family("sym(3)");
  REQUIRE_THROWS_AS(group_file_of(*g), CapExceeded);
}

TEST_CASE("labels survive the round trip") {
  GroupPtr g = build_family("cyclic(3)");
  GroupFile f = group_file_of(*g, "a label with spaces");
  GroupFile parsed = parse_group_file(format_group_file(f));
  REQUIRE(parsed.label == "a label with spaces");

  // Unlabeled files omit the label line entirely.
  std::string text = format_group_file(group_file_of(*g));
  REQUIRE(text.find("label") == std::string::npos);
}

TEST_CASE("report builder emits grep-friendly sections") {
  ReportBuilder rb;
  rb.section("summary");
  rb.kv("order", std::uint64_t{24});
  rb.kv("connectivity", "connected");
  rb.kv("seconds", 1.25);
  rb.section("components");
  rb.kv("count", std::uint64_t{2});

  const std::string expected =
      "[summary]\n"
      "order 24\n"
      "connectivity connected\n"
      "seconds 1.250\n"
      "\n"
      "[components]\n"
      "count 2\n";
  REQUIRE(rb.str() == expected);
}
