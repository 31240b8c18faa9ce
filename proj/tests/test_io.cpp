#include <doctest.h>

#include <choicelab/io.hpp>

using namespace choicelab;

TEST_CASE("parsing the documented examples") {
  SUBCASE("two strict voters") {
    const Profile p =
        io::parse_profile("3 2\nlabels: a b c\n1: a>b>c\n1: c>b>a\n");
    CHECK(p.m() == 3);
    CHECK(p.n() == 2);
    CHECK(p.voters[0].strict(0, 2));
    CHECK(p.voters[1].strict(2, 0));
  }
  SUBCASE("multiplicity expands to identical weak orders") {
    const Profile p = io::parse_profile("3 2\nlabels: a1 a2 a3\n2: a2=a3>a1\n");
    CHECK(p.n() == 2);
    CHECK(p.voters[0] == p.voters[1]);
    CHECK(p.voters[0].indifferent(1, 2));
    CHECK(p.voters[0].strict(1, 0));
  }
  SUBCASE("labels default to letters, comments are ignored") {
    const Profile p = io::parse_profile("# preamble\n2 1\nb>a  # best first\n");
    CHECK(p.labels == std::vector<std::string>{"a", "b"});
    CHECK(p.voters[0].strict(1, 0));
  }
  SUBCASE("per-pair form carries intransitive relations") {
    const Profile p = io::parse_profile("3 1\nlabels: a b c\n1: * a>b b>c c>a\n");
    CHECK(p.voters[0].strict(0, 1));
    CHECK(p.voters[0].strict(1, 2));
    CHECK(p.voters[0].strict(2, 0));
    CHECK(!p.voters[0].is_transitive());
  }
}

TEST_CASE("parse errors carry positions") {
  auto expect_error = [](const std::string& text, int line) {
    try {
      io::parse_profile(text);
      FAIL_CHECK("expected a parse error for: " << text);
    } catch (const io::ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.column() >= 1);
    }
  };
  expect_error("x y\n", 1);                                    // bad header
  expect_error("3 1\nlabels: a b\n1: a>b\n", 2);               // label count
  expect_error("3 1\nlabels: a b c\n1: a>b>d\n", 3);           // unknown label
  expect_error("3 1\nlabels: a b c\n1: a>b>a\n", 3);           // tier overlap
  expect_error("3 1\nlabels: a b c\n2: a>b>c\n", 3);           // multiplicity overflow
  expect_error("3 1\nlabels: a b c\n1: a>b>c\n1: a>b>c\n", 4); // trailing voters
  expect_error("3 2\nlabels: a b c\n1: a>b>c\n", 4);           // missing voters
  expect_error("3 1\nlabels: a b c\n1: * a>b b>c\n", 3);       // missing pair
  expect_error("3 1\nlabels: a a c\n1: a>c\n", 2);             // duplicate label
}

TEST_CASE("serialization is canonical and round-trips") {
  const std::string text =
      "3 3\nlabels: a b c\n2: a=b>c\n1: * a>b c>a b=c\n";
  const Profile p = io::parse_profile(text);
  const std::string out = io::serialize_profile(p);
  CHECK(out == text);
  CHECK(io::parse_profile(out).voters == p.voters);
  CHECK(io::parse_profile(out).labels == p.labels);
}

TEST_CASE("label lists sort by label or keep index order") {
  const std::vector<std::string> labels{"z", "m", "a"};
  const AltSet all = AltSet::full(3);
  CHECK(io::label_list(all, labels, false) == "z m a");
  CHECK(io::label_list(all, labels, true) == "a m z");
}

TEST_CASE("checksums are the reference FNV-1a values") {
  CHECK(io::fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(io::fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  const std::string block = io::with_checksum("x: 1\n");
  CHECK(block.substr(0, 5) == "x: 1\n");
  CHECK(block.find("checksum: ") != std::string::npos);
  CHECK(block.back() == '\n');
}

TEST_CASE("mode and flag vocabulary round-trips") {
  for (const std::string name : {"strict", "weak", "general"})
    CHECK(io::mode_name(io::mode_from_name(name)) == name);
  for (const std::string name : {"weak", "strict"})
    CHECK(io::pref_name(io::pref_from_name(name)) == name);
  for (const std::string name : {"any", "keep-ties"})
    CHECK(io::misreport_name(io::misreport_from_name(name)) == name);
  CHECK_THROWS_AS(io::mode_from_name("bogus"), ValidationError);
}
