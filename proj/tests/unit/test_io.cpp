#include "helpers.hpp"

#include "bfh/io.hpp"

#include <doctest.h>

#include <string>

using namespace bfh;

namespace {

bool same_space(const FinTopSpace& a, const FinTopSpace& b) { return a.names() == b.names() && a.bases() == b.bases(); }

bool same_instance(const GSpaceInstance& a, const GSpaceInstance& b) {
  return same_space(a.space(), b.space()) && a.action_table() == b.action_table() &&
         a.group().order() == b.group().order() && same_space(a.group().topology(), b.group().topology());
}

std::string error_of(const std::string& text) {
  try {
    parse_gspace(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

} // namespace

TEST_CASE("space files") {
  const auto sp = parse_space("points a b   # two points\n\nopen a\nopen a b\n");
  CHECK(same_space(sp, testing::sierpinski()));
  CHECK(same_space(parse_space(to_text(sp)), sp));
  const auto with_empty = parse_space("points p q\nopen\nopen p\nopen q\nopen p q\n");
  CHECK(with_empty.basis(0).none());
  CHECK_THROWS_AS(parse_space("open a\n"), InputError);
  CHECK_THROWS_AS(parse_space("points a a\nopen a\n"), InputError);
  CHECK_THROWS_AS(parse_space("points a b\nopen a c\n"), InputError);
  CHECK_THROWS_AS(parse_space("points a b\nopen a\n"), InputError);
}

TEST_CASE("G-space files round-trip") {
  const auto inst = parse_gspace(read_file(BFH_TEST_DATA "/two-sierpinski.gspace"));
  CHECK(inst.space().size() == 4);
  CHECK(inst.act(1, 0) == 2);
  CHECK(same_instance(parse_gspace(to_text(inst)), inst));
  for (auto& e : testing::small_corpus(5)) REQUIRE(same_instance(parse_gspace(to_text(e.inst)), e.inst));
}

TEST_CASE("space given by a relative path") {
  const std::string text = "elements e\nmult e\ngopen e\nspace sierpinski.space\naction e a b\n";
  const auto inst = parse_gspace(text, BFH_TEST_DATA);
  CHECK(same_space(inst.space(), testing::sierpinski()));
  CHECK_THROWS_AS(parse_gspace(text, "/nonexistent"), InputError);
}

TEST_CASE("G-space errors name the line") {
  const std::string head = "elements e r\nmult e r\nmult r e\ngopen e r\npoints a b\nopen a b\n";
  CHECK(error_of(head + "action e a b\naction r a z\n").rfind("line 8", 0) == 0);
  CHECK(error_of(head + "action e a b\nfrobnicate\n").rfind("line 8", 0) == 0);
  CHECK(error_of("elements e\nmult q\n").rfind("line 2", 0) == 0);
  CHECK(error_of(head + "action e a b\n").find("no action line") != std::string::npos);
  CHECK(error_of("points a\nopen a\n").find("no 'elements'") != std::string::npos);
  CHECK_THROWS_AS(read_file("/nonexistent/file"), InputError);
}
