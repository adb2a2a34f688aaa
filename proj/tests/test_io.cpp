#include <doctest.h>

#include "hallkit/io.hpp"
#include "hallkit/zoo.hpp"

using namespace hallkit;

TEST_CASE("group files round-trip") {
  for (const char* name : {"sym4", "gl32", "alt5wr2"}) {
    auto g = *zoo_group(name);
    auto back = parse_group_json(group_to_json(name, g));
    CHECK(back.name == name);
    CHECK(back.group.generators() == g.generators());
    CHECK(back.group.order() == g.order());
  }
}

TEST_CASE("parse errors carry line and generator index") {
  const std::string bad_perm = R"({
  "name": "x",
  "degree": 3,
  "generators": [
    [1, 2, 0],
    [0, 0, 1]
  ]
})";
  try {
    parse_group_json(bad_perm);
    FAIL("expected a parse error");
  } catch (const GroupParseError& e) {
    CHECK(e.line() == 6);
    CHECK(e.generator() == 1u);
  }

  const std::string short_list = "{\"degree\": 4, \"generators\": [[1,0,2,3],\n[1,2,3],\n[0,1,2,3]]}";
  try {
    parse_group_json(short_list);
    FAIL("expected a parse error");
  } catch (const GroupParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.generator() == 1u);
  }

  const std::string syntax = "{\n\"degree\": 3,\n\"generators\": [[0,1,2],]\n}";
  try {
    parse_group_json(syntax);
    FAIL("expected a parse error");
  } catch (const GroupParseError& e) {
    CHECK(e.line() == 3);
    CHECK_FALSE(e.generator());
  }

  CHECK_THROWS_AS(parse_group_json("{\"degree\": 3, \"generators\": [[0,1,7]]}"), GroupParseError);
  CHECK_THROWS_AS(parse_group_json("{\"generators\": []}"), GroupParseError);
  CHECK_THROWS_AS(parse_group_json("[1,2]"), GroupParseError);
  CHECK(parse_group_json("{\"degree\": 2, \"generators\": []}").group.order() == 1);
}
