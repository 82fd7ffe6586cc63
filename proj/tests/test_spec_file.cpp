#include <doctest.h>

#include "cellkit/errors.hpp"
#include "cellkit/schur.hpp"
#include "cellkit/spec_file.hpp"
#include "cellkit/temperley_lieb.hpp"
#include "support.hpp"

using namespace cellkit;
using namespace testing_support;

TEST_CASE("export and load round trip") {
  TLData tl = tl_algebra(RingSpec::integers(), 3, 1L);
  const std::string text = export_spec(tl.algebra, &tl.datum);
  SpecFile f = load_spec(text);
  CHECK(f.algebra == tl.algebra);
  REQUIRE(f.datum.has_value());
  CHECK(f.datum->labels == tl.datum.labels);
  CHECK(f.datum->leq == tl.datum.leq);
  CHECK(f.datum->index == tl.datum.index);
  CHECK(f.datum->involution == tl.datum.involution);
  CHECK(export_spec(f.algebra, &*f.datum) == text);
}

TEST_CASE("rational and modular constants") {
  const auto Q = RingSpec::rationals();
  Algebra a = perturb(cyclic_group(Q, 2), 1, 1, 1, Scalar(Q, Integer(-2), Integer(3)));
  SpecFile f = load_spec(export_spec(a));
  CHECK(f.algebra == a);
  CHECK_FALSE(f.datum.has_value());
  Algebra m = cyclic_group(RingSpec::integers_mod(6), 3);
  CHECK(load_spec(export_spec(m)).algebra == m);
}

TEST_CASE("large integers are written as strings") {
  const auto Z = RingSpec::integers();
  const Integer big("123456789012345678901234567890");
  Algebra a = perturb(cyclic_group(Z, 2), 1, 1, 1, Scalar(Z, big));
  const std::string text = export_spec(a);
  CHECK(text.find("\"123456789012345678901234567890\"") != std::string::npos);
  CHECK(load_spec(text).algebra == a);
}

TEST_CASE("the layout is canonical") {
  const std::string text = export_spec(cyclic_group(RingSpec::integers(), 2));
  CHECK(text ==
        "{\n"
        "  \"format_version\": \"1\",\n"
        "  \"ring\": \"Z\",\n"
        "  \"basis\": [\"g0\",\"g1\"],\n"
        "  \"unit\": [[0,1,1]],\n"
        "  \"structure_constants\": [\n"
        "    [0,0,[[0,1,1]]],\n"
        "    [0,1,[[1,1,1]]],\n"
        "    [1,0,[[1,1,1]]],\n"
        "    [1,1,[[0,1,1]]]\n"
        "  ]\n"
        "}\n");
}

TEST_CASE("malformed files are parse errors") {
  auto code_of = [](const std::string& text) {
    try {
      load_spec(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InternalError;
  };
  CHECK(code_of("{") == ErrorCode::ParseError);
  CHECK(code_of("{\"format_version\": \"2\"}") == ErrorCode::ParseError);
  CHECK(code_of("{\"format_version\": \"1\", \"ring\": \"Z\", \"basis\": [\"a\"], \"unit\": [[0,1,1]], "
                "\"structure_constants\": [[0,3,[[0,1,1]]]]}") == ErrorCode::ParseError);
  CHECK(code_of("{\"format_version\": \"1\", \"ring\": \"Z\", \"basis\": [\"a\"], \"unit\": [[0,1,1]]}") ==
        ErrorCode::ParseError);
  CHECK_THROWS_AS(load_spec_file("/nonexistent/spec.json"), Error);
}
