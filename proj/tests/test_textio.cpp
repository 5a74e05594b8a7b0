#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "downset/textio.hpp"
#include "support.hpp"

#include <random>

using namespace downset;
using namespace testsupport;

TEST_CASE("face tokens print ascending digits") {
  CHECK(face_token(Face(0)) == "");
  CHECK(face_token(Face::of({3})) == "3");
  CHECK(face_token(Face::of({4, 1, 6})) == "146");
}

TEST_CASE("parsing the three family shapes") {
  Complex blank = parse_complex("n=3\n\n");
  CHECK(blank.face_count() == 0);
  CHECK(blank.n() == 3);

  Complex just_empty = parse_complex("n=3\nempty\n");
  CHECK(just_empty.face_count() == 1);
  CHECK(just_empty.has_empty_face());

  Complex tri = parse_complex("n=3\n01, 2\n");
  CHECK(tri == closure_of({Face::of({0, 1}), Face::of({2})}, 3));
}

TEST_CASE("missing faces line means the empty family") {
  Complex a = parse_complex("n=2");
  CHECK(a.face_count() == 0);
  CHECK(a.n() == 2);
}

TEST_CASE("parser accepts unordered digits and surrounding blanks") {
  CHECK(parse_complex("n=4\n 31 , 2 \n") ==
        closure_of({Face::of({1, 3}), Face::of({2})}, 4));
  CHECK(parse_complex("  n=4 \n02\n") == closure_of({Face::of({0, 2})}, 4));
}

TEST_CASE("serialization emits maximal faces in ascending mask order") {
  Complex a = closure_of({Face::of({0, 1}), Face::of({2})}, 3);
  CHECK(serialize_complex(a) == "n=3\n01, 2\n");
  CHECK(serialize_complex(Complex::empty_family(2)) == "n=2\n\n");
  CHECK(serialize_complex(closure_of({Face(0)}, 2)) == "n=2\nempty\n");
  CHECK(serialize_complex(build_pnk(2, 2)) == "n=2\n01\n");
}

TEST_CASE("round trip holds for random families") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 300; ++trial) {
    int n = static_cast<int>(rng() % 6);
    Complex a = random_complex(n, rng);
    CHECK(parse_complex(serialize_complex(a)) == a);
  }
  for (int n = 0; n <= 3; ++n)
    for (const Complex& a : all_complexes_brute(n))
      CHECK(parse_complex(serialize_complex(a)) == a);
}

TEST_CASE("parse failures carry the right type") {
  CHECK_THROWS_AS(parse_complex(""), parse_error);
  CHECK_THROWS_AS(parse_complex("m=3\n\n"), parse_error);
  CHECK_THROWS_AS(parse_complex("n=\n\n"), parse_error);
  CHECK_THROWS_AS(parse_complex("n=3x\n\n"), parse_error);
  CHECK_THROWS_AS(parse_complex("n=11\n\n"), parse_error);
  CHECK_THROWS_AS(parse_complex("n=-1\n\n"), parse_error);
  CHECK_THROWS_AS(parse_complex("n=3\n0a\n"), parse_error);
  CHECK_THROWS_AS(parse_complex("n=3\n00\n"), parse_error);
  CHECK_THROWS_AS(parse_complex("n=2\n03\n"), parse_error);
  CHECK_THROWS_AS(parse_complex("n=3\n01,,2\n"), parse_error);
  CHECK_THROWS_AS(parse_complex("n=3\nempty, 1\n"), parse_error);
}

TEST_CASE("the format reaches past the engine bound only syntactically") {
  // n = 9 and 10 are valid headers but no in-memory family can hold them
  CHECK_THROWS_AS(parse_complex("n=9\n\n"), invalid_parameter_error);
  CHECK_THROWS_AS(parse_complex("n=10\nempty\n"), invalid_parameter_error);
}

TEST_CASE("cycle notation round trips onto permutations") {
  VertexPermutation id = parse_cycles("", 4);
  CHECK(id == VertexPermutation::identity(4));
  CHECK(parse_cycles("id", 4) == id);
  CHECK(parse_cycles("()", 4) == id);

  VertexPermutation swap67 = parse_cycles("(6 7)", 8);
  CHECK(swap67.images[6] == 7);
  CHECK(swap67.images[7] == 6);
  CHECK(swap67.images[0] == 0);
  CHECK(swap67.is_involution());

  VertexPermutation two = parse_cycles("(0 1)(2 3)", 4);
  CHECK(two.images[0] == 1);
  CHECK(two.images[1] == 0);
  CHECK(two.images[2] == 3);
  CHECK(two.images[3] == 2);

  VertexPermutation packed = parse_cycles("(67)", 8);
  CHECK(packed == swap67);

  VertexPermutation rot = parse_cycles("(0 1 2)", 3);
  CHECK(rot.images[0] == 1);
  CHECK(rot.images[1] == 2);
  CHECK(rot.images[2] == 0);
}

TEST_CASE("cycle notation failures") {
  CHECK_THROWS_AS(parse_cycles("(0 1", 4), parse_error);
  CHECK_THROWS_AS(parse_cycles("0 1", 4), parse_error);
  CHECK_THROWS_AS(parse_cycles("(0 1)(1 2)", 4), parse_error);
  CHECK_THROWS_AS(parse_cycles("(0 9)", 4), parse_error);
  CHECK_THROWS_AS(parse_cycles("(0 x)", 4), parse_error);
}
