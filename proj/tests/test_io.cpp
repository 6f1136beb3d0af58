#include <doctest.h>

#include "mck/algebra_io.hpp"

using namespace mck;

TEST_SUITE("assoc algebra files") {
  TEST_CASE("emit then parse round-trips O_1") {
    const AssocAlgebra a = truncated_polynomial_algebra(3, 1);
    const AssocAlgebra back = parse_assoc_algebra(emit_assoc_algebra(a), true);
    CHECK(back.p == a.p);
    CHECK(back.dim == a.dim);
    CHECK(back.labels == a.labels);
    for (int i = 0; i < a.dim; ++i) {
      for (int j = 0; j < a.dim; ++j) {
        CHECK(back.terms(i, j) == a.terms(i, j));
      }
    }
  }

  TEST_CASE("a commutativity violation names the pair") {
    // e0 is a left unit only: e0 e1 = e1 while e1 e0 = 0; associative but
    // not commutative
    const std::string text = R"({
      "p": 3, "dim": 2,
      "products": [[0, 0, 0, 1], [0, 1, 1, 1]]
    })";
    CHECK_NOTHROW(parse_assoc_algebra(text, false));
    try {
      parse_assoc_algebra(text, true);
      FAIL("expected InputError");
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find("(0, 1)") != std::string::npos);
    }
  }

  TEST_CASE("non-prime moduli are rejected") {
    CHECK_THROWS_AS(parse_assoc_algebra(R"({"p": 6, "dim": 1, "products": []})", true),
                    InputError);
  }

  TEST_CASE("an associativity violation is rejected with the triple named") {
    // e1 e1 = e0 but e0 acts as a left unit only on e0: (e1 e1) e1 != e1 (e1 e1)
    const std::string text = R"({
      "p": 3, "dim": 2,
      "products": [[1, 1, 0, 1], [0, 0, 0, 1]]
    })";
    try {
      parse_assoc_algebra(text, false);
      FAIL("expected InputError");
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find("associativity") != std::string::npos);
    }
  }

  TEST_CASE("out-of-range indices are rejected") {
    CHECK_THROWS_AS(parse_assoc_algebra(R"({"p": 3, "dim": 2, "products": [[0, 2, 0, 1]]})", true),
                    InputError);
  }

  TEST_CASE("malformed JSON is rejected") {
    CHECK_THROWS_AS(parse_assoc_algebra("{not json", true), InputError);
    CHECK_THROWS_AS(parse_assoc_algebra(R"(["array"])", true), InputError);
    CHECK_THROWS_AS(parse_assoc_algebra(R"({"p": 3})", true), InputError);
  }

  TEST_CASE("a false unit claim is rejected, a true one accepted") {
    CHECK_THROWS_AS(
        parse_assoc_algebra(R"({"p": 3, "dim": 2, "unit": 1, "products": [[0, 0, 0, 1]]})", true),
        InputError);
    const AssocAlgebra a = parse_assoc_algebra(
        R"({"p": 3, "dim": 1, "unit": 0, "products": [[0, 0, 0, 1]]})", true);
    CHECK(a.unit_index == 0);
  }
}

TEST_SUITE("lie algebra files") {
  TEST_CASE("emit then parse round-trips sl2") {
    const LieAlgebra s = sl2(5);
    const LieAlgebra back = parse_lie_algebra(emit_lie_algebra(s));
    CHECK(back.dim == 3);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        CHECK(back.bracket(i, j) == s.bracket(i, j));
      }
    }
  }

  TEST_CASE("one-sided entries gain their mirror") {
    const LieAlgebra l = parse_lie_algebra(R"({
      "p": 5, "dim": 3,
      "brackets": [[0, 1, 2, 1]]
    })");
    CHECK(l.bracket(1, 0) == ProductTerms{{2, 4}});
  }

  TEST_CASE("consistent double-sided entries are accepted") {
    const LieAlgebra l = parse_lie_algebra(R"({
      "p": 5, "dim": 2,
      "brackets": [[0, 1, 0, 2], [1, 0, 0, 3]]
    })");
    CHECK(l.bracket(0, 1) == ProductTerms{{0, 2}});
  }

  TEST_CASE("inconsistent double-sided entries are a format error") {
    CHECK_THROWS_AS(parse_lie_algebra(R"({
      "p": 5, "dim": 2,
      "brackets": [[0, 1, 0, 2], [1, 0, 0, 2]]
    })"),
                    InputError);
  }

  TEST_CASE("diagonal brackets are rejected") {
    CHECK_THROWS_AS(parse_lie_algebra(R"({"p": 5, "dim": 2, "brackets": [[0, 0, 1, 1]]})"),
                    InputError);
  }

  TEST_CASE("Jacobi violations are rejected with the triple named") {
    // [e0,e1] = e2 and [e0,e2] = e0 leave [[e2,e0],e1] = -e2 unbalanced
    try {
      parse_lie_algebra(R"({
        "p": 5, "dim": 3,
        "brackets": [[0, 1, 2, 1], [0, 2, 0, 1]]
      })");
      FAIL("expected InputError");
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find("Jacobi") != std::string::npos);
    }
  }
}

TEST_SUITE("generator files") {
  TEST_CASE("valid generators parse into matrices") {
    const GeneratorFile gf = parse_generator_file(R"({
      "p": 3, "n": 1,
      "generators": [[[0, 1, 0], [0, 0, 2], [0, 0, 0]]]
    })");
    CHECK(gf.p == 3);
    CHECK(gf.generators.size() == 1);
    CHECK(gf.generators[0].raw(0, 1) == 1);
    CHECK(gf.generators[0].raw(1, 2) == 2);
    // that matrix is d/dx, a genuine derivation
    const AssocAlgebra o1 = truncated_polynomial_algebra(3, 1);
    CHECK(satisfies_leibniz(o1, gf.generators[0]));
  }

  TEST_CASE("wrong shapes are rejected") {
    CHECK_THROWS_AS(parse_generator_file(R"({"p": 3, "n": 1, "generators": [[[0, 1], [0, 0]]]})"),
                    InputError);
    CHECK_THROWS_AS(parse_generator_file(R"({"p": 3, "n": 1})"), InputError);
  }

  TEST_CASE("entries are reduced mod p") {
    const GeneratorFile gf = parse_generator_file(R"({
      "p": 3, "n": 1,
      "generators": [[[0, 4, 0], [0, 0, -1], [0, 0, 0]]]
    })");
    CHECK(gf.generators[0].raw(0, 1) == 1);
    CHECK(gf.generators[0].raw(1, 2) == 2);
  }
}
