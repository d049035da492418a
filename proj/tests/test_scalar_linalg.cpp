#include <doctest.h>

#include <vector>

#include "evoiso/field.hpp"
#include "evoiso/gl.hpp"
#include "evoiso/matrix.hpp"
#include "evoiso/scalar.hpp"

using namespace evoiso;

TEST_SUITE("scalar") {

TEST_CASE("field construction validates primality") {
  CHECK_NOTHROW(Field::gf(2));
  CHECK_NOTHROW(Field::gf(7919));
  CHECK_THROWS_AS(Field::gf(1), field_error);
  CHECK_THROWS_AS(Field::gf(4), field_error);
  CHECK_THROWS_AS(Field::gf(91), field_error);  // 7*13
  CHECK(Field::parse("gf(5)") == Field::gf(5));
  CHECK(Field::parse("q") == Field::rationals());
  CHECK_THROWS_AS(Field::parse("gf(6)"), field_error);
}

TEST_CASE("prime field division: 2/3 = 4 in gf(5)") {
  const Field f5 = Field::gf(5);
  const Scalar q = Scalar(f5, 2) / Scalar(f5, 3);
  CHECK(q == Scalar(f5, 4));
  // cross-check against the full multiplication table
  bool found = false;
  for (int m = 0; m < 5; ++m)
    if ((3 * m) % 5 == 2) {
      CHECK(m == 4);
      found = true;
    }
  CHECK(found);
}

TEST_CASE("additive identity and exact fractions") {
  const Field f3 = Field::gf(3);
  for (int a = 0; a < 3; ++a) CHECK(Scalar(f3, a) + Scalar(f3, 0) == Scalar(f3, a));
  const Field q = Field::rationals();
  CHECK(Scalar::fraction(q, 1, 2) + Scalar::fraction(q, 1, 3) == Scalar::fraction(q, 5, 6));
  CHECK(Scalar::fraction(q, 1, 2) + Scalar::fraction(q, 0, 7) == Scalar::fraction(q, 1, 2));
}

TEST_CASE("errors: division by zero and mixed fields") {
  const Field f5 = Field::gf(5);
  CHECK_THROWS_AS(Scalar(f5, 1) / Scalar(f5, 0), field_error);
  CHECK_THROWS_AS(Scalar(f5, 1) + Scalar(Field::gf(3), 1), field_error);
  CHECK_THROWS_AS(Scalar(f5, 1) * Scalar(Field::rationals(), 1), field_error);
}

TEST_CASE("field axioms, exhaustive for p <= 7") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    const Field f = Field::gf(p);
    for (std::uint64_t a = 0; a < p; ++a)
      for (std::uint64_t b = 0; b < p; ++b) {
        const Scalar sa = Scalar::from_residue(f, a), sb = Scalar::from_residue(f, b);
        CHECK(sa + sb == sb + sa);
        CHECK(sa * sb == sb * sa);
        if (!sb.is_zero()) CHECK((sa / sb) * sb == sa);
        for (std::uint64_t c = 0; c < p; ++c) {
          const Scalar sc = Scalar::from_residue(f, c);
          CHECK((sa + sb) + sc == sa + (sb + sc));
          CHECK((sa * sb) * sc == sa * (sb * sc));
          CHECK(sa * (sb + sc) == sa * sb + sa * sc);
        }
      }
  }
}

TEST_CASE("square roots with witnesses") {
  const Field f3 = Field::gf(3);
  CHECK(!square_root(Scalar(f3, 2)).has_value());
  const Field f5 = Field::gf(5);
  auto w = square_root(Scalar(f5, 4));
  REQUIRE(w.has_value());
  CHECK(*w == Scalar(f5, 2));
  CHECK(*w * *w == Scalar(f5, 4));
  const Field f2 = Field::gf(2);
  auto w2 = square_root(Scalar(f2, 1));
  REQUIRE(w2.has_value());
  CHECK(*w2 == Scalar(f2, 1));

  const Field q = Field::rationals();
  auto wq = square_root(Scalar::fraction(q, 9, 4));
  REQUIRE(wq.has_value());
  CHECK(*wq == Scalar::fraction(q, 3, 2));
  CHECK(!square_root(Scalar(q, -1)).has_value());
  CHECK(!square_root(Scalar(q, 2)).has_value());
}

}  // TEST_SUITE("scalar")

TEST_SUITE("linalg") {

TEST_CASE("rank basics") {
  const Field f2 = Field::gf(2);
  CHECK(Matrix::identity(f2, 3).rank() == 3);
  CHECK(Matrix(f2, 3, 3).rank() == 0);
  const Field f3 = Field::gf(3);
  const Matrix m = Matrix::from_rows(f3, {{1, 0, 0}, {1, 0, 0}, {0, 1, 0}});
  CHECK(m.rank() == 2);
}

TEST_CASE("rank equals rank of transpose") {
  const Field f3 = Field::gf(3);
  for (std::uint64_t code = 0; code < 729; code += 7) {
    Matrix m(f3, 2, 3);
    std::uint64_t c = code;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        m.at(i, j) = Scalar::from_residue(f3, c % 3);
        c /= 3;
      }
    CHECK(m.rank() == m.transpose().rank());
  }
}

TEST_CASE("inverse: diag(1,2,3) over gf(5) -> diag(1,3,2)") {
  const Field f5 = Field::gf(5);
  const Matrix d = Matrix::from_rows(f5, {{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
  auto inv = d.inverse();
  REQUIRE(inv.has_value());
  CHECK(*inv == Matrix::from_rows(f5, {{1, 0, 0}, {0, 3, 0}, {0, 0, 2}}));
  CHECK(d * *inv == Matrix::identity(f5, 3));

  CHECK(Matrix::identity(f5, 4).inverse() == Matrix::identity(f5, 4));
  CHECK(!Matrix(f5, 3, 3).inverse().has_value());
}

TEST_CASE("solve_linear examples") {
  const Field f3 = Field::gf(3);
  const Matrix b = Matrix::from_rows(f3, {{1, 2}, {0, 1}, {2, 2}});

  auto s = solve_linear(Matrix::identity(f3, 3), b);
  REQUIRE(s.consistent);
  CHECK(s.particular == b);
  CHECK(s.nullity() == 0);

  auto bad = solve_linear(Matrix(f3, 3, 3), b);
  CHECK(!bad.consistent);
  CHECK(bad.count(3, 2) == 0);

  auto full = solve_linear(Matrix(f3, 3, 3), Matrix(f3, 3, 2));
  REQUIRE(full.consistent);
  CHECK(full.nullity() == 3);
  CHECK(full.count(3, 2) == 729);
}

TEST_CASE("solve_linear: membership and count vs exhaustive enumeration") {
  const Field f2 = Field::gf(2);
  // sweep all 2x2 systems A x = b over gf(2)
  for (std::uint64_t ac = 0; ac < 16; ++ac)
    for (std::uint64_t bc = 0; bc < 4; ++bc) {
      Matrix a(f2, 2, 2), b(f2, 2, 1);
      a.at(0, 0) = Scalar::from_residue(f2, ac & 1);
      a.at(0, 1) = Scalar::from_residue(f2, (ac >> 1) & 1);
      a.at(1, 0) = Scalar::from_residue(f2, (ac >> 2) & 1);
      a.at(1, 1) = Scalar::from_residue(f2, (ac >> 3) & 1);
      b.at(0, 0) = Scalar::from_residue(f2, bc & 1);
      b.at(1, 0) = Scalar::from_residue(f2, (bc >> 1) & 1);

      std::uint64_t expected = 0;
      for (std::uint64_t xc = 0; xc < 4; ++xc) {
        Matrix x(f2, 2, 1);
        x.at(0, 0) = Scalar::from_residue(f2, xc & 1);
        x.at(1, 0) = Scalar::from_residue(f2, (xc >> 1) & 1);
        if (a * x == b) ++expected;
      }
      auto s = solve_linear(a, b);
      CHECK(s.count(2, 1) == expected);
      if (s.consistent) CHECK(a * s.particular == b);
    }
}

TEST_CASE("GL enumeration counts") {
  CHECK(general_linear_order(3, 2) == 168);
  CHECK(general_linear_order(1, 3) == 2);
  CHECK(general_linear_order(2, 2) == 6);
  CHECK(general_linear_order(3, 3) == 11232);

  int count = 0;
  GlStream s(2, Field::gf(2));
  while (auto m = s.next()) {
    CHECK(m->nonsingular());
    ++count;
  }
  CHECK(count == 6);
}

TEST_CASE("every streamed GL element is invertible, with exact inverse") {
  GlStream s(3, Field::gf(2));
  int count = 0;
  while (auto m = s.next()) {
    auto inv = m->inverse();
    REQUIRE(inv.has_value());
    CHECK(*m * *inv == Matrix::identity(Field::gf(2), 3));
    ++count;
  }
  CHECK(count == 168);
}

TEST_CASE("GL enumeration budget") {
  CHECK_THROWS_AS(GlStream(3, Field::gf(5), 100), budget_exceeded);
}

}  // TEST_SUITE("linalg")
