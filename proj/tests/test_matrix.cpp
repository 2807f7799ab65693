#include <doctest.h>

#include <random>
#include <stdexcept>

#include "hyperlattice/errors.hpp"
#include "hyperlattice/matrix.hpp"

using namespace hyperlattice;

namespace {

IntMatrix random_matrix(std::mt19937& rng, int r, int c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("identity and products") {
  const IntMatrix a{{1, 2}, {3, 4}};
  CHECK(IntMatrix::identity(2) * a == a);
  CHECK(a * IntMatrix::identity(2) == a);
  CHECK(a * a == IntMatrix{{7, 10}, {15, 22}});
  CHECK(a.transpose() == IntMatrix{{1, 3}, {2, 4}});
  CHECK(2 * a == a + a);
  CHECK((a - a).is_zero());
  CHECK(power(a, 0) == IntMatrix::identity(2));
  CHECK(power(a, 3) == a * a * a);
}

TEST_CASE("product is associative and transposes in reverse order") {
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    auto a = random_matrix(rng, 3, 4, -5, 5);
    auto b = random_matrix(rng, 4, 2, -5, 5);
    auto c = random_matrix(rng, 2, 5, -5, 5);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
  }
}

TEST_CASE("overflow is detected, never wrapped") {
  const std::int64_t big = std::int64_t(1) << 62;
  IntMatrix a{{big}};
  CHECK_THROWS_AS(a + a, std::overflow_error);
  CHECK_THROWS_AS(a * IntMatrix{{4}}, std::overflow_error);
  CHECK_THROWS_AS(checked_mul(big, 2), std::overflow_error);
  CHECK(checked_add(big, -big) == 0);
}

TEST_CASE("shape errors") {
  CHECK_THROWS_AS(IntMatrix(2, 3) * IntMatrix(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(IntMatrix(2, 2) + IntMatrix(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(IntMatrix::from_rows({{1, 2}, {3}}), std::invalid_argument);
}

TEST_CASE("plain-text format round trip") {
  std::mt19937 rng(11);
  for (int t = 0; t < 20; ++t) {
    auto m = random_matrix(rng, 1 + t % 5, 1 + t % 7, -100, 100);
    CHECK(parse_matrix_text(format_matrix_text(m)) == m);
  }
}

TEST_CASE("plain-text parsing") {
  const std::string text = "# a comment\n 6 -3  # trailing\n\n-3 6\n";
  CHECK(parse_matrix_text(text) == IntMatrix{{6, -3}, {-3, 6}});
  CHECK_THROWS_AS(parse_matrix_text("1 2\n3\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix_text("1 x\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix_text("# nothing\n"), ParseError);
  const auto blocks = parse_matrix_blocks("1 0\n0 1\n\n2\n");
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0] == IntMatrix::identity(2));
  CHECK(blocks[1] == IntMatrix{{2}});
}
