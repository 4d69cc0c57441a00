#include <doctest.h>

#include "twistcat/matrix.hpp"
#include "twistcat/rng.hpp"

using namespace twistcat;

namespace {

ExactMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound = 4) {
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rng.small_gaussian(bound);
  return m;
}

}  // namespace

TEST_CASE("rank on pinned examples") {
  CHECK(ExactMatrix::identity(4).rank() == 4);
  CHECK(ExactMatrix(3, 5).rank() == 0);
  // second row is i times the first
  ExactMatrix m(2, 2);
  m.at(0, 0) = gq(1);
  m.at(0, 1) = GaussianRational::i();
  m.at(1, 0) = GaussianRational::i();
  m.at(1, 1) = gq(-1);
  CHECK(m.rank() == 1);
  CHECK(m.image_basis().size() == 1);
}

TEST_CASE("kernel on pinned examples") {
  CHECK(ExactMatrix::identity(3).kernel().empty());
  CHECK(ExactMatrix(2, 2).kernel().size() == 2);

  ExactMatrix row(1, 2);
  row.at(0, 0) = gq(1);
  row.at(0, 1) = GaussianRational::i();
  auto k = row.kernel();
  REQUIRE(k.size() == 1);
  Vec expected = {-GaussianRational::i(), gq(1)};
  CHECK(same_span(k, {expected}, 2));
}

TEST_CASE("solve returns a witness or reports inconsistency") {
  ExactMatrix id = ExactMatrix::identity(3);
  Vec b = {gq(2), gq(-1), GaussianRational::i()};
  CHECK(*id.solve(b) == b);

  ExactMatrix zero(2, 2);
  CHECK(!zero.solve({gq(1), gq(0)}).has_value());

  ExactMatrix u(2, 2);
  u.at(0, 0) = gq(1);
  u.at(0, 1) = gq(1);
  u.at(1, 1) = gq(1);
  Vec x = *u.solve({gq(2), gq(1)});
  CHECK(x == Vec{gq(1), gq(1)});
}

TEST_CASE("rank-nullity and exact witnesses on random matrices") {
  Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t rows = static_cast<std::size_t>(rng.range(1, 7));
    std::size_t cols = static_cast<std::size_t>(rng.range(1, 7));
    ExactMatrix m = random_matrix(rng, rows, cols);
    auto ker = m.kernel();
    CHECK(m.rank() + ker.size() == cols);
    for (const auto& v : ker) CHECK(is_zero_vec(m.apply(v)));
    for (const auto& w : m.image_basis()) CHECK(m.solve(w).has_value());
  }
}

TEST_CASE("inverse and span utilities") {
  Rng rng(5);
  ExactMatrix m = random_matrix(rng, 4, 4, 3);
  while (m.rank() != 4) m = random_matrix(rng, 4, 4, 3);
  ExactMatrix inv = *m.inverse();
  CHECK(m * inv == ExactMatrix::identity(4));

  std::vector<Vec> a = {{gq(1), gq(0), gq(1)}, {gq(0), gq(1), gq(0)}};
  std::vector<Vec> b = {{gq(1), gq(1), gq(1)}, {gq(1), gq(-1), gq(1)}};
  CHECK(same_span(a, b, 3));
  CHECK(in_span({gq(2), gq(3), gq(2)}, a));
  CHECK(!in_span({gq(0), gq(0), gq(1)}, a));
}
