#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "smith/linalg.hpp"
#include "smith/random.hpp"

using namespace smith;

namespace {

// Every vector of F_p^n, for tiny n and p.
std::vector<std::vector<std::uint32_t>> all_vectors(std::uint32_t p, std::size_t n) {
  std::vector<std::vector<std::uint32_t>> out{{}};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::vector<std::uint32_t>> next;
    for (auto& v : out)
      for (std::uint32_t x = 0; x < p; ++x) {
        auto w = v;
        w.push_back(x);
        next.push_back(w);
      }
    out = next;
  }
  return out;
}

Matrix column_of(const Field& f, const std::vector<std::uint32_t>& v) {
  Matrix m(f, v.size(), 1);
  for (std::size_t k = 0; k < v.size(); ++k) m(k, 0) = v[k];
  return m;
}

// rank by counting the image: |im a| = p^rank
std::size_t rank_by_enumeration(const Matrix& a) {
  std::set<std::vector<std::uint32_t>> image;
  for (auto& v : all_vectors(a.field().p(), a.cols())) image.insert((a * column_of(a.field(), v)).data());
  std::size_t r = 0, size = 1;
  while (size < image.size()) {
    size *= a.field().p();
    ++r;
  }
  return r;
}

}  // namespace

TEST_CASE("field arithmetic") {
  Field f5(5);
  CHECK(f5.mul(2, 3) == 1);
  CHECK(f5.inv(2) == 3);
  CHECK(f5.reduce(-7) == 3);
  CHECK(f5.sign(3) == 4);
  CHECK_THROWS_AS(Field(4), Error);
  CHECK_THROWS_AS(Field(1), Error);
  Field big(2147483647u);
  CHECK(big.mul(2147483646u, 2147483646u) == 1);
  CHECK(big.mul(big.inv(12345), 12345) == 1);
}

TEST_CASE("mat_mul examples") {
  Field f2(2), f5(5);
  Rng rng(11);
  Matrix m = random_matrix(rng, f5, 3, 4);
  CHECK(Matrix::identity(f5, 3) * m == m);
  CHECK((Matrix::from_rows(f2, {{1, 1}, {1, 1}}) * Matrix::from_rows(f2, {{1}, {1}})).is_zero());
  CHECK(Matrix::from_rows(f5, {{2}}) * Matrix::from_rows(f5, {{3}}) == Matrix::from_rows(f5, {{1}}));
  CHECK_THROWS_AS(Matrix(f5, 2, 3) * Matrix(f5, 2, 3), ShapeError);
  CHECK_THROWS_AS(Matrix(f5, 2, 2) * Matrix(f2, 2, 2), ShapeError);
}

TEST_CASE("rank examples") {
  Field f3(3);
  CHECK(rank(Matrix(f3, 4, 4)) == 0);
  CHECK(rank(Matrix::identity(f3, 3)) == 3);
  Matrix a = Matrix::from_rows(f3, {{1, 2}, {2, 1}});
  CHECK(rank(a) == rank_by_enumeration(a));
  CHECK(rank(a) == 1);
}

TEST_CASE("kernel examples") {
  Field f2(2);
  CHECK(kernel_basis(Matrix::identity(f2, 2)).cols() == 0);
  CHECK(kernel_basis(Matrix::identity(f2, 2)).rows() == 2);
  CHECK(kernel_basis(Matrix(f2, 1, 3)).cols() == 3);
  Matrix a = Matrix::from_rows(f2, {{1, 1}});
  Matrix k = kernel_basis(a);
  REQUIRE(k.cols() == 1);
  std::vector<std::vector<std::uint32_t>> zeros;
  for (auto& v : all_vectors(2, 2))
    if ((a * column_of(f2, v)).is_zero()) zeros.push_back(v);
  CHECK(zeros.size() == 2);
  CHECK(k.data() == std::vector<std::uint32_t>{1, 1});
}

TEST_CASE("solve examples") {
  Field f5(5);
  Rng rng(3);
  Matrix b = random_matrix(rng, f5, 3, 2);
  CHECK(*solve(Matrix::identity(f5, 3), b) == b);
  CHECK_FALSE(solve(Matrix(f5, 2, 2), Matrix::from_rows(f5, {{1}, {0}})).has_value());
  Matrix a = random_invertible(rng, f5, 3);
  auto x = solve(a, b);
  REQUIRE(x);
  CHECK(a * *x == b);
  CHECK_THROWS_AS(solve(a, Matrix(f5, 2, 1)), ShapeError);
}

TEST_CASE("linear constraints examples") {
  Field f2(2), f3(3);
  {
    LinearSystem sys(f3);
    auto x = sys.add_unknown(2, 2);
    Matrix m = Matrix::from_rows(f3, {{1, 2}, {0, 1}});
    sys.add_equation({LinearSystem::term(Matrix(), x, Matrix())}, m);
    auto sol = solve_linear_constraints(sys);
    REQUIRE(sol);
    CHECK((*sol)[x] == m);
  }
  {
    LinearSystem sys(f2);
    auto x = sys.add_unknown(1, 1);
    sys.add_equation({LinearSystem::term(Matrix(), x, Matrix())}, Matrix(f2, 1, 1));
    sys.add_equation({LinearSystem::term(Matrix(), x, Matrix())}, Matrix::identity(f2, 1));
    CHECK_FALSE(solve_linear_constraints(sys).has_value());
  }
  {
    // D^1: degrees 1,0 with d = 1; f = id is nullhomotopic. Unknown H_0 : C_0 -> C_1.
    // degree 1: H_0 d_1 = 1; degree 0: d_1 H_0 = 1.
    LinearSystem sys(f3);
    auto h = sys.add_unknown(1, 1);
    Matrix d = Matrix::identity(f3, 1);
    sys.add_equation({LinearSystem::term(Matrix(), h, d)}, Matrix::identity(f3, 1));
    sys.add_equation({LinearSystem::term(d, h, Matrix())}, Matrix::identity(f3, 1));
    auto sol = solve_linear_constraints(sys);
    REQUIRE(sol);
    CHECK((*sol)[h] * d == Matrix::identity(f3, 1));
    CHECK(d * (*sol)[h] == Matrix::identity(f3, 1));
  }
}

TEST_CASE("kron terms agree with explicit Kronecker products") {
  for (std::uint32_t p : {2u, 3u, 5u, 101u}) {
    Field f(p);
    Rng rng(p * 7 + 1);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t xr = static_cast<std::size_t>(rng.uniform(1, 3)), xc = static_cast<std::size_t>(rng.uniform(1, 3));
      const std::size_t m = static_cast<std::size_t>(rng.uniform(1, 3));
      const std::size_t er = static_cast<std::size_t>(rng.uniform(1, 4)), ec = static_cast<std::size_t>(rng.uniform(1, 4));
      Matrix x = random_matrix(rng, f, xr, xc);
      Matrix l = random_matrix(rng, f, er, xr * m), r = random_matrix(rng, f, xc * m, ec);
      Matrix im = Matrix::identity(f, m);
      for (auto shape : {LinearSystem::Shape::KronRight, LinearSystem::Shape::KronLeft}) {
        Matrix tx = shape == LinearSystem::Shape::KronRight ? kron(x, im) : kron(im, x);
        LinearSystem sys(f);
        auto u = sys.add_unknown(xr, xc);
        sys.add_equation({LinearSystem::Term{l, u, r, shape, m}}, l * tx * r);
        auto sol = sys.solve();
        REQUIRE(sol);
        Matrix ty = shape == LinearSystem::Shape::KronRight ? kron((*sol)[u], im) : kron(im, (*sol)[u]);
        CHECK(l * ty * r == l * tx * r);
      }
    }
  }
}

TEST_CASE("random properties") {
  for (std::uint32_t p : {2u, 3u, 5u, 101u}) {
    Field f(p);
    Rng rng(p);
    for (int trial = 0; trial < 50; ++trial) {
      const auto r = static_cast<std::size_t>(rng.uniform(0, 6)), c = static_cast<std::size_t>(rng.uniform(0, 6));
      Matrix a = random_of_rank(rng, f, r, c, static_cast<std::size_t>(rng.uniform(0, 6)));
      Matrix k = kernel_basis(a);
      CHECK(rank(a) + k.cols() == c);
      CHECK((a * k).is_zero());
      CHECK(rank(k) == k.cols());
      Matrix x = random_matrix(rng, f, c, 2);
      Matrix b = a * x;
      auto s = solve(a, b);
      REQUIRE(s);
      CHECK(a * *s == b);
      Matrix m1 = random_matrix(rng, f, r, 3), m2 = random_matrix(rng, f, 3, 4), m3 = random_matrix(rng, f, 4, 2);
      CHECK((m1 * m2) * m3 == m1 * (m2 * m3));
    }
  }
}

TEST_CASE("rank agrees with image enumeration on small matrices") {
  for (std::uint32_t p : {2u, 3u}) {
    Field f(p);
    Rng rng(100 + p);
    for (int trial = 0; trial < 50; ++trial) {
      Matrix a = random_matrix(rng, f, static_cast<std::size_t>(rng.uniform(1, 3)),
                               static_cast<std::size_t>(rng.uniform(1, 4)));
      CHECK(rank(a) == rank_by_enumeration(a));
    }
  }
}

TEST_CASE("complement indices complete the image") {
  Field f(3);
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(0, 6));
    Matrix img = column_basis(random_matrix(rng, f, n, static_cast<std::size_t>(rng.uniform(0, 6))));
    auto q = complement_indices(img);
    Matrix e(f, n, q.size());
    for (std::size_t k = 0; k < q.size(); ++k) e(q[k], k) = 1;
    CHECK(is_invertible(hstack({img, e}, f, n)));
  }
  CHECK(complement_indices(Matrix(f, 3, 0)) == std::vector<std::size_t>{0, 1, 2});
}
