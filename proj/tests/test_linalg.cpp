#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "framecert/errors.hpp"
#include "framecert/linalg.hpp"
#include "test_support.hpp"

using namespace framecert;

namespace {

Matrix exact3x3(std::initializer_list<long> entries) {
  Matrix m(3, 3, Field::Exact);
  auto it = entries.begin();
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) m.exact_at(i, j) = Rational(*it++);
  }
  return m;
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(rational_to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(rational_to_string(Rational(5)) == "5");
  CHECK(parse_rational("3/-6") == Rational(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("2 /3"), Error);
  CHECK(rational_from_double(0.5) == Rational(1, 2));
  CHECK(rational_from_double(0.1) != Rational(1, 10));  // 0.1 is not exactly 1/10
}

TEST_CASE("rank, exact and float") {
  // Columns e1, e2, e1+e2 in R^3: rank 2.
  Matrix m(3, 3, Field::Exact);
  m.exact_at(0, 0) = 1;
  m.exact_at(1, 1) = 1;
  m.exact_at(0, 2) = 1;
  m.exact_at(1, 2) = 1;
  CHECK(rank(m) == 2);
  CHECK(rank(m.to_float()) == 2);

  CHECK(rank(Matrix(4, 5, Field::Exact)) == 0);
  CHECK(rank(Matrix(4, 5, Field::Float)) == 0);
  CHECK(rank(Matrix::identity(4, Field::Exact)) == 4);
  CHECK(rank(Matrix::identity(4, Field::Float)) == 4);

  const Matrix vand = exact3x3({1, 1, 1, 1, 2, 4, 1, 3, 9});
  CHECK(rank(vand) == 3);
  CHECK(rank(vand.to_float()) == 3);
}

TEST_CASE("rank agreement on 200 random rational matrices") {
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    std::mt19937_64 rng = make_rng(derive_seed(11, trial));
    std::uniform_int_distribution<std::size_t> rows_d(1, 8);
    std::uniform_int_distribution<std::size_t> cols_d(1, 12);
    const std::size_t rows = rows_d(rng);
    const std::size_t cols = cols_d(rng);
    const Matrix m = testing::random_rational_matrix(rows, cols, derive_seed(12, trial));
    CAPTURE(trial);
    CHECK(rank(m) == rank(m.to_float()));
  }
}

TEST_CASE("null space, exact standard form") {
  // [[1,0,1],[0,1,1]] has kernel spanned by (-1,-1,1).
  Matrix m(2, 3, Field::Exact);
  m.exact_at(0, 0) = 1;
  m.exact_at(0, 2) = 1;
  m.exact_at(1, 1) = 1;
  m.exact_at(1, 2) = 1;
  const Matrix basis = null_space_basis(m);
  REQUIRE(basis.rows() == 3);
  REQUIRE(basis.cols() == 1);
  CHECK(basis.exact_at(0, 0) == Rational(-1));
  CHECK(basis.exact_at(1, 0) == Rational(-1));
  CHECK(basis.exact_at(2, 0) == Rational(1));
  CHECK((m * basis).is_zero());

  // Full column rank: empty kernel.
  CHECK(null_space_basis(exact3x3({1, 1, 1, 1, 2, 4, 1, 3, 9})).cols() == 0);
}

TEST_CASE("null space, float orthonormal") {
  Matrix m(2, 3, Field::Float);
  m.float_at(0, 0) = 1;
  m.float_at(0, 2) = 1;
  m.float_at(1, 1) = 1;
  m.float_at(1, 2) = 1;
  const Matrix basis = null_space_basis(m);
  REQUIRE(basis.cols() == 1);
  const Vector b = basis.column(0);
  CHECK(std::abs(b.norm() - 1.0) < 1e-12);
  CHECK((m * basis).max_abs() < 1e-12);
  // Direction matches (-1,-1,1)/sqrt(3) up to sign.
  const double s = b.float_at(2) > 0 ? 1.0 : -1.0;
  const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
  CHECK(std::abs(s * b.float_at(0) + inv_sqrt3) < 1e-12);
  CHECK(std::abs(s * b.float_at(1) + inv_sqrt3) < 1e-12);
  CHECK(std::abs(s * b.float_at(2) - inv_sqrt3) < 1e-12);
}

TEST_CASE("null space residual on random rank-deficient float matrices") {
  const ToleranceConfig tol;
  for (std::uint64_t trial = 0; trial < 50; ++trial) {
    std::mt19937_64 rng = make_rng(derive_seed(21, trial));
    std::uniform_int_distribution<std::size_t> dim_d(2, 8);
    const std::size_t rows = dim_d(rng);
    const std::size_t cols = dim_d(rng);
    const std::size_t inner = std::min(rows, cols) - 1;
    const Matrix left = testing::random_float_matrix(rows, std::max<std::size_t>(inner, 1),
                                                     derive_seed(22, trial));
    const Matrix right = testing::random_float_matrix(std::max<std::size_t>(inner, 1), cols,
                                                      derive_seed(23, trial));
    const Matrix m = left * right;
    const Matrix basis = null_space_basis(m);
    CAPTURE(trial);
    CHECK(basis.cols() + rank(m) == cols);
    if (basis.cols() > 0) {
      CHECK((m * basis).max_abs() <= tol.witness_tol * std::max(1.0, m.max_abs()));
      // Orthonormal columns.
      const Matrix gram = basis.transpose() * basis;
      CHECK(max_abs_diff(gram, Matrix::identity(basis.cols(), Field::Float)) < 1e-12);
    }
  }
}

TEST_CASE("projection onto column space") {
  // span{(1,1)}: P = [[1/2,1/2],[1/2,1/2]] exactly.
  Matrix a(2, 1, Field::Exact);
  a.exact_at(0, 0) = 1;
  a.exact_at(1, 0) = 1;
  const Matrix p = projection_onto_colspace(a);
  CHECK(p.exact_at(0, 0) == Rational(1, 2));
  CHECK(p.exact_at(0, 1) == Rational(1, 2));
  CHECK(p.exact_at(1, 0) == Rational(1, 2));
  CHECK(p.exact_at(1, 1) == Rational(1, 2));
  CHECK(p * p == p);
  CHECK(p.transpose() == p);

  const Matrix pf = projection_onto_colspace(a.to_float());
  CHECK(max_abs_diff(pf, p.to_float()) < 1e-12);

  // Dependent columns are pruned: [e1, 2*e1] projects onto span{e1}.
  Matrix dep(2, 2, Field::Exact);
  dep.exact_at(0, 0) = 1;
  dep.exact_at(0, 1) = 2;
  const Matrix q = projection_onto_colspace(dep);
  CHECK(q.exact_at(0, 0) == Rational(1));
  CHECK(q.exact_at(0, 1) == Rational(0));
  CHECK(q.exact_at(1, 1) == Rational(0));
}

TEST_CASE("projection properties on random float matrices") {
  for (std::uint64_t trial = 0; trial < 50; ++trial) {
    std::mt19937_64 rng = make_rng(derive_seed(31, trial));
    std::uniform_int_distribution<std::size_t> dim_d(1, 8);
    const std::size_t rows = dim_d(rng);
    const std::size_t cols = dim_d(rng);
    const Matrix a = testing::random_float_matrix(rows, cols, derive_seed(32, trial));
    const Matrix p = projection_onto_colspace(a);
    CAPTURE(trial);
    CHECK(max_abs_diff(p * p, p) < 1e-10);
    CHECK(max_abs_diff(p.transpose(), p) < 1e-12);
    CHECK(max_abs_diff(p * a, a) < 1e-9 * std::max(1.0, a.max_abs()));
  }
}

TEST_CASE("symmetric eigendecomposition") {
  Matrix s(2, 2, Field::Float);
  s.float_at(0, 0) = 2;
  s.float_at(0, 1) = 1;
  s.float_at(1, 0) = 1;
  s.float_at(1, 1) = 2;
  const auto [values, vectors] = symmetric_eigen(s);
  REQUIRE(values.size() == 2);
  CHECK(std::abs(values[0] - 3.0) < 1e-12);
  CHECK(std::abs(values[1] - 1.0) < 1e-12);
  // Descending order, orthonormal eigenvectors, S v = lambda v.
  for (std::size_t k = 0; k < 2; ++k) {
    const Vector v = vectors.column(k);
    CHECK(std::abs(v.norm() - 1.0) < 1e-12);
    CHECK(max_abs_diff(s * v, v.scaled(Scalar(values[k]))) < 1e-12);
  }

  Matrix ns(2, 2, Field::Float);
  ns.float_at(0, 1) = 1;  // not symmetric
  CHECK_THROWS_AS(symmetric_eigen(ns), Error);
  CHECK_THROWS_AS(symmetric_eigen(Matrix(2, 3, Field::Float)), Error);
}

TEST_CASE("inverse square root of SPD matrices") {
  Matrix d(2, 2, Field::Float);
  d.float_at(0, 0) = 4;
  d.float_at(1, 1) = 9;
  const Matrix r = inv_sqrt_psd(d);
  CHECK(std::abs(r.float_at(0, 0) - 0.5) < 1e-14);
  CHECK(std::abs(r.float_at(1, 1) - 1.0 / 3.0) < 1e-14);
  CHECK(std::abs(r.float_at(0, 1)) < 1e-14);

  Matrix indef(2, 2, Field::Float);
  indef.float_at(0, 0) = 1;
  indef.float_at(0, 1) = 2;
  indef.float_at(1, 0) = 2;
  indef.float_at(1, 1) = 1;
  CHECK_THROWS_AS(inv_sqrt_psd(indef), Error);

  Matrix psd(2, 2, Field::Float);
  psd.float_at(0, 0) = 1;  // second eigenvalue is 0
  CHECK_THROWS_AS(inv_sqrt_psd(psd), Error);

  const ToleranceConfig tol;
  for (std::uint64_t trial = 0; trial < 25; ++trial) {
    const Matrix s = testing::random_spd(5, derive_seed(41, trial), 1e-3, 1e3);
    const Matrix rr = inv_sqrt_psd(s);
    CAPTURE(trial);
    CHECK(max_abs_diff(rr * s * rr, Matrix::identity(5, Field::Float)) < tol.witness_tol);
  }
}

TEST_CASE("orthonormal kernel basis with canonical signs") {
  // Synthesis of the Parseval frame {(1,0), (0,1/sqrt2), (0,1/sqrt2)}.
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Matrix t_star(2, 3, Field::Float);
  t_star.float_at(0, 0) = 1;
  t_star.float_at(1, 1) = inv_sqrt2;
  t_star.float_at(1, 2) = inv_sqrt2;
  const Matrix b = orthonormal_kernel_basis(t_star);
  REQUIRE(b.rows() == 3);
  REQUIRE(b.cols() == 1);
  CHECK(std::abs(b.float_at(0, 0)) < 1e-12);
  CHECK(std::abs(b.float_at(1, 0) - inv_sqrt2) < 1e-12);
  CHECK(std::abs(b.float_at(2, 0) + inv_sqrt2) < 1e-12);

  // Deterministic: a second call gives bit-identical output.
  const Matrix b2 = orthonormal_kernel_basis(t_star);
  CHECK(b == b2);
}

TEST_CASE("independent columns are chosen greedily from the left") {
  Matrix m(2, 3, Field::Exact);
  m.exact_at(0, 0) = 1;  // e1
  m.exact_at(0, 1) = 2;  // 2 e1
  m.exact_at(1, 2) = 1;  // e3 -> e2 direction
  const std::vector<std::size_t> idx = independent_columns(m);
  REQUIRE(idx.size() == 2);
  CHECK(idx[0] == 0);
  CHECK(idx[1] == 2);
  CHECK(independent_columns(m.to_float()) == idx);
}

TEST_CASE("exact solve") {
  Matrix a(2, 2, Field::Exact);
  a.exact_at(0, 0) = 1;
  a.exact_at(0, 1) = 1;
  a.exact_at(1, 1) = 1;
  Vector b(2, Field::Exact);
  b.exact_at(0) = 3;
  b.exact_at(1) = 2;
  const auto x = solve_exact(a, b);
  REQUIRE(x.has_value());
  CHECK(x->exact_at(0) == Rational(1));
  CHECK(x->exact_at(1) == Rational(2));

  Matrix bad(2, 1, Field::Exact);
  bad.exact_at(0, 0) = 1;
  bad.exact_at(1, 0) = 1;
  Vector rhs(2, Field::Exact);
  rhs.exact_at(0) = 1;
  rhs.exact_at(1) = 2;
  CHECK(!solve_exact(bad, rhs).has_value());
}

TEST_CASE("matrix inverse") {
  const Matrix vand = exact3x3({1, 1, 1, 1, 2, 4, 1, 3, 9});
  const Matrix inv = invert(vand);
  CHECK(vand * inv == Matrix::identity(3, Field::Exact));
  CHECK(inv * vand == Matrix::identity(3, Field::Exact));

  const Matrix invf = invert(vand.to_float());
  CHECK(max_abs_diff(invf, inv.to_float()) < 1e-12);

  Matrix sing(2, 2, Field::Exact);
  sing.exact_at(0, 0) = 1;
  sing.exact_at(1, 0) = 1;
  CHECK_THROWS_AS(invert(sing), Error);

  Matrix near_sing(2, 2, Field::Float);
  near_sing.float_at(0, 0) = 1;
  near_sing.float_at(0, 1) = 1;
  near_sing.float_at(1, 0) = 1;
  near_sing.float_at(1, 1) = 1 + 1e-14;
  CHECK_THROWS_AS(invert(near_sing), Error);
}

TEST_CASE("condition estimate") {
  Matrix d(2, 2, Field::Float);
  d.float_at(0, 0) = 10;
  d.float_at(1, 1) = 2;
  CHECK(std::abs(condition_estimate(d) - 5.0) < 1e-12);
  Matrix sing(2, 2, Field::Float);
  sing.float_at(0, 0) = 1;
  CHECK(std::isinf(condition_estimate(sing)));
}

TEST_CASE("tolerance validation") {
  ToleranceConfig bad;
  bad.rank_rel_tol = 0;
  CHECK_THROWS_AS(rank(Matrix::identity(2, Field::Float), bad), Error);
}
