#include <catch2/catch_amalgamated.hpp>

#include <syzygy/linalg.hpp>

#include <random>

using namespace syz;

namespace {

SparseMatrix from_longs(const FieldRef& f, const std::vector<std::vector<long>>& rows) {
  int nr = static_cast<int>(rows.size());
  int nc = nr ? static_cast<int>(rows[0].size()) : 0;
  SparseMatrix A(f, nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j)
      if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0)
        A.set(i, j,
              FieldElement::from_long(
                  f, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
  return A;
}

std::vector<FieldElement> longs(const FieldRef& f, const std::vector<long>& v) {
  std::vector<FieldElement> out;
  for (long x : v) out.push_back(FieldElement::from_long(f, x));
  return out;
}

bool is_zero_vec(const std::vector<FieldElement>& v) {
  for (auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

SparseMatrix random_matrix(const FieldRef& f, int nr, int nc, int rank, std::mt19937& rng) {
  // product of random nr x rank and rank x nc integer matrices
  std::uniform_int_distribution<long> d(-5, 5);
  std::vector<std::vector<long>> L(static_cast<std::size_t>(nr),
                                   std::vector<long>(static_cast<std::size_t>(rank)));
  std::vector<std::vector<long>> R(static_cast<std::size_t>(rank),
                                   std::vector<long>(static_cast<std::size_t>(nc)));
  for (auto& row : L)
    for (auto& x : row) x = d(rng);
  for (auto& row : R)
    for (auto& x : row) x = d(rng);
  SparseMatrix A(f, nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) {
      long s = 0;
      for (int k = 0; k < rank; ++k)
        s += L[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
             R[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      if (s) A.set(i, j, FieldElement::from_long(f, s));
    }
  return A;
}

}  // namespace

TEST_CASE("kernel of the all-ones 2x2 matrix", "[linalg]") {
  auto A = from_longs(field_QQ(), {{1, 1}, {1, 1}});
  auto K = kernel(A);
  REQUIRE(K.rank == 1);
  REQUIRE(K.nullity() == 1);
  REQUIRE(K.basis[0] == longs(field_QQ(), {1, -1}));
  REQUIRE_FALSE(K.primes.empty());
}

TEST_CASE("kernel of a 1x1 zero matrix", "[linalg]") {
  SparseMatrix A(field_QQ(), 1, 1);
  auto K = kernel(A);
  REQUIRE(K.rank == 0);
  REQUIRE(K.nullity() == 1);
  REQUIRE(K.basis[0] == longs(field_QQ(), {1}));
}

TEST_CASE("kernel of the identity is trivial", "[linalg]") {
  auto A = from_longs(field_QQ(), {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  auto K = kernel(A);
  REQUIRE(K.rank == 3);
  REQUIRE(K.nullity() == 0);
}

TEST_CASE("kernel with rational entries", "[linalg]") {
  auto QQ = field_QQ();
  SparseMatrix A(QQ, 1, 2);
  A.set(0, 0, FieldElement::from_rat(QQ, Rat(1, 2)));
  A.set(0, 1, FieldElement::from_rat(QQ, Rat(-1, 3)));
  auto K = kernel(A);
  REQUIRE(K.nullity() == 1);
  REQUIRE(K.basis[0] == longs(QQ, {2, 3}));
}

TEST_CASE("multimodular kernel agrees with exact elimination", "[linalg]") {
  auto QQ = field_QQ();
  std::mt19937 rng(23);
  for (int trial = 0; trial < 12; ++trial) {
    int nr = 3 + static_cast<int>(rng() % 5);
    int nc = 3 + static_cast<int>(rng() % 5);
    int rk = 1 + static_cast<int>(rng() % std::min(nr, nc));
    auto A = random_matrix(QQ, nr, nc, rk, rng);
    auto K = kernel(A);

    DenseMatrix D = to_dense(A);
    RrefInfo info = rref_exact(D);
    REQUIRE(K.rank == info.rank);
    REQUIRE(K.nullity() == nc - info.rank);
    for (auto& v : K.basis) REQUIRE(is_zero_vec(mat_apply(A, v)));
    REQUIRE(bareiss_rank(to_dense(A)) == info.rank);
  }
}

TEST_CASE("kernel over a prime field", "[linalg]") {
  auto F = field_GF(10007);
  auto A = from_longs(F, {{1, 1, 0}, {0, 10006, 1}});
  auto K = kernel(A);
  REQUIRE(K.rank == 2);
  REQUIRE(K.nullity() == 1);
  for (auto& v : K.basis) REQUIRE(is_zero_vec(mat_apply(A, v)));
  // v = (1, -1, -1) up to scale; normalized to leading 1
  REQUIRE(K.basis[0][0] == FieldElement::one(F));
}

TEST_CASE("kernel over the gaussian rationals", "[linalg]") {
  auto K4 = field_QQi();
  auto i = FieldElement::imaginary_unit(K4);
  SparseMatrix A(K4, 1, 2);
  A.set(0, 0, FieldElement::one(K4));
  A.set(0, 1, i);  // x + i y = 0 -> (1, i) direction: x = -i y
  auto K = kernel(A);
  REQUIRE(K.nullity() == 1);
  REQUIRE(is_zero_vec(mat_apply(A, K.basis[0])));
  REQUIRE(K.basis[0][0] == FieldElement::one(K4));
  REQUIRE(K.basis[0][1] == i);  // -(1/i) = i
}

TEST_CASE("bareiss rank over several fields", "[linalg]") {
  auto QQ = field_QQ();
  REQUIRE(bareiss_rank(to_dense(from_longs(QQ, {{1, 2}, {2, 4}}))) == 1);
  REQUIRE(bareiss_rank(to_dense(from_longs(QQ, {{0, 0}, {0, 0}}))) == 0);
  REQUIRE(bareiss_rank(to_dense(from_longs(QQ, {{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}))) == 3);

  auto E = field_extension({Rat(-5), Rat(0), Rat(1)});
  auto t = FieldElement::generator(E);
  DenseMatrix M(E, 2, 2);
  M.at(0, 0) = t;
  M.at(0, 1) = FieldElement::one(E);
  M.at(1, 0) = FieldElement::from_long(E, 5);
  M.at(1, 1) = t;  // det = t^2 - 5 = 0
  REQUIRE(bareiss_rank(M) == 1);
  M.at(1, 1) = t + FieldElement::one(E);
  REQUIRE(bareiss_rank(M) == 2);
}

TEST_CASE("solve returns a verified solution", "[linalg]") {
  auto QQ = field_QQ();
  auto A = from_longs(QQ, {{1, 0}, {0, 1}});
  auto x = solve(A, longs(QQ, {5, 7}));
  REQUIRE(x.has_value());
  REQUIRE(*x == longs(QQ, {5, 7}));

  auto B = from_longs(QQ, {{1, 1}, {1, 1}});
  auto y = solve(B, longs(QQ, {3, 3}));
  REQUIRE(y.has_value());
  REQUIRE(mat_apply(B, *y) == longs(QQ, {3, 3}));

  auto C = from_longs(QQ, {{2, 4}, {1, 2}, {3, 6}});
  auto z = solve(C, longs(QQ, {2, 1, 3}));
  REQUIRE(z.has_value());
  REQUIRE(mat_apply(C, *z) == longs(QQ, {2, 1, 3}));
}

TEST_CASE("solve certifies inconsistency", "[linalg]") {
  auto QQ = field_QQ();
  auto A = from_longs(QQ, {{1}, {1}});
  REQUIRE_FALSE(solve(A, longs(QQ, {1, 2})).has_value());

  auto B = from_longs(QQ, {{1, 1}, {1, 1}});
  REQUIRE_FALSE(solve(B, longs(QQ, {1, 2})).has_value());

  auto F = field_GF(7);
  auto C = from_longs(F, {{1, 1}, {2, 2}});
  REQUIRE_FALSE(solve(C, longs(F, {1, 3})).has_value());
  REQUIRE(solve(C, longs(F, {1, 2})).has_value());
}

TEST_CASE("solve over extension and gaussian fields", "[linalg]") {
  auto K4 = field_QQi();
  auto i = FieldElement::imaginary_unit(K4);
  SparseMatrix A(K4, 2, 2);
  A.set(0, 0, FieldElement::one(K4));
  A.set(0, 1, i);
  A.set(1, 0, -i);
  A.set(1, 1, FieldElement::one(K4));  // rank 1: row1 = -i * row0
  auto sol = solve(A, {FieldElement::from_long(K4, 2), i * FieldElement::from_long(K4, -2)});
  REQUIRE(sol.has_value());
  REQUIRE(mat_apply(A, *sol) ==
          std::vector<FieldElement>{FieldElement::from_long(K4, 2),
                                    i * FieldElement::from_long(K4, -2)});
  REQUIRE_FALSE(solve(A, {FieldElement::from_long(K4, 2), FieldElement::from_long(K4, 2)})
                    .has_value());
}

TEST_CASE("thread count does not change kernel output", "[linalg]") {
  auto QQ = field_QQ();
  std::mt19937 rng(31);
  auto A = random_matrix(QQ, 8, 10, 5, rng);
  KernelOptions one, four;
  one.threads = 1;
  four.threads = 4;
  auto K1 = kernel(A, one), K4 = kernel(A, four);
  REQUIRE(K1.basis == K4.basis);
  REQUIRE(K1.rank == K4.rank);
  REQUIRE(K1.primes == K4.primes);
}

TEST_CASE("requesting more modular witnesses still certifies", "[linalg]") {
  auto QQ = field_QQ();
  std::mt19937 rng(37);
  auto A = random_matrix(QQ, 6, 9, 4, rng);
  KernelOptions opt;
  opt.min_primes = 8;
  auto K = kernel(A, opt);
  REQUIRE(K.primes.size() >= 8);
  REQUIRE(K.nullity() == 5);
  for (auto& v : K.basis) REQUIRE(is_zero_vec(mat_apply(A, v)));
}

TEST_CASE("transpose and apply are consistent", "[linalg]") {
  auto QQ = field_QQ();
  auto A = from_longs(QQ, {{1, 2, 3}, {4, 5, 6}});
  auto At = transpose(A);
  REQUIRE(At.nrows == 3);
  REQUIRE(At.ncols == 2);
  // <A x, y> == <x, A^T y>
  auto x = longs(QQ, {1, -2, 3});
  auto y = longs(QQ, {5, 7});
  auto Ax = mat_apply(A, x);
  auto Aty = mat_apply(At, y);
  FieldElement lhs = Ax[0] * y[0] + Ax[1] * y[1];
  FieldElement rhs = Aty[0] * x[0] + Aty[1] * x[1] + Aty[2] * x[2];
  REQUIRE(lhs == rhs);
}

TEST_CASE("solve_multi matches per-system solve on a mixed batch", "[linalg]") {
  auto QQ = field_QQ();
  std::mt19937 rng(41);
  auto A = random_matrix(QQ, 9, 7, 4, rng);

  std::vector<std::vector<FieldElement>> rhs;
  std::uniform_int_distribution<long> d(-4, 4);
  // Three right-hand sides inside the column space ...
  for (int t = 0; t < 3; ++t) {
    std::vector<long> xs(7);
    for (auto& x : xs) x = d(rng);
    rhs.push_back(mat_apply(A, longs(QQ, xs)));
  }
  // ... and two generic ones, almost surely outside it (rank 4 < 9).
  for (int t = 0; t < 2; ++t) {
    std::vector<long> bs(9);
    for (auto& x : bs) x = d(rng);
    rhs.push_back(longs(QQ, bs));
  }

  auto batch = solve_multi(A, rhs);
  REQUIRE(batch.size() == rhs.size());
  for (std::size_t j = 0; j < rhs.size(); ++j) {
    auto single = solve(A, rhs[j]);
    REQUIRE(batch[j].has_value() == single.has_value());
    if (batch[j]) REQUIRE(mat_apply(A, *batch[j]) == rhs[j]);
  }
  REQUIRE(batch[0].has_value());
  REQUIRE(batch[1].has_value());
  REQUIRE(batch[2].has_value());
}

TEST_CASE("solve_multi handles extension fields and empty batches", "[linalg]") {
  auto F = field_extension({-2, 0, 1});  // x^2 = 2
  auto A = from_longs(F, {{1, 1}, {1, -1}});
  std::vector<std::vector<FieldElement>> rhs;
  auto t = FieldElement::generator(F);
  rhs.push_back({t, FieldElement::zero(F)});
  auto batch = solve_multi(A, rhs);
  REQUIRE(batch.size() == 1);
  REQUIRE(batch[0].has_value());
  REQUIRE(mat_apply(A, *batch[0]) == rhs[0]);

  auto QQ = field_QQ();
  auto B = from_longs(QQ, {{1, 2}, {2, 4}});
  REQUIRE(solve_multi(B, {}).empty());
}
