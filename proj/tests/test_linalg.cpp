#include <doctest.h>

#include <random>
#include <set>

#include "specseq/linalg.hpp"

using namespace specseq;

namespace {

Matrix random_matrix(const Ring& ring, std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Matrix m(ring, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = ring.from_int(dist(rng));
  return m;
}

// Determinant by cofactor expansion; only for tiny matrices.
Scalar det(const std::vector<std::vector<Scalar>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Scalar s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (sgn(a[0][j]) == 0) continue;
    std::vector<std::vector<Scalar>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Scalar> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(row);
    }
    Scalar term = a[0][j] * det(minor);
    s += (j % 2 == 0) ? term : Scalar(-term);
  }
  return s;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors of an integer matrix from gcds of k x k minors.
std::vector<Scalar> determinantal_invariants(const Matrix& A) {
  std::vector<Scalar> out;
  mpz_class prev = 1;
  for (std::size_t k = 1; k <= std::min(A.rows(), A.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(A.rows(), k, 0, cur, rs);
    subsets(A.cols(), k, 0, cur, cs);
    mpz_class g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<Scalar>> sub(k, std::vector<Scalar>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = A(r[i], c[j]);
        mpz_class d = det(sub).get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    if (g == 0) break;
    out.push_back(Scalar(mpz_class(g / prev)));
    prev = g;
  }
  return out;
}

// All vectors of the F_2-span of gens, encoded as bitmasks.
std::set<unsigned> f2_span(const std::vector<Vector>& gens) {
  std::set<unsigned> out{0};
  for (const auto& g : gens) {
    unsigned mask = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] != 0) mask |= 1u << i;
    std::set<unsigned> next = out;
    for (unsigned v : out) next.insert(v ^ mask);
    out = next;
  }
  return out;
}

Vector from_mask(unsigned mask, std::size_t m) {
  Vector v(m);
  for (std::size_t i = 0; i < m; ++i) v[i] = (mask >> i) & 1u;
  return v;
}

}  // namespace

TEST_CASE("smith normal form of a small integer matrix") {
  Ring Z = Ring::integers();
  Matrix A = Matrix::from_ints(Z, {{2, 4}, {0, 6}});
  SmithForm s = smith_normal_form(A);
  CHECK(s.diagonal == std::vector<Scalar>{2, 6});
  CHECK(s.U * A * s.V == smith_diagonal_matrix(s, 2, 2));
}

TEST_CASE("kernel of [1 1]") {
  Ring Z = Ring::integers();
  Matrix K = kernel_basis(Matrix::from_ints(Z, {{1, 1}}));
  REQUIRE(K.cols() == 1);
  Vector k = K.column(0);
  CHECK(((k == Vector{1, -1}) || (k == Vector{-1, 1})));
}

TEST_CASE("subquotient 2Z / 4Z") {
  Ring Z = Ring::integers();
  Span N = Span::generated_by(Z, 1, {{2}});
  Span D = Span::generated_by(Z, 1, {{4}});
  Subquotient q(N, D);
  CHECK(q.module().free_rank == 0);
  CHECK(q.module().invariant_factors == std::vector<Scalar>{2});
  CHECK(q.module().to_string() == "Z/2");
  CHECK(*q.coordinates({6}) == Vector{1});
  CHECK(*q.coordinates({8}) == Vector{0});
  CHECK_FALSE(q.coordinates({3}).has_value());
}

TEST_CASE("smith form against determinantal divisors") {
  Ring Z = Ring::integers();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    Matrix A = random_matrix(Z, rng, r, c, -6, 6);
    SmithForm s = smith_normal_form(A);
    CHECK(s.U * A * s.V == smith_diagonal_matrix(s, r, c));
    inverse(s.U);  // throws unless unimodular
    inverse(s.V);
    std::vector<Scalar> nz(s.diagonal.begin(), s.diagonal.begin() + static_cast<long>(s.rank));
    CHECK(nz == determinantal_invariants(A));
  }
}

TEST_CASE("smith form over fields is diag(1..1,0..0)") {
  for (Ring R : {Ring::rationals(), Ring::prime_field(5)}) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
      Matrix A = random_matrix(R, rng, 3, 4, -2, 2);
      SmithForm s = smith_normal_form(A);
      CHECK(s.U * A * s.V == smith_diagonal_matrix(s, 3, 4));
      for (std::size_t i = 0; i < s.diagonal.size(); ++i) CHECK(s.diagonal[i] == (i < s.rank ? 1 : 0));
    }
  }
}

TEST_CASE("echelon form is canonical and spans agree") {
  Ring Z = Ring::integers();
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Matrix G = random_matrix(Z, rng, 3, 4, -4, 4);
    Span a = Span::of_columns(G);
    // random unimodular recombination of the generators
    Matrix E = Matrix::identity(Z, 4);
    for (int k = 0; k < 5; ++k) {
      std::size_t i = rng() % 4, j = rng() % 4;
      if (i == j) continue;
      Matrix el = Matrix::identity(Z, 4);
      el(i, j) = Z.from_int(static_cast<long>(rng() % 5) - 2);
      E = E * el;
    }
    Span b = Span::of_columns(G * E);
    CHECK(a == b);
    for (const auto& v : G.column_list()) CHECK(a.contains(v));
  }
}

TEST_CASE("kernel and solve") {
  for (Ring R : {Ring::integers(), Ring::rationals(), Ring::prime_field(3)}) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
      Matrix A = random_matrix(R, rng, 2 + rng() % 2, 4, -3, 3);
      Matrix K = kernel_basis(A);
      CHECK((A * K).is_zero());
      CHECK(Span::of_columns(K).is_saturated());
      Vector x(4);
      for (auto& e : x) e = R.from_int(static_cast<long>(rng() % 7) - 3);
      Vector b = A.apply(x);
      auto y = solve(A, b);
      REQUIRE(y.has_value());
      CHECK(A.apply(*y) == b);
      // rank-nullity
      std::size_t rank = Span::of_columns(A).rank();
      CHECK(K.cols() + rank == 4);
    }
  }
}

TEST_CASE("span lattice operations") {
  Ring Z = Ring::integers();
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    Span a = Span::of_columns(random_matrix(Z, rng, 3, 2, -3, 3));
    Span b = Span::of_columns(random_matrix(Z, rng, 3, 2, -3, 3));
    Span s = a + b, i = a.intersect(b);
    CHECK(s.contains(a));
    CHECK(s.contains(b));
    CHECK(a.contains(i));
    CHECK(b.contains(i));
    // rank(a+b) + rank(a cap b) = rank a + rank b
    CHECK(s.rank() + i.rank() == a.rank() + b.rank());
    // brute check of the intersection on a box of lattice points
    for (int x = -4; x <= 4; ++x)
      for (int y = -4; y <= 4; ++y) {
        Vector v{x, y, x - y};
        CHECK(i.contains(v) == (a.contains(v) && b.contains(v)));
      }
    Matrix f = random_matrix(Z, rng, 3, 3, -2, 2);
    Span pre = Span::full(Z, 3).preimage(f, a);
    for (int x = -2; x <= 2; ++x)
      for (int y = -2; y <= 2; ++y)
        for (int z = -2; z <= 2; ++z) {
          Vector v{x, y, z};
          CHECK(pre.contains(v) == a.contains(f.apply(v)));
        }
    CHECK(a.saturation().contains(a));
    CHECK(a.saturation().rank() == a.rank());
  }
}

TEST_CASE("saturation of 2Z is Z") {
  Ring Z = Ring::integers();
  Span s = Span::generated_by(Z, 2, {{2, 0}});
  CHECK_FALSE(s.is_saturated());
  CHECK(s.saturation() == Span::generated_by(Z, 2, {{1, 0}}));
}

TEST_CASE("subquotients over F_2 agree with brute-force enumeration") {
  Ring F2 = Ring::prime_field(2);
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t m = 1 + rng() % 6;
    Matrix Nm = random_matrix(F2, rng, m, 1 + rng() % 4, 0, 1);
    Matrix Dm = random_matrix(F2, rng, m, rng() % 3, 0, 1);
    Span N = Span::of_columns(Nm), D = Span::of_columns(Dm);
    auto nset = f2_span(Nm.column_list());
    auto dset = f2_span(Dm.column_list());
    std::set<unsigned> total;
    for (unsigned a : nset)
      for (unsigned b : dset) total.insert(a ^ b);
    Subquotient q(N, D);
    CHECK((std::size_t{1} << q.module().free_rank) * dset.size() == total.size());
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      Vector v = from_mask(mask, m);
      auto c = q.coordinates(v);
      CHECK(c.has_value() == (total.count(mask) > 0));
      if (c) CHECK(is_zero_vector(*c) == (dset.count(mask) > 0));
    }
  }
}

TEST_CASE("subquotient coordinates round-trip through lifts") {
  Ring Z = Ring::integers();
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    Matrix Nm = random_matrix(Z, rng, 3, 3, -3, 3);
    Span N = Span::of_columns(Nm);
    Matrix Dm = Nm * random_matrix(Z, rng, 3, 2, -2, 2);
    Span D = Span::of_columns(Dm);
    Subquotient q(N, D);
    for (std::size_t i = 0; i < q.generators(); ++i) {
      Vector e(q.generators());
      e[i] = 1;
      CHECK(*q.coordinates(q.lift(i)) == q.reduce(e));
    }
    for (const auto& v : Nm.column_list()) {
      auto c = q.coordinates(v);
      REQUIRE(c.has_value());
      Vector diff = v;
      Vector back = q.lift_of(*c);
      for (std::size_t j = 0; j < 3; ++j) diff[j] -= back[j];
      CHECK(D.contains(diff));
    }
    // torsion orders agree with determinantal divisors of the relation matrix
    std::vector<Scalar> inv = determinantal_invariants(Dm);
    std::size_t t = 0;
    for (const auto& d : inv)
      if (d != 1) ++t;
    if (N.rank() == 3 && N.is_saturated()) CHECK(q.module().invariant_factors.size() == t);
  }
}

TEST_CASE("homomorphisms between coordinate modules") {
  Ring Z = Ring::integers();
  // Z/4 --x2--> Z/4
  Matrix F = Matrix::from_ints(Z, {{2}});
  std::vector<Scalar> m{4};
  CHECK(map_respects_relations(F, m, m));
  CHECK(map_kernel(F, m, m).to_string() == "Z/2");
  CHECK(map_image(F, m, m).to_string() == "Z/2");
  CHECK(map_cokernel(F, m, m).to_string() == "Z/2");
  CHECK_FALSE(map_is_zero(F, m));
  // Z --x2--> Z
  std::vector<Scalar> fr{0};
  CHECK(map_kernel(F, fr, fr).is_zero());
  CHECK(map_cokernel(F, fr, fr).to_string() == "Z/2");
  CHECK(FgModule::from_cyclic_orders(Z, {2, 3, 0}).to_string() == "Z+Z/6");
}
