#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "specseq/ahss.hpp"
#include "specseq/random.hpp"

using namespace specseq;

namespace {

const Ring ZZ = Ring::integers();

std::vector<Scalar> orders(const FgModule& m) {
  std::vector<Scalar> out = m.invariant_factors;
  out.insert(out.end(), m.free_rank, Scalar(0));
  return out;
}

}  // namespace

TEST_CASE("standard CW complexes are valid") {
  for (const auto& X : CWComplex::standard()) {
    CAPTURE(X.name);
    CHECK(validate(X).empty());
  }
  CWComplex bad = CWComplex::torus();
  bad.boundary[2] = Matrix::from_ints(ZZ, {{1}, {0}});
  bad.boundary[1] = Matrix::from_ints(ZZ, {{1, 0}});
  CHECK_FALSE(validate(bad).empty());
  CHECK(CWComplex::sphere(3).cells == std::vector<std::size_t>{1, 0, 0, 1});
}

TEST_CASE("oracle: integral cellular homology") {
  const auto rp2 = CWComplex::real_projective_plane();
  CHECK(oracle::cellular_homology(rp2, 0).free_rank == 1);
  CHECK(oracle::cellular_homology(rp2, 1).torsion == std::vector<mpz_class>{2});
  CHECK(oracle::cellular_homology(rp2, 2).free_rank == 0);
  CHECK(oracle::cellular_homology(CWComplex::torus(), 1).free_rank == 2);
  CHECK(oracle::cellular_betti_mod(rp2, 2, 2) == 1);
}

TEST_CASE("RP2 with Z coefficients has E_2 = (Z, 0, Z/2)") {
  const FilteredComplex F = skeletal_filtration(CWComplex::real_projective_plane(), zero_differential_complex(ZZ, {0}));
  const Page E2 = er_classical(F, 2);
  // cohomological (s, 0) is internal (-s, 0)
  CHECK(orders(E2.module_at({0, 0})) == std::vector<Scalar>{0});
  CHECK(E2.module_at({-1, 0}).is_zero());
  CHECK(orders(E2.module_at({-2, 0})) == std::vector<Scalar>{2});
  CHECK(E2.nonzero_positions().size() == 2);
}

TEST_CASE("E_2 of the skeletal filtration is cellular cohomology") {
  for (const Ring& R : {ZZ, Ring::rationals(), Ring::prime_field(2), Ring::prime_field(3)})
    for (const std::vector<int>& degrees : {std::vector<int>{0}, std::vector<int>{0, -2}, std::vector<int>{1}})
      for (const auto& X : CWComplex::standard()) {
        CAPTURE(X.name);
        CAPTURE(R.name());
        const FilteredComplex F = skeletal_filtration(X, zero_differential_complex(R, degrees));
        REQUIRE(validate(F).empty());
        const Page E2 = er_classical(F, 2);
        for (int s = -1; s <= X.dimension() + 1; ++s)
          for (int t = -4; t <= 4; ++t) {
            std::vector<Scalar> expect;
            // H^t(M) = H_{-t}(M) is R when -t is one of the degrees
            if (std::find(degrees.begin(), degrees.end(), -t) != degrees.end()) expect = oracle::uct_cohomology(X, s, R);
            CHECK(orders(E2.module_at({-s, -t})) == expect);
          }
      }
}

TEST_CASE("point: skeletal filtration is ins^0 on M") {
  const ChainComplex M = zero_differential_complex(ZZ, {0, -2});
  const FilteredComplex F = skeletal_filtration(CWComplex::point(), M);
  CHECK(F.same_filtration(inserted_filtration(F.complex(), 0)));
}

TEST_CASE("Whitehead coefficient filtration") {
  const ChainComplex M = zero_differential_complex(ZZ, {0, -2});
  const FilteredComplex G = whitehead_filtration_coeff(CWComplex::sphere(2), M);
  REQUIRE(validate(G).empty());
  CHECK(G.graded_lo() == -2);
  CHECK(G.graded_hi() == 0);
  for (int w = -5; w <= 5; ++w)
    for (int n = G.min_degree(); n <= G.max_degree(); ++n)
      if (w != -2 && w != 0) CHECK(graded_piece_module(G, w, n).is_zero());
  // equals Dec of the skeletal filtration
  CHECK(deligne_decalage(skeletal_filtration(CWComplex::sphere(2), M)).same_filtration(G));
}

TEST_CASE("Maunder comparison on the standard spaces") {
  for (const auto& X : CWComplex::standard())
    for (const std::vector<int>& degrees : {std::vector<int>{0}, std::vector<int>{0, -2}}) {
      CAPTURE(X.name);
      const MaunderReport rep = maunder_compare(X, zero_differential_complex(ZZ, degrees), 4);
      CHECK(rep.ok());
      CHECK(rep.comparisons > 0);
    }
  auto rng = instance_rng(61, 0);
  for (int i = 0; i < 10; ++i) {
    const ChainComplex M = random_chain_complex(ZZ, rng);
    CHECK(maunder_compare(CWComplex::standard()[i % 5], M, 4).ok());
  }
}

TEST_CASE("Maunder comparison notices a shifted Whitehead filtration") {
  const CWComplex X = CWComplex::torus();
  const ChainComplex M = zero_differential_complex(ZZ, {0, -2});
  const FilteredComplex G = shifted_filtration(whitehead_filtration_coeff(X, M), 1);
  CHECK_FALSE(maunder_compare(skeletal_filtration(X, M), G, 4).ok());
}
