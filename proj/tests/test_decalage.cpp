#include <doctest.h>

#include "specseq/decalage.hpp"
#include "specseq/indexing.hpp"
#include "specseq/random.hpp"

using namespace specseq;

namespace {

const Ring ZZ = Ring::integers();

std::vector<Scalar> orders(const FgModule& m) {
  std::vector<Scalar> out = m.invariant_factors;
  out.insert(out.end(), m.free_rank, Scalar(0));
  return out;
}

using Z = std::vector<Scalar>;

// tau_{>=s} as spans: all of C_n above s, the cycles at s, nothing below.
Span truncation_span(const ChainComplex& C, int s, int n) {
  if (n > s) return Span::full(C.ring(), C.rank(n));
  if (n == s) return C.cycles(n);
  return Span(C.ring(), C.rank(n));
}

}  // namespace

TEST_CASE("decalage of toy-d2") {
  const FilteredComplex F = toy_d2();
  const FilteredComplex D = deligne_decalage(F);
  REQUIRE(validate(D).empty());
  for (int s = -3; s <= 5; ++s) {
    CAPTURE(s);
    CHECK(D.step(s, 1).is_full() == (s <= 1));
    CHECK(D.step(s, 1).is_zero() == (s > 1));
    CHECK(D.step(s, 0).is_full() == (s <= 2));
    CHECK(D.step(s, 0).is_zero() == (s > 2));
  }
  const Page E1 = er_classical(D, 1);
  CHECK(E1.nonzero_positions() == std::vector<Bidegree>{{-2, 2}, {-1, 2}});
  CHECK(orders(E1.module_at({-1, 2})) == Z{0});
  const Matrix d = E1.differential_at({-1, 2});
  REQUIRE(d.rows() == 1);
  CHECK(ZZ.is_unit(d(0, 0)));
  CHECK(er_classical(D, 2).nonzero_positions().empty());
}

TEST_CASE("decalage of the inserted filtration is the truncation tower") {
  auto rng = instance_rng(41, 0);
  for (int i = 0; i < 30; ++i) {
    const ChainComplex C = random_chain_complex(i % 2 ? ZZ : Ring::prime_field(3), rng, 4, 3);
    const FilteredComplex D = deligne_decalage(inserted_filtration(C, 0));
    for (int s = C.min_degree() - 2; s <= C.max_degree() + 2; ++s)
      for (int n = C.min_degree(); n <= C.max_degree(); ++n) CHECK(D.step(s, n) == truncation_span(C, s, n));
  }
}

TEST_CASE("decalage of a constant filtration is constant") {
  auto rng = instance_rng(42, 0);
  for (int i = 0; i < 20; ++i) {
    const FilteredComplex K = constant_filtration(random_chain_complex(ZZ, rng, 4, 3));
    CHECK(deligne_decalage(K).same_filtration(K));
  }
}

TEST_CASE("iterates") {
  auto rng = instance_rng(43, 0);
  for (int i = 0; i < 20; ++i) {
    const FilteredComplex F = random_filtered_complex(ZZ, rng);
    CHECK(decalage_iterate(F, 0).same_filtration(F));
    CHECK(decalage_iterate(F, 1).same_filtration(deligne_decalage(F)));
    const FilteredComplex D3 = decalage_iterate(F, 3);
    CHECK(validate(D3).empty());
    CHECK(D3.same_filtration(deligne_decalage(deligne_decalage(deligne_decalage(F)))));
  }
  // toy-d2 has E^3 = 0, so E^1(Dec^2) vanishes
  CHECK(er_classical(decalage_iterate(toy_d2(), 2), 1).nonzero_positions().empty());
}

TEST_CASE("secondary filtration") {
  const FilteredComplex F = toy_d2();
  const FilteredComplex D = deligne_decalage(F);
  for (int s = -1; s <= 3; ++s)
    for (int n = 0; n <= 1; ++n) {
      CHECK(secondary_step(F, s, -10, n) == D.step(s, n));
      CHECK(secondary_step(F, s, 10, n).is_zero());
    }
  // s = 1: G^w in degree 0 is F^{max(w,1)} M_0
  CHECK(secondary_step(F, 1, 2, 0).is_full());
  CHECK(secondary_step(F, 1, 3, 0).is_zero());
  const FilteredComplex G = secondary_filtration(F, 1);
  CHECK(validate(G).empty());
  CHECK(G.complex().total_rank() == 2);
  const Subcomplex sub = decalage_subcomplex(F, 2);
  CHECK(sub.complex.total_rank() == 1);
}

TEST_CASE("graded identity on toy-d2 and ins^0") {
  const FilteredComplex F = toy_d2();
  for (int s = -1; s <= 4; ++s)
    for (int w = -1; w <= 4; ++w) {
      CAPTURE(s);
      CAPTURE(w);
      CHECK(truncation_graded_check(F, s, w).ok);
    }
  const ChainComplex C(ZZ, 0, {1, 1}, {{1, Matrix::from_ints(ZZ, {{2}})}});
  CHECK(truncation_graded_check(inserted_filtration(C, 0), 0, 0).ok);
}

TEST_CASE("E^1(Dec) -> E^2 comparison map") {
  const ComparisonReport rep = comparison_map_e1_to_e2(toy_d2());
  CHECK(rep.ok());
  bool seen = false;
  for (const auto& b : rep.blocks) {
    if (b.f_pos != Bidegree{0, 1}) continue;
    seen = true;
    CHECK(b.dec_pos == Bidegree{-1, 2});
    REQUIRE(b.map.rows() == 1);
    REQUIRE(b.map.cols() == 1);
    CHECK(ZZ.is_unit(b.map(0, 0)));
  }
  CHECK(seen);
  auto rng = instance_rng(44, 0);
  for (int i = 0; i < 30; ++i) CHECK(comparison_map_e1_to_e2(random_filtered_complex(ZZ, rng)).ok());
}

TEST_CASE("comparison map is natural") {
  auto rng = instance_rng(45, 0);
  for (int i = 0; i < 15; ++i) {
    const FilteredComplex F = random_filtered_complex(ZZ, rng);
    if (F.graded_empty()) continue;
    const FilteredComplex G = shifted_filtration(F, 1);
    FilteredMap id{&F, &G, {}};
    for (int n = F.min_degree(); n <= F.max_degree(); ++n) id.components.emplace(n, Matrix::identity(ZZ, F.complex().rank(n)));
    REQUIRE(is_filtered_map(id));
    CHECK(comparison_naturality(id).empty());

    const SubfiltrationInclusion inc = subfiltration_inclusion(F, F.graded_lo() + 1);
    FilteredMap incl{&inc.sub, &F, inc.inclusion};
    REQUIRE(is_filtered_map(incl));
    CHECK(comparison_naturality(incl).empty());
  }
}

TEST_CASE("decalage turns the page on a small corpus") {
  const Transform2 A1 = page_shift_transform(1).first;
  auto rng = instance_rng(46, 0);
  for (int i = 0; i < 30; ++i) {
    const FilteredComplex F = random_filtered_complex(Ring::prime_field(2), rng);
    const FilteredComplex D = deligne_decalage(F);
    for (int r = 1; r <= 3; ++r) CHECK(compare_pages(er_classical(F, r + 1), er_classical(D, r), A1).empty());
  }
}
