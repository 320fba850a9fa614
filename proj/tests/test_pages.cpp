#include <doctest.h>

#include "oracles.hpp"
#include "specseq/pages.hpp"
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

}  // namespace

TEST_CASE("toy-d2 pages under both constructions") {
  const FilteredComplex F = toy_d2();
  for (bool lurie : {false, true}) {
    CAPTURE(lurie);
    auto page = [&](int r) { return lurie ? er_lurie(F, r) : er_classical(F, r); };
    const Page E1 = page(1), E2 = page(2), E3 = page(3);
    CHECK(E1.nonzero_positions() == std::vector<Bidegree>{{-2, 2}, {0, 1}});
    CHECK(orders(E1.module_at({0, 1})) == Z{0});
    CHECK(orders(E1.module_at({-2, 2})) == Z{0});
    CHECK(E1.differential_at({0, 1}).is_zero());
    CHECK(E2.nonzero_positions() == std::vector<Bidegree>{{-2, 2}, {0, 1}});
    CHECK(E2.target({0, 1}) == Bidegree{-2, 2});
    const Matrix d = E2.differential_at({0, 1});
    REQUIRE(d.rows() == 1);
    REQUIRE(d.cols() == 1);
    CHECK(d(0, 0) == 1);
    CHECK(E3.nonzero_positions().empty());
  }
  CHECK(einfty_page(F).nonzero_positions().empty());
  CHECK(F.stabilization_index() == 3);
}

TEST_CASE("p-adic fixture degenerates at E^1") {
  const FilteredComplex F = truncated_padic(3, 3);
  const Page E1 = er_classical(F, 1);
  CHECK(orders(E1.module_at({0, 0})) == Z{3});
  CHECK(orders(E1.module_at({-1, 1})) == Z{3});
  CHECK(orders(E1.module_at({-2, 2})) == Z{3});
  CHECK(orders(E1.module_at({-3, 3})) == Z{0});
  CHECK(E1.nonzero_positions().size() == 4);
  CHECK(compare_pages(E1, einfty_page(F), Transform2::identity()).empty());
  CHECK(compare_pages(er_lurie(F, 2), E1, Transform2::identity()).empty());
  CHECK(convergence_mismatches(F, einfty_page(F)).empty());
}

TEST_CASE("Whitehead filtration: E^1 = E^infty") {
  auto rng = instance_rng(31, 0);
  for (int i = 0; i < 20; ++i) {
    const FilteredComplex W = whitehead_filtration(random_chain_complex(ZZ, rng, 4, 3));
    CHECK(compare_pages(er_classical(W, 1), einfty_page(W), Transform2::identity()).empty());
  }
}

TEST_CASE("zero complex gives empty pages") {
  const FilteredComplex F(ChainComplex::zero(ZZ), {}, TailHigh::Zero);
  CHECK(er_classical(F, 1).nonzero_positions().empty());
  CHECK(er_lurie(F, 3).nonzero_positions().empty());
  CHECK(einfty_page(F).nonzero_positions().empty());
  CHECK(boundedness_class(F).support_empty);
}

TEST_CASE("boundedness classification") {
  const BoundednessClass b = boundedness_class(toy_d2());
  CHECK_FALSE(b.support_empty);
  CHECK(b.s_min == -2);
  CHECK(b.s_max == 0);
  CHECK(b.t_min == 1);
  CHECK(b.t_max == 2);
  CHECK(b.column_bounded);
  CHECK(b.row_bounded);
  CHECK(b.complete);
  CHECK(b.exhaustive);
  const ChainComplex C(ZZ, 0, {1, 1}, {{1, Matrix::from_ints(ZZ, {{2}})}});
  const BoundednessClass s = boundedness_class(stupid_filtration(C));
  CHECK(s.column_bounded);
  CHECK(s.complete);
  CHECK_FALSE(boundedness_class(constant_filtration(C)).complete);
}

TEST_CASE("convergence fails without completeness") {
  // M_1 = <a>, M_0 = <b>, da = b; F^s = M for s <= 0 and <b> for every s >= 1.
  const ChainComplex C(ZZ, 0, {1, 1}, {{1, Matrix::from_ints(ZZ, {{1}})}});
  FilteredComplex::Steps steps;
  steps.emplace(1, std::vector<Span>{Span::full(ZZ, 1), Span(ZZ, 1)});
  const FilteredComplex F(C, steps, TailHigh::Constant);
  REQUIRE(validate(F).empty());
  CHECK_FALSE(boundedness_class(F).complete);
  // a survives to E^infty although H_1 = 0
  CHECK(orders(einfty_page(F).module_at({0, 1})) == Z{0});
  CHECK_FALSE(convergence_mismatches(F, einfty_page(F)).empty());
}

TEST_CASE("Lurie pages match a brute-force image computation over F_2") {
  const Ring F2 = Ring::prime_field(2);
  auto rng = instance_rng(32, 0);
  int nontrivial = 0;
  for (int i = 0; i < 60; ++i) {
    const FilteredComplex F = random_filtered_complex(F2, rng);
    if (F.complex().empty() || F.graded_empty()) continue;
    for (int r = 1; r <= F.stabilization_index() + 1; ++r) {
      const Page L = er_lurie(F, r), C = er_classical(F, r);
      for (int p = F.graded_lo() - 1; p <= F.graded_hi() + 1; ++p)
        for (int n = F.min_degree(); n <= F.max_degree(); ++n) {
          const Bidegree x{-p, p + n};
          const int expect = oracle::lurie_dim_f2(F, r, p, n);
          CHECK(static_cast<int>(L.module_at(x).free_rank) == expect);
          CHECK(static_cast<int>(C.module_at(x).free_rank) == expect);
          if (r > 1 && !C.differential_at(x).is_zero()) ++nontrivial;
        }
    }
  }
  CHECK(nontrivial > 10);
}

TEST_CASE("pages turn and d o d vanishes") {
  auto rng = instance_rng(33, 0);
  for (const Ring& R : {ZZ, Ring::prime_field(5), Ring::rationals()})
    for (int i = 0; i < 25; ++i) {
      const FilteredComplex F = random_filtered_complex(R, rng);
      const auto pages = classical_pages(F, F.stabilization_index() + 1);
      for (std::size_t r = 0; r + 1 < pages.size(); ++r) {
        CHECK(dd_failures(pages[r]).empty());
        CHECK(check_page_turning(pages[r], pages[r + 1], true).ok());
        CHECK(check_page_turning(er_lurie(F, static_cast<int>(r) + 1), pages[r + 1], false).ok());
      }
      CHECK(compare_pages(pages.back(), einfty_page(F), Transform2::identity()).empty());
    }
}

TEST_CASE("compare_pages notices a changed term") {
  const FilteredComplex F = truncated_padic(2, 2);
  const Page P = er_classical(F, 1);
  Page Q = P;
  Q.terms.erase(Bidegree{-1, 1});
  const auto ms = compare_pages(P, Q, Transform2::identity());
  REQUIRE_FALSE(ms.empty());
  CHECK(ms[0].what == "term");
  for (const auto& m : ms) CHECK(m.p_pos == Bidegree{-1, 1});
}

TEST_CASE("page homology and differential image") {
  const Page E2 = er_classical(toy_d2(), 2);
  CHECK(page_homology(E2, {0, 1}).is_zero());
  CHECK(page_homology(E2, {-2, 2}).is_zero());
  CHECK(differential_kernel(E2, {0, 1}).is_zero());
  CHECK(orders(differential_image(E2, {0, 1})) == Z{0});
}
