#include "specseq/ahss.hpp"

#include <algorithm>

#include "specseq/indexing.hpp"

namespace specseq {

ChainComplex CWComplex::chains(const Ring& ring) const {
  std::map<int, Matrix> d;
  for (const auto& [k, m] : boundary) {
    Matrix out(ring, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = ring.normalize(m(i, j));
    d.emplace(k, std::move(out));
  }
  return ChainComplex(ring, 0, cells, std::move(d));
}

CWComplex CWComplex::point() { return {"point", {1}, {}}; }

CWComplex CWComplex::sphere(int n) {
  if (n < 1) throw Error("sphere dimension must be >= 1");
  std::vector<std::size_t> cells(n + 1, 0);
  cells[0] = cells[n] = 1;
  return {"S" + std::to_string(n), cells, {}};
}

CWComplex CWComplex::real_projective_plane() {
  const Ring Z = Ring::integers();
  return {"RP2", {1, 1, 1}, {{1, Matrix::from_ints(Z, {{0}})}, {2, Matrix::from_ints(Z, {{2}})}}};
}

CWComplex CWComplex::torus() {
  const Ring Z = Ring::integers();
  return {"T2", {1, 2, 1}, {{1, Matrix(Z, 1, 2)}, {2, Matrix(Z, 2, 1)}}};
}

CWComplex CWComplex::complex_projective_plane() { return {"CP2", {1, 0, 1, 0, 1}, {}}; }

std::vector<CWComplex> CWComplex::standard() {
  return {point(), sphere(2), real_projective_plane(), torus(), complex_projective_plane()};
}

std::vector<std::string> validate(const CWComplex& X) {
  std::vector<std::string> out;
  if (X.cells.empty()) out.push_back("no cells");
  for (const auto& [k, m] : X.boundary) {
    if (k < 1 || k > X.dimension()) {
      out.push_back("boundary in degree " + std::to_string(k) + " outside the cells");
      continue;
    }
    if (m.rows() != X.cells[k - 1] || m.cols() != X.cells[k])
      out.push_back("boundary " + std::to_string(k) + " has shape " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(i, j).get_den() != 1) out.push_back("boundary " + std::to_string(k) + " has a non-integer entry");
  }
  if (!out.empty()) return out;
  for (const auto& [k, m] : X.boundary) {
    auto it = X.boundary.find(k - 1);
    if (it != X.boundary.end() && !(it->second * m).is_zero())
      out.push_back("boundary " + std::to_string(k - 1) + " o boundary " + std::to_string(k) + " != 0");
  }
  return out;
}

namespace {

struct HomLayout {
  HomComplex hom;
  // offset of the block of source degree k inside Hom_n
  std::map<std::pair<int, int>, std::size_t> offset;
};

HomLayout layout(const ChainComplex& C, const ChainComplex& M) {
  HomLayout L{hom_complex(C, M), {}};
  for (const auto& [n, degs] : L.hom.source_degree)
    for (std::size_t i = 0; i < degs.size(); ++i)
      if (!L.offset.count({n, degs[i]})) L.offset[{n, degs[i]}] = i;
  return L;
}

}  // namespace

FilteredComplex skeletal_filtration(const CWComplex& X, const ChainComplex& M) {
  const HomLayout L = layout(X.chains(M.ring()), M);
  const ChainComplex& H = L.hom.complex;
  FilteredComplex::Steps steps;
  if (!H.empty())
    for (int s = 1; s <= X.dimension() + 1; ++s) {
      std::vector<Span> spans;
      for (int n = H.min_degree(); n <= H.max_degree(); ++n) {
        std::vector<std::size_t> idx;
        auto it = L.hom.source_degree.find(n);
        if (it != L.hom.source_degree.end())
          for (std::size_t i = 0; i < it->second.size(); ++i)
            if (it->second[i] >= s) idx.push_back(i);
        spans.push_back(Span::coordinate(M.ring(), H.rank(n), idx));
      }
      steps.emplace(s, std::move(spans));
    }
  return FilteredComplex(H, std::move(steps), TailHigh::Zero);
}

FilteredComplex whitehead_filtration_coeff(const CWComplex& X, const ChainComplex& M) {
  const ChainComplex C = X.chains(M.ring());
  const HomLayout L = layout(C, M);
  const ChainComplex& H = L.hom.complex;
  const Ring& R = M.ring();
  FilteredComplex::Steps steps;
  if (!H.empty() && !M.empty())
    for (int a = M.min_degree() + 1; a <= M.max_degree() + 1; ++a) {
      const Span Za = M.cycles(a);
      std::vector<Span> spans;
      for (int n = H.min_degree(); n <= H.max_degree(); ++n) {
        std::vector<Vector> gens;
        for (int k = 0; k <= X.dimension(); ++k) {
          auto off = L.offset.find({n, k});
          if (off == L.offset.end()) continue;
          const std::size_t rm = M.rank(k + n);
          for (std::size_t i = 0; i < C.rank(k); ++i) {
            const std::size_t base = off->second + i * rm;
            if (k + n > a) {
              for (std::size_t j = 0; j < rm; ++j) {
                Vector v = zero_vector(H.rank(n));
                v[base + j] = 1;
                gens.push_back(std::move(v));
              }
            } else if (k + n == a) {
              for (const auto& z : Za.basis()) {
                Vector v = zero_vector(H.rank(n));
                for (std::size_t j = 0; j < rm; ++j) v[base + j] = z[j];
                gens.push_back(std::move(v));
              }
            }
          }
        }
        spans.push_back(Span::generated_by(R, H.rank(n), std::move(gens)));
      }
      steps.emplace(a, std::move(spans));
    }
  return FilteredComplex(H, std::move(steps), TailHigh::Zero);
}

ChainComplex zero_differential_complex(const Ring& ring, const std::vector<int>& degrees) {
  if (degrees.empty()) return ChainComplex::zero(ring);
  const int lo = *std::min_element(degrees.begin(), degrees.end());
  const int hi = *std::max_element(degrees.begin(), degrees.end());
  std::vector<std::size_t> ranks(hi - lo + 1, 0);
  for (int d : degrees) ++ranks[d - lo];
  return ChainComplex(ring, lo, ranks, {});
}

MaunderReport maunder_compare(const CWComplex& X, const ChainComplex& M, int rmax) {
  MaunderReport rep;
  auto problems = validate(X);
  for (auto& p : problems) rep.problems.push_back("cw: " + p);
  if (!problems.empty()) return rep;

  return maunder_compare(skeletal_filtration(X, M), whitehead_filtration_coeff(X, M), rmax);
}

MaunderReport maunder_compare(const FilteredComplex& F, const FilteredComplex& G, int rmax) {
  MaunderReport rep;
  for (const auto* filt : {&F, &G})
    for (const auto& v : validate(*filt)) rep.problems.push_back("filtration: " + to_string(v));
  if (!rep.ok()) return rep;

  const FilteredComplex D = deligne_decalage(F);
  if (!D.same_filtration(G)) rep.problems.push_back("Dec(skeletal) and Whitehead filtrations differ spanwise");

  const auto pf = classical_pages(F, rmax);
  const auto pd = classical_pages(D, rmax);
  const auto pg = classical_pages(G, rmax);
  auto note = [&](const std::string& label, const std::vector<PageMismatch>& ms) {
    ++rep.comparisons;
    for (const auto& m : ms) rep.problems.push_back(label + ": " + m.to_string());
  };
  for (int r = 1; r <= rmax; ++r)
    note("Dec(skeletal) vs Whitehead, r=" + std::to_string(r),
         compare_pages(pd[r - 1], pg[r - 1], Transform2::identity()));
  const Transform2 A1 = page_shift_transform(1).first;
  for (int r = 2; r <= rmax; ++r)
    note("E^" + std::to_string(r) + "(skeletal) vs 'E^" + std::to_string(r) + "(Whitehead)",
         compare_pages(pf[r - 1], pg[r - 2], A1));

  const ChainComplex& H = F.complex();
  for (const auto* filt : {&F, &G}) {
    const std::string label = filt == &F ? "skeletal" : "Whitehead";
    const Page Einf = einfty_page(*filt);
    for (const auto& m : convergence_mismatches(*filt, Einf)) rep.problems.push_back(label + " convergence: " + m);
    if (H.empty()) continue;
    for (int n = H.min_degree(); n <= H.max_degree(); ++n) {
      std::size_t rank = 0;
      for (const auto& [x, term] : Einf.terms)
        if (term.degree == n) rank += term.module().free_rank;
      if (rank != H.homology(n).free_rank)
        rep.problems.push_back(label + " E^infty rank " + std::to_string(rank) + " != rank H_" + std::to_string(n));
    }
  }
  return rep;
}

}  // namespace specseq
