#pragma once
// Independent reference computations used by the tests.  Nothing here calls
// the library's page, decalage or homology code; inputs are read off plain
// matrices and spans.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "specseq/ahss.hpp"
#include "specseq/indexing.hpp"

namespace oracle {

using specseq::Matrix;
using specseq::Scalar;

// Determinant by cofactor expansion; tiny matrices only.
inline Scalar det(const std::vector<std::vector<Scalar>>& a) {
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

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
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

// Invariant factors of an integer matrix from the gcds of its k x k minors.
inline std::vector<mpz_class> determinantal_invariants(const Matrix& A) {
  std::vector<mpz_class> out;
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
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// Rank over Q (p == 0) or F_p by plain Gaussian elimination.
inline std::size_t rank_mod(const Matrix& A, long p) {
  std::vector<std::vector<Scalar>> m(A.rows(), std::vector<Scalar>(A.cols()));
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) {
      m[i][j] = A(i, j);
      if (p) {
        mpz_class v = A(i, j).get_num() % p;
        if (v < 0) v += p;
        m[i][j] = v;
      }
    }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < A.cols() && rank < A.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < A.rows() && sgn(m[piv][c]) == 0) ++piv;
    if (piv == A.rows()) continue;
    std::swap(m[piv], m[rank]);
    Scalar inv = 1 / m[rank][c];
    if (p) {
      mpz_class iv;
      mpz_class a = m[rank][c].get_num();
      mpz_invert(iv.get_mpz_t(), a.get_mpz_t(), mpz_class(p).get_mpz_t());
      inv = iv;
    }
    for (std::size_t i = 0; i < A.rows(); ++i) {
      if (i == rank || sgn(m[i][c]) == 0) continue;
      const Scalar f = m[i][c] * inv;
      for (std::size_t j = 0; j < A.cols(); ++j) {
        m[i][j] -= f * m[rank][j];
        if (p) {
          mpz_class v = m[i][j].get_num() % p;
          if (v < 0) v += p;
          m[i][j] = v;
        }
      }
    }
    ++rank;
  }
  return rank;
}

// Cellular homology of X with integer coefficients: free rank and torsion orders.
struct IntegralHomology {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;
};

inline Matrix boundary_or_empty(const specseq::CWComplex& X, int k) {
  const auto ring = specseq::Ring::integers();
  const std::size_t rows = k >= 1 && k - 1 <= X.dimension() ? X.cells[k - 1] : 0;
  const std::size_t cols = k >= 0 && k <= X.dimension() ? X.cells[k] : 0;
  auto it = X.boundary.find(k);
  if (it != X.boundary.end()) return it->second;
  return Matrix(ring, rows, cols);
}

inline IntegralHomology cellular_homology(const specseq::CWComplex& X, int k) {
  IntegralHomology h;
  if (k < 0 || k > X.dimension()) return h;
  const auto out = determinantal_invariants(boundary_or_empty(X, k));
  const auto in = determinantal_invariants(boundary_or_empty(X, k + 1));
  h.free_rank = X.cells[k] - out.size() - in.size();
  for (const auto& d : in)
    if (d != 1) h.torsion.push_back(d);
  return h;
}

inline std::size_t cellular_betti_mod(const specseq::CWComplex& X, int k, long p) {
  if (k < 0 || k > X.dimension()) return 0;
  return X.cells[k] - rank_mod(boundary_or_empty(X, k), p) - rank_mod(boundary_or_empty(X, k + 1), p);
}

// H^s(X; R) for R = Z, Q or F_p through the universal coefficient theorem:
// Hom(H_s, R) + Ext(H_{s-1}, R).  Orders of cyclic summands, 0 for Z.
inline std::vector<Scalar> uct_cohomology(const specseq::CWComplex& X, int s, const specseq::Ring& R) {
  std::vector<Scalar> orders;
  if (R.is_field()) {
    const long p = R.characteristic();
    const std::size_t dim = p ? cellular_betti_mod(X, s, p)
                              : cellular_homology(X, s).free_rank;  // Q: torsion dies
    orders.assign(dim, Scalar(0));
    return orders;
  }
  const IntegralHomology hs = cellular_homology(X, s), hs1 = cellular_homology(X, s - 1);
  for (std::size_t i = 0; i < hs.free_rank; ++i) orders.push_back(0);  // Hom(Z, Z)
  for (const auto& a : hs1.torsion) orders.push_back(Scalar(a));      // Ext(Z/a, Z)
  return orders;
}

// ---------------------------------------------------------------------------
// Brute force over F_2.  Vectors of F_2^m are bitmasks; subspaces are the full
// sets of their elements.

using Set = std::set<std::uint32_t>;

inline std::uint32_t to_mask(const specseq::Vector& v) {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) m |= 1u << i;
  return m;
}

inline Set span_set(const std::vector<std::uint32_t>& gens) {
  Set out{0};
  for (auto g : gens) {
    Set next = out;
    for (auto x : out) next.insert(x ^ g);
    out.swap(next);
  }
  return out;
}

inline Set span_set(const specseq::Span& S) {
  std::vector<std::uint32_t> gens;
  for (const auto& v : S.basis()) gens.push_back(to_mask(v));
  return span_set(gens);
}

inline std::uint32_t apply(const Matrix& d, std::uint32_t x) {
  std::uint32_t y = 0;
  for (std::size_t j = 0; j < d.cols(); ++j)
    if (x >> j & 1u)
      for (std::size_t i = 0; i < d.rows(); ++i)
        if (d(i, j) != 0) y ^= 1u << i;
  return y;
}

inline Set sum(const Set& a, const Set& b) {
  Set out;
  for (auto x : a)
    for (auto y : b) out.insert(x ^ y);
  return out;
}

inline int log2_size(const Set& s) {
  int k = 0;
  while ((std::size_t{1} << k) < s.size()) ++k;
  return k;
}

// dim of im(H_n(F^p/F^{p+r}) -> H_n(F^{p-r+1}/F^{p+1})) for a filtered
// complex over F_2, straight from the definition.
inline int lurie_dim_f2(const specseq::FilteredComplex& F, int r, int p, int n) {
  const auto& C = F.complex();
  if (n < C.min_degree() || n > C.max_degree()) return 0;
  const Matrix& d = C.differential(n);
  const Matrix& d_up = C.differential(n + 1);
  auto step = [&](int s, int deg) -> Set {
    if (deg < C.min_degree() || deg > C.max_degree()) return Set{0};
    return span_set(F.step(s, deg));
  };
  // cycles of F^p/F^{p+r}: x in F^p with dx in F^{p+r}
  const Set target = step(p + r, n - 1);
  Set z;
  for (auto x : step(p, n))
    if (n - 1 < C.min_degree() || target.count(apply(d, x))) z.insert(x);
  // zero in H_n(F^{p-r+1}/F^{p+1}): F^{p+1} + d F^{p-r+1}
  Set boundaries{0};
  if (n + 1 <= C.max_degree())
    for (auto y : step(p - r + 1, n + 1)) boundaries.insert(apply(d_up, y));
  const Set den = sum(step(p + 1, n), boundaries);
  return log2_size(sum(z, den)) - log2_size(den);
}

// dim of gr^s H_n for the induced filtration over F_2.
inline int graded_homology_dim_f2(const specseq::FilteredComplex& F, int s, int n) {
  const auto& C = F.complex();
  if (n < C.min_degree() || n > C.max_degree()) return 0;
  Set bound{0};
  if (n + 1 <= C.max_degree())
    for (auto y : span_set(F.full(n + 1))) bound.insert(apply(C.differential(n + 1), y));
  auto num = [&](int w) {
    Set z;
    for (auto x : span_set(F.step(w, n)))
      if (apply(C.differential(n), x) == 0) z.insert(x);
    return sum(z, bound);
  };
  return log2_size(num(s)) - log2_size(num(s + 1));
}

// Abutment positions read off the three convention tables for gr^s of
// degree n: serre, e2, adams; each in the order hom-dec, hom-inc, coh-dec, coh-inc.
inline specseq::Bidegree table_abutment(const specseq::Convention& c, int s, int n) {
  using namespace specseq;
  const bool hom = c.variance == Variance::Homology;
  const bool dec = c.direction == Direction::Decreasing;
  const int row = (hom ? 0 : 2) + (dec ? 0 : 1);
  switch (c.scheme) {
    case Scheme::Serre: {
      const Bidegree t[4] = {{-s, s + n}, {s, -s + n}, {s, -s + n}, {-s, s + n}};
      return t[row];
    }
    case Scheme::E2: {
      const Bidegree t[4] = {{-s + n, s}, {s + n, -s}, {s + n, -s}, {-s + n, s}};
      return t[row];
    }
    case Scheme::Adams: {
      const Bidegree t[4] = {{n, s}, {n, -s}, {n, -s}, {n, s}};
      return t[row];
    }
  }
  return {};
}


// Bidegree of d_r from the same tables, r in the convention's own page numbering.
inline specseq::Bidegree table_differential(int r, const specseq::Convention& c) {
  using namespace specseq;
  const bool hom = c.variance == Variance::Homology;
  if (c.scheme == Scheme::Adams) return hom ? Bidegree{-1, r} : Bidegree{1, -r};
  return hom ? Bidegree{-r, r - 1} : Bidegree{r, -r + 1};
}

// ---------------------------------------------------------------------------
// Minimal XML well-formedness check: balanced, properly nested tags, quoted
// attributes, known entities, one root element.
inline bool xml_well_formed(const std::string& text, std::string* why = nullptr) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  std::vector<std::string> stack;
  int roots = 0;
  std::size_t i = 0;
  auto name_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == ':' || c == '_' || c == '.'; };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '&') {
      const std::size_t semi = text.find(';', i);
      if (semi == std::string::npos) return fail("unterminated entity");
      const std::string ent = text.substr(i + 1, semi - i - 1);
      static const std::set<std::string> known{"lt", "gt", "amp", "quot", "apos"};
      if (!known.count(ent) && !(ent.size() > 1 && ent[0] == '#')) return fail("unknown entity &" + ent + ";");
      i = semi + 1;
      continue;
    }
    if (c != '<') {
      if (c == '>') return fail("stray '>'");
      if (stack.empty() && !std::isspace(static_cast<unsigned char>(c))) return fail("text outside root");
      ++i;
      continue;
    }
    if (text.compare(i, 5, "<?xml") == 0) {
      const std::size_t e = text.find("?>", i);
      if (e == std::string::npos || i != 0) return fail("bad declaration");
      i = e + 2;
      continue;
    }
    if (text.compare(i, 4, "<!--") == 0) {
      const std::size_t e = text.find("-->", i);
      if (e == std::string::npos) return fail("unterminated comment");
      i = e + 3;
      continue;
    }
    const bool closing = i + 1 < text.size() && text[i + 1] == '/';
    std::size_t j = i + (closing ? 2 : 1);
    const std::size_t name_start = j;
    while (j < text.size() && name_char(text[j])) ++j;
    const std::string name = text.substr(name_start, j - name_start);
    if (name.empty()) return fail("empty tag name");
    if (closing) {
      while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
      if (j >= text.size() || text[j] != '>') return fail("bad closing tag " + name);
      if (stack.empty() || stack.back() != name) return fail("mismatched </" + name + ">");
      stack.pop_back();
      i = j + 1;
      continue;
    }
    std::set<std::string> attrs;
    bool self_closing = false;
    while (true) {
      while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
      if (j >= text.size()) return fail("unterminated tag " + name);
      if (text[j] == '>') break;
      if (text.compare(j, 2, "/>") == 0) {
        self_closing = true;
        ++j;
        break;
      }
      const std::size_t a0 = j;
      while (j < text.size() && name_char(text[j])) ++j;
      const std::string attr = text.substr(a0, j - a0);
      if (attr.empty() || j >= text.size() || text[j] != '=') return fail("bad attribute in " + name);
      if (!attrs.insert(attr).second) return fail("duplicate attribute " + attr);
      ++j;
      if (j >= text.size() || (text[j] != '"' && text[j] != '\'')) return fail("unquoted attribute " + attr);
      const char q = text[j];
      const std::size_t e = text.find(q, j + 1);
      if (e == std::string::npos) return fail("unterminated attribute " + attr);
      if (text.substr(j + 1, e - j - 1).find('<') != std::string::npos) return fail("'<' in attribute " + attr);
      j = e + 1;
    }
    if (stack.empty()) ++roots;
    if (!self_closing) stack.push_back(name);
    i = j + 1;
  }
  if (!stack.empty()) return fail("unclosed <" + stack.back() + ">");
  if (roots != 1) return fail("expected one root element");
  return true;
}

}  // namespace oracle
