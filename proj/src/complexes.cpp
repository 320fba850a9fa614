#include "specseq/complexes.hpp"

#include <string>

namespace specseq {

ChainComplex::ChainComplex(Ring ring, int min_degree, std::vector<std::size_t> ranks,
                           std::map<int, Matrix> differentials)
    : ring_(ring), min_(min_degree), ranks_(std::move(ranks)) {
  // trim zero ranks at both ends so that the degree range is tight
  while (!ranks_.empty() && ranks_.back() == 0) ranks_.pop_back();
  std::size_t lead = 0;
  while (lead < ranks_.size() && ranks_[lead] == 0) ++lead;
  ranks_.erase(ranks_.begin(), ranks_.begin() + static_cast<long>(lead));
  min_ += static_cast<int>(lead);
  if (ranks_.empty()) min_ = 0;

  for (auto& [n, m] : differentials) {
    if (m.rows() != rank(n - 1) || m.cols() != rank(n))
      throw Error("d_" + std::to_string(n) + " has shape " + std::to_string(m.rows()) + "x" +
                  std::to_string(m.cols()) + ", expected " + std::to_string(rank(n - 1)) + "x" +
                  std::to_string(rank(n)));
    if (!(m.ring() == ring_)) throw Error("d_" + std::to_string(n) + " is over the wrong ring");
    if ((n < min_ + 1 || n > max_degree()) && !m.is_zero())
      throw Error("d_" + std::to_string(n) + " is nonzero outside the degree range");
  }
  for (int n = min_; n <= max_degree(); ++n) {
    auto it = differentials.find(n);
    d_.push_back(it != differentials.end() ? it->second : Matrix(ring_, rank(n - 1), rank(n)));
  }
  for (int n = min_ + 1; n <= max_degree(); ++n)
    if (!(differential(n - 1) * differential(n)).is_zero())
      throw Error("d_" + std::to_string(n - 1) + " . d_" + std::to_string(n) + " != 0");
}

std::size_t ChainComplex::rank(int n) const {
  if (n < min_ || n > max_degree()) return 0;
  return ranks_[static_cast<std::size_t>(n - min_)];
}

const Matrix& ChainComplex::differential(int n) const {
  if (n >= min_ && n <= max_degree()) return d_[static_cast<std::size_t>(n - min_)];
  auto key = std::make_pair(n, 0);
  auto it = zero_cache_.find(key);
  if (it == zero_cache_.end()) it = zero_cache_.emplace(key, Matrix(ring_, rank(n - 1), rank(n))).first;
  return it->second;
}

std::size_t ChainComplex::total_rank() const {
  std::size_t t = 0;
  for (auto r : ranks_) t += r;
  return t;
}

Span ChainComplex::cycles(int n) const {
  return Span::full(ring_, rank(n)).preimage(differential(n), Span(ring_, rank(n - 1)));
}

Span ChainComplex::boundaries(int n) const {
  return Span::full(ring_, rank(n + 1)).image(differential(n + 1));
}

FgModule ChainComplex::homology(int n) const { return Subquotient(cycles(n), boundaries(n)).module(); }

bool ChainComplex::operator==(const ChainComplex& o) const {
  if (!(ring_ == o.ring_) || ranks_ != o.ranks_ || (!ranks_.empty() && min_ != o.min_)) return false;
  for (std::size_t i = 0; i < d_.size(); ++i)
    if (d_[i] != o.d_[i]) return false;
  return true;
}

ChainComplex truncate_geq(const ChainComplex& C, int a) {
  if (C.empty() || a <= C.min_degree()) return C;
  if (a > C.max_degree()) return ChainComplex::zero(C.ring());
  Span z = C.cycles(a);
  Matrix K = z.basis_matrix();
  std::vector<std::size_t> ranks;
  std::map<int, Matrix> d;
  ranks.push_back(z.rank());
  for (int n = a + 1; n <= C.max_degree(); ++n) {
    ranks.push_back(C.rank(n));
    if (n > a + 1) d.emplace(n, C.differential(n));
  }
  if (a + 1 <= C.max_degree()) {
    const Matrix& dn = C.differential(a + 1);
    Matrix m(C.ring(), z.rank(), dn.cols());
    for (std::size_t j = 0; j < dn.cols(); ++j) {
      auto c = z.coordinates(dn.column(j));
      for (std::size_t i = 0; i < z.rank(); ++i) m(i, j) = (*c)[i];
    }
    d.emplace(a + 1, m);
  }
  return ChainComplex(C.ring(), a, std::move(ranks), std::move(d));
}

ChainComplex shift(const ChainComplex& C, int k) {
  if (C.empty()) return C;
  std::vector<std::size_t> ranks;
  std::map<int, Matrix> d;
  for (int n = C.min_degree(); n <= C.max_degree(); ++n) {
    ranks.push_back(C.rank(n));
    if (n > C.min_degree()) {
      const Matrix& m = C.differential(n);
      d.emplace(n + k, (k % 2 == 0) ? m : m.scaled(C.ring().from_int(-1)));
    }
  }
  return ChainComplex(C.ring(), C.min_degree() + k, std::move(ranks), std::move(d));
}

HomComplex hom_complex(const ChainComplex& C, const ChainComplex& M) {
  const Ring& ring = C.ring();
  if (!(M.ring() == ring)) throw Error("hom complex over different rings");
  HomComplex h;
  if (C.empty() || M.empty()) {
    h.complex = ChainComplex::zero(ring);
    return h;
  }
  const int nlo = M.min_degree() - C.max_degree(), nhi = M.max_degree() - C.min_degree();
  // offset[n][k] = position of the block Hom(C_k, M_{k+n}) in degree n
  std::map<int, std::map<int, std::size_t>> offset;
  std::vector<std::size_t> ranks;
  for (int n = nlo; n <= nhi; ++n) {
    std::size_t pos = 0;
    auto& src = h.source_degree[n];
    auto& tgt = h.target_index[n];
    for (int k = C.min_degree(); k <= C.max_degree(); ++k) {
      offset[n][k] = pos;
      for (std::size_t i = 0; i < C.rank(k); ++i)
        for (std::size_t j = 0; j < M.rank(k + n); ++j) {
          src.push_back(k);
          tgt.push_back(static_cast<int>(j));
        }
      pos += C.rank(k) * M.rank(k + n);
    }
    ranks.push_back(pos);
  }
  std::map<int, Matrix> d;
  const Scalar minus_one = ring.from_int(-1);
  for (int n = nlo + 1; n <= nhi; ++n) {
    Matrix D(ring, ranks[static_cast<std::size_t>(n - 1 - nlo)], ranks[static_cast<std::size_t>(n - nlo)]);
    // sign in front of f . d_C
    const Scalar sgn_term = (n % 2 == 0) ? minus_one : Scalar(1);
    for (int k = C.min_degree(); k <= C.max_degree(); ++k) {
      const std::size_t ck = C.rank(k), mk = M.rank(k + n);
      const Matrix& dM = M.differential(k + n);       // M_{k+n} -> M_{k+n-1}
      const Matrix& dC = C.differential(k + 1);       // C_{k+1} -> C_k
      for (std::size_t i = 0; i < ck; ++i)
        for (std::size_t j = 0; j < mk; ++j) {
          std::size_t col = offset[n][k] + i * mk + j;
          // d_M . E_{k,i,j} = sum_l dM(l, j) E_{k,i,l}  in block (n-1, k)
          const std::size_t ml = M.rank(k + n - 1);
          for (std::size_t l = 0; l < ml; ++l)
            if (sgn(dM(l, j)) != 0) ring.add_mul(D(offset[n - 1][k] + i * ml + l, col), Scalar(1), dM(l, j));
          // E_{k,i,j} . d_C = sum_{i'} dC(i, i') E_{k+1,i',j}  in block (n-1, k+1)
          if (k + 1 <= C.max_degree()) {
            const std::size_t mk1 = M.rank(k + n);
            for (std::size_t ip = 0; ip < C.rank(k + 1); ++ip)
              if (sgn(dC(i, ip)) != 0)
                ring.add_mul(D(offset[n - 1][k + 1] + ip * mk1 + j, col), sgn_term, dC(i, ip));
          }
        }
    }
    d.emplace(n, std::move(D));
  }
  h.complex = ChainComplex(ring, nlo, std::move(ranks), std::move(d));
  return h;
}

bool is_chain_map(const ChainComplex& C, const ChainComplex& D, const ChainMap& f) {
  const int lo = std::min(C.min_degree(), D.min_degree()) - 1;
  const int hi = std::max(C.max_degree(), D.max_degree()) + 1;
  auto comp = [&](int n) {
    auto it = f.components.find(n);
    return it != f.components.end() ? it->second : Matrix(C.ring(), D.rank(n), C.rank(n));
  };
  for (int n = lo; n <= hi; ++n) {
    Matrix fn = comp(n), fn1 = comp(n - 1);
    if (fn.rows() != D.rank(n) || fn.cols() != C.rank(n)) return false;
    if (D.differential(n) * fn != fn1 * C.differential(n)) return false;
  }
  return true;
}

}  // namespace specseq
