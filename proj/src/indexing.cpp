#include "specseq/indexing.hpp"

namespace specseq {

std::string Convention::name() const {
  std::string out = scheme == Scheme::Serre ? "serre" : scheme == Scheme::E2 ? "e2" : "adams";
  out += variance == Variance::Homology ? "-hom" : "-coh";
  out += direction == Direction::Decreasing ? "-dec" : "-inc";
  return out;
}

Convention Convention::parse(const std::string& name) {
  for (const auto& c : all())
    if (c.name() == name) return c;
  throw Error("unknown convention '" + name + "'");
}

std::vector<Convention> Convention::all() {
  std::vector<Convention> out;
  for (Scheme s : {Scheme::Serre, Scheme::E2, Scheme::Adams})
    for (Variance v : {Variance::Homology, Variance::Cohomology})
      for (Direction d : {Direction::Decreasing, Direction::Increasing}) out.push_back({v, d, s});
  return out;
}

Transform2 to_internal_matrix(const Convention& c) {
  // Increasing filtrations are relabelled w -> -w; in every row this is
  // absorbed by the index change, so direction does not enter the matrix.
  const bool coh = c.variance == Variance::Cohomology;
  switch (c.scheme) {
    case Scheme::Serre: return coh ? Transform2{-1, 0, 0, -1} : Transform2{};
    case Scheme::E2: return coh ? Transform2{0, 1, -1, -2} : Transform2{0, -1, 1, 2};
    case Scheme::Adams: return coh ? Transform2{0, 1, -1, -1} : Transform2{0, -1, 1, 1};
  }
  return {};
}

Bidegree to_internal(Bidegree x, const Convention& c) { return to_internal_matrix(c)(x); }

Bidegree from_internal(Bidegree x, const Convention& c) { return to_internal_matrix(c).inverse()(x); }

int internal_page(int r, const Convention& c) { return c.scheme == Scheme::E2 ? r - 1 : r; }

int convention_page(int internal_r, const Convention& c) {
  return c.scheme == Scheme::E2 ? internal_r + 1 : internal_r;
}

Bidegree differential_bidegree(int r, const Convention& c) {
  const int ri = internal_page(r, c);
  return from_internal({-ri, ri - 1}, c);
}

Bidegree abutment_position(int s, int n, const Convention& c) {
  const int weight = c.direction == Direction::Decreasing ? s : -s;
  const int degree = c.variance == Variance::Homology ? n : -n;
  return from_internal({-weight, weight + degree}, c);
}

std::pair<Transform2, Transform2> page_shift_transform(int r) {
  if (r < 1) throw Error("page_shift_transform requires r >= 1");
  return {Transform2{-r + 1, -r, r, r + 1}, Transform2{r + 1, r, -r, -r + 1}};
}

std::pair<int, int> weight_and_degree(int r, int s, int t) {
  return {(r - 1) * s + r * t, (r - 2) * s + (r - 1) * t};
}

}  // namespace specseq
