#pragma once

#include <string>
#include <utility>
#include <vector>

#include "specseq/pages.hpp"

namespace specseq {

enum class Variance { Homology, Cohomology };
enum class Direction { Decreasing, Increasing };
enum class Scheme { Serre, E2, Adams };

// One of the twelve display conventions.  The internal convention is Serre,
// homological, decreasing: E^1_{s,t} = H_{s+t}(gr^{-s}).
struct Convention {
  Variance variance = Variance::Homology;
  Direction direction = Direction::Decreasing;
  Scheme scheme = Scheme::Serre;

  // e.g. "serre-hom-dec", "e2-coh-inc", "adams-hom-dec"
  std::string name() const;
  static Convention parse(const std::string& name);
  static std::vector<Convention> all();
  static Convention internal() { return {}; }
  bool operator==(const Convention&) const = default;
};

Transform2 to_internal_matrix(const Convention& c);
Bidegree to_internal(Bidegree x, const Convention& c);
Bidegree from_internal(Bidegree x, const Convention& c);
// Page numbers: the E2-reindexed schemes label internal page r as r + 1.
int internal_page(int r, const Convention& c);
int convention_page(int internal_r, const Convention& c);
// Bidegree of d_r in the convention's own coordinates and page numbering.
Bidegree differential_bidegree(int r, const Convention& c);
// Position of the abutment graded piece of weight s on H_n (homology) or H^n
// (cohomology), s taken in the convention's own filtration direction.
Bidegree abutment_position(int s, int n, const Convention& c);

// A_r = ((-r+1, -r), (r, r+1)) = A_1^r and its inverse ((r+1, r), (-r, -r+1)).
std::pair<Transform2, Transform2> page_shift_transform(int r);

// (weight, cohomological degree) = ((r-1)s + rt, (r-2)s + (r-1)t).
std::pair<int, int> weight_and_degree(int r, int s, int t);

}  // namespace specseq
