#pragma once

#include <optional>
#include <string>
#include <vector>

#include "garside/germ.hpp"
#include "garside/snf.hpp"
#include "garside/words.hpp"

namespace garside {

// A k-cell of the quotient complex: an ordered tuple of nontrivial simples
// whose product is again a simple. The unique 0-cell is the empty tuple
// (total = 1 by convention).
struct TupleCell {
  std::vector<SimpleId> entries;
  SimpleId total;

  bool operator==(const TupleCell&) const = default;
};

// All k-cells, enumerated depth-first in simple-id order (deterministic).
std::vector<TupleCell> cells(const Germ& germ, int k);

// Bar differential with trivial coefficients:
//   d[m1|...|mk] = [m2|...|mk]
//                + sum_{i=1..k-1} (-1)^i [m1|...|mi*mi+1|...|mk]
//                + (-1)^k [m1|...|mk-1].
// Rows are (k-1)-cells, columns are k-cells, both in cells() order.
IntMatrix boundary(const Germ& germ, int k);

// Integer boundary matrices for dimensions 0..||delta||.
struct ChainComplex {
  std::vector<long long> ranks;        // ranks[k] = |cells(k)|
  std::vector<IntMatrix> boundaries;   // boundaries[k] = d_k (index 0 unused)
};

ChainComplex bar_complex(const Germ& germ);

// Free rank plus ordered torsion coefficients (each dividing the next).
struct HomologyGroup {
  long long rank = 0;
  std::vector<long long> torsion;

  bool is_zero() const { return rank == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup&) const = default;
};

// Rendered as "0", "Z", "Z^2", "Z + Z/2", ...
std::string to_string(const HomologyGroup& g);

// Homology of a complex given as ranks plus boundary maps d_k : C_k -> C_{k-1}
// (boundaries[k], index 0 unused). Shared by the bar complex and the order
// complexes of posets.
std::vector<HomologyGroup> homology_from(const std::vector<long long>& ranks,
                                         const std::vector<IntMatrix>& boundaries);

// Integral homology/cohomology of the quotient complex, dimensions
// 0..||delta||. H_0 = Z always; cohomology is computed from the transposed
// boundaries.
std::vector<HomologyGroup> homology(const Germ& germ);
std::vector<HomologyGroup> cohomology(const Germ& germ);

// A finite poset on germ simples under (strict) left divisibility.
struct FinitePoset {
  std::vector<SimpleId> elements;  // sorted by id
  std::vector<std::uint8_t> lt;    // lt[i*n+j] = elements[i] < elements[j]

  size_t size() const { return elements.size(); }
  bool less(size_t i, size_t j) const { return lt[i * elements.size() + j] != 0; }
};

// The proper divisor poset D - {1, delta}.
FinitePoset proper_poset(const Germ& germ);
// Subposet of elements that do not have mu as a left divisor. For mu = delta
// this is the whole proper poset.
FinitePoset avoid_poset(const Germ& germ, SimpleId mu);

// Vertex links in the coset complex for a delta-free coset representative.
// The descending link is {mu : RF(a)* <=_l mu}; it has RF(a)* as a minimum
// (cone point). The ascending link is avoid_poset(RF(a)*); for the empty
// word it is the full proper poset.
FinitePoset descending_link(const Germ& germ, const PositiveWord& rep);
FinitePoset ascending_link(const Germ& germ, const PositiveWord& rep);

// One reduced (co)homology group per degree, degrees -1..top.
struct GradedGroup {
  int degree;
  HomologyGroup group;

  bool operator==(const GradedGroup&) const = default;
};

// Reduced simplicial homology of the order complex (simplices = chains).
// The empty poset reports reduced H_{-1} = Z.
std::vector<GradedGroup> reduced_poset_homology(const FinitePoset& poset);
std::vector<GradedGroup> reduced_poset_cohomology(const FinitePoset& poset);

// Per-poset summary used by the duality and end-connectivity checkers.
struct PosetReport {
  std::string label;                 // "proper" or "avoid <name>"
  std::optional<SimpleId> avoided;
  std::vector<GradedGroup> groups;   // reduced homology or cohomology
  bool empty_poset = false;
  bool torsion_free = true;
  bool all_zero = true;
  std::optional<int> concentrated_degree;  // set iff exactly one nonzero degree
};

struct DualityReport {
  bool is_duality = false;       // false means "inconclusive"
  std::optional<int> n;          // dimension when is_duality
  std::vector<PosetReport> posets;
  std::string reason;
};

// Reduced cohomology of the proper poset and every avoid poset: if all are
// torsion-free and vanish outside one common degree c (all-zero posets are
// compatible with any c), the group is an (c+2)-dimensional duality group.
// Empty posets, torsion, or mixed degrees give "inconclusive".
DualityReport duality_check(const Germ& germ);

struct EndConnectivityReport {
  bool conclusive = false;
  int n = -1;                    // largest n with the hypothesis satisfied
  std::vector<PosetReport> posets;
  std::string conclusion;        // "(n+1)-connected at infinity"
  std::string reason;            // when inconclusive
};

// Largest n >= 0 such that reduced homology of the proper poset and every
// avoid poset vanishes in all degrees <= n.
EndConnectivityReport end_connectivity_check(const Germ& germ);

}  // namespace garside
