#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "garside/garside.hpp"

namespace oracles {

// Classical A_2 germ data built directly from S_3: six permutations with
// inversion-count lengths, product defined exactly when lengths add.
// Independent of the builders module.
garside::RawGerm a2_raw();

// Equivalence classes of positive words over {s, t} of length <= max_len
// under the rewriting closure of sts <-> tst. Words are strings over the
// characters 's', 't'.
std::map<std::string, int> a2_rewriting_classes(int max_len);

// Abelianization of the group presented by generators D - {1} and relations
// {a * b = c} from the germ product table, via one Smith normal form of the
// relation matrix.
garside::HomologyGroup abelianization(const garside::Germ& germ);

// Number of ways to write the 4-cycle (1 2 3 4) as an ordered product of
// three transpositions in S_4 (brute force).
int count_quadcycle_factorizations();

// Random data over one germ (deterministic for a fixed seed).
struct Random {
  std::mt19937 rng;
  explicit Random(unsigned seed) : rng(seed) {}

  int pick(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  }
  std::vector<garside::SimpleId> letters(const garside::Germ& g, int max_len);
  garside::GroupElement positive(const garside::Germ& g, int max_len);
  garside::GroupElement element(const garside::Germ& g, int max_len,
                                int max_abs_exp);
  garside::Vertex vertex(const garside::Germ& g, int max_len);
};

}  // namespace oracles
