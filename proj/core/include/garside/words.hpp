#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "garside/germ.hpp"

namespace garside {

// A delta-free positive monoid element stored in left greedy normal form:
// consecutive letters (a, b) satisfy meet(right_complement(a), b, left) = 1,
// no letter equals 1 or delta. Only normalize() and friends build non-empty
// words, so the invariant holds by construction.
class PositiveWord {
 public:
  explicit PositiveWord(const Germ& germ) : germ_(&germ) {}

  const Germ& germ() const { return *germ_; }
  const std::vector<SimpleId>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  size_t size() const { return letters_.size(); }

  bool operator==(const PositiveWord& o) const {
    return germ_ == o.germ_ && letters_ == o.letters_;
  }

 private:
  friend struct WordFactory;
  PositiveWord(const Germ* germ, std::vector<SimpleId> letters)
      : germ_(germ), letters_(std::move(letters)) {}

  const Germ* germ_;
  std::vector<SimpleId> letters_;
};

// Deligne normal form: delta-free greedy prefix times delta^exp.
class GroupElement {
 public:
  explicit GroupElement(const Germ& germ) : prefix_(germ), exp_(0) {}

  static GroupElement identity(const Germ& germ) { return GroupElement(germ); }

  const Germ& germ() const { return prefix_.germ(); }
  const PositiveWord& prefix() const { return prefix_; }
  long long exp() const { return exp_; }
  bool is_identity() const { return prefix_.empty() && exp_ == 0; }

  bool operator==(const GroupElement& o) const {
    return prefix_ == o.prefix_ && exp_ == o.exp_;
  }

 private:
  friend struct WordFactory;
  GroupElement(PositiveWord prefix, long long exp)
      : prefix_(std::move(prefix)), exp_(exp) {}

  PositiveWord prefix_;
  long long exp_;
};

struct NormalizeResult {
  PositiveWord word;
  long long deltas;  // number of leading deltas extracted
};

// Left greedy normal form of the product of `letters`. Identity letters are
// dropped; leading deltas are extracted (with the sigma shift) into .deltas.
NormalizeResult normalize(const Germ& germ, std::span<const SimpleId> letters);

// Deligne normal form of letters * delta^exp.
GroupElement group_element(const Germ& germ, std::span<const SimpleId> letters,
                           long long exp = 0);

// The element mu (identity and delta allowed).
GroupElement simple_element(const Germ& germ, SimpleId mu);
GroupElement delta_power(const Germ& germ, long long exp);

// Left front LF = gcd with delta: delta if exp > 0, else the first letter,
// 1 for the identity. Requires a positive element (exp >= 0).
SimpleId lf(const GroupElement& u);
// Right front: the last letter of the right greedy form (delta if exp > 0).
SimpleId rf(const GroupElement& u);
SimpleId rf(const PositiveWord& w);

GroupElement mult(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);
GroupElement power(const GroupElement& g, long long n);

// Word problem: true iff g and h are the same group element.
bool equals(const GroupElement& g, const GroupElement& h);

// Left gcd of two positive elements (exp >= 0), computed by head peeling.
GroupElement left_gcd(const GroupElement& u, const GroupElement& v);

// |g|_D = number of prefix letters + |exp|.
long long word_length(const GroupElement& g);

// True iff normalize(w * eta) extracts at most one leading delta. Always
// true for greedy delta-free w; exists as a test hook.
bool one_delta_check(const PositiveWord& w, SimpleId eta);

// Checks the local greedy condition (and delta-freeness) of a letter
// sequence; used by tests and assertions.
bool is_left_greedy(const Germ& germ, std::span<const SimpleId> letters);

// Default node budget for the norm recursion; the environment variable
// GARSIDE_NODE_BUDGET overrides it.
long long default_node_budget();

// Memoizing norm computation over one germ. norm() is the supremum of the
// lengths of factorizations into atoms; exponential in the worst case, so a
// node budget guards the recursion (BudgetExceeded). Not thread-safe; use
// one cache per thread.
class NormCache {
 public:
  explicit NormCache(const Germ& germ, long long node_budget = default_node_budget());

  // Norm of a positive element (exp >= 0).
  long long norm(const GroupElement& u);

  const Germ& germ() const { return *germ_; }

 private:
  long long rec(const GroupElement& u);

  const Germ* germ_;
  long long budget_;
  long long nodes_ = 0;
  std::unordered_map<std::string, long long> memo_;
};

// One-shot convenience wrapper around NormCache.
long long norm(const GroupElement& u);

// CLI word syntax: dot-separated simple names with optional "@k" delta
// exponent suffix ("s.t@2"). The empty string is the identity.
std::vector<SimpleId> parse_letters(const Germ& germ, std::string_view text);
GroupElement parse_element(const Germ& germ, std::string_view text);
std::string render(const GroupElement& g);
std::string render_word(const Germ& germ, std::span<const SimpleId> letters);

}  // namespace garside
