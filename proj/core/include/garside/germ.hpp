#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "garside/errors.hpp"

namespace garside {

// Index of a simple divisor within a fixed Germ. Index 0 is always the
// identity element "1".
using SimpleId = std::int32_t;

inline constexpr SimpleId simple_identity = 0;
inline constexpr SimpleId simple_undefined = -1;

enum class Side { left, right };

// Un-validated germ data, as read from a germ file or assembled by a builder.
// The product table is sparse: identity products are implicit, every triple
// {a, b, c} asserts a*b = c.
struct RawGerm {
  std::string name;
  std::vector<std::string> simples;  // must contain "1"
  std::string delta;
  std::optional<std::vector<std::string>> atoms;  // cross-checked if present
  std::vector<std::array<std::string, 3>> product;
};

// One failed germ axiom together with a concrete witness.
struct Violation {
  enum class Kind {
    missing_identity,
    associativity,          // witness: a, b, c
    cancellation,           // witness: the colliding pair/triple
    not_a_lattice,          // witness: a, b (side says which order)
    divisor_mismatch,       // witness: the simple that misses delta
    complement_not_unique,  // witness: mu
    sigma_not_automorphism, // witness: a, b
    atom_list_mismatch,     // declared atoms differ from derived ones
  };

  Kind kind;
  std::vector<SimpleId> witness;
  Side side = Side::left;
  std::string message;
};

std::string_view to_string(Violation::Kind kind);

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// The finite lattice of simple divisors with its partial product and all
// derived structure (divisibility, meets/joins, complements, sigma, norms).
//
// A validated Germ is immutable; any number of threads may query it
// concurrently. Words and group elements hold a pointer to their germ, so a
// germ must stay alive and in place while elements over it are in use.
class Germ {
 public:
  // Checks every germ axiom. On success returns the fully derived germ; on
  // failure records the violated axioms (with witnesses) in `out` and
  // returns nullopt. Structurally broken raw data (duplicate or unknown
  // names, conflicting duplicate table entries) throws ParseError instead.
  static std::optional<Germ> try_validate(const RawGerm& raw,
                                          std::vector<Violation>& out);

  // Same as try_validate, but throws ValidationError listing the violations.
  static Germ validate(const RawGerm& raw);

  const std::string& name() const { return name_; }
  SimpleId size() const { return static_cast<SimpleId>(names_.size()); }
  SimpleId delta() const { return delta_; }
  int delta_norm() const { return norms_[delta_]; }

  const std::string& name_of(SimpleId a) const { return names_[check(a)]; }
  std::optional<SimpleId> id_of(std::string_view name) const;
  const std::vector<std::string>& simple_names() const { return names_; }

  // Partial product; simple_undefined when a*b is not a simple.
  SimpleId product(SimpleId a, SimpleId b) const {
    return table_[idx(check(a), check(b))];
  }
  bool defined(SimpleId a, SimpleId b) const {
    return product(a, b) != simple_undefined;
  }

  // a <= b in the chosen divisibility order.
  bool divides(SimpleId a, SimpleId b, Side side) const;

  SimpleId meet(SimpleId a, SimpleId b, Side side) const;
  SimpleId join(SimpleId a, SimpleId b, Side side) const;

  // mu * right_complement(mu) = delta;  left_complement(mu) * mu = delta.
  SimpleId right_complement(SimpleId mu) const { return rc_[check(mu)]; }
  SimpleId left_complement(SimpleId mu) const { return lc_[check(mu)]; }

  // sigma^k(mu), where delta * mu = sigma(mu) * delta. k may be negative.
  SimpleId sigma(SimpleId mu, long long k = 1) const;
  // Order of sigma = smallest m >= 1 with delta^m central.
  long long sigma_order() const { return sigma_order_; }

  // c with a*c = b (requires a <=_l b), and c with c*a = b (a <=_r b).
  SimpleId left_quotient(SimpleId a, SimpleId b) const;
  SimpleId right_quotient(SimpleId a, SimpleId b) const;

  // Longest-chain norm of a simple; ||1|| = 0, atoms have norm 1.
  int simple_norm(SimpleId mu) const { return norms_[check(mu)]; }

  const std::vector<SimpleId>& atoms() const { return atoms_; }

  // All simples except 1 (includes delta), in id order.
  std::vector<SimpleId> nontrivial_simples() const;
  // All simples except 1 and delta, in id order.
  std::vector<SimpleId> proper_simples() const;

 private:
  Germ() = default;

  size_t idx(SimpleId a, SimpleId b) const {
    return static_cast<size_t>(a) * names_.size() + static_cast<size_t>(b);
  }
  SimpleId check(SimpleId a) const;

  std::string name_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, SimpleId> index_;
  SimpleId delta_ = simple_undefined;

  std::vector<SimpleId> table_;       // partial product, n*n
  std::vector<SimpleId> left_quot_;   // [a][b] = c with a*c = b
  std::vector<SimpleId> right_quot_;  // [a][b] = c with c*a = b
  std::vector<std::uint8_t> ldiv_;    // [a][b] = a <=_l b
  std::vector<std::uint8_t> rdiv_;
  std::vector<SimpleId> meet_l_, meet_r_, join_l_, join_r_;
  std::vector<SimpleId> rc_, lc_;
  std::vector<int> norms_;
  std::vector<SimpleId> atoms_;

  // sigma as cycle decomposition for O(1) powers
  std::vector<SimpleId> sigma_;
  std::vector<int> cycle_of_, cycle_pos_;
  std::vector<std::vector<SimpleId>> cycles_;
  long long sigma_order_ = 1;
};

}  // namespace garside
