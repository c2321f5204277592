#pragma once

#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "garside/words.hpp"

namespace garside {

// A vertex of the coset complex: the delta-free greedy coset representative
// of g<delta>.
class Vertex {
 public:
  explicit Vertex(const Germ& germ) : rep_(germ) {}
  static Vertex of(const GroupElement& g) { return Vertex(g.prefix()); }
  static Vertex base(const Germ& germ) { return Vertex(germ); }

  const PositiveWord& rep() const { return rep_; }
  const Germ& germ() const { return rep_.germ(); }
  GroupElement element() const;  // rep * delta^0

  bool operator==(const Vertex& o) const { return rep_ == o.rep_; }
  bool operator<(const Vertex& o) const {
    return rep_.letters() < o.rep_.letters();
  }

 private:
  explicit Vertex(PositiveWord rep) : rep_(std::move(rep)) {}
  PositiveWord rep_;
};

enum class EdgeOrientation { down, up };

struct CenterReport {
  long long radius = 0;
  std::vector<Vertex> centers;  // sorted; pairwise joined by an edge
};

// Exact reduced fraction.
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational of(long long num, long long den);
  bool operator==(const Rational&) const = default;
  bool operator<(const Rational& o) const;
  double value() const { return double(num) / double(den); }
};

// Read-only geometric queries over one germ: nonsymmetric distance,
// geodesics, orientation profiles, balls and circumscribed centers. Shares
// one norm cache, so an instance is not thread-safe.
class Geometry {
 public:
  explicit Geometry(const Germ& germ,
                    long long node_budget = default_node_budget());

  const Germ& germ() const { return *germ_; }

  // d(v, w) = norm of the delta-free prefix of DNF(v^-1 w). Nonsymmetric.
  long long distance(const Vertex& v, const Vertex& w);

  // Edge labels b_1..b_n of the geodesic from v to w; the path visits
  // cosets v, v b_1, v b_1 b_2, ...
  std::vector<SimpleId> geodesic(const Vertex& v, const Vertex& w);
  std::vector<Vertex> geodesic_cosets(const Vertex& v, const Vertex& w);

  // The coset path of geodesic(w, v) is the reverse of geodesic(v, w).
  bool reverse_geodesic_check(const Vertex& v, const Vertex& w);

  // Labels each geodesic edge by whether the norm Morse function drops or
  // rises along it. The shape is always down* up*; anything else throws
  // OrientationViolation (implementation bug).
  std::vector<EdgeOrientation> orientation_profile(const Vertex& v,
                                                   const Vertex& w);

  // All vertices with d(t, .) <= r, sorted by representative.
  std::vector<Vertex> ball(const Vertex& t, long long r);

  // Circumscribed radius and all centers of a finite vertex set, by
  // exhaustive search over the union of balls of radius max d(t, t0).
  CenterReport centers(std::span<const Vertex> t);

  // Cosets joined by an edge: representatives differ by right multiplication
  // by one simple, up to delta.
  bool adjacent(const Vertex& u, const Vertex& v);

  NormCache& norms() { return cache_; }

 private:
  const Germ* germ_;
  NormCache cache_;
  // centers() probes the same vertex pairs and balls over and over
  std::unordered_map<std::string, long long> distance_cache_;
  std::map<std::pair<std::vector<SimpleId>, long long>, std::vector<Vertex>>
      ball_cache_;
};

// A finite cyclic subgroup of G_delta = G/<delta^m>, generated by
// mu * delta^j with mu sigma^j(mu) ... sigma^{(t-1)j}(mu) = delta. Type 2
// pairs a type-1 generator with a commuting central factor delta^k.
struct FiniteSubgroup {
  SimpleId mu;
  long long j;
  long long t;
  long long order;
  int type;          // 1 or 2
  long long k = 0;   // type 2 only: sigma^k(mu) = mu
};

std::vector<FiniteSubgroup> finite_subgroups(const Germ& germ);

struct TamenessReport {
  std::vector<std::pair<int, long long>> norms;  // (n, ||delta^n||)
  Rational c;                                    // max norm/n over the probe
};

// Exact norms of delta^n for n <= max_power. Evidence only; never a
// tameness proof.
TamenessReport tameness_probe(const Germ& germ, int max_power,
                              long long node_budget = default_node_budget());

struct TranslationEstimate {
  Rational estimate;               // min |g^n|_D / n over 1 <= n <= N
  int best_n = 1;
  std::vector<long long> lengths;  // |g^n|_D for n = 1..N
};

// Upper bound on the translation length tau(g); converges as N grows since
// word length is subadditive.
TranslationEstimate translation_length(const GroupElement& g, int max_power);

}  // namespace garside
