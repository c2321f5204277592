#include "garside/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

#include "garside/snf.hpp"

namespace garside {

GroupElement Vertex::element() const {
  return group_element(rep_.germ(), rep_.letters(), 0);
}

Rational Rational::of(long long num, long long den) {
  assert(den != 0);
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

bool Rational::operator<(const Rational& o) const {
  return checked_mul(num, o.den) < checked_mul(o.num, den);
}

Geometry::Geometry(const Germ& germ, long long node_budget)
    : germ_(&germ), cache_(germ, node_budget) {}

namespace {

std::string pair_key(const Vertex& v, const Vertex& w) {
  std::string key;
  auto append = [&key](const std::vector<SimpleId>& xs) {
    for (SimpleId x : xs) {
      key.append(reinterpret_cast<const char*>(&x), sizeof x);
    }
    SimpleId sep = simple_undefined;
    key.append(reinterpret_cast<const char*>(&sep), sizeof sep);
  };
  append(v.rep().letters());
  append(w.rep().letters());
  return key;
}

}  // namespace

long long Geometry::distance(const Vertex& v, const Vertex& w) {
  std::string key = pair_key(v, w);
  if (auto it = distance_cache_.find(key); it != distance_cache_.end())
    return it->second;
  GroupElement g = mult(inverse(v.element()), w.element());
  long long d = cache_.norm(group_element(*germ_, g.prefix().letters(), 0));
  distance_cache_.emplace(std::move(key), d);
  return d;
}

std::vector<SimpleId> Geometry::geodesic(const Vertex& v, const Vertex& w) {
  GroupElement g = mult(inverse(v.element()), w.element());
  return g.prefix().letters();
}

std::vector<Vertex> Geometry::geodesic_cosets(const Vertex& v,
                                              const Vertex& w) {
  std::vector<Vertex> path{v};
  GroupElement cur = v.element();
  for (SimpleId b : geodesic(v, w)) {
    cur = mult(cur, simple_element(*germ_, b));
    path.push_back(Vertex::of(cur));
  }
  return path;
}

bool Geometry::reverse_geodesic_check(const Vertex& v, const Vertex& w) {
  std::vector<Vertex> fwd = geodesic_cosets(v, w);
  std::vector<Vertex> bwd = geodesic_cosets(w, v);
  std::reverse(bwd.begin(), bwd.end());
  return fwd == bwd;
}

std::vector<EdgeOrientation> Geometry::orientation_profile(const Vertex& v,
                                                           const Vertex& w) {
  std::vector<Vertex> path = geodesic_cosets(v, w);
  std::vector<EdgeOrientation> profile;
  bool seen_up = false;
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    long long a = cache_.norm(path[i].element());
    long long b = cache_.norm(path[i + 1].element());
    if (a == b)
      throw OrientationViolation("Morse function constant on a geodesic edge");
    EdgeOrientation o = b < a ? EdgeOrientation::down : EdgeOrientation::up;
    if (o == EdgeOrientation::down && seen_up)
      throw OrientationViolation(
          "geodesic profile is not of the shape down* up*");
    if (o == EdgeOrientation::up) seen_up = true;
    profile.push_back(o);
  }
  return profile;
}

std::vector<Vertex> Geometry::ball(const Vertex& t, long long r) {
  auto cache_key = std::make_pair(t.rep().letters(), r);
  if (auto it = ball_cache_.find(cache_key); it != ball_cache_.end())
    return it->second;
  // {t*a : a positive delta-free, ||a|| <= r}; distinct delta-free words give
  // distinct cosets. DFS over atom extensions, pruning at deltas or norm > r.
  std::set<std::vector<SimpleId>> seen;
  std::vector<std::vector<SimpleId>> stack{{}};
  seen.insert({});
  GroupElement base = t.element();
  std::set<Vertex> out;
  while (!stack.empty()) {
    std::vector<SimpleId> w = std::move(stack.back());
    stack.pop_back();
    out.insert(Vertex::of(mult(base, group_element(*germ_, w, 0))));
    for (SimpleId a : germ_->atoms()) {
      std::vector<SimpleId> ext = w;
      ext.push_back(a);
      auto [word, deltas] = normalize(*germ_, ext);
      if (deltas > 0) continue;
      if (seen.count(word.letters())) continue;
      GroupElement elt = group_element(*germ_, word.letters(), 0);
      if (cache_.norm(elt) > r) continue;
      seen.insert(word.letters());
      stack.push_back(word.letters());
    }
  }
  std::vector<Vertex> result(out.begin(), out.end());
  ball_cache_.emplace(std::move(cache_key), result);
  return result;
}

CenterReport Geometry::centers(std::span<const Vertex> t) {
  if (t.empty()) throw Error("centers requires a nonempty vertex set");
  // Every center z satisfies d(x, z) <= r(T) for all x in T, so it lies in
  // ball(t0, r(T)) for any fixed t0. Scan balls around one point of T with
  // increasing radius; the first radius r admitting a vertex v with
  // max_x d(x, v) <= r is r(T), and the hits at that radius are exactly the
  // centers. r(T) <= min over t0 of max_x d(x, t0) caps the scan.
  const Vertex* base = &t.front();
  long long cap = -1;
  for (const Vertex& t0 : t) {
    long long bound = 0;
    for (const Vertex& x : t) bound = std::max(bound, distance(x, t0));
    if (cap < 0 || bound < cap) {
      cap = bound;
      base = &t0;
    }
  }

  CenterReport report;
  for (long long r = 0; r <= cap; ++r) {
    for (const Vertex& v : ball(*base, r)) {
      long long worst = 0;
      for (const Vertex& x : t) {
        worst = std::max(worst, distance(x, v));
        if (worst > r) break;
      }
      if (worst <= r) report.centers.push_back(v);
    }
    if (!report.centers.empty()) {
      report.radius = r;
      break;
    }
  }

  std::sort(report.centers.begin(), report.centers.end());
  if (report.centers.empty())
    throw Error("internal: center scan exceeded its radius cap");
  for (size_t i = 0; i < report.centers.size(); ++i)
    for (size_t j = i + 1; j < report.centers.size(); ++j)
      if (!adjacent(report.centers[i], report.centers[j]))
        throw Error("internal: centers are not pairwise adjacent");
  return report;
}

bool Geometry::adjacent(const Vertex& u, const Vertex& v) {
  GroupElement g = mult(inverse(u.element()), v.element());
  return g.prefix().size() <= 1;
}

std::vector<FiniteSubgroup> finite_subgroups(const Germ& g) {
  long long m = g.sigma_order();
  std::vector<FiniteSubgroup> out;

  for (long long j = 0; j < m; ++j) {
    for (SimpleId mu : g.nontrivial_simples()) {
      // dedup by the sigma^j-twisted cycling orbit of mu
      bool canonical = true;
      for (SimpleId x = g.sigma(mu, j); x != mu; x = g.sigma(x, j))
        if (x < mu) {
          canonical = false;
          break;
        }
      if (!canonical) continue;

      // partial products mu sigma^j(mu) sigma^{2j}(mu) ... while simple
      SimpleId p = mu;
      for (long long i = 1; p != simple_undefined; ++i) {
        if (p == g.delta()) {
          long long t = i;
          long long order = t * m / std::gcd(m, t * j + 1);
          if (order > 1) out.push_back({mu, j, t, order, 1, 0});
          break;
        }
        if (i > g.delta_norm()) break;
        p = g.product(p, g.sigma(mu, i * j));
      }
    }
  }

  // type 2: a type-1 generator times a commuting central factor delta^k,
  // kept when the product subgroup is strictly larger than the cyclic one
  std::vector<FiniteSubgroup> type2;
  for (const auto& rec : out) {
    for (long long k = 1; k < m; ++k) {
      if (g.sigma(rec.mu, k) != rec.mu) continue;
      long long g1 = std::gcd(rec.t * rec.j + 1, m);
      long long gk = std::gcd(k, m);
      long long lcm = g1 / std::gcd(g1, gk) * gk;
      long long order = rec.order * (lcm / gk);
      if (order > rec.order)
        type2.push_back({rec.mu, rec.j, rec.t, order, 2, k});
    }
  }
  out.insert(out.end(), type2.begin(), type2.end());

  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.type, a.j, a.mu, a.k) < std::tie(b.type, b.j, b.mu, b.k);
  });
  return out;
}

TamenessReport tameness_probe(const Germ& g, int max_power,
                              long long node_budget) {
  if (max_power < 1) throw Error("tameness probe needs max power >= 1");
  NormCache cache(g, node_budget);
  TamenessReport report;
  report.c = Rational::of(0, 1);
  for (int n = 1; n <= max_power; ++n) {
    long long nrm = cache.norm(delta_power(g, n));
    report.norms.emplace_back(n, nrm);
    Rational ratio = Rational::of(nrm, n);
    if (report.c < ratio) report.c = ratio;
  }
  return report;
}

TranslationEstimate translation_length(const GroupElement& g, int max_power) {
  if (max_power < 1) throw Error("translation length needs max power >= 1");
  TranslationEstimate est;
  GroupElement acc = GroupElement::identity(g.germ());
  bool first = true;
  for (int n = 1; n <= max_power; ++n) {
    acc = mult(acc, g);
    long long len = word_length(acc);
    est.lengths.push_back(len);
    Rational ratio = Rational::of(len, n);
    if (first || ratio < est.estimate) {
      est.estimate = ratio;
      est.best_n = n;
      first = false;
    }
  }
  return est;
}

}  // namespace garside
