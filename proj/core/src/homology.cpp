#include "garside/homology.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <map>
#include <sstream>

namespace garside {

namespace {

void collect(const Germ& g, std::vector<SimpleId>& cur, SimpleId partial,
             int k, std::vector<TupleCell>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back({cur, partial});
    return;
  }
  for (SimpleId e = 1; e < g.size(); ++e) {
    SimpleId next = g.product(partial, e);
    if (next == simple_undefined) continue;
    cur.push_back(e);
    collect(g, cur, next, k, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<TupleCell> cells(const Germ& g, int k) {
  std::vector<TupleCell> out;
  if (k == 0) {
    out.push_back({{}, simple_identity});
    return out;
  }
  std::vector<SimpleId> cur;
  collect(g, cur, simple_identity, k, out);
  return out;
}

IntMatrix boundary(const Germ& g, int k) {
  std::vector<TupleCell> rows = cells(g, k - 1);
  std::vector<TupleCell> cols = cells(g, k);
  std::map<std::vector<SimpleId>, long long> row_index;
  for (size_t i = 0; i < rows.size(); ++i)
    row_index.emplace(rows[i].entries, static_cast<long long>(i));

  IntMatrix m(static_cast<long long>(rows.size()),
              static_cast<long long>(cols.size()));
  std::vector<SimpleId> face;
  for (size_t c = 0; c < cols.size(); ++c) {
    const auto& t = cols[c].entries;
    auto add = [&](const std::vector<SimpleId>& f, long long sign) {
      auto it = row_index.find(f);
      assert(it != row_index.end());
      m(it->second, static_cast<long long>(c)) += sign;
    };
    face.assign(t.begin() + 1, t.end());
    add(face, +1);
    for (int i = 1; i <= k - 1; ++i) {
      face.assign(t.begin(), t.end());
      face[i - 1] = g.product(t[i - 1], t[i]);
      face.erase(face.begin() + i);
      add(face, (i % 2 == 0) ? +1 : -1);
    }
    face.assign(t.begin(), t.end() - 1);
    add(face, (k % 2 == 0) ? +1 : -1);
  }
  return m;
}

ChainComplex bar_complex(const Germ& g) {
  ChainComplex c;
  int d = g.delta_norm();
  c.ranks.resize(d + 1);
  c.boundaries.resize(d + 1);
  for (int k = 0; k <= d; ++k)
    c.ranks[k] = static_cast<long long>(cells(g, k).size());
  for (int k = 1; k <= d; ++k) c.boundaries[k] = boundary(g, k);
  return c;
}

std::string to_string(const HomologyGroup& h) {
  std::vector<std::string> parts;
  if (h.rank == 1)
    parts.push_back("Z");
  else if (h.rank > 1)
    parts.push_back("Z^" + std::to_string(h.rank));
  for (long long d : h.torsion) parts.push_back("Z/" + std::to_string(d));
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
  return s;
}

std::vector<HomologyGroup> homology_from(
    const std::vector<long long>& ranks,
    const std::vector<IntMatrix>& boundaries) {
  size_t top = ranks.size();
  std::vector<long long> brank(top + 1, 0);
  std::vector<std::vector<long long>> factors(top + 1);
  for (size_t k = 1; k < top; ++k) {
    SmithResult s = smith_normal_form(boundaries[k]);
    brank[k] = s.rank();
    factors[k] = std::move(s.factors);
  }

  std::vector<HomologyGroup> h(top);
  for (size_t k = 0; k < top; ++k) {
    h[k].rank = ranks[k] - brank[k] - brank[k + 1];
    assert(h[k].rank >= 0);
    if (k + 1 < top)
      for (long long d : factors[k + 1])
        if (d > 1) h[k].torsion.push_back(d);
  }
  return h;
}

std::vector<HomologyGroup> homology(const Germ& g) {
  ChainComplex c = bar_complex(g);
  return homology_from(c.ranks, c.boundaries);
}

std::vector<HomologyGroup> cohomology(const Germ& g) {
  // Transposed complex: H^k uses rank(d_k), rank(d_{k+1}) and the invariant
  // factors of d_k (so torsion of H^k equals torsion of H_{k-1}).
  ChainComplex c = bar_complex(g);
  size_t top = c.ranks.size();
  std::vector<long long> brank(top + 1, 0);
  std::vector<std::vector<long long>> factors(top + 1);
  for (size_t k = 1; k < top; ++k) {
    SmithResult s = smith_normal_form(c.boundaries[k].transposed());
    brank[k] = s.rank();
    factors[k] = std::move(s.factors);
  }
  std::vector<HomologyGroup> h(top);
  for (size_t k = 0; k < top; ++k) {
    h[k].rank = c.ranks[k] - brank[k] - brank[k + 1];
    assert(h[k].rank >= 0);
    for (long long d : factors[k])
      if (d > 1) h[k].torsion.push_back(d);
  }
  return h;
}

namespace {

FinitePoset make_poset(const Germ& g, std::vector<SimpleId> elems) {
  FinitePoset p;
  p.elements = std::move(elems);
  size_t n = p.elements.size();
  p.lt.assign(n * n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (i != j && g.divides(p.elements[i], p.elements[j], Side::left))
        p.lt[i * n + j] = 1;
  return p;
}

}  // namespace

FinitePoset proper_poset(const Germ& g) {
  return make_poset(g, g.proper_simples());
}

FinitePoset avoid_poset(const Germ& g, SimpleId mu) {
  if (mu == simple_identity)
    throw Error("avoid_poset requires a nontrivial simple");
  std::vector<SimpleId> elems;
  for (SimpleId eta : g.proper_simples())
    if (!g.divides(mu, eta, Side::left)) elems.push_back(eta);
  return make_poset(g, elems);
}

FinitePoset descending_link(const Germ& g, const PositiveWord& rep) {
  if (rep.empty()) return make_poset(g, {});
  SimpleId comp = g.right_complement(rf(rep));
  std::vector<SimpleId> elems;
  for (SimpleId mu : g.proper_simples())
    if (g.divides(comp, mu, Side::left)) elems.push_back(mu);
  return make_poset(g, elems);
}

FinitePoset ascending_link(const Germ& g, const PositiveWord& rep) {
  SimpleId front = rep.empty() ? simple_identity : rf(rep);
  SimpleId comp = g.right_complement(front);  // RF(empty)* = delta
  return avoid_poset(g, comp);
}

namespace {

// Chains of the poset by dimension; chains[k] lists (k+1)-element chains,
// each ascending, as position indices.
std::vector<std::vector<std::vector<int>>> order_complex(const FinitePoset& p) {
  std::vector<std::vector<std::vector<int>>> chains;
  size_t n = p.size();
  if (n == 0) return chains;

  std::vector<std::vector<int>> frontier;
  for (size_t i = 0; i < n; ++i) frontier.push_back({static_cast<int>(i)});
  while (!frontier.empty()) {
    chains.push_back(frontier);
    std::vector<std::vector<int>> next;
    for (const auto& c : frontier)
      for (size_t j = 0; j < n; ++j)
        if (p.less(static_cast<size_t>(c.back()), j)) {
          auto ext = c;
          ext.push_back(static_cast<int>(j));
          next.push_back(std::move(ext));
        }
    frontier = std::move(next);
  }
  return chains;
}

// Augmented chain complex of the order complex: index 0 is the empty
// simplex, index k holds the (k-1)-chains. Reduced H_d = H[d+1].
std::vector<HomologyGroup> reduced_groups(const FinitePoset& p) {
  auto chains = order_complex(p);
  size_t top = chains.size();

  std::vector<long long> ranks(top + 1);
  ranks[0] = 1;
  for (size_t k = 0; k < top; ++k)
    ranks[k + 1] = static_cast<long long>(chains[k].size());

  std::vector<IntMatrix> boundaries(top + 1);
  if (top >= 1) {
    boundaries[1] = IntMatrix(1, ranks[1]);
    for (long long j = 0; j < ranks[1]; ++j) boundaries[1](0, j) = 1;
  }
  for (size_t k = 1; k < top; ++k) {
    std::map<std::vector<int>, long long> row_index;
    for (size_t i = 0; i < chains[k - 1].size(); ++i)
      row_index.emplace(chains[k - 1][i], static_cast<long long>(i));
    IntMatrix m(ranks[k], ranks[k + 1]);
    for (size_t c = 0; c < chains[k].size(); ++c) {
      const auto& ch = chains[k][c];
      for (size_t drop = 0; drop < ch.size(); ++drop) {
        std::vector<int> face;
        for (size_t i = 0; i < ch.size(); ++i)
          if (i != drop) face.push_back(ch[i]);
        auto it = row_index.find(face);
        assert(it != row_index.end());
        m(it->second, static_cast<long long>(c)) +=
            (drop % 2 == 0) ? 1 : -1;
      }
    }
    boundaries[k + 1] = std::move(m);
  }
  return homology_from(ranks, boundaries);
}

}  // namespace

std::vector<GradedGroup> reduced_poset_homology(const FinitePoset& p) {
  auto groups = reduced_groups(p);
  std::vector<GradedGroup> out;
  for (size_t i = 0; i < groups.size(); ++i)
    out.push_back({static_cast<int>(i) - 1, std::move(groups[i])});
  return out;
}

std::vector<GradedGroup> reduced_poset_cohomology(const FinitePoset& p) {
  // Universal coefficients over Z: rank(H^k) = rank(H_k), torsion of H^k
  // equals torsion of H_{k-1}.
  auto groups = reduced_groups(p);
  std::vector<GradedGroup> out;
  for (size_t i = 0; i < groups.size(); ++i) {
    HomologyGroup g;
    g.rank = groups[i].rank;
    if (i > 0) g.torsion = groups[i - 1].torsion;
    out.push_back({static_cast<int>(i) - 1, std::move(g)});
  }
  return out;
}

namespace {

PosetReport make_report(std::string label, std::optional<SimpleId> avoided,
                        const FinitePoset& p, bool cohomology_flavor) {
  PosetReport r;
  r.label = std::move(label);
  r.avoided = avoided;
  r.groups = cohomology_flavor ? reduced_poset_cohomology(p)
                               : reduced_poset_homology(p);
  r.empty_poset = p.size() == 0;
  int nonzero_count = 0;
  int nonzero_degree = 0;
  for (const auto& gg : r.groups) {
    if (!gg.group.torsion.empty()) r.torsion_free = false;
    if (!gg.group.is_zero()) {
      ++nonzero_count;
      nonzero_degree = gg.degree;
    }
  }
  r.all_zero = nonzero_count == 0;
  if (nonzero_count == 1) r.concentrated_degree = nonzero_degree;
  return r;
}

std::vector<PosetReport> checker_reports(const Germ& g,
                                         bool cohomology_flavor) {
  std::vector<PosetReport> reports;
  reports.push_back(
      make_report("proper", std::nullopt, proper_poset(g), cohomology_flavor));
  for (SimpleId mu : g.proper_simples())
    reports.push_back(make_report("avoid " + g.name_of(mu), mu,
                                  avoid_poset(g, mu), cohomology_flavor));
  return reports;
}

}  // namespace

DualityReport duality_check(const Germ& g) {
  DualityReport report;
  report.posets = checker_reports(g, /*cohomology_flavor=*/true);

  std::optional<int> common;
  for (const auto& p : report.posets) {
    if (p.empty_poset) {
      report.reason = "poset '" + p.label + "' is empty";
      return report;
    }
    if (!p.torsion_free) {
      report.reason = "poset '" + p.label + "' has torsion";
      return report;
    }
    if (p.all_zero) continue;  // compatible with any concentration degree
    if (!p.concentrated_degree) {
      report.reason =
          "poset '" + p.label + "' has cohomology in more than one degree";
      return report;
    }
    if (common && *common != *p.concentrated_degree) {
      report.reason = "posets concentrate in different degrees (" +
                      std::to_string(*common) + " vs " +
                      std::to_string(*p.concentrated_degree) + ")";
      return report;
    }
    common = p.concentrated_degree;
  }
  if (!common) {
    report.reason = "all posets are acyclic; no degree is pinned";
    return report;
  }
  report.is_duality = true;
  report.n = *common + 2;
  return report;
}

EndConnectivityReport end_connectivity_check(const Germ& g) {
  EndConnectivityReport report;
  report.posets = checker_reports(g, /*cohomology_flavor=*/false);

  // Largest n with reduced homology of every poset trivial in degrees <= n.
  int first_nonzero = std::numeric_limits<int>::max();
  int top_degree = -1;
  std::string blocker;
  for (const auto& p : report.posets) {
    for (const auto& gg : p.groups) {
      top_degree = std::max(top_degree, gg.degree);
      if (!gg.group.is_zero() && gg.degree < first_nonzero) {
        first_nonzero = gg.degree;
        blocker = p.label;
      }
    }
  }
  if (first_nonzero == std::numeric_limits<int>::max()) {
    // every poset acyclic: the hypothesis holds up to the top degree present
    report.conclusive = true;
    report.n = std::max(top_degree, 0);
  } else if (first_nonzero >= 1) {
    report.conclusive = true;
    report.n = first_nonzero - 1;
  } else {
    report.reason = "poset '" + blocker + "' has reduced homology in degree " +
                    std::to_string(first_nonzero);
    return report;
  }
  report.conclusion =
      std::to_string(report.n + 1) + "-connected at infinity";
  return report;
}

}  // namespace garside
