#include "garside/builders.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace garside {

namespace {

// A finite Coxeter group as an explicit multiplication table, with word
// lengths (BFS over the generators), reflection lengths (BFS over all
// reflections) and lexicographically least reduced words.
struct GroupModel {
  int order = 0;
  int id = 0;
  std::vector<std::vector<int>> mul;
  std::vector<int> inv;
  std::vector<int> gens;          // generator element ids, in letter order
  std::string letters;            // one letter per generator
  std::vector<int> len;           // Coxeter length
  std::vector<std::string> least; // lex-least reduced word
  std::vector<int> refl_len;      // reflection length
  std::vector<int> reflections;

  void finish() {
    inv.assign(order, -1);
    for (int x = 0; x < order; ++x)
      for (int y = 0; y < order; ++y)
        if (mul[x][y] == id) inv[x] = y;

    len = bfs(gens);

    std::set<int> refl;
    for (int g : gens)
      for (int x = 0; x < order; ++x) refl.insert(mul[mul[x][g]][inv[x]]);
    reflections.assign(refl.begin(), refl.end());
    refl_len = bfs(reflections);

    // least reduced word, greedy smallest first letter, in length order
    least.assign(order, "");
    std::vector<int> by_len(order);
    std::iota(by_len.begin(), by_len.end(), 0);
    std::sort(by_len.begin(), by_len.end(),
              [&](int a, int b) { return len[a] < len[b]; });
    for (int x : by_len) {
      if (x == id) continue;
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        int y = mul[gens[gi]][x];  // strip a first letter: x = g * y
        if (len[y] == len[x] - 1) {
          least[x] = letters[gi] + least[y];
          break;
        }
      }
      assert(!least[x].empty());
    }
  }

  std::vector<int> bfs(const std::vector<int>& step) const {
    std::vector<int> dist(order, -1);
    std::deque<int> queue{id};
    dist[id] = 0;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int s : step) {
        int y = mul[x][s];
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
    }
    return dist;
  }
};

// Symmetric group on n+1 points. mul[x][y] = x o y (apply y first), so the
// Coxeter element s_1...s_n is the cycle (1 2 ... n+1).
GroupModel symmetric_model(int n) {
  GroupModel m;
  std::vector<int> base(n + 1);
  std::iota(base.begin(), base.end(), 0);

  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> perms;
  std::vector<int> p = base;
  do {
    index.emplace(p, static_cast<int>(perms.size()));
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  m.order = static_cast<int>(perms.size());
  m.id = index.at(base);
  m.mul.assign(m.order, std::vector<int>(m.order));
  for (int x = 0; x < m.order; ++x)
    for (int y = 0; y < m.order; ++y) {
      std::vector<int> z(n + 1);
      for (int i = 0; i <= n; ++i) z[i] = perms[x][perms[y][i]];
      m.mul[x][y] = index.at(z);
    }

  m.letters = std::string("stuvw").substr(0, n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> t = base;
    std::swap(t[i], t[i + 1]);
    m.gens.push_back(index.at(t));
  }
  m.finish();
  return m;
}

std::vector<std::vector<int>> symmetric_perms(int n) {
  std::vector<int> base(n + 1);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> perms;
  std::vector<int> p = base;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return perms;
}

// Dihedral group of order 2m acting on Z/m: rotations x -> x+k and
// reflections x -> j-x; s = (x -> -x), t = (x -> 1-x).
GroupModel dihedral_model(int m) {
  GroupModel g;
  g.order = 2 * m;
  g.id = 0;
  auto rot = [&](int k) { return ((k % m) + m) % m; };
  // 0..m-1 rotations, m..2m-1 reflections
  g.mul.assign(g.order, std::vector<int>(g.order));
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y) {
      bool xr = x >= m, yr = y >= m;
      int xk = xr ? x - m : x, yk = yr ? y - m : y;
      int z;
      if (!xr && !yr) z = rot(xk + yk);                 // rho_a rho_b
      else if (!xr && yr) z = m + rot(yk - xk);          // rho then tau
      else if (xr && !yr) z = m + rot(xk + yk);          // tau then rho
      else z = rot(yk - xk);                             // tau_a tau_b
      g.mul[x][y] = z;
    }
  g.letters = "st";
  g.gens = {m + 0, m + 1};
  g.finish();
  return g;
}

std::string cycle_name(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  std::vector<bool> used(n, false);
  std::string s;
  for (int i = 0; i < n; ++i) {
    if (used[i] || perm[i] == i) continue;
    s += '(';
    int j = i;
    do {
      used[j] = true;
      s += static_cast<char>('1' + j);
      j = perm[j];
    } while (j != i);
    s += ')';
  }
  return s.empty() ? "1" : s;
}

Germ germ_from_model(std::string germ_name, const GroupModel& m,
                     const std::vector<int>& elements,
                     const std::vector<std::string>& element_names, int delta,
                     const std::vector<int>& elt_len,
                     const std::vector<int>& atom_elements) {
  RawGerm raw;
  raw.name = std::move(germ_name);

  std::map<int, std::string> name_of;
  for (size_t i = 0; i < elements.size(); ++i)
    name_of.emplace(elements[i], element_names[i]);

  std::vector<std::string> sorted;
  for (const auto& [elt, nm] : name_of)
    if (elt != m.id) sorted.push_back(nm);
  std::sort(sorted.begin(), sorted.end());
  raw.simples.push_back("1");
  raw.simples.insert(raw.simples.end(), sorted.begin(), sorted.end());
  raw.delta = name_of.at(delta);

  std::vector<std::string> atom_names;
  for (int a : atom_elements) atom_names.push_back(name_of.at(a));
  std::sort(atom_names.begin(), atom_names.end());
  raw.atoms = atom_names;

  std::set<int> member(elements.begin(), elements.end());
  for (int u : elements) {
    if (u == m.id) continue;
    for (int v : elements) {
      if (v == m.id) continue;
      int w = m.mul[u][v];
      if (!member.count(w)) continue;
      if (elt_len[u] + elt_len[v] != elt_len[w]) continue;
      raw.product.push_back({name_of.at(u), name_of.at(v), name_of.at(w)});
    }
  }
  std::sort(raw.product.begin(), raw.product.end());

  return Germ::validate(raw);
}

GroupModel model_for(const CoxeterSpec& spec) {
  switch (spec.family) {
    case CoxeterSpec::Family::A:
      if (spec.rank < 1 || spec.rank > 5)
        throw RankTooLarge("family A supports rank 1..5, got " +
                           std::to_string(spec.rank));
      return symmetric_model(spec.rank);
    case CoxeterSpec::Family::I2:
      if (spec.rank < 3)
        throw Error("I2 requires m >= 3, got " + std::to_string(spec.rank));
      if (spec.rank > 1000)
        throw RankTooLarge("I2 supports m <= 1000, got " +
                           std::to_string(spec.rank));
      return dihedral_model(spec.rank);
  }
  throw Error("bad Coxeter family");
}

std::string family_tag(const CoxeterSpec& spec) {
  if (spec.family == CoxeterSpec::Family::A)
    return "A" + std::to_string(spec.rank);
  return "I2(" + std::to_string(spec.rank) + ")";
}

}  // namespace

Germ classical_artin(const CoxeterSpec& spec) {
  GroupModel m = model_for(spec);

  int longest = 0;
  for (int x = 0; x < m.order; ++x)
    if (m.len[x] > m.len[longest]) longest = x;

  std::vector<int> elements(m.order);
  std::iota(elements.begin(), elements.end(), 0);
  std::vector<std::string> names;
  for (int x : elements) names.push_back(x == m.id ? "1" : m.least[x]);

  return germ_from_model("classical " + family_tag(spec), m, elements, names,
                         longest, m.len, m.gens);
}

Germ dual_artin(const CoxeterSpec& spec) {
  GroupModel m = model_for(spec);

  int delta = m.id;
  for (int g : m.gens) delta = m.mul[delta][g];

  std::vector<int> elements;
  for (int x = 0; x < m.order; ++x)
    if (m.refl_len[x] + m.refl_len[m.mul[m.inv[x]][delta]] ==
        m.refl_len[delta])
      elements.push_back(x);

  std::vector<std::string> names;
  if (spec.family == CoxeterSpec::Family::A) {
    auto perms = symmetric_perms(spec.rank);
    for (int x : elements) names.push_back(cycle_name(perms[x]));
  } else {
    for (int x : elements) names.push_back(x == m.id ? "1" : m.least[x]);
  }

  return germ_from_model("dual " + family_tag(spec), m, elements, names, delta,
                         m.refl_len, m.reflections);
}

bool same_presentation(const Germ& a, const Germ& b) {
  if (a.size() != b.size()) return false;
  std::set<std::string> an(a.simple_names().begin(), a.simple_names().end());
  std::set<std::string> bn(b.simple_names().begin(), b.simple_names().end());
  if (an != bn) return false;
  if (a.name_of(a.delta()) != b.name_of(b.delta())) return false;
  for (SimpleId x = 0; x < a.size(); ++x)
    for (SimpleId y = 0; y < a.size(); ++y) {
      SimpleId bx = *b.id_of(a.name_of(x));
      SimpleId by = *b.id_of(a.name_of(y));
      SimpleId p = a.product(x, y);
      SimpleId q = b.product(bx, by);
      if (p == simple_undefined) {
        if (q != simple_undefined) return false;
      } else {
        if (q == simple_undefined || a.name_of(p) != b.name_of(q))
          return false;
      }
    }
  return true;
}

}  // namespace garside
