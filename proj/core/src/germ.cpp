#include "garside/germ.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>

namespace garside {

namespace {

// Per-element bit rows over n elements; used for divisor-set intersections.
class BitRows {
 public:
  BitRows(size_t n) : n_(n), w_((n + 63) / 64), bits_(n * w_, 0) {}

  void set(size_t i, size_t j) { bits_[i * w_ + j / 64] |= word(j); }
  bool get(size_t i, size_t j) const {
    return (bits_[i * w_ + j / 64] & word(j)) != 0;
  }
  std::vector<std::uint64_t> intersect(size_t i, size_t j) const {
    std::vector<std::uint64_t> out(w_);
    for (size_t k = 0; k < w_; ++k)
      out[k] = bits_[i * w_ + k] & bits_[j * w_ + k];
    return out;
  }
  // set `s` contained in row i?
  bool contains(size_t i, const std::vector<std::uint64_t>& s) const {
    for (size_t k = 0; k < w_; ++k)
      if (s[k] & ~bits_[i * w_ + k]) return false;
    return true;
  }
  template <typename F>
  void for_each(const std::vector<std::uint64_t>& s, F&& f) const {
    for (size_t k = 0; k < w_; ++k) {
      std::uint64_t m = s[k];
      while (m) {
        unsigned b = static_cast<unsigned>(__builtin_ctzll(m));
        f(static_cast<SimpleId>(k * 64 + b));
        m &= m - 1;
      }
    }
  }

 private:
  static std::uint64_t word(size_t j) { return std::uint64_t(1) << (j % 64); }
  size_t n_, w_;
  std::vector<std::uint64_t> bits_;
};

long long lcm_ll(long long a, long long b) {
  return a / std::gcd(a, b) * b;
}

}  // namespace

std::string_view to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::missing_identity: return "MissingIdentity";
    case Violation::Kind::associativity: return "AssociativityViolation";
    case Violation::Kind::cancellation: return "CancellationViolation";
    case Violation::Kind::not_a_lattice: return "NotALattice";
    case Violation::Kind::divisor_mismatch: return "DivisorMismatch";
    case Violation::Kind::complement_not_unique: return "ComplementNotUnique";
    case Violation::Kind::sigma_not_automorphism: return "SigmaNotAutomorphism";
    case Violation::Kind::atom_list_mismatch: return "AtomListMismatch";
  }
  return "?";
}

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error([&] {
        std::ostringstream os;
        os << "germ validation failed (" << violations.size() << " violation"
           << (violations.size() == 1 ? "" : "s") << ")";
        for (const auto& v : violations) os << "\n  " << v.message;
        return os.str();
      }()),
      violations_(std::move(violations)) {}

SimpleId Germ::check(SimpleId a) const {
  if (a < 0 || a >= size())
    throw UnknownSimple("simple id " + std::to_string(a) + " out of range");
  return a;
}

std::optional<SimpleId> Germ::id_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Germ::divides(SimpleId a, SimpleId b, Side side) const {
  size_t i = idx(check(a), check(b));
  return (side == Side::left ? ldiv_[i] : rdiv_[i]) != 0;
}

SimpleId Germ::meet(SimpleId a, SimpleId b, Side side) const {
  return (side == Side::left ? meet_l_ : meet_r_)[idx(check(a), check(b))];
}

SimpleId Germ::join(SimpleId a, SimpleId b, Side side) const {
  return (side == Side::left ? join_l_ : join_r_)[idx(check(a), check(b))];
}

SimpleId Germ::sigma(SimpleId mu, long long k) const {
  check(mu);
  const auto& cyc = cycles_[cycle_of_[mu]];
  long long len = static_cast<long long>(cyc.size());
  long long pos = (cycle_pos_[mu] + (k % len) + len) % len;
  return cyc[pos];
}

SimpleId Germ::left_quotient(SimpleId a, SimpleId b) const {
  SimpleId c = left_quot_[idx(check(a), check(b))];
  if (c == simple_undefined)
    throw NotADivisor(name_of(a) + " does not left-divide " + name_of(b));
  return c;
}

SimpleId Germ::right_quotient(SimpleId a, SimpleId b) const {
  SimpleId c = right_quot_[idx(check(a), check(b))];
  if (c == simple_undefined)
    throw NotADivisor(name_of(a) + " does not right-divide " + name_of(b));
  return c;
}

std::vector<SimpleId> Germ::nontrivial_simples() const {
  std::vector<SimpleId> out;
  for (SimpleId a = 1; a < size(); ++a) out.push_back(a);
  return out;
}

std::vector<SimpleId> Germ::proper_simples() const {
  std::vector<SimpleId> out;
  for (SimpleId a = 1; a < size(); ++a)
    if (a != delta_) out.push_back(a);
  return out;
}

Germ Germ::validate(const RawGerm& raw) {
  std::vector<Violation> violations;
  auto germ = try_validate(raw, violations);
  if (!germ) throw ValidationError(std::move(violations));
  return std::move(*germ);
}

std::optional<Germ> Germ::try_validate(const RawGerm& raw,
                                       std::vector<Violation>& out) {
  Germ g;
  g.name_ = raw.name;

  // -- structural stage: names, identity, table entries --------------------

  bool has_identity = false;
  for (const auto& s : raw.simples)
    if (s == "1") has_identity = true;
  if (!has_identity) {
    out.push_back({Violation::Kind::missing_identity, {}, Side::left,
                   "MissingIdentity: germ has no simple named \"1\""});
    return std::nullopt;
  }

  g.names_.push_back("1");
  for (const auto& s : raw.simples) {
    if (s.empty() || s.find('.') != std::string::npos ||
        s.find('@') != std::string::npos || s.find(' ') != std::string::npos)
      throw ParseError("bad simple name '" + s +
                       "' (empty or contains '.', '@' or space)");
    if (s != "1") g.names_.push_back(s);
  }
  for (SimpleId i = 0; i < g.size(); ++i) {
    if (!g.index_.emplace(g.names_[i], i).second)
      throw ParseError("duplicate simple name '" + g.names_[i] + "'");
  }

  auto resolve = [&](const std::string& s) {
    auto it = g.index_.find(s);
    if (it == g.index_.end())
      throw ParseError("unknown simple name '" + s + "'");
    return it->second;
  };

  g.delta_ = resolve(raw.delta);

  const size_t n = g.names_.size();
  g.table_.assign(n * n, simple_undefined);
  for (size_t a = 0; a < n; ++a) {
    g.table_[g.idx(SimpleId(a), simple_identity)] = SimpleId(a);
    g.table_[g.idx(simple_identity, SimpleId(a))] = SimpleId(a);
  }
  for (const auto& t : raw.product) {
    SimpleId a = resolve(t[0]), b = resolve(t[1]), c = resolve(t[2]);
    SimpleId& slot = g.table_[g.idx(a, b)];
    if (slot != simple_undefined && slot != c)
      throw ParseError("duplicate product entry for (" + t[0] + ", " + t[1] +
                       ")");
    if ((a == simple_identity || b == simple_identity) && slot != c)
      throw ParseError("product entry [" + t[0] + ", " + t[1] + ", " + t[2] +
                       "] contradicts the identity law");
    slot = c;
  }

  auto witness_names = [&](std::initializer_list<SimpleId> ids) {
    std::string s;
    for (SimpleId i : ids) {
      if (!s.empty()) s += ", ";
      s += g.names_[i];
    }
    return s;
  };

  // -- stage 1: associativity and cancellation ------------------------------

  constexpr int kMaxPerKind = 10;
  int assoc_count = 0, cancel_count = 0;
  for (SimpleId a = 0; a < g.size() && assoc_count < kMaxPerKind; ++a) {
    for (SimpleId b = 0; b < g.size() && assoc_count < kMaxPerKind; ++b) {
      SimpleId ab = g.table_[g.idx(a, b)];
      for (SimpleId c = 0; c < g.size(); ++c) {
        SimpleId bc = g.table_[g.idx(b, c)];
        SimpleId ab_c =
            ab == simple_undefined ? simple_undefined : g.table_[g.idx(ab, c)];
        SimpleId a_bc =
            bc == simple_undefined ? simple_undefined : g.table_[g.idx(a, bc)];
        bool bad = (ab_c != simple_undefined || a_bc != simple_undefined) &&
                   ab_c != a_bc;
        if (bad) {
          out.push_back({Violation::Kind::associativity,
                         {a, b, c},
                         Side::left,
                         "AssociativityViolation: bracketings of (" +
                             witness_names({a, b, c}) + ") disagree"});
          if (++assoc_count >= kMaxPerKind) break;
        }
      }
    }
  }
  for (SimpleId a = 0; a < g.size() && cancel_count < kMaxPerKind; ++a) {
    std::vector<SimpleId> row_seen(n, simple_undefined);
    std::vector<SimpleId> col_seen(n, simple_undefined);
    for (SimpleId b = 0; b < g.size(); ++b) {
      SimpleId ab = g.table_[g.idx(a, b)];
      if (ab != simple_undefined) {
        if (row_seen[ab] != simple_undefined) {
          out.push_back({Violation::Kind::cancellation,
                         {a, row_seen[ab], b},
                         Side::left,
                         "CancellationViolation: " + g.names_[a] + "*" +
                             g.names_[row_seen[ab]] + " = " + g.names_[a] +
                             "*" + g.names_[b]});
          if (++cancel_count >= kMaxPerKind) break;
        }
        row_seen[ab] = b;
      }
      SimpleId ba = g.table_[g.idx(b, a)];
      if (ba != simple_undefined) {
        if (col_seen[ba] != simple_undefined) {
          out.push_back({Violation::Kind::cancellation,
                         {col_seen[ba], b, a},
                         Side::right,
                         "CancellationViolation: " + g.names_[col_seen[ba]] +
                             "*" + g.names_[a] + " = " + g.names_[b] + "*" +
                             g.names_[a]});
          if (++cancel_count >= kMaxPerKind) break;
        }
        col_seen[ba] = b;
      }
    }
  }
  if (!out.empty()) return std::nullopt;

  // quotient tables (unique by cancellation)
  g.left_quot_.assign(n * n, simple_undefined);
  g.right_quot_.assign(n * n, simple_undefined);
  for (SimpleId a = 0; a < g.size(); ++a)
    for (SimpleId b = 0; b < g.size(); ++b) {
      SimpleId ab = g.table_[g.idx(a, b)];
      if (ab == simple_undefined) continue;
      g.left_quot_[g.idx(a, ab)] = b;
      g.right_quot_[g.idx(b, ab)] = a;
    }

  // -- stage 2: divisibility orders, lattice, complements -------------------

  g.ldiv_.assign(n * n, 0);
  g.rdiv_.assign(n * n, 0);
  BitRows ldivisors(n), rdivisors(n), lmultiples(n), rmultiples(n);
  for (SimpleId a = 0; a < g.size(); ++a)
    for (SimpleId b = 0; b < g.size(); ++b) {
      SimpleId ab = g.table_[g.idx(a, b)];
      if (ab == simple_undefined) continue;
      g.ldiv_[g.idx(a, ab)] = 1;  // a <=_l ab
      g.rdiv_[g.idx(b, ab)] = 1;  // b <=_r ab
    }
  for (SimpleId a = 0; a < g.size(); ++a)
    for (SimpleId b = 0; b < g.size(); ++b) {
      if (g.ldiv_[g.idx(a, b)]) {
        ldivisors.set(b, a);
        lmultiples.set(a, b);
      }
      if (g.rdiv_[g.idx(a, b)]) {
        rdivisors.set(b, a);
        rmultiples.set(a, b);
      }
    }

  int order_count = 0;
  for (SimpleId a = 0; a < g.size() && order_count < kMaxPerKind; ++a)
    for (SimpleId b = SimpleId(a + 1); b < g.size(); ++b) {
      bool l_cycle = g.ldiv_[g.idx(a, b)] && g.ldiv_[g.idx(b, a)];
      bool r_cycle = g.rdiv_[g.idx(a, b)] && g.rdiv_[g.idx(b, a)];
      if (l_cycle || r_cycle) {
        out.push_back({Violation::Kind::not_a_lattice,
                       {a, b},
                       l_cycle ? Side::left : Side::right,
                       "NotALattice: divisibility is not antisymmetric on (" +
                           witness_names({a, b}) + ")"});
        if (++order_count >= kMaxPerKind) break;
      }
    }

  int mismatch_count = 0;
  for (SimpleId a = 0; a < g.size() && mismatch_count < kMaxPerKind; ++a) {
    bool l = g.ldiv_[g.idx(a, g.delta_)] != 0;
    bool r = g.rdiv_[g.idx(a, g.delta_)] != 0;
    if (!l || !r) {
      out.push_back({Violation::Kind::divisor_mismatch,
                     {a},
                     l ? Side::right : Side::left,
                     "DivisorMismatch: " + g.names_[a] + " is not a " +
                         (l ? "right" : "left") + " divisor of delta"});
      ++mismatch_count;
    }
  }

  g.meet_l_.assign(n * n, simple_undefined);
  g.meet_r_.assign(n * n, simple_undefined);
  g.join_l_.assign(n * n, simple_undefined);
  g.join_r_.assign(n * n, simple_undefined);

  // Element counts of the four row families. The glb of a divisor set, when
  // it exists, is its unique count-argmax (its row contains the whole set);
  // dually for lubs over multiple sets. One subset check decides.
  auto count_rows = [&](const BitRows& rows) {
    std::vector<int> cnt(n, 0);
    for (SimpleId x = 0; x < g.size(); ++x) {
      int c = 0;
      for (SimpleId y = 0; y < g.size(); ++y)
        if (rows.get(x, y)) ++c;
      cnt[x] = c;
    }
    return cnt;
  };
  std::vector<int> ldiv_cnt = count_rows(ldivisors);
  std::vector<int> rdiv_cnt = count_rows(rdivisors);
  std::vector<int> lmul_cnt = count_rows(lmultiples);
  std::vector<int> rmul_cnt = count_rows(rmultiples);

  int lattice_count = 0;
  auto bound = [&](const BitRows& rows, const std::vector<int>& cnt,
                   SimpleId a, SimpleId b) {
    auto common = rows.intersect(a, b);
    SimpleId best = simple_undefined;
    rows.for_each(common, [&](SimpleId c) {
      if (best == simple_undefined || cnt[c] > cnt[best]) best = c;
    });
    if (best != simple_undefined && !rows.contains(best, common))
      best = simple_undefined;
    return best;
  };
  for (SimpleId a = 0; a < g.size(); ++a)
    for (SimpleId b = 0; b < g.size(); ++b) {
      struct Case {
        const BitRows& rows;
        const std::vector<int>& cnt;
        std::vector<SimpleId>& table;
        Side side;
        const char* what;
      } cases[] = {
          {ldivisors, ldiv_cnt, g.meet_l_, Side::left, "left meet"},
          {rdivisors, rdiv_cnt, g.meet_r_, Side::right, "right meet"},
          {lmultiples, lmul_cnt, g.join_l_, Side::left, "left join"},
          {rmultiples, rmul_cnt, g.join_r_, Side::right, "right join"},
      };
      for (auto& c : cases) {
        SimpleId m = bound(c.rows, c.cnt, a, b);
        c.table[g.idx(a, b)] = m;
        if (m == simple_undefined && lattice_count < kMaxPerKind) {
          out.push_back({Violation::Kind::not_a_lattice,
                         {a, b},
                         c.side,
                         std::string("NotALattice: no ") + c.what + " for (" +
                             witness_names({a, b}) + ")"});
          ++lattice_count;
        }
      }
    }

  g.rc_.assign(n, simple_undefined);
  g.lc_.assign(n, simple_undefined);
  int comp_count = 0;
  for (SimpleId mu = 0; mu < g.size(); ++mu) {
    int rc_hits = 0, lc_hits = 0;
    for (SimpleId x = 0; x < g.size(); ++x) {
      if (g.table_[g.idx(mu, x)] == g.delta_) {
        g.rc_[mu] = x;
        ++rc_hits;
      }
      if (g.table_[g.idx(x, mu)] == g.delta_) {
        g.lc_[mu] = x;
        ++lc_hits;
      }
    }
    if ((rc_hits != 1 || lc_hits != 1) && comp_count < kMaxPerKind) {
      out.push_back(
          {Violation::Kind::complement_not_unique,
           {mu},
           rc_hits != 1 ? Side::right : Side::left,
           "ComplementNotUnique: " + g.names_[mu] + " has " +
               std::to_string(rc_hits) + " right / " + std::to_string(lc_hits) +
               " left complements"});
      ++comp_count;
    }
  }
  if (!out.empty()) return std::nullopt;

  // -- stage 3: sigma, atoms, norms -----------------------------------------

  g.sigma_.assign(n, simple_undefined);
  for (SimpleId nu = 0; nu < g.size(); ++nu) g.sigma_[nu] = g.lc_[g.lc_[nu]];

  int sigma_count = 0;
  for (SimpleId a = 0; a < g.size() && sigma_count < kMaxPerKind; ++a)
    for (SimpleId b = 0; b < g.size(); ++b) {
      SimpleId ab = g.table_[g.idx(a, b)];
      if (ab == simple_undefined) continue;
      SimpleId sab = g.table_[g.idx(g.sigma_[a], g.sigma_[b])];
      if (sab != g.sigma_[ab]) {
        out.push_back({Violation::Kind::sigma_not_automorphism,
                       {a, b},
                       Side::left,
                       "SigmaNotAutomorphism: sigma(" + witness_names({a, b}) +
                           ") breaks the product"});
        if (++sigma_count >= kMaxPerKind) break;
      }
    }
  if (!out.empty()) return std::nullopt;

  g.cycle_of_.assign(n, -1);
  g.cycle_pos_.assign(n, 0);
  g.sigma_order_ = 1;
  for (SimpleId start = 0; start < g.size(); ++start) {
    if (g.cycle_of_[start] >= 0) continue;
    std::vector<SimpleId> cyc;
    SimpleId x = start;
    do {
      g.cycle_of_[x] = static_cast<int>(g.cycles_.size());
      g.cycle_pos_[x] = static_cast<int>(cyc.size());
      cyc.push_back(x);
      x = g.sigma_[x];
    } while (x != start);
    g.sigma_order_ = lcm_ll(g.sigma_order_, (long long)cyc.size());
    g.cycles_.push_back(std::move(cyc));
  }

  for (SimpleId a = 1; a < g.size(); ++a) {
    bool atom = true;
    for (SimpleId c = 1; c < g.size() && atom; ++c)
      if (c != a && g.ldiv_[g.idx(c, a)]) atom = false;
    if (atom) g.atoms_.push_back(a);
  }
  if (raw.atoms) {
    std::vector<std::string> declared = *raw.atoms;
    std::vector<std::string> derived;
    for (SimpleId a : g.atoms_) derived.push_back(g.names_[a]);
    std::sort(declared.begin(), declared.end());
    std::sort(derived.begin(), derived.end());
    if (declared != derived) {
      out.push_back({Violation::Kind::atom_list_mismatch,
                     {},
                     Side::left,
                     "AtomListMismatch: declared atoms differ from derived"});
      return std::nullopt;
    }
  }

  // longest-chain norms, in order of increasing divisor count
  std::vector<SimpleId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](SimpleId x, SimpleId y) {
    return ldiv_cnt[x] < ldiv_cnt[y];
  });

  g.norms_.assign(n, -1);
  g.norms_[simple_identity] = 0;
  for (SimpleId mu : order) {
    if (mu == simple_identity) continue;
    int best = -1;
    for (SimpleId a : g.atoms_) {
      SimpleId nu = g.right_quot_[g.idx(a, mu)];  // nu * a = mu
      if (nu == simple_undefined) continue;
      best = std::max(best, g.norms_[nu] + 1);
    }
    if (best < 0) {
      out.push_back({Violation::Kind::divisor_mismatch,
                     {mu},
                     Side::left,
                     "DivisorMismatch: " + g.names_[mu] +
                         " is not a product of atoms"});
      return std::nullopt;
    }
    g.norms_[mu] = best;
  }

  return g;
}

}  // namespace garside
