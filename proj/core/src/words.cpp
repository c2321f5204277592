#include "garside/words.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cstdlib>
#include <cstring>

#include "garside/snf.hpp"

namespace garside {

// Trusted constructors for normalized data.
struct WordFactory {
  static PositiveWord word(const Germ& g, std::vector<SimpleId> letters) {
    return PositiveWord(&g, std::move(letters));
  }
  static GroupElement element(PositiveWord prefix, long long exp) {
    return GroupElement(std::move(prefix), exp);
  }
};

namespace {

void require_same_germ(const Germ& a, const Germ& b) {
  if (&a != &b)
    throw GermMismatch("elements belong to different germs ('" + a.name() +
                       "' vs '" + b.name() + "')");
}

void require_positive(const GroupElement& u, const char* what) {
  if (u.exp() < 0)
    throw Error(std::string(what) + " requires a positive element");
}

}  // namespace

bool is_left_greedy(const Germ& g, std::span<const SimpleId> letters) {
  for (SimpleId x : letters)
    if (x == simple_identity || x == g.delta()) return false;
  for (size_t i = 0; i + 1 < letters.size(); ++i) {
    SimpleId c = g.meet(g.right_complement(letters[i]), letters[i + 1], Side::left);
    if (c != simple_identity) return false;
  }
  return true;
}

NormalizeResult normalize(const Germ& g, std::span<const SimpleId> letters) {
  std::vector<SimpleId> w;
  w.reserve(letters.size());
  for (SimpleId x : letters) {
    if (x < 0 || x >= g.size())
      throw UnknownSimple("letter id " + std::to_string(x) + " out of range");
    if (x != simple_identity) w.push_back(x);
  }

  // Local greedy rewriting: for a non-greedy pair (a, b) move
  // c = meet(a*, b) across, until a full left-to-right pass is clean.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < w.size();) {
      SimpleId a = w[i], b = w[i + 1];
      SimpleId c = g.meet(g.right_complement(a), b, Side::left);
      if (c == simple_identity) {
        ++i;
        continue;
      }
      w[i] = g.product(a, c);
      SimpleId q = g.left_quotient(c, b);
      if (q == simple_identity)
        w.erase(w.begin() + static_cast<long>(i) + 1);
      else
        w[i + 1] = q;
      changed = true;
      ++i;
    }
  }

  // Extract leading deltas. delta^j * w = sigma^j(w) * delta^j, so the
  // remaining letters pick up a sigma shift.
  long long deltas = 0;
  size_t lead = 0;
  while (lead < w.size() && w[lead] == g.delta()) {
    ++lead;
    ++deltas;
  }
  if (lead > 0) {
    w.erase(w.begin(), w.begin() + static_cast<long>(lead));
    for (SimpleId& x : w) x = g.sigma(x, deltas);
  }

  assert(is_left_greedy(g, w));
  return {WordFactory::word(g, std::move(w)), deltas};
}

GroupElement group_element(const Germ& g, std::span<const SimpleId> letters,
                           long long exp) {
  auto [word, deltas] = normalize(g, letters);
  return WordFactory::element(std::move(word), checked_add(deltas, exp));
}

GroupElement simple_element(const Germ& g, SimpleId mu) {
  if (mu < 0 || mu >= g.size())
    throw UnknownSimple("simple id " + std::to_string(mu) + " out of range");
  SimpleId letters[1] = {mu};
  return group_element(g, letters, 0);
}

GroupElement delta_power(const Germ& g, long long exp) {
  return WordFactory::element(PositiveWord(g), exp);
}

SimpleId lf(const GroupElement& u) {
  require_positive(u, "lf");
  if (u.exp() > 0) return u.germ().delta();
  if (u.prefix().empty()) return simple_identity;
  return u.prefix().letters().front();
}

SimpleId rf(const PositiveWord& w) {
  const Germ& g = w.germ();
  if (w.empty()) return simple_identity;
  std::vector<SimpleId> v = w.letters();

  // Mirror rewriting: (a, b) is right-greedy when meet(a, *b, right) = 1.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < v.size();) {
      SimpleId a = v[i], b = v[i + 1];
      SimpleId c = g.meet(a, g.left_complement(b), Side::right);
      if (c == simple_identity) {
        ++i;
        continue;
      }
      v[i + 1] = g.product(c, b);
      SimpleId q = g.right_quotient(c, a);  // q * c = a
      if (q == simple_identity)
        v.erase(v.begin() + static_cast<long>(i));
      else
        v[i] = q;
      changed = true;
      ++i;
    }
  }
  assert(!v.empty());
  return v.back();
}

SimpleId rf(const GroupElement& u) {
  require_positive(u, "rf");
  if (u.exp() > 0) return u.germ().delta();
  return rf(u.prefix());
}

GroupElement mult(const GroupElement& g, const GroupElement& h) {
  require_same_germ(g.germ(), h.germ());
  const Germ& germ = g.germ();
  std::vector<SimpleId> letters = g.prefix().letters();
  letters.reserve(letters.size() + h.prefix().size());
  for (SimpleId mu : h.prefix().letters())
    letters.push_back(germ.sigma(mu, g.exp()));
  auto [word, deltas] = normalize(germ, letters);
  return WordFactory::element(
      std::move(word), checked_add(deltas, checked_add(g.exp(), h.exp())));
}

GroupElement inverse(const GroupElement& g) {
  const Germ& germ = g.germ();
  // g = P delta^e  =>  g^-1 = delta^-e * (mu_k^-1 ... mu_1^-1),
  // with mu^-1 = mu* delta^-1.
  GroupElement acc = GroupElement::identity(germ);
  const auto& letters = g.prefix().letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    SimpleId comp = germ.right_complement(*it);
    GroupElement letter_inv =
        comp == simple_identity
            ? delta_power(germ, -1)
            : WordFactory::element(
                  WordFactory::word(germ, {comp}), -1);
    acc = mult(acc, letter_inv);
  }
  return mult(delta_power(germ, -g.exp()), acc);
}

GroupElement power(const GroupElement& g, long long n) {
  if (n < 0) return inverse(power(g, -n));
  GroupElement acc = GroupElement::identity(g.germ());
  for (long long i = 0; i < n; ++i) acc = mult(acc, g);
  return acc;
}

bool equals(const GroupElement& g, const GroupElement& h) {
  require_same_germ(g.germ(), h.germ());
  return g == h;
}

GroupElement left_gcd(const GroupElement& u0, const GroupElement& v0) {
  require_same_germ(u0.germ(), v0.germ());
  require_positive(u0, "left_gcd");
  require_positive(v0, "left_gcd");
  const Germ& g = u0.germ();

  GroupElement u = u0, v = v0;
  std::vector<SimpleId> acc;
  while (true) {
    SimpleId c = g.meet(lf(u), lf(v), Side::left);
    if (c == simple_identity) break;
    acc.push_back(c);
    GroupElement c_inv = inverse(simple_element(g, c));
    u = mult(c_inv, u);
    v = mult(c_inv, v);
    assert(u.exp() >= 0 && v.exp() >= 0);
  }
  return group_element(g, acc, 0);
}

long long word_length(const GroupElement& g) {
  return static_cast<long long>(g.prefix().size()) +
         (g.exp() < 0 ? -g.exp() : g.exp());
}

bool one_delta_check(const PositiveWord& w, SimpleId eta) {
  const Germ& g = w.germ();
  std::vector<SimpleId> letters = w.letters();
  letters.push_back(eta);
  return normalize(g, letters).deltas <= 1;
}

long long default_node_budget() {
  static const long long budget = [] {
    if (const char* env = std::getenv("GARSIDE_NODE_BUDGET")) {
      char* end = nullptr;
      long long v = std::strtoll(env, &end, 10);
      if (end != env && v > 0) return v;
    }
    return 1'000'000LL;
  }();
  return budget;
}

NormCache::NormCache(const Germ& germ, long long node_budget)
    : germ_(&germ), budget_(node_budget) {}

namespace {

std::string norm_key(const GroupElement& u) {
  std::string key;
  key.resize((u.prefix().size() + 1) * sizeof(SimpleId) + sizeof(long long));
  char* p = key.data();
  for (SimpleId x : u.prefix().letters()) {
    std::memcpy(p, &x, sizeof x);
    p += sizeof x;
  }
  SimpleId sep = simple_undefined;
  std::memcpy(p, &sep, sizeof sep);
  p += sizeof sep;
  long long e = u.exp();
  std::memcpy(p, &e, sizeof e);
  return key;
}

}  // namespace

long long NormCache::norm(const GroupElement& u) {
  require_same_germ(*germ_, u.germ());
  require_positive(u, "norm");
  nodes_ = 0;
  return rec(u);
}

long long NormCache::rec(const GroupElement& u) {
  if (u.is_identity()) return 0;
  std::string key = norm_key(u);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  if (++nodes_ > budget_)
    throw BudgetExceeded("norm recursion exceeded node budget of " +
                         std::to_string(budget_) +
                         " (set GARSIDE_NODE_BUDGET to raise)");

  // ||u|| = max over atoms a <=_l u of 1 + ||a\u||; a <=_l u iff a <=_l LF(u).
  const Germ& g = *germ_;
  SimpleId front = lf(u);
  long long best = -1;
  for (SimpleId a : g.atoms()) {
    if (!g.divides(a, front, Side::left)) continue;
    GroupElement rest = mult(inverse(simple_element(g, a)), u);
    assert(rest.exp() >= 0);
    best = std::max(best, 1 + rec(rest));
  }
  assert(best >= 0);
  memo_.emplace(std::move(key), best);
  return best;
}

long long norm(const GroupElement& u) {
  NormCache cache(u.germ());
  return cache.norm(u);
}

std::vector<SimpleId> parse_letters(const Germ& g, std::string_view text) {
  std::vector<SimpleId> out;
  if (text.empty()) return out;
  size_t pos = 0;
  while (true) {
    size_t dot = text.find('.', pos);
    std::string_view piece = dot == std::string_view::npos
                                 ? text.substr(pos)
                                 : text.substr(pos, dot - pos);
    if (piece.empty())
      throw ParseError("empty letter in word '" + std::string(text) + "'");
    auto id = g.id_of(piece);
    if (!id)
      throw UnknownSimple("unknown simple '" + std::string(piece) +
                          "' in germ '" + g.name() + "'");
    out.push_back(*id);
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  return out;
}

GroupElement parse_element(const Germ& g, std::string_view text) {
  long long exp = 0;
  std::string_view word = text;
  if (size_t at = text.find('@'); at != std::string_view::npos) {
    word = text.substr(0, at);
    std::string_view tail = text.substr(at + 1);
    auto [ptr, ec] =
        std::from_chars(tail.data(), tail.data() + tail.size(), exp);
    if (ec != std::errc() || ptr != tail.data() + tail.size())
      throw ParseError("bad delta exponent in '" + std::string(text) + "'");
  }
  return group_element(g, parse_letters(g, word), exp);
}

std::string render_word(const Germ& g, std::span<const SimpleId> letters) {
  std::string s;
  for (SimpleId x : letters) {
    if (!s.empty()) s += '.';
    s += g.name_of(x);
  }
  return s;
}

std::string render(const GroupElement& g) {
  std::string s = render_word(g.germ(), g.prefix().letters());
  if (g.exp() != 0) s += "@" + std::to_string(g.exp());
  return s;
}

}  // namespace garside
