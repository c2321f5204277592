#include <doctest.h>

#include <algorithm>
#include <random>

#include "support/oracles.hpp"

using namespace garside;

namespace {

const Germ& a2() {
  static Germ germ = Germ::validate(oracles::a2_raw());
  return germ;
}

SimpleId id(const Germ& g, const std::string& name) {
  auto i = g.id_of(name);
  REQUIRE(i);
  return *i;
}

bool has_kind(const std::vector<Violation>& vs, Violation::Kind k) {
  return std::any_of(vs.begin(), vs.end(),
                     [&](const Violation& v) { return v.kind == k; });
}

}  // namespace

TEST_CASE("classical A2 germ validates with the expected structure") {
  const Germ& g = a2();
  CHECK(g.size() == 6);
  CHECK(g.delta() == id(g, "sts"));
  CHECK(g.delta_norm() == 3);
  CHECK(g.sigma_order() == 2);
  CHECK(g.atoms() == std::vector<SimpleId>{id(g, "s"), id(g, "t")});
  CHECK(g.simple_norm(simple_identity) == 0);
  CHECK(g.simple_norm(id(g, "st")) == 2);
}

TEST_CASE("products match the S_3 examples") {
  const Germ& g = a2();
  CHECK(g.product(id(g, "s"), id(g, "t")) == id(g, "st"));
  CHECK(g.product(id(g, "s"), id(g, "ts")) == g.delta());
  CHECK(g.product(id(g, "st"), id(g, "ts")) == simple_undefined);
  CHECK(g.product(simple_identity, id(g, "ts")) == id(g, "ts"));
}

TEST_CASE("complements") {
  const Germ& g = a2();
  CHECK(g.right_complement(id(g, "s")) == id(g, "ts"));
  CHECK(g.right_complement(g.delta()) == simple_identity);
  CHECK(g.left_complement(id(g, "st")) == id(g, "t"));
  for (SimpleId mu = 0; mu < g.size(); ++mu) {
    CHECK(g.right_complement(g.left_complement(mu)) == mu);
    CHECK(g.left_complement(g.right_complement(mu)) == mu);
  }
}

TEST_CASE("sigma") {
  const Germ& g = a2();
  CHECK(g.sigma(id(g, "s"), 1) == id(g, "t"));
  CHECK(g.sigma(id(g, "st"), 1) == id(g, "ts"));
  CHECK(g.sigma(g.delta(), 5) == g.delta());
  CHECK(g.sigma(id(g, "s"), -1) == id(g, "t"));
  for (SimpleId mu = 0; mu < g.size(); ++mu) {
    CHECK(g.sigma(mu, g.sigma_order()) == mu);
    CHECK(g.simple_norm(g.sigma(mu, 1)) == g.simple_norm(mu));
  }
}

TEST_CASE("meets and joins") {
  const Germ& g = a2();
  CHECK(g.meet(id(g, "st"), id(g, "ts"), Side::left) == simple_identity);
  CHECK(g.join(id(g, "s"), id(g, "t"), Side::left) == g.delta());
  for (SimpleId mu = 0; mu < g.size(); ++mu) {
    CHECK(g.meet(mu, g.delta(), Side::left) == mu);
    CHECK(g.meet(mu, g.delta(), Side::right) == mu);
    CHECK(g.join(mu, g.delta(), Side::left) == g.delta());
  }
}

TEST_CASE("quotients") {
  const Germ& g = a2();
  CHECK(g.left_quotient(id(g, "s"), id(g, "st")) == id(g, "t"));
  CHECK(g.left_quotient(simple_identity, id(g, "ts")) == id(g, "ts"));
  CHECK_THROWS_AS((void)g.left_quotient(id(g, "t"), id(g, "s")), NotADivisor);
  for (SimpleId a = 0; a < g.size(); ++a)
    for (SimpleId b = 0; b < g.size(); ++b)
      if (g.divides(a, b, Side::left))
        CHECK(g.product(a, g.left_quotient(a, b)) == b);
}

TEST_CASE("norm is strictly monotone along proper divisibility") {
  for (const Germ* g : {&a2()}) {
    for (SimpleId a = 0; a < g->size(); ++a)
      for (SimpleId b = 0; b < g->size(); ++b)
        if (a != b && g->divides(a, b, Side::left))
          CHECK(g->simple_norm(a) < g->simple_norm(b));
  }
}

TEST_CASE("divisor sets of delta are everything") {
  const Germ& g = a2();
  for (SimpleId a = 0; a < g.size(); ++a) {
    CHECK(g.divides(a, g.delta(), Side::left));
    CHECK(g.divides(a, g.delta(), Side::right));
  }
}

TEST_CASE("random associativity bracketings agree") {
  const Germ& g = a2();
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, g.size() - 1);
  int checked = 0;
  while (checked < 1000) {
    SimpleId a = pick(rng), b = pick(rng), c = pick(rng);
    SimpleId ab = g.product(a, b);
    if (ab == simple_undefined || g.product(ab, c) == simple_undefined)
      continue;
    ++checked;
    SimpleId bc = g.product(b, c);
    REQUIRE(bc != simple_undefined);
    CHECK(g.product(a, bc) == g.product(ab, c));
  }
}

TEST_CASE("corrupted product table fails validation") {
  RawGerm raw = oracles::a2_raw();
  for (auto& t : raw.product)
    if (t[0] == "s" && t[1] == "t") t[2] = "ts";
  std::vector<Violation> violations;
  auto germ = Germ::try_validate(raw, violations);
  CHECK(!germ);
  CHECK((has_kind(violations, Violation::Kind::associativity) ||
         has_kind(violations, Violation::Kind::cancellation)));
}

TEST_CASE("germ without delta is not a lattice") {
  // drop sts and every product landing on it; point delta at st
  RawGerm raw = oracles::a2_raw();
  raw.simples = {"1", "s", "t", "st", "ts"};
  raw.delta = "st";
  raw.atoms.reset();
  std::erase_if(raw.product,
                [](const auto& t) { return t[2] == "sts"; });
  std::vector<Violation> violations;
  auto germ = Germ::try_validate(raw, violations);
  CHECK(!germ);
  CHECK(has_kind(violations, Violation::Kind::not_a_lattice));
  CHECK(has_kind(violations, Violation::Kind::divisor_mismatch));
}

TEST_CASE("missing identity") {
  RawGerm raw = oracles::a2_raw();
  raw.simples.erase(raw.simples.begin());  // drop "1"
  std::erase_if(raw.product, [](const auto& t) {
    return t[0] == "1" || t[1] == "1" || t[2] == "1";
  });
  std::vector<Violation> violations;
  CHECK(!Germ::try_validate(raw, violations));
  CHECK(has_kind(violations, Violation::Kind::missing_identity));
}

TEST_CASE("atom list cross-check") {
  RawGerm raw = oracles::a2_raw();
  raw.atoms = std::vector<std::string>{"s"};
  std::vector<Violation> violations;
  CHECK(!Germ::try_validate(raw, violations));
  CHECK(has_kind(violations, Violation::Kind::atom_list_mismatch));
}

TEST_CASE("structural problems throw ParseError") {
  RawGerm dup = oracles::a2_raw();
  dup.simples.push_back("s");
  CHECK_THROWS_AS((void)Germ::validate(dup), ParseError);

  RawGerm unknown = oracles::a2_raw();
  unknown.product.push_back({"s", "zz", "t"});
  CHECK_THROWS_AS((void)Germ::validate(unknown), ParseError);

  RawGerm twice = oracles::a2_raw();
  twice.product.push_back({"s", "t", "sts"});
  CHECK_THROWS_AS((void)Germ::validate(twice), ParseError);
}

TEST_CASE("trivial germ with delta = 1") {
  RawGerm raw;
  raw.name = "trivial";
  raw.simples = {"1"};
  raw.delta = "1";
  Germ g = Germ::validate(raw);
  CHECK(g.size() == 1);
  CHECK(g.delta_norm() == 0);
  CHECK(g.atoms().empty());
  CHECK(g.sigma_order() == 1);
}
