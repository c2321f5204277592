#include <doctest.h>

#include "support/oracles.hpp"

using namespace garside;

namespace {

const Germ& a2() {
  static Germ germ = Germ::validate(oracles::a2_raw());
  return germ;
}

const Germ& da3() {
  static Germ germ = dual_artin({CoxeterSpec::Family::A, 3});
  return germ;
}

SimpleId id(const Germ& g, const std::string& name) {
  auto i = g.id_of(name);
  REQUIRE(i);
  return *i;
}

std::vector<SimpleId> ids(const Germ& g, std::initializer_list<const char*> names) {
  std::vector<SimpleId> out;
  for (const char* n : names) out.push_back(id(g, n));
  return out;
}

GroupElement elt(const Germ& g, const std::string& text) {
  return parse_element(g, text);
}

}  // namespace

TEST_CASE("normalize examples") {
  const Germ& g = a2();

  auto r1 = normalize(g, ids(g, {"s", "ts"}));
  CHECK(r1.word.empty());
  CHECK(r1.deltas == 1);

  auto r2 = normalize(g, ids(g, {"s", "s"}));
  CHECK(r2.word.letters() == ids(g, {"s", "s"}));
  CHECK(r2.deltas == 0);

  auto r3 = normalize(g, ids(g, {"s", "t"}));
  CHECK(r3.word.letters() == ids(g, {"st"}));
  CHECK(r3.deltas == 0);

  auto r4 = normalize(g, {});
  CHECK(r4.word.empty());
  CHECK(r4.deltas == 0);

  // identity letters are dropped silently
  auto r5 = normalize(g, ids(g, {"1", "s", "1"}));
  CHECK(r5.word.letters() == ids(g, {"s"}));
}

TEST_CASE("lf and rf") {
  const Germ& g = a2();
  CHECK(lf(elt(g, "s.t.s")) == g.delta());
  CHECK(lf(GroupElement::identity(g)) == simple_identity);
  CHECK(rf(elt(g, "s.s")) == id(g, "s"));
  CHECK(rf(elt(g, "t.t")) == id(g, "t"));
  CHECK(lf(elt(g, "s.s")) == id(g, "s"));
}

TEST_CASE("mult examples") {
  const Germ& g = a2();
  CHECK(mult(elt(g, "s"), elt(g, "t")) == elt(g, "st"));
  GroupElement x = elt(g, "ts@2");
  CHECK(mult(x, GroupElement::identity(g)) == x);
  CHECK(mult(elt(g, "ts"), elt(g, "ts")) == elt(g, "t@1"));
}

TEST_CASE("inverse examples") {
  const Germ& g = a2();
  CHECK(inverse(elt(g, "s")) == elt(g, "ts@-1"));
  CHECK(inverse(GroupElement::identity(g)) == GroupElement::identity(g));
  CHECK(inverse(elt(g, "@1")) == elt(g, "@-1"));
}

TEST_CASE("equals solves the word problem") {
  const Germ& g = a2();
  CHECK(equals(elt(g, "s.t.s.t"), elt(g, "s@1")));
  CHECK(equals(elt(g, "ts"), elt(g, "ts")));
  CHECK(!equals(elt(g, "s"), elt(g, "t")));
}

TEST_CASE("operations on mixed germs throw GermMismatch") {
  CHECK_THROWS_AS((void)mult(elt(a2(), "s"), GroupElement::identity(da3())),
                  GermMismatch);
  CHECK_THROWS_AS((void)equals(elt(a2(), "s"), GroupElement::identity(da3())),
                  GermMismatch);
}

TEST_CASE("left gcd") {
  const Germ& g = a2();
  CHECK(left_gcd(elt(g, "st"), elt(g, "s.s")) == elt(g, "s"));
  CHECK(left_gcd(elt(g, "st.ts"), GroupElement::identity(g)) ==
        GroupElement::identity(g));
  GroupElement u = elt(g, "st.ts");
  CHECK(left_gcd(u, u) == u);
  CHECK(left_gcd(elt(g, "s@1"), elt(g, "t@2")) == elt(g, "s@1"));
}

TEST_CASE("norm") {
  const Germ& g = a2();
  CHECK(norm(elt(g, "@1")) == 3);
  CHECK(norm(elt(g, "s")) == 1);
  CHECK(norm(elt(g, "st.ts")) == 4);
  CHECK(norm(GroupElement::identity(g)) == 0);
}

TEST_CASE("norm node budget") {
  const Germ& g = a2();
  NormCache tight(g, 2);
  CHECK_THROWS_AS((void)tight.norm(elt(g, "@2")), BudgetExceeded);
}

TEST_CASE("word length") {
  const Germ& g = a2();
  CHECK(word_length(GroupElement::identity(g)) == 0);
  CHECK(word_length(elt(g, "s@1")) == 2);
  CHECK(word_length(elt(g, "st.ts@-2")) == 4);
}

TEST_CASE("one delta lemma examples") {
  const Germ& g = a2();
  CHECK(one_delta_check(elt(g, "s").prefix(), id(g, "ts")));
  CHECK(one_delta_check(GroupElement::identity(g).prefix(), id(g, "s")));
  CHECK(one_delta_check(elt(g, "st.ts").prefix(), id(g, "t")));
}

TEST_CASE("element syntax round trip") {
  const Germ& g = a2();
  for (const char* text : {"", "@1", "@-3", "s", "s.t@2", "ts.t"}) {
    GroupElement e = elt(g, text);
    CHECK(parse_element(g, render(e)) == e);
  }
  CHECK(render(elt(g, "s.t.s")) == "@1");
  CHECK(render(elt(g, "t.s.t")) == "@1");
  CHECK_THROWS_AS((void)parse_element(g, "s..t"), ParseError);
  CHECK_THROWS_AS((void)parse_element(g, "s@x"), ParseError);
  CHECK_THROWS_AS((void)parse_element(g, "q"), UnknownSimple);
}

TEST_CASE("randomized word properties") {
  oracles::Random rnd(20240901);
  for (const Germ* gp : {&a2(), &da3()}) {
    const Germ& g = *gp;
    for (int iter = 0; iter < 300; ++iter) {
      auto xs = rnd.letters(g, 6);
      auto ys = rnd.letters(g, 6);

      // idempotence
      auto nx = normalize(g, xs);
      auto again = normalize(g, nx.word.letters());
      CHECK(again.word == nx.word);
      CHECK(again.deltas == 0);
      CHECK(is_left_greedy(g, nx.word.letters()));

      // normalize(x ++ y) agrees with combining the two normal forms
      std::vector<SimpleId> both = xs;
      both.insert(both.end(), ys.begin(), ys.end());
      auto ny = normalize(g, ys);
      GroupElement combined =
          mult(group_element(g, xs, 0), group_element(g, ys, 0));
      auto direct = normalize(g, both);
      CHECK(combined.prefix() == direct.word);
      CHECK(combined.exp() == direct.deltas);

      // LF identity: LF(uv) = LF(u LF(v))
      GroupElement u = group_element(g, xs, 0);
      GroupElement v = group_element(g, ys, 0);
      GroupElement uv = mult(u, v);
      GroupElement ulfv = mult(u, simple_element(g, lf(v)));
      CHECK(lf(uv) == lf(ulfv));

      // one-delta lemma
      SimpleId eta = static_cast<SimpleId>(rnd.pick(1, g.size() - 1));
      CHECK(one_delta_check(nx.word, eta));

      // norm superadditivity
      NormCache cache(g);
      CHECK(cache.norm(uv) >= cache.norm(u) + cache.norm(v));
    }
  }
}

TEST_CASE("sigma applied letterwise to a greedy word is a no-op under renormalization") {
  oracles::Random rnd(88);
  for (const Germ* gp : {&a2(), &da3()}) {
    const Germ& g = *gp;
    for (int iter = 0; iter < 200; ++iter) {
      PositiveWord w = rnd.positive(g, 6).prefix();
      for (long long k = 1; k <= g.sigma_order(); ++k) {
        std::vector<SimpleId> shifted;
        for (SimpleId x : w.letters()) shifted.push_back(g.sigma(x, k));
        CHECK(is_left_greedy(g, shifted));
        auto renorm = normalize(g, shifted);
        CHECK(renorm.word.letters() == shifted);
        CHECK(renorm.deltas == 0);
      }
    }
  }
}

TEST_CASE("randomized group axioms") {
  oracles::Random rnd(77);
  for (const Germ* gp : {&a2(), &da3()}) {
    const Germ& g = *gp;
    for (int iter = 0; iter < 300; ++iter) {
      GroupElement x = rnd.element(g, 4, 2);
      GroupElement y = rnd.element(g, 4, 2);
      GroupElement z = rnd.element(g, 4, 2);
      CHECK(mult(mult(x, y), z) == mult(x, mult(y, z)));
      CHECK(mult(x, inverse(x)) == GroupElement::identity(g));
      CHECK(mult(inverse(x), x) == GroupElement::identity(g));
      CHECK(mult(x, GroupElement::identity(g)) == x);
    }
  }
}

TEST_CASE("normal form equality matches the rewriting oracle") {
  const Germ& g = a2();
  auto classes = oracles::a2_rewriting_classes(6);

  auto to_ids = [&](const std::string& w) {
    std::vector<SimpleId> out;
    for (char c : w) out.push_back(id(g, std::string(1, c)));
    return out;
  };

  std::vector<std::string> words;
  for (const auto& [w, c] : classes) words.push_back(w);
  for (size_t i = 0; i < words.size(); ++i)
    for (size_t j = i; j < words.size(); ++j) {
      bool oracle_equal = classes.at(words[i]) == classes.at(words[j]);
      bool nf_equal = group_element(g, to_ids(words[i]), 0) ==
                      group_element(g, to_ids(words[j]), 0);
      CHECK(oracle_equal == nf_equal);
    }
}
