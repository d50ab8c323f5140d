#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <variant>

#include "doctest.h"
#include "surfbraid/errors.hpp"
#include "surfbraid/goldberg.hpp"
#include "surfbraid/rewrite.hpp"
#include "test_support.hpp"

using namespace surfbraid;

namespace {

RewriteSystem completed(const Presentation& p, const KbBudget& b = {}) {
  KbResult r = kbComplete(p, b);
  REQUIRE(std::holds_alternative<RewriteSystem>(r));
  return std::get<RewriteSystem>(r);
}

}  // namespace

TEST_CASE("cyclic group of order three completes to the known four rules") {
  Presentation z3 = testsupport::parsePresentation({"a"}, {"a^3"}, "z3");
  RewriteSystem rs = completed(z3);
  CHECK(rs.confluent());
  // free cancellation both ways, plus a a -> a^-1 and its inverse twin
  CHECK(rs.rules().size() == 4);

  CHECK(rs.normalForm(parseWord("a^4")) == parseWord("a"));
  CHECK(rs.normalForm(parseWord("a^3")).empty());
  CHECK(rs.normalForm(Word{}).empty());
  // a^-1 is already irreducible: it is shorter than any positive word equal
  // to it, and shortlex rules only ever shrink
  CHECK(rs.normalForm(parseWord("a^-1")) == parseWord("a^-1"));
  CHECK(rs.normalForm(parseWord("a^2")) == parseWord("a^-1"));
}

TEST_CASE("free abelian rank two rewrites ba to ab") {
  Presentation ab = testsupport::parsePresentation(
      {"a", "b"}, {"a^-1 b^-1 a b"}, "free abelian");
  RewriteSystem rs = completed(ab);
  CHECK(rs.confluent());
  CHECK(rs.normalForm(parseWord("b a")) == parseWord("a b"));
  CHECK(rs.wordsEqual(parseWord("b a"), parseWord("a b")));
  CHECK_FALSE(rs.wordsEqual(parseWord("a"), parseWord("b")));
  CHECK(rs.wordsEqual(Word{}, Word{}));
}

TEST_CASE("empty relator set leaves exactly the cancellation rules") {
  Presentation free2 = testsupport::parsePresentation({"a", "b"}, {}, "free");
  RewriteSystem rs = completed(free2);
  CHECK(rs.confluent());
  CHECK(rs.rules().size() == 4);  // x x^-1 and x^-1 x per generator
  CHECK(rs.normalForm(parseWord("a b b^-1 a^-1 b")) == parseWord("b"));
}

TEST_CASE("completion is sound: every input relator dies") {
  std::vector<Presentation> fixtures = {
      testsupport::parsePresentation({"a"}, {"a^5"}, "z5"),
      testsupport::parsePresentation({"a", "b"}, {"a^2", "b^2", "a b a b a b"},
                                     "s3"),
      bandQuotient(SurfaceSpec::sphere(3), 2),
      bandQuotient(SurfaceSpec::orientableOf(1, 1), 2),
  };
  for (const Presentation& p : fixtures) {
    RewriteSystem rs = completed(p);
    for (const Word& r : p.relators) {
      CHECK(rs.normalForm(r).empty());
      CHECK(rs.wordsEqual(r, Word{}));
    }
  }
}

TEST_CASE("words equal under inserted relator conjugates") {
  Presentation s3 = testsupport::parsePresentation(
      {"a", "b"}, {"a^2", "b^2", "a b a b a b"}, "s3");
  RewriteSystem rs = completed(s3);

  std::mt19937 rng(424242u);
  std::uniform_int_distribution<int> pickRel(0, 2);
  std::uniform_int_distribution<int> pickGen(0, 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> len(0, 5);

  GeneratorSymbol a = parseSymbol("a");
  GeneratorSymbol b = parseSymbol("b");
  auto randomWord = [&]() {
    Word w;
    int n = len(rng);
    for (int i = 0; i < n; ++i)
      w = w * Word::letter(pickGen(rng) ? a : b, coin(rng) ? 1 : -1);
    return w;
  };

  for (int trial = 0; trial < 100; ++trial) {
    Word u = randomWord();
    Word conjugator = randomWord();
    const Word& relator = s3.relators[static_cast<std::size_t>(pickRel(rng))];
    Word inserted = u * conjugator * relator * conjugator.inverse();
    CHECK(rs.wordsEqual(u, inserted));
  }
}

TEST_CASE("budget exhaustion reports the tripped dimension") {
  Presentation ab = testsupport::parsePresentation(
      {"a", "b"}, {"a^-1 b^-1 a b"}, "free abelian");
  KbBudget tiny;
  tiny.maxRules = 3;
  KbResult r = kbComplete(ab, tiny);
  REQUIRE(std::holds_alternative<KbExhausted>(r));
  KbExhausted e = std::get<KbExhausted>(r);
  CHECK(e.dimension == KbBudgetDim::Rules);
  CHECK(e.rules >= 3);

  KbBudget fewSteps;
  fewSteps.maxSteps = 1;
  KbResult r2 = kbComplete(ab, fewSteps);
  REQUIRE(std::holds_alternative<KbExhausted>(r2));
  CHECK(std::get<KbExhausted>(r2).dimension == KbBudgetDim::Steps);
}

TEST_CASE("non-confluent systems refuse to answer") {
  RewriteSystem incomplete({parseSymbol("a")}, {}, false);
  CHECK_THROWS_AS(incomplete.normalForm(parseWord("a")), NotConfluent);
  CHECK_THROWS_AS(incomplete.wordsEqual(parseWord("a"), Word{}), NotConfluent);
}

TEST_CASE("rewriting strictly shrinks shortlex on fixtures") {
  Presentation z6 = testsupport::parsePresentation({"a"}, {"a^6"}, "z6");
  RewriteSystem rs = completed(z6);
  for (const RewriteRule& rule : rs.rules()) {
    CHECK(shortlexLess(rule.rhs, rule.lhs));
  }
  // a long word reaches its normal form (termination smoke test)
  CHECK(rs.normalForm(parseWord("a^100")) == rs.normalForm(parseWord("a^4")));
}

TEST_CASE("strategy wrapper decides the word problem") {
  Presentation z4 = testsupport::parsePresentation({"a"}, {"a^4"}, "z4");
  RewriteStrategy strategy(completed(z4));
  CHECK(strategy.isIdentity(parseWord("a^8")));
  CHECK_FALSE(strategy.isIdentity(parseWord("a^2")));
  CHECK(strategy.system().confluent());
}
