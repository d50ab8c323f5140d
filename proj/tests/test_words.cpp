#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <vector>

#include "doctest.h"
#include "surfbraid/errors.hpp"
#include "surfbraid/word.hpp"

using namespace surfbraid;

namespace {

GeneratorSymbol a12 = GeneratorSymbol::a(1, 2);
GeneratorSymbol a13 = GeneratorSymbol::a(1, 3);
GeneratorSymbol a23 = GeneratorSymbol::a(2, 3);
GeneratorSymbol x = GeneratorSymbol::plain("x");
GeneratorSymbol y = GeneratorSymbol::plain("y");

Word gen(const GeneratorSymbol& s, int sign = 1) { return Word::letter(s, sign); }

}  // namespace

TEST_CASE("free reduction") {
  CHECK(Word::reduced({}).empty());
  CHECK(Word::reduced({{x, 1}, {x, -1}}).empty());

  Word w = Word::reduced({{x, 1}, {y, 1}, {y, -1}, {x, 1}});
  REQUIRE(w.size() == 2);
  CHECK(w.letters()[0].sym == x);
  CHECK(w.letters()[1].sym == x);
  CHECK(w.letters()[0].sign == 1);
}

TEST_CASE("reduction is idempotent and kills w * w^-1") {
  std::mt19937 rng(20240901u);
  std::vector<GeneratorSymbol> pool{a12, a13, a23, x, y};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Letter> raw;
    std::uniform_int_distribution<int> len(0, 12);
    int n = len(rng);
    for (int i = 0; i < n; ++i)
      raw.push_back({pool[pick(rng)], static_cast<std::int8_t>(coin(rng) ? 1 : -1)});
    Word once = Word::reduced(raw);
    std::vector<Letter> again(once.letters().begin(), once.letters().end());
    CHECK(Word::reduced(again) == once);
    CHECK((once * once.inverse()).empty());
    CHECK((once.inverse() * once).empty());
  }
}

TEST_CASE("substituteKill erases symbols and reduces") {
  Word w = gen(a12, -1) * gen(a23) * gen(a12);
  CHECK(substituteKill(w, {a23}).empty());

  CHECK(substituteKill(gen(a13), {}) == gen(a13));
  CHECK(substituteKill(gen(a23) * gen(a23), {a23}).empty());

  // idempotent for a fixed kill set
  Word mixed = gen(a12) * gen(a23) * gen(a13) * gen(a23, -1) * gen(a12);
  Word killed = substituteKill(mixed, {a23});
  CHECK(substituteKill(killed, {a23}) == killed);
}

TEST_CASE("cyclic reduction strips conjugating layers") {
  CHECK(cyclicallyReduce(gen(x) * gen(y) * gen(x, -1)) == gen(y));
  Word commutatorLike = gen(x) * gen(y);
  CHECK(cyclicallyReduce(commutatorLike) == commutatorLike);

  Word two = gen(x, -1) * gen(y) * gen(GeneratorSymbol::plain("c")) *
             gen(y, -1) * gen(x);
  CHECK(cyclicallyReduce(two) == gen(GeneratorSymbol::plain("c")));
}

TEST_CASE("commutator shape on all rotations and inversions") {
  Word c = gen(x, -1) * gen(y, -1) * gen(x) * gen(y);
  auto direct = commutatorShape(c);
  REQUIRE(direct.has_value());
  CHECK(direct->first == x);
  CHECK(direct->second == y);

  // every rotation of [x,y] and of its inverse is still a commutator of the
  // same two symbols (in one order or the other)
  for (Word w : {c, c.inverse()}) {
    for (int r = 0; r < 4; ++r) {
      auto shape = commutatorShape(rotate(w, r));
      REQUIRE(shape.has_value());
      bool samePair = (shape->first == x && shape->second == y) ||
                      (shape->first == y && shape->second == x);
      CHECK(samePair);
    }
  }

  CHECK_FALSE(commutatorShape(gen(x) * gen(y)).has_value());
  CHECK_FALSE(commutatorShape(gen(x, -1) * gen(y, -1) * gen(x) * gen(x)).has_value());
  CHECK_FALSE(commutatorShape(Word{}).has_value());
}

TEST_CASE("symbol order: A before Rho before Plain, block major") {
  GeneratorSymbol rho21 = GeneratorSymbol::rho(2, 1);
  CHECK(a12 < rho21);  // same block (strand 2): A kind before Rho kind
  // Plain symbols without a copy tag live in block 0, ahead of everything
  // banded; within one block the kind order is A, Rho, Plain.
  CHECK(x < a12);
  CHECK(x < rho21);
  CHECK(a12 < a13);  // block 2 before block 3
  CHECK(a13 < a23);  // same block, smaller first index

  // a generator letter precedes its inverse at equal symbols
  CHECK(letterLess({x, 1}, {x, -1}));
  CHECK_FALSE(letterLess({x, -1}, {x, 1}));
}

TEST_CASE("shortlex word order") {
  CHECK(Word{} < gen(x));
  CHECK(gen(x) < gen(x) * gen(y));
  CHECK(gen(x) < gen(y));
  CHECK_FALSE(gen(y) < gen(x));
}

TEST_CASE("printing and parsing round trip") {
  Word w = gen(a12, -1) * gen(a23) * gen(a12) *
           gen(GeneratorSymbol::rho(3, 1)) * gen(x, -1);
  CHECK(toString(w) == "A[1,2]^-1 A[2,3] A[1,2] rho[3,1] x^-1");
  CHECK(parseWord(toString(w)) == w);

  CHECK(parseWord("1").empty());
  CHECK(toString(Word{}) == "1");
  CHECK(parseWord("x^3") == gen(x) * gen(x) * gen(x));
  CHECK(parseWord("x^-2") == gen(x, -1) * gen(x, -1));
  CHECK(parseWord("  A[1,2]   A[1,2]^-1 ").empty());

  GeneratorSymbol tagged = x.withCopy(2);
  CHECK(toString(tagged) == "x@2");
  CHECK(parseSymbol("x@2") == tagged);
  CHECK(parseSymbol("rho[2,1]@3") == GeneratorSymbol::rho(2, 1).withCopy(3));

  CHECK_THROWS_AS(parseWord("x^"), ParseError);
  CHECK_THROWS_AS(parseWord("x^0"), ParseError);
  CHECK_THROWS_AS(parseWord("A[1"), ParseError);
  CHECK_THROWS_AS(parseWord("A[1,2,3]"), ParseError);
  CHECK_THROWS_AS(parseWord("1 x"), ParseError);
  CHECK_THROWS_AS(parseSymbol(""), ParseError);
  CHECK_THROWS_AS(GeneratorSymbol::a(3, 2), InvalidParams);
  CHECK_THROWS_AS(GeneratorSymbol::a(0, 1), InvalidParams);
}

TEST_CASE("applyImages and exponent sums") {
  std::map<GeneratorSymbol, Word> images{{x, gen(y) * gen(y)}, {y, gen(x, -1)}};
  Word w = gen(x) * gen(y);
  CHECK(applyImages(w, images) == gen(y) * gen(y) * gen(x, -1));
  CHECK_THROWS_AS(applyImages(gen(a12), images), UndeclaredSymbol);

  Word z = gen(x) * gen(y) * gen(x) * gen(y, -1) * gen(x, -1);
  CHECK(exponentSum(z, x) == 1);
  CHECK(exponentSum(z, y) == 0);
  CHECK(exponentSum(z, a12) == 0);
}

TEST_CASE("canonical cyclic form is rotation and inversion invariant") {
  Word w = gen(x) * gen(y, -1) * gen(x) * gen(x);
  Word canon = canonicalCyclic(w);
  for (int r = 0; r < 4; ++r) {
    CHECK(canonicalCyclic(rotate(w, r)) == canon);
    CHECK(canonicalCyclic(rotate(w.inverse(), r)) == canon);
  }
}
