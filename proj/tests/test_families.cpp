#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "surfbraid/errors.hpp"
#include "surfbraid/families.hpp"
#include "surfbraid/presentation.hpp"

using namespace surfbraid;

namespace {

std::set<GeneratorSymbol> genSet(const Presentation& p) {
  return {p.generators.begin(), p.generators.end()};
}

}  // namespace

TEST_CASE("surface spec parsing and printing") {
  SurfaceSpec s = SurfaceSpec::parse("sphere:3");
  CHECK(s.orientable);
  CHECK(s.genus == 0);
  CHECK(s.punctures == 3);
  CHECK(s.toString() == "sphere:3");

  SurfaceSpec t = SurfaceSpec::parse("o:2,1");
  CHECK(t.genus == 2);
  CHECK(t.toString() == "o:2,1");

  SurfaceSpec n = SurfaceSpec::parse("n:1,2");
  CHECK_FALSE(n.orientable);
  CHECK(n.toString() == "n:1,2");

  CHECK(SurfaceSpec::parse("o:0,4") == SurfaceSpec::sphere(4));
  CHECK_THROWS_AS(SurfaceSpec::parse("torus"), ParseError);
  CHECK_THROWS_AS(SurfaceSpec::parse("o:2"), ParseError);
  CHECK_THROWS_AS(SurfaceSpec::nonorientableOf(0, 1), InvalidParams);
  CHECK_THROWS_AS(SurfaceSpec::sphere(-1), InvalidParams);
}

TEST_CASE("punctured sphere generator sets") {
  Presentation p22 = pureBraidPuncturedSphere(2, 2);
  CHECK(genSet(p22) == std::set<GeneratorSymbol>{GeneratorSymbol::a(1, 2),
                                                 GeneratorSymbol::a(1, 3),
                                                 GeneratorSymbol::a(2, 3)});

  CHECK(pureBraidPuncturedSphere(3, 2).generators.size() == 5);

  Presentation trivial = pureBraidPuncturedSphere(1, 1);
  CHECK(trivial.generators.empty());
  CHECK(trivial.relators.empty());

  CHECK_THROWS_AS(pureBraidPuncturedSphere(0, 1), InvalidParams);
  CHECK_THROWS_AS(pureBraidPuncturedSphere(1, 0), InvalidParams);
}

TEST_CASE("punctured orientable generator sets") {
  Presentation g112 = pureBraidOrientable(1, 1, 2);
  // A(i,j) with 1 <= i <= 3, j in {3,4}, i < j
  CHECK(genSet(g112) ==
        std::set<GeneratorSymbol>{GeneratorSymbol::a(1, 3), GeneratorSymbol::a(1, 4),
                                  GeneratorSymbol::a(2, 3), GeneratorSymbol::a(2, 4),
                                  GeneratorSymbol::a(3, 4)});

  // one strand: free of rank 2g+p-1, no relator has enough strand indices
  Presentation g111 = pureBraidOrientable(1, 1, 1);
  CHECK(g111.generators.size() == 2);
  CHECK(g111.relators.empty());

  CHECK(pureBraidOrientable(2, 1, 2).generators.size() == 9);
  CHECK_THROWS_AS(pureBraidOrientable(0, 1, 1), InvalidParams);
}

TEST_CASE("punctured non-orientable generator sets and surface relator") {
  Presentation n111 = pureBraidNonorientable(1, 1, 1);
  CHECK(genSet(n111) == std::set<GeneratorSymbol>{GeneratorSymbol::a(1, 2),
                                                  GeneratorSymbol::rho(2, 1)});
  REQUIRE(n111.relators.size() == 1);
  CHECK(n111.relators[0] == parseWord("rho[2,1]^2 A[1,2]^-1"));

  Presentation n112 = pureBraidNonorientable(1, 1, 2);
  CHECK(genSet(n112) ==
        std::set<GeneratorSymbol>{GeneratorSymbol::a(1, 2), GeneratorSymbol::a(1, 3),
                                  GeneratorSymbol::a(2, 3), GeneratorSymbol::rho(2, 1),
                                  GeneratorSymbol::rho(3, 1)});

  Presentation n211 = pureBraidNonorientable(2, 1, 1);
  REQUIRE(n211.relators.size() == 1);
  CHECK(n211.relators[0] == parseWord("rho[2,1]^2 rho[2,2]^2 A[1,2]^-1"));
}

TEST_CASE("pure braid dispatch by surface") {
  CHECK(pureBraid(SurfaceSpec::sphere(2), 2).generators ==
        pureBraidPuncturedSphere(2, 2).generators);
  CHECK(pureBraid(SurfaceSpec::orientableOf(1, 1), 2).generators ==
        pureBraidOrientable(1, 1, 2).generators);
  CHECK(pureBraid(SurfaceSpec::nonorientableOf(1, 1), 1).generators ==
        pureBraidNonorientable(1, 1, 1).generators);
  CHECK_THROWS_AS(pureBraid(SurfaceSpec::orientableOf(1, 0), 1),
                  ClosedSurfaceUnsupported);
}

TEST_CASE("artin band generator sets") {
  auto sphereBand = artinGenerators(SurfaceSpec::sphere(2), 2);
  CHECK(std::set<GeneratorSymbol>(sphereBand.begin(), sphereBand.end()) ==
        std::set<GeneratorSymbol>{GeneratorSymbol::a(2, 3)});

  auto torusBand = artinGenerators(SurfaceSpec::orientableOf(1, 1), 2);
  CHECK(std::set<GeneratorSymbol>(torusBand.begin(), torusBand.end()) ==
        std::set<GeneratorSymbol>{GeneratorSymbol::a(3, 4)});

  CHECK(artinGenerators(SurfaceSpec::sphere(3), 1).empty());
  CHECK(artinGenerators(SurfaceSpec::nonorientableOf(1, 2), 3).size() == 3);
}

TEST_CASE("surface fundamental groups") {
  Presentation annulus = surfaceGroup(SurfaceSpec::sphere(2));
  CHECK(annulus.generators.size() == 1);
  CHECK(annulus.relators.empty());

  Presentation torus1 = surfaceGroup(SurfaceSpec::orientableOf(1, 1));
  CHECK(torus1.generators.size() == 2);
  CHECK(torus1.relators.empty());

  Presentation mobius = surfaceGroup(SurfaceSpec::nonorientableOf(1, 1));
  REQUIRE(mobius.generators.size() == 2);
  REQUIRE(mobius.relators.size() == 1);
  CHECK(mobius.relators[0] == parseWord("rho[1]^2 A[1]^-1"));

  CHECK_THROWS_AS(surfaceGroup(SurfaceSpec::sphere(0)),
                  ClosedSurfaceUnsupported);
  CHECK_THROWS_AS(surfaceGroup(SurfaceSpec::orientableOf(2, 0)),
                  ClosedSurfaceUnsupported);
}

TEST_CASE("direct powers") {
  Presentation z = surfaceGroup(SurfaceSpec::sphere(2));
  Presentation z2 = directPower(z, 2);
  REQUIRE(z2.generators.size() == 2);
  REQUIRE(z2.relators.size() == 1);
  CHECK(commutatorShape(z2.relators[0]).has_value());
  CHECK(z2.generators[0].copy == 1);
  CHECK(z2.generators[1].copy == 2);

  Presentation f2 = surfaceGroup(SurfaceSpec::orientableOf(1, 1));
  Presentation f2f2 = directPower(f2, 2);
  CHECK(f2f2.generators.size() == 4);
  CHECK(f2f2.relators.size() == 4);  // cross-factor commutators only

  Presentation base = Presentation::make({GeneratorSymbol::plain("a")},
                                         {parseWord("a^2")}, "z2");
  Presentation same = directPower(base, 1);
  CHECK(same.generators.size() == 1);
  REQUIRE(same.relators.size() == 1);
  CHECK(same.generators[0].copy == 1);
}

TEST_CASE("generator counts satisfy the closed forms over a grid") {
  for (int n = 1; n <= 3; ++n) {
    for (int p = 1; p <= 4; ++p) {
      Presentation s = pureBraidPuncturedSphere(p, n);
      std::size_t band = artinGenerators(SurfaceSpec::sphere(p), n).size();
      CHECK(band == static_cast<std::size_t>(n * (n - 1) / 2));
      CHECK(s.generators.size() ==
            band + static_cast<std::size_t>(n) * static_cast<std::size_t>(p - 1));
    }
    for (int g = 1; g <= 2; ++g) {
      for (int p = 1; p <= 2; ++p) {
        Presentation o = pureBraidOrientable(g, p, n);
        std::size_t band =
            artinGenerators(SurfaceSpec::orientableOf(g, p), n).size();
        CHECK(o.generators.size() ==
              band + static_cast<std::size_t>(n) *
                         static_cast<std::size_t>(2 * g + p - 1));

        Presentation nn = pureBraidNonorientable(g, p, n);
        std::size_t aCount = 0;
        for (const GeneratorSymbol& sym : nn.generators)
          if (sym.kind == SymbolKind::A) ++aCount;
        CHECK(nn.generators.size() ==
              aCount + static_cast<std::size_t>(n) * static_cast<std::size_t>(g));
      }
    }
  }
}

TEST_CASE("sphere pure braid abelianizes freely on the full generator set") {
  for (int p = 1; p <= 3; ++p) {
    for (int n = 1; n <= 3; ++n) {
      Presentation s = pureBraidPuncturedSphere(p, n);
      AbelianInvariants inv = abelianInvariants(s);
      CHECK(inv.freeRank == s.generators.size());
      CHECK(inv.torsion.empty());
    }
  }
}
