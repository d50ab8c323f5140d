#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "surfbraid/finite_group.hpp"
#include "surfbraid/intmat.hpp"
#include "surfbraid/presentation.hpp"
#include "surfbraid/word.hpp"

namespace surfbraid {

// Number of twisted conjugacy classes of an endomorphism.  Either a positive
// integer or infinite; infinite is a real state, not a sentinel value.
struct ReidemeisterCount {
  bool infinite = false;
  mpz_class value = 0;

  static ReidemeisterCount inf() { return {true, 0}; }
  static ReidemeisterCount of(mpz_class v) { return {false, std::move(v)}; }
  std::string str() const { return infinite ? "inf" : value.get_str(); }
  bool operator==(const ReidemeisterCount&) const = default;
};

// An endomorphism of a finite group, stored as the image of every element.
// The factory checks multiplicativity over all pairs.
struct FiniteEndo {
  std::vector<int> image;

  bool isBijective() const;
};

FiniteEndo makeFiniteEndo(const FiniteGroup& g, std::vector<int> image);
FiniteEndo identityEndo(const FiniteGroup& g);
FiniteEndo composeWithConjugation(const FiniteGroup& g, const FiniteEndo& f,
                                  int byElement);

// Orbit partition of x ~ z x f(z)^-1.  Classes are listed by their smallest
// member, members ascending.
std::vector<std::vector<int>> twistedClassesFinite(const FiniteGroup& g,
                                                   const FiniteEndo& f);

ReidemeisterCount reidemeisterFinite(const FiniteGroup& g,
                                     const FiniteEndo& f);

// Same number by averaging fixed points of x -> z x f(z)^-1 over all z.
// Cross-checks the orbit count through a completely different route.
ReidemeisterCount reidemeisterBurnside(const FiniteGroup& g,
                                       const FiniteEndo& f);

std::vector<std::vector<int>> conjugacyClasses(const FiniteGroup& g);

// All automorphisms, in lexicographic order of their image tuples on a fixed
// minimal generating sequence.  Guarded by an order bound because the search
// is exhaustive.
std::vector<FiniteEndo> automorphismsFinite(const FiniteGroup& g,
                                            int maxOrder = 64);

struct MinReidemeister {
  ReidemeisterCount count;
  FiniteEndo witness;
};

// Minimum Reidemeister number over all automorphisms, with the first witness
// attaining it.  Always finite: the group is finite.
MinReidemeister minReidemeisterFinite(const FiniteGroup& g, int maxOrder = 64);

// R of an endomorphism of Z^k given by a matrix: infinite iff det(M-I) = 0,
// otherwise |det(M-I)|, read off the Smith form of M-I.
ReidemeisterCount reidemeisterAbelian(const IntMatrix& m);

// Lower bound for R of a generator-image endomorphism, obtained on the
// abelianization.  Only torsion-free abelianizations are handled.
struct AbelianizationCertificate {
  ReidemeisterCount bound;
  IntMatrix induced;  // matrix of the endomorphism on the free abelianization

  bool certifiedInfinite() const { return bound.infinite; }
};

AbelianizationCertificate abelianizationCertificate(
    const Presentation& p, const std::vector<Word>& generatorImages);

// Checks R(f) >= R(induced f) on a quotient by an invariant normal subgroup,
// returning both numbers.
struct LiftedInequalityReport {
  ReidemeisterCount total;
  ReidemeisterCount quotient;
  bool holds = false;
};

LiftedInequalityReport liftedInequalityCheck(const FiniteGroup& g,
                                             const std::vector<int>& normal,
                                             const FiniteEndo& f);

// An endomorphism of a free group, given on a basis.
struct FreeEndo {
  std::vector<GeneratorSymbol> basis;
  std::vector<Word> images;

  Word apply(const Word& w) const;
};

FreeEndo makeFreeEndo(std::vector<GeneratorSymbol> basis,
                      std::vector<Word> images);

// Partition of all reduced words of length <= maxLen under merges
// x ~ z x e(z)^-1 witnessed by |z| <= maxWitness, an upper bound refinement
// of the twisted conjugacy partition restricted to those words.
struct CensusResult {
  mpz_class classes;
  std::size_t words = 0;
};

CensusResult boundedCensusFree(const FreeEndo& e, int maxLen, int maxWitness);

}  // namespace surfbraid
