#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "surfbraid/intmat.hpp"
#include "surfbraid/word.hpp"

namespace surfbraid {

// Finitely presented group.  Relators are kept freely and cyclically reduced
// and non-empty; an equation L = R enters as the relator L * R^-1.  The
// relator list is a multiset: duplicates are only merged where an operation
// says so.
struct Presentation {
  std::vector<GeneratorSymbol> generators;
  std::vector<Word> relators;
  std::string provenance = "ad hoc";

  // Normalizes relators (cyclic reduction, empty ones dropped) and checks
  // that every relator letter names a declared generator.
  static Presentation make(std::vector<GeneratorSymbol> generators,
                           std::vector<Word> relators,
                           std::string provenance = "ad hoc");

  bool hasGenerator(const GeneratorSymbol& s) const;
};

// Generator-image map between presented groups.  Constructing one checks
// totality on the source and that images only use target generators; it does
// not check that relators die, which is what checkHom is for.
struct GroupHom {
  Presentation source;
  Presentation target;
  std::map<GeneratorSymbol, Word> images;

  static GroupHom make(Presentation source, Presentation target,
                       std::map<GeneratorSymbol, Word> images);

  Word apply(const Word& w) const { return applyImages(w, images); }
};

// h2 after h1; h1's target generators must be h2's source generators.
GroupHom composeHoms(const GroupHom& h1, const GroupHom& h2);

// Decides w == 1 in a fixed group.  Implementations: free reduction, factor
// projection for direct powers of free groups (presentation.cpp), confluent
// rewriting (rewrite.hpp), coset table lookup (coset.hpp).
class WordProblemStrategy {
 public:
  virtual ~WordProblemStrategy() = default;
  virtual bool isIdentity(const Word& w) const = 0;
  virtual std::string name() const = 0;
};

class FreeReductionStrategy final : public WordProblemStrategy {
 public:
  bool isIdentity(const Word& w) const override { return w.empty(); }
  std::string name() const override { return "free reduction"; }
};

// A word over a direct product of free groups is trivial iff its projection
// to every factor freely reduces to nothing.  Letters are assigned to factors
// by their copy tag.  `eliminate` optionally rewrites redundant generators
// (single pass; images must avoid the eliminated symbols) so that factors
// presented with one defining relation can be treated as free.
class DirectPowerOfFreeStrategy final : public WordProblemStrategy {
 public:
  DirectPowerOfFreeStrategy(int copies, std::map<GeneratorSymbol, Word> eliminate = {});
  bool isIdentity(const Word& w) const override;
  std::string name() const override { return "direct power of free"; }

 private:
  int copies_;
  std::map<GeneratorSymbol, Word> eliminate_;
};

struct HomCheck {
  bool wellDefined = false;
  std::optional<Word> failingRelator;
};

// A generator-image map is a homomorphism iff every source relator maps to
// the identity of the target.
HomCheck checkHom(const GroupHom& h, const WordProblemStrategy& strategy);

// Exponent-sum matrix: one row per relator, one column per generator, in
// presentation order.
IntMatrix abelianizationMatrix(const Presentation& p);

AbelianInvariants abelianInvariants(const Presentation& p);

}  // namespace surfbraid
