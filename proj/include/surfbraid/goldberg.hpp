#pragma once

#include <optional>
#include <string>
#include <vector>

#include "surfbraid/families.hpp"
#include "surfbraid/intmat.hpp"
#include "surfbraid/presentation.hpp"
#include "surfbraid/rewrite.hpp"

namespace surfbraid {

// Quotient of the surface pure braid presentation by the normal closure of
// the band generators: every killed letter is erased from every relator,
// the survivors are cyclically reduced, trivialities dropped and duplicates
// (up to rotation and inversion) merged.
Presentation bandQuotient(const SurfaceSpec& s, int strands);

// Same construction on an arbitrary presentation, for fault injection tests.
Presentation bandQuotientOf(const Presentation& p,
                            const std::vector<GeneratorSymbol>& kill,
                            const std::string& provenance);

// How the surviving relators split: commutators of two generators versus
// everything else.  Sphere and orientable families are expected to leave
// commutators only; the non-orientable family also keeps its surface
// relators and the mixed rho conjugation residues.
struct SurvivorCensus {
  std::size_t commutators = 0;
  std::vector<Word> other;
};

SurvivorCensus survivorsCensus(const Presentation& q);

enum class CertificateStatus { Verified, Unverified, Refuted };

std::string toString(CertificateStatus s);

// Outcome of checking that the band quotient is a direct power of the
// surface group.  Verified means: both generator maps are certified
// well-defined homomorphisms and both composites fix every generator.
// Unverified means a budget ran out before anything was decided; Refuted
// carries a concrete witness relator whose image fails.
struct IsomorphismCertificate {
  SurfaceSpec surface;
  int strands = 0;
  Presentation quotient;
  Presentation target;
  GroupHom phi;  // quotient -> target
  GroupHom psi;  // target -> quotient

  CertificateStatus status = CertificateStatus::Unverified;
  std::string reason;          // set when not Verified
  std::optional<Word> witness; // set when Refuted

  bool phiWellDefined = false;
  bool psiWellDefined = false;
  bool compositesFixGenerators = false;

  AbelianInvariants quotientAbelian;
  AbelianInvariants targetAbelian;

  std::size_t rewriteRules = 0;  // size of the completed system, if any
};

IsomorphismCertificate verifyBandQuotient(const SurfaceSpec& s, int strands,
                                          const KbBudget& budget = {});

// Runs the same verification pipeline against a caller-supplied quotient
// presentation (same generator set as the honest quotient); used to check
// that corrupted inputs never come back Verified.
IsomorphismCertificate verifyBandQuotientWith(const SurfaceSpec& s,
                                              int strands,
                                              const Presentation& quotient,
                                              const KbBudget& budget = {});

}  // namespace surfbraid
