#pragma once

#include <string>
#include <vector>

#include "surfbraid/families.hpp"

namespace surfbraid {

// The three regimes of orientable surfaces the classification distinguishes:
// F1 = sphere with at most two punctures, F3 = torus and once-punctured
// torus (open for n >= 2), F2 = everything else (chi < -1 or the pantalon).
enum class Family { F1, F2, F3 };

std::string toString(Family f);

// Total on orientable surfaces, rejects non-orientable ones.
Family familyOf(const SurfaceSpec& s);

enum class Flavor { Pure, Full };

std::string toString(Flavor f);

struct BraidGroupId {
  SurfaceSpec surface;
  int strands = 1;
  Flavor flavor = Flavor::Pure;
};

enum class Verdict { Yes, No, Unknown };

std::string toString(Verdict v);

// One step of a derivation.  Axioms rest on cited external results, computed
// steps on calculations this toolkit performed while classifying, derived
// steps on earlier steps named in `premises`.
enum class StepKind { Axiom, Computed, Derived };

std::string toString(StepKind k);

struct TraceStep {
  StepKind kind = StepKind::Axiom;
  std::string rule;
  std::string statement;
  std::string citation;       // external authority; empty unless an axiom
  std::vector<int> premises;  // indices of earlier steps in the same trace
};

struct RinfStatus {
  Verdict verdict = Verdict::Unknown;
  std::vector<TraceStep> trace;
};

// Whether every automorphism of the chosen braid group has infinitely many
// twisted conjugacy classes, with a full derivation.  Unknown is an honest
// verdict for the torus and once-punctured torus with n >= 2.
RinfStatus classify(const BraidGroupId& id);

struct TableCell {
  SurfaceSpec surface;
  int strands = 1;
  Verdict pure = Verdict::Unknown;
  Verdict full = Verdict::Unknown;
};

// Verdict grid over 0 <= g <= maxGenus, 0 <= p <= maxPunctures,
// 1 <= n <= maxStrands, both flavors.
std::vector<TableCell> classificationTable(int maxGenus, int maxPunctures,
                                           int maxStrands);

}  // namespace surfbraid
