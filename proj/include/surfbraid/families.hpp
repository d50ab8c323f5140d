#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "surfbraid/presentation.hpp"

namespace surfbraid {

// A compact surface of finite type.  The sphere is orientable genus 0; a
// non-orientable surface of genus g is the connected sum of g projective
// planes (so genus >= 1 there).
struct SurfaceSpec {
  bool orientable = true;
  int genus = 0;
  int punctures = 0;

  static SurfaceSpec sphere(int punctures);
  static SurfaceSpec orientableOf(int genus, int punctures);
  static SurfaceSpec nonorientableOf(int genus, int punctures);

  bool isSphere() const { return orientable && genus == 0; }
  bool operator==(const SurfaceSpec&) const = default;

  // "sphere:p" | "o:g,p" | "n:g,p", also the CLI syntax
  std::string toString() const;
  static SurfaceSpec parse(std::string_view text);
};

// Pure braid group presentations on n strands over a punctured surface.
// Generators are A(i,j) (plus rho(strand, sheet) in the non-orientable case);
// relator instances are enumerated exhaustively over all index tuples whose
// side conditions hold and whose generators are all declared.
Presentation pureBraidPuncturedSphere(int p, int n);
Presentation pureBraidOrientable(int g, int p, int n);
Presentation pureBraidNonorientable(int g, int p, int n);
Presentation pureBraid(const SurfaceSpec& surface, int n);

// The generators spanning the classical Artin pure braid group inside the
// surface pure braid group: both indices in the strand band.
std::vector<GeneratorSymbol> artinGenerators(const SurfaceSpec& surface, int n);

// Fundamental group of the punctured surface: free for sphere and orientable
// surfaces (rank 2g+p-1), one defining relation rho_1^2..rho_g^2 = A_1..A_p
// otherwise.  Closed surfaces are rejected.
Presentation surfaceGroup(const SurfaceSpec& surface);

// n relabeled copies of base (copy tags 1..n) plus commutators making
// distinct copies commute elementwise.
Presentation directPower(const Presentation& base, int n);

}  // namespace surfbraid
