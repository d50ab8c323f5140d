#include "surfbraid/goldberg.hpp"

#include <algorithm>
#include <set>

#include "surfbraid/errors.hpp"

namespace surfbraid {

Presentation bandQuotientOf(const Presentation& p,
                            const std::vector<GeneratorSymbol>& kill,
                            const std::string& provenance) {
  for (const GeneratorSymbol& g : kill)
    if (!p.hasGenerator(g))
      throw UndeclaredSymbol("cannot kill " + toString(g) +
                             ": not a generator of the presentation");
  std::set<GeneratorSymbol> killSet(kill.begin(), kill.end());
  std::vector<GeneratorSymbol> generators;
  for (const GeneratorSymbol& g : p.generators)
    if (!killSet.count(g)) generators.push_back(g);

  std::vector<Word> relators;
  std::set<Word> seen;  // canonical cyclic forms already kept
  for (const Word& r : p.relators) {
    Word w = cyclicallyReduce(substituteKill(r, killSet));
    if (w.empty()) continue;
    Word key = canonicalCyclic(w);
    if (seen.insert(key).second) relators.push_back(w);
  }
  return Presentation::make(std::move(generators), std::move(relators),
                            provenance);
}

Presentation bandQuotient(const SurfaceSpec& s, int strands) {
  Presentation fam = pureBraid(s, strands);
  std::vector<GeneratorSymbol> band = artinGenerators(s, strands);
  std::string note = fam.provenance + ", band generators";
  if (band.empty()) {
    note += " (none)";
  } else {
    note += " " + toString(band.front()) + " .. " + toString(band.back());
  }
  note += " killed";
  return bandQuotientOf(fam, band, note);
}

SurvivorCensus survivorsCensus(const Presentation& q) {
  SurvivorCensus census;
  for (const Word& r : q.relators) {
    if (commutatorShape(r))
      ++census.commutators;
    else
      census.other.push_back(r);
  }
  return census;
}

std::string toString(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::Verified:
      return "Verified";
    case CertificateStatus::Unverified:
      return "Unverified";
    case CertificateStatus::Refuted:
      return "Refuted";
  }
  return "Unverified";
}

namespace {

int bandStart(const SurfaceSpec& s) {
  return s.orientable ? 2 * s.genus + s.punctures : s.punctures + 1;
}

// Image of one braid generator in the direct power of the surface group:
// the strand index picks the factor, the other index picks the generator.
Word phiImage(const SurfaceSpec& s, const GeneratorSymbol& g) {
  const int lo = bandStart(s);
  if (g.kind == SymbolKind::A) {
    const int factor = g.j - lo + 1;
    if (s.orientable)
      return Word::letter(GeneratorSymbol::plain("x", g.i).withCopy(factor));
    return Word::letter(GeneratorSymbol::plain("A", g.i).withCopy(factor));
  }
  if (g.kind == SymbolKind::Rho) {
    const int factor = g.i - lo + 1;
    return Word::letter(GeneratorSymbol::plain("rho", g.j).withCopy(factor));
  }
  throw InvalidParams("quotient generator " + toString(g) +
                      " is not a braid generator");
}

// Inverse assignment, target generator -> quotient generator.
Word psiImage(const SurfaceSpec& s, const GeneratorSymbol& t) {
  const int lo = bandStart(s);
  const int strand = lo + t.copy - 1;
  if (s.orientable) {
    if (t.name == "x") return Word::letter(GeneratorSymbol::a(t.i, strand));
  } else {
    if (t.name == "A") return Word::letter(GeneratorSymbol::a(t.i, strand));
    if (t.name == "rho")
      return Word::letter(GeneratorSymbol::rho(strand, t.i));
  }
  throw InvalidParams("unexpected target generator " + toString(t));
}

// The factors of the non-orientable target carry one defining relation
// each; solving it for the last A generator makes the factor free, which is
// what the direct power strategy needs.
std::map<GeneratorSymbol, Word> eliminationFor(const SurfaceSpec& s,
                                               int strands) {
  std::map<GeneratorSymbol, Word> eliminate;
  if (s.orientable) return eliminate;
  const int p = s.punctures;
  for (int c = 1; c <= strands; ++c) {
    std::vector<Letter> letters;
    for (int i = p - 1; i >= 1; --i)
      letters.push_back(
          Letter{GeneratorSymbol::plain("A", i).withCopy(c), -1});
    for (int l = 1; l <= s.genus; ++l) {
      GeneratorSymbol rho = GeneratorSymbol::plain("rho", l).withCopy(c);
      letters.push_back(Letter{rho, +1});
      letters.push_back(Letter{rho, +1});
    }
    eliminate.emplace(GeneratorSymbol::plain("A", p).withCopy(c),
                      Word::reduced(std::move(letters)));
  }
  return eliminate;
}

}  // namespace

IsomorphismCertificate verifyBandQuotientWith(const SurfaceSpec& s,
                                              int strands,
                                              const Presentation& quotient,
                                              const KbBudget& budget) {
  IsomorphismCertificate cert;
  cert.surface = s;
  cert.strands = strands;
  cert.quotient = quotient;
  cert.target = directPower(surfaceGroup(s), strands);

  std::map<GeneratorSymbol, Word> phiImages;
  for (const GeneratorSymbol& g : quotient.generators)
    phiImages.emplace(g, phiImage(s, g));
  cert.phi = GroupHom::make(cert.quotient, cert.target, std::move(phiImages));

  std::map<GeneratorSymbol, Word> psiImages;
  for (const GeneratorSymbol& t : cert.target.generators)
    psiImages.emplace(t, psiImage(s, t));
  cert.psi = GroupHom::make(cert.target, cert.quotient, std::move(psiImages));

  cert.quotientAbelian = abelianInvariants(cert.quotient);
  cert.targetAbelian = abelianInvariants(cert.target);

  DirectPowerOfFreeStrategy targetStrategy(strands, eliminationFor(s, strands));
  HomCheck phiCheck = checkHom(cert.phi, targetStrategy);
  cert.phiWellDefined = phiCheck.wellDefined;
  if (!phiCheck.wellDefined) {
    cert.status = CertificateStatus::Refuted;
    cert.reason = "a quotient relator does not map to the identity";
    cert.witness = phiCheck.failingRelator;
    return cert;
  }

  KbResult kb = kbComplete(cert.quotient, budget);
  if (const KbExhausted* ex = std::get_if<KbExhausted>(&kb)) {
    cert.status = CertificateStatus::Unverified;
    cert.reason = "rewriting completion budget exhausted (" +
                  toString(ex->dimension) + ")";
    cert.rewriteRules = ex->rules;
    return cert;
  }
  const RewriteSystem& rs = std::get<RewriteSystem>(kb);
  cert.rewriteRules = rs.rules().size();
  RewriteStrategy quotientStrategy(rs);

  HomCheck psiCheck = checkHom(cert.psi, quotientStrategy);
  cert.psiWellDefined = psiCheck.wellDefined;
  if (!psiCheck.wellDefined) {
    cert.status = CertificateStatus::Refuted;
    cert.reason = "a target relator does not map to the identity";
    cert.witness = psiCheck.failingRelator;
    return cert;
  }

  for (const GeneratorSymbol& g : cert.quotient.generators) {
    Word back = cert.psi.apply(cert.phi.apply(Word::letter(g)));
    if (!quotientStrategy.isIdentity(back * Word::letter(g).inverse())) {
      cert.status = CertificateStatus::Refuted;
      cert.reason = "psi(phi(g)) differs from g";
      cert.witness = Word::letter(g);
      return cert;
    }
  }
  for (const GeneratorSymbol& t : cert.target.generators) {
    Word back = cert.phi.apply(cert.psi.apply(Word::letter(t)));
    if (!targetStrategy.isIdentity(back * Word::letter(t).inverse())) {
      cert.status = CertificateStatus::Refuted;
      cert.reason = "phi(psi(t)) differs from t";
      cert.witness = Word::letter(t);
      return cert;
    }
  }
  cert.compositesFixGenerators = true;
  cert.status = CertificateStatus::Verified;
  return cert;
}

IsomorphismCertificate verifyBandQuotient(const SurfaceSpec& s, int strands,
                                          const KbBudget& budget) {
  return verifyBandQuotientWith(s, strands, bandQuotient(s, strands), budget);
}

}  // namespace surfbraid
