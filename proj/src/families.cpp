#include "surfbraid/families.hpp"

#include <sstream>

#include "surfbraid/errors.hpp"

namespace surfbraid {

SurfaceSpec SurfaceSpec::sphere(int punctures) {
  return orientableOf(0, punctures);
}

SurfaceSpec SurfaceSpec::orientableOf(int genus, int punctures) {
  if (genus < 0 || punctures < 0)
    throw InvalidParams("surface needs genus >= 0 and punctures >= 0");
  return {true, genus, punctures};
}

SurfaceSpec SurfaceSpec::nonorientableOf(int genus, int punctures) {
  if (genus < 1) throw InvalidParams("non-orientable surface needs genus >= 1");
  if (punctures < 0) throw InvalidParams("surface needs punctures >= 0");
  return {false, genus, punctures};
}

std::string SurfaceSpec::toString() const {
  std::ostringstream out;
  if (isSphere())
    out << "sphere:" << punctures;
  else
    out << (orientable ? "o:" : "n:") << genus << ',' << punctures;
  return out.str();
}

SurfaceSpec SurfaceSpec::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("surface syntax is sphere:p, o:g,p or n:g,p");
  std::string_view head = text.substr(0, colon);
  std::string rest(text.substr(colon + 1));
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    int v;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw ParseError("bad number in surface \"" + std::string(text) + "\"");
    }
    if (used != s.size())
      throw ParseError("bad number in surface \"" + std::string(text) + "\"");
    return v;
  };
  if (head == "sphere") return SurfaceSpec::sphere(number(rest));
  auto comma = rest.find(',');
  if ((head != "o" && head != "n") || comma == std::string::npos)
    throw ParseError("surface syntax is sphere:p, o:g,p or n:g,p");
  int g = number(rest.substr(0, comma));
  int p = number(rest.substr(comma + 1));
  return head == "o" ? SurfaceSpec::orientableOf(g, p)
                     : SurfaceSpec::nonorientableOf(g, p);
}

namespace {

Word gen(int i, int j, int sign = 1) {
  return Word::letter(GeneratorSymbol::a(i, j), sign);
}

Word rho(int r, int k, int sign = 1) {
  return Word::letter(GeneratorSymbol::rho(r, k), sign);
}

// relator encoding the equation lhs = rhs
Word equation(const Word& lhs, const Word& rhs) {
  return lhs * rhs.inverse();
}

std::string pureBraidProvenance(const SurfaceSpec& s, int n) {
  std::ostringstream out;
  out << "pure braid " << s.toString() << " strands=" << n;
  return out.str();
}

}  // namespace

Presentation pureBraidPuncturedSphere(int p, int n) {
  if (p < 1) throw InvalidParams("punctured sphere braids need p >= 1");
  if (n < 1) throw InvalidParams("strand count must be >= 1");
  // generators A(i,j), 1 <= i < j, j in the strand band [p, p+n-1]
  auto declared = [&](int i, int j) {
    return 1 <= i && i < j && p <= j && j <= p + n - 1;
  };
  std::vector<GeneratorSymbol> gens;
  for (int i = 1; i <= p + n - 2; ++i)
    for (int j = std::max(i + 1, p); j <= p + n - 1; ++j)
      gens.push_back(GeneratorSymbol::a(i, j));

  std::vector<Word> rels;
  const int top = p + n - 1;
  // disjoint and nested strands commute up to the surface correction terms
  for (int i = 1; i <= top; ++i)
    for (int j = i + 1; j <= top; ++j) {
      if (!declared(i, j)) continue;
      for (int r = 1; r <= top; ++r)
        for (int s = r + 1; s <= top; ++s) {
          if (!declared(r, s)) continue;
          if ((i < j && j < r && r < s) || (r < i && i < j && j < s))
            rels.push_back(equation(gen(i, j, -1) * gen(r, s) * gen(i, j),
                                    gen(r, s)));
        }
      for (int s = j + 1; s <= top; ++s) {
        if (!declared(j, s) || !declared(i, s)) continue;
        rels.push_back(equation(gen(i, j, -1) * gen(j, s) * gen(i, j),
                                gen(i, s) * gen(j, s) * gen(i, s, -1)));
        rels.push_back(equation(
            gen(i, j, -1) * gen(i, s) * gen(i, j),
            gen(i, s) * gen(j, s) * gen(i, s) * gen(j, s, -1) * gen(i, s, -1)));
      }
      for (int r = i + 1; r < j; ++r)
        for (int s = j + 1; s <= top; ++s) {
          if (!declared(r, s) || !declared(i, s) || !declared(j, s)) continue;
          rels.push_back(
              equation(gen(i, j, -1) * gen(r, s) * gen(i, j),
                       gen(i, s) * gen(j, s) * gen(i, s, -1) * gen(j, s, -1) *
                           gen(r, s) * gen(j, s) * gen(i, s) * gen(j, s, -1) *
                           gen(i, s, -1)));
        }
    }
  return Presentation::make(std::move(gens), std::move(rels),
                            pureBraidProvenance(SurfaceSpec::sphere(p), n));
}

Presentation pureBraidOrientable(int g, int p, int n) {
  if (g < 1) throw InvalidParams("orientable family needs genus >= 1");
  if (p < 1) throw ClosedSurfaceUnsupported(
      "closed-surface braid presentations are not implemented");
  if (n < 1) throw InvalidParams("strand count must be >= 1");
  auto declared = [&](int i, int j) {
    return 1 <= i && i < j && 2 * g + p <= j && j <= 2 * g + p + n - 1;
  };
  std::vector<GeneratorSymbol> gens;
  for (int i = 1; i <= 2 * g + p + n - 2; ++i)
    for (int j = std::max(i + 1, 2 * g + p); j <= 2 * g + p + n - 1; ++j)
      gens.push_back(GeneratorSymbol::a(i, j));

  std::vector<Word> rels;
  const int top = 2 * g + p + n - 1;
  for (int i = 1; i <= top; ++i)
    for (int j = i + 1; j <= top; ++j) {
      if (!declared(i, j)) continue;
      for (int r = 1; r <= top; ++r)
        for (int s = r + 1; s <= top; ++s) {
          if (!declared(r, s)) continue;
          // handle-crossing pairs pick up parity side conditions
          bool commutes = (i < j && j < r && r < s) ||
                          (r + 1 < i && i < j && j < s) ||
                          (i == r + 1 && j < s &&
                           ((r % 2 == 0 && r < 2 * g) || r >= 2 * g));
          if (commutes)
            rels.push_back(equation(gen(i, j, -1) * gen(r, s) * gen(i, j),
                                    gen(r, s)));
          bool conjugates = (i + 1 < r && r < j && j < s) ||
                            (i + 1 == r && r < j && j < s &&
                             ((r % 2 == 1 && r < 2 * g) || r > 2 * g));
          if (conjugates && declared(i, s) && declared(j, s))
            rels.push_back(
                equation(gen(i, j, -1) * gen(r, s) * gen(i, j),
                         gen(i, s) * gen(j, s) * gen(i, s, -1) *
                             gen(j, s, -1) * gen(r, s) * gen(j, s) *
                             gen(i, s) * gen(j, s, -1) * gen(i, s, -1)));
        }
      for (int s = j + 1; s <= top; ++s) {
        if (!declared(j, s) || !declared(i, s)) continue;
        rels.push_back(equation(gen(i, j, -1) * gen(j, s) * gen(i, j),
                                gen(i, s) * gen(j, s) * gen(i, s, -1)));
        rels.push_back(equation(
            gen(i, j, -1) * gen(i, s) * gen(i, j),
            gen(i, s) * gen(j, s) * gen(i, s) * gen(j, s, -1) * gen(i, s, -1)));
      }
    }
  // relations tying the two generators of each handle together
  for (int r = 1; r < 2 * g; r += 2)
    for (int j = r + 2; j <= top; ++j)
      for (int s = j + 1; s <= top; ++s) {
        if (!declared(r + 1, j) || !declared(r, s) || !declared(r + 1, s) ||
            !declared(j, s))
          continue;
        rels.push_back(equation(gen(r + 1, j, -1) * gen(r, s) * gen(r + 1, j),
                                gen(r, s) * gen(r + 1, s) * gen(j, s, -1) *
                                    gen(r + 1, s, -1)));
      }
  for (int r = 2; r <= 2 * g; r += 2)
    for (int j = r; j <= top; ++j)
      for (int s = j + 1; s <= top; ++s) {
        if (!declared(r - 1, j) || !declared(r, s) || !declared(r - 1, s) ||
            !declared(j, s))
          continue;
        rels.push_back(
            equation(gen(r - 1, j, -1) * gen(r, s) * gen(r - 1, j),
                     gen(r - 1, s) * gen(j, s) * gen(r - 1, s, -1) *
                         gen(r, s) * gen(j, s) * gen(r - 1, s) *
                         gen(j, s, -1) * gen(r - 1, s, -1)));
      }
  return Presentation::make(
      std::move(gens), std::move(rels),
      pureBraidProvenance(SurfaceSpec::orientableOf(g, p), n));
}

Presentation pureBraidNonorientable(int g, int p, int n) {
  if (g < 1) throw InvalidParams("non-orientable family needs genus >= 1");
  if (p < 1) throw ClosedSurfaceUnsupported(
      "closed-surface braid presentations are not implemented");
  if (n < 1) throw InvalidParams("strand count must be >= 1");
  auto declaredA = [&](int i, int j) {
    return 1 <= i && i < j && p + 1 <= j && j <= p + n;
  };
  std::vector<GeneratorSymbol> gens;
  for (int i = 1; i <= p + n - 1; ++i)
    for (int j = std::max(i + 1, p + 1); j <= p + n; ++j)
      gens.push_back(GeneratorSymbol::a(i, j));
  for (int r = p + 1; r <= p + n; ++r)
    for (int k = 1; k <= g; ++k) gens.push_back(GeneratorSymbol::rho(r, k));

  std::vector<Word> rels;
  const int top = p + n;
  // (a) Artin-type action of A(r,s) on A(i,j); note the conjugator sits on
  // the left here
  for (int r = 1; r <= top; ++r)
    for (int s = r + 1; s <= top; ++s) {
      if (!declaredA(r, s)) continue;
      for (int i = 1; i <= top; ++i)
        for (int j = i + 1; j <= top; ++j) {
          if (!declaredA(i, j)) continue;
          Word lhs = gen(r, s) * gen(i, j) * gen(r, s, -1);
          if ((i < r && s < j) || (s < i))
            rels.push_back(equation(lhs, gen(i, j)));
          else if (i == r && s < j)
            rels.push_back(
                equation(lhs, gen(s, j, -1) * gen(i, j) * gen(s, j)));
          else if (r < i && i == s && s < j)
            rels.push_back(equation(lhs, gen(i, j, -1) * gen(r, j, -1) *
                                             gen(i, j) * gen(r, j) *
                                             gen(i, j)));
          else if (r < i && i < s && s < j)
            rels.push_back(equation(
                lhs, gen(s, j, -1) * gen(r, j, -1) * gen(s, j) * gen(r, j) *
                         gen(i, j) * gen(r, j, -1) * gen(s, j, -1) *
                         gen(r, j) * gen(s, j)));
        }
    }
  // (b) action of rho(i,k) on rho(j,l) for lower strands i < j
  for (int i = p + 1; i <= top; ++i)
    for (int j = i + 1; j <= top; ++j)
      for (int k = 1; k <= g; ++k)
        for (int l = 1; l <= g; ++l) {
          Word lhs = rho(i, k) * rho(j, l) * rho(i, k, -1);
          if (k < l)
            rels.push_back(equation(lhs, rho(j, l)));
          else if (k == l)
            rels.push_back(equation(
                lhs, rho(j, k, -1) * gen(i, j, -1) * rho(j, k) * rho(j, k)));
          else
            rels.push_back(equation(
                lhs, rho(j, k, -1) * gen(i, j, -1) * rho(j, k) *
                         gen(i, j, -1) * rho(j, l) * gen(i, j) *
                         rho(j, k, -1) * gen(i, j) * rho(j, k)));
        }
  // (c) surface relation, one per strand
  for (int j = p + 1; j <= top; ++j) {
    Word lhs, rhs;
    for (int l = 1; l <= g; ++l) lhs = lhs * rho(j, l) * rho(j, l);
    for (int i = 1; i < j; ++i) rhs = rhs * gen(i, j);
    for (int s = j + 1; s <= top; ++s) rhs = rhs * gen(j, s);
    rels.push_back(equation(lhs, rhs));
  }
  // (d) action of rho(k,l) on A(i,j) for k != j
  for (int i = 1; i <= top; ++i)
    for (int j = i + 1; j <= top; ++j) {
      if (!declaredA(i, j)) continue;
      for (int k = p + 1; k <= top; ++k) {
        if (k == j) continue;
        for (int l = 1; l <= g; ++l) {
          Word lhs = rho(k, l) * gen(i, j) * rho(k, l, -1);
          if (k < i || j < k)
            rels.push_back(equation(lhs, gen(i, j)));
          else if (k == i)
            rels.push_back(
                equation(lhs, rho(j, l, -1) * gen(i, j, -1) * rho(j, l)));
          else  // i < k < j
            rels.push_back(equation(
                lhs, rho(j, l, -1) * gen(k, j, -1) * rho(j, l) *
                         gen(k, j, -1) * gen(i, j) * gen(k, j) *
                         rho(j, l, -1) * gen(k, j) * rho(j, l)));
        }
      }
    }
  return Presentation::make(
      std::move(gens), std::move(rels),
      pureBraidProvenance(SurfaceSpec::nonorientableOf(g, p), n));
}

Presentation pureBraid(const SurfaceSpec& surface, int n) {
  if (!surface.orientable)
    return pureBraidNonorientable(surface.genus, surface.punctures, n);
  if (surface.genus == 0) return pureBraidPuncturedSphere(surface.punctures, n);
  return pureBraidOrientable(surface.genus, surface.punctures, n);
}

std::vector<GeneratorSymbol> artinGenerators(const SurfaceSpec& surface,
                                             int n) {
  if (n < 1) throw InvalidParams("strand count must be >= 1");
  int lo, hi;
  if (!surface.orientable) {
    lo = surface.punctures + 1;
    hi = surface.punctures + n;
  } else if (surface.genus == 0) {
    lo = surface.punctures;
    hi = surface.punctures + n - 1;
  } else {
    lo = 2 * surface.genus + surface.punctures;
    hi = 2 * surface.genus + surface.punctures + n - 1;
  }
  std::vector<GeneratorSymbol> out;
  for (int i = lo; i < hi; ++i)
    for (int j = i + 1; j <= hi; ++j) out.push_back(GeneratorSymbol::a(i, j));
  return out;
}

Presentation surfaceGroup(const SurfaceSpec& surface) {
  if (surface.punctures < 1)
    throw ClosedSurfaceUnsupported(
        "fundamental groups are only built for punctured surfaces here");
  std::string provenance = "pi1 " + surface.toString();
  if (surface.orientable) {
    int rank = 2 * surface.genus + surface.punctures - 1;
    std::vector<GeneratorSymbol> gens;
    for (int k = 1; k <= rank; ++k)
      gens.push_back(GeneratorSymbol::plain("x", k));
    return Presentation::make(std::move(gens), {}, std::move(provenance));
  }
  std::vector<GeneratorSymbol> gens;
  for (int i = 1; i <= surface.punctures; ++i)
    gens.push_back(GeneratorSymbol::plain("A", i));
  for (int l = 1; l <= surface.genus; ++l)
    gens.push_back(GeneratorSymbol::plain("rho", l));
  Word lhs, rhs;
  for (int l = 1; l <= surface.genus; ++l) {
    Word r = Word::letter(GeneratorSymbol::plain("rho", l));
    lhs = lhs * r * r;
  }
  for (int i = 1; i <= surface.punctures; ++i)
    rhs = rhs * Word::letter(GeneratorSymbol::plain("A", i));
  return Presentation::make(std::move(gens), {equation(lhs, rhs)},
                            std::move(provenance));
}

Presentation directPower(const Presentation& base, int n) {
  if (n < 1) throw InvalidParams("direct power needs n >= 1");
  for (const GeneratorSymbol& g : base.generators)
    if (g.copy != 0)
      throw InvalidParams("direct power base already carries copy tags");
  auto relabel = [](const Word& w, int c) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (const Letter& l : w.letters())
      out.push_back({l.sym.withCopy(c), l.sign});
    return Word::reduced(std::move(out));
  };
  std::vector<GeneratorSymbol> gens;
  std::vector<Word> rels;
  for (int c = 1; c <= n; ++c)
    for (const GeneratorSymbol& g : base.generators)
      gens.push_back(g.withCopy(c));
  for (int c = 1; c <= n; ++c)
    for (const Word& r : base.relators) rels.push_back(relabel(r, c));
  for (int c = 1; c <= n; ++c)
    for (int d = c + 1; d <= n; ++d)
      for (const GeneratorSymbol& x : base.generators)
        for (const GeneratorSymbol& y : base.generators) {
          Word xc = Word::letter(x.withCopy(c));
          Word yd = Word::letter(y.withCopy(d));
          rels.push_back(xc.inverse() * yd.inverse() * xc * yd);
        }
  std::ostringstream provenance;
  provenance << "direct power n=" << n << " of [" << base.provenance << "]";
  return Presentation::make(std::move(gens), std::move(rels),
                            provenance.str());
}

}  // namespace surfbraid
