#include "surfbraid/twisted.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "surfbraid/errors.hpp"

namespace surfbraid {

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    int r = x;
    while (parent[static_cast<std::size_t>(r)] != r)
      r = parent[static_cast<std::size_t>(r)];
    while (parent[static_cast<std::size_t>(x)] != r) {
      int next = parent[static_cast<std::size_t>(x)];
      parent[static_cast<std::size_t>(x)] = r;
      x = next;
    }
    return r;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
  }
};

void requireEndoShape(const FiniteGroup& g, const FiniteEndo& f) {
  if (static_cast<int>(f.image.size()) != g.order())
    throw InvalidParams("endomorphism image table has the wrong size");
}

}  // namespace

bool FiniteEndo::isBijective() const {
  std::vector<char> seen(image.size(), 0);
  for (int v : image) {
    if (v < 0 || v >= static_cast<int>(image.size()) || seen[static_cast<std::size_t>(v)])
      return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

FiniteEndo makeFiniteEndo(const FiniteGroup& g, std::vector<int> image) {
  const int n = g.order();
  if (static_cast<int>(image.size()) != n)
    throw InvalidParams("endomorphism must assign an image to every element");
  for (int v : image)
    if (v < 0 || v >= n) throw InvalidParams("endomorphism image out of range");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (image[static_cast<std::size_t>(g.mul(a, b))] !=
          g.mul(image[static_cast<std::size_t>(a)], image[static_cast<std::size_t>(b)]))
        throw InvalidParams("map is not multiplicative");
  return FiniteEndo{std::move(image)};
}

FiniteEndo identityEndo(const FiniteGroup& g) {
  std::vector<int> image(static_cast<std::size_t>(g.order()));
  std::iota(image.begin(), image.end(), 0);
  return FiniteEndo{std::move(image)};
}

FiniteEndo composeWithConjugation(const FiniteGroup& g, const FiniteEndo& f,
                                  int byElement) {
  requireEndoShape(g, f);
  std::vector<int> image(f.image.size());
  const int c = byElement;
  const int ci = g.inverse(c);
  for (std::size_t x = 0; x < f.image.size(); ++x)
    image[x] = g.mul(g.mul(c, f.image[x]), ci);
  return FiniteEndo{std::move(image)};
}

std::vector<std::vector<int>> twistedClassesFinite(const FiniteGroup& g,
                                                   const FiniteEndo& f) {
  requireEndoShape(g, f);
  const int n = g.order();
  UnionFind uf(static_cast<std::size_t>(n));
  for (int z = 0; z < n; ++z) {
    const int fzInv = g.inverse(f.image[static_cast<std::size_t>(z)]);
    for (int x = 0; x < n; ++x) uf.unite(x, g.mul(g.mul(z, x), fzInv));
  }
  std::map<int, std::vector<int>> byRoot;
  for (int x = 0; x < n; ++x) byRoot[uf.find(x)].push_back(x);
  std::vector<std::vector<int>> classes;
  classes.reserve(byRoot.size());
  for (auto& [root, members] : byRoot) classes.push_back(std::move(members));
  return classes;
}

ReidemeisterCount reidemeisterFinite(const FiniteGroup& g,
                                     const FiniteEndo& f) {
  return ReidemeisterCount::of(
      static_cast<long>(twistedClassesFinite(g, f).size()));
}

ReidemeisterCount reidemeisterBurnside(const FiniteGroup& g,
                                       const FiniteEndo& f) {
  requireEndoShape(g, f);
  const int n = g.order();
  long total = 0;
  for (int z = 0; z < n; ++z) {
    const int fzInv = g.inverse(f.image[static_cast<std::size_t>(z)]);
    for (int x = 0; x < n; ++x)
      if (g.mul(g.mul(z, x), fzInv) == x) ++total;
  }
  if (total % n != 0)
    throw Error("fixed point total is not divisible by the group order");
  return ReidemeisterCount::of(total / n);
}

std::vector<std::vector<int>> conjugacyClasses(const FiniteGroup& g) {
  return twistedClassesFinite(g, identityEndo(g));
}

namespace {

// Scaffolding for the automorphism search: a greedy minimal generating
// sequence plus, per prefix length, an expression of each subgroup element
// as (earlier element) * (generator), so a candidate image tuple extends to
// the subgroup in one pass.
struct GeneratorScaffold {
  std::vector<int> gens;
  // expression arrays indexed by prefix depth d (using gens[0..d-1]):
  // members[d] lists the subgroup in discovery order; parent/via give the
  // defining product, -1 for the identity.
  std::vector<std::vector<int>> members;
  std::vector<std::vector<int>> parent;
  std::vector<std::vector<int>> via;
};

GeneratorScaffold buildScaffold(const FiniteGroup& g) {
  const int n = g.order();
  GeneratorScaffold s;

  auto close = [&](int depth) {
    std::vector<int> member;
    std::vector<int> parent(static_cast<std::size_t>(n), -2);
    std::vector<int> via(static_cast<std::size_t>(n), -1);
    member.push_back(0);
    parent[0] = -1;
    for (std::size_t head = 0; head < member.size(); ++head) {
      for (int d = 0; d < depth; ++d) {
        int y = g.mul(member[head], s.gens[static_cast<std::size_t>(d)]);
        if (parent[static_cast<std::size_t>(y)] == -2) {
          parent[static_cast<std::size_t>(y)] = member[head];
          via[static_cast<std::size_t>(y)] = d;
          member.push_back(y);
        }
      }
    }
    s.members.push_back(std::move(member));
    s.parent.push_back(std::move(parent));
    s.via.push_back(std::move(via));
  };

  close(0);
  while (static_cast<int>(s.members.back().size()) < n) {
    const auto& coveredParent = s.parent.back();
    int fresh = -1;
    for (int x = 0; x < n; ++x) {
      if (coveredParent[static_cast<std::size_t>(x)] == -2) {
        fresh = x;
        break;
      }
    }
    s.gens.push_back(fresh);
    close(static_cast<int>(s.gens.size()));
  }
  return s;
}

}  // namespace

std::vector<FiniteEndo> automorphismsFinite(const FiniteGroup& g,
                                            int maxOrder) {
  const int n = g.order();
  if (n > maxOrder)
    throw TooLarge("group order " + std::to_string(n) +
                   " exceeds the automorphism search bound " +
                   std::to_string(maxOrder));
  GeneratorScaffold s = buildScaffold(g);
  const int k = static_cast<int>(s.gens.size());

  std::vector<std::vector<int>> candidates(static_cast<std::size_t>(k));
  for (int d = 0; d < k; ++d) {
    const int want = g.elementOrder(s.gens[static_cast<std::size_t>(d)]);
    for (int x = 0; x < n; ++x)
      if (g.elementOrder(x) == want)
        candidates[static_cast<std::size_t>(d)].push_back(x);
  }

  std::vector<FiniteEndo> out;
  std::vector<int> chosen(static_cast<std::size_t>(k), -1);

  // Extends the image tuple prefix to the subgroup it generates and checks
  // that the extension is an injective homomorphism there.
  auto consistent = [&](int depth, std::vector<int>& image) {
    const auto& member = s.members[static_cast<std::size_t>(depth)];
    const auto& parent = s.parent[static_cast<std::size_t>(depth)];
    const auto& via = s.via[static_cast<std::size_t>(depth)];
    image.assign(static_cast<std::size_t>(n), -1);
    image[0] = 0;
    for (int x : member) {
      if (x == 0) continue;
      image[static_cast<std::size_t>(x)] =
          g.mul(image[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])],
                chosen[static_cast<std::size_t>(via[static_cast<std::size_t>(x)])]);
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int a : member) {
      int fa = image[static_cast<std::size_t>(a)];
      if (seen[static_cast<std::size_t>(fa)]) return false;
      seen[static_cast<std::size_t>(fa)] = 1;
    }
    for (int a : member)
      for (int b : member)
        if (image[static_cast<std::size_t>(g.mul(a, b))] !=
            g.mul(image[static_cast<std::size_t>(a)], image[static_cast<std::size_t>(b)]))
          return false;
    return true;
  };

  std::vector<int> image;
  auto search = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      if (consistent(k, image) && static_cast<int>(s.members[static_cast<std::size_t>(k)].size()) == n)
        out.push_back(FiniteEndo{image});
      return;
    }
    for (int cand : candidates[static_cast<std::size_t>(depth)]) {
      chosen[static_cast<std::size_t>(depth)] = cand;
      if (consistent(depth + 1, image)) self(self, depth + 1);
    }
    chosen[static_cast<std::size_t>(depth)] = -1;
  };
  search(search, 0);
  return out;
}

MinReidemeister minReidemeisterFinite(const FiniteGroup& g, int maxOrder) {
  std::vector<FiniteEndo> autos = automorphismsFinite(g, maxOrder);
  MinReidemeister best;
  bool first = true;
  for (const FiniteEndo& f : autos) {
    ReidemeisterCount r = reidemeisterFinite(g, f);
    if (first || r.value < best.count.value) {
      best = MinReidemeister{r, f};
      first = false;
    }
  }
  if (first) throw Error("automorphism enumeration returned nothing");
  return best;
}

ReidemeisterCount reidemeisterAbelian(const IntMatrix& m) {
  if (m.rows() != m.cols())
    throw NotSquare("endomorphism matrix must be square");
  IntMatrix shifted = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    shifted.at(i, i) -= 1;
  SmithResult s = smithNormalForm(shifted);
  mpz_class product = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (s.d.at(i, i) == 0) return ReidemeisterCount::inf();
    product *= s.d.at(i, i);
  }
  return ReidemeisterCount::of(product);
}

AbelianizationCertificate abelianizationCertificate(
    const Presentation& p, const std::vector<Word>& generatorImages) {
  const std::size_t ng = p.generators.size();
  if (generatorImages.size() != ng)
    throw InvalidParams("need exactly one image per generator");
  std::set<GeneratorSymbol> declared(p.generators.begin(), p.generators.end());
  for (const Word& w : generatorImages)
    for (const Letter& l : w.letters())
      if (!declared.count(l.sym))
        throw UndeclaredSymbol("image uses the undeclared symbol " +
                               toString(l.sym));

  IntMatrix endo(ng, ng);
  for (std::size_t i = 0; i < ng; ++i)
    for (std::size_t c = 0; c < ng; ++c)
      endo.at(i, c) = exponentSum(generatorImages[i], p.generators[c]);

  IntMatrix relMatrix = abelianizationMatrix(p);
  SmithResult s = smithNormalForm(relMatrix);
  std::size_t rank = 0;
  for (std::size_t i = 0; i < std::min(s.d.rows(), s.d.cols()); ++i) {
    if (s.d.at(i, i) == 0) break;
    if (s.d.at(i, i) != 1)
      throw NotSupported("abelianization has torsion; only torsion-free "
                         "abelianizations are handled");
    ++rank;
  }

  // Change basis so the relator lattice is spanned by the first `rank`
  // coordinates; the endomorphism must keep that span to descend.
  IntMatrix changed = s.vInv * endo * s.v;
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t c = rank; c < ng; ++c)
      if (changed.at(i, c) != 0)
        throw NotInvariant(
            "generator images do not preserve the relation lattice");

  IntMatrix induced(ng - rank, ng - rank);
  for (std::size_t i = rank; i < ng; ++i)
    for (std::size_t c = rank; c < ng; ++c)
      induced.at(i - rank, c - rank) = changed.at(i, c);

  return AbelianizationCertificate{reidemeisterAbelian(induced), induced};
}

LiftedInequalityReport liftedInequalityCheck(const FiniteGroup& g,
                                             const std::vector<int>& normal,
                                             const FiniteEndo& f) {
  requireEndoShape(g, f);
  const int n = g.order();
  std::set<int> sub(normal.begin(), normal.end());
  if (sub.empty() || !sub.count(0))
    throw InvalidParams("subgroup must contain the identity");
  for (int a : sub) {
    if (a < 0 || a >= n) throw InvalidParams("subgroup element out of range");
    for (int b : sub)
      if (!sub.count(g.mul(a, b)))
        throw InvalidParams("subset is not closed under multiplication");
  }
  for (int x = 0; x < n; ++x)
    for (int a : sub)
      if (!sub.count(g.mul(g.mul(x, a), g.inverse(x))))
        throw NotNormal("subgroup is not normal");
  for (int a : sub)
    if (!sub.count(f.image[static_cast<std::size_t>(a)]))
      throw NotInvariant("subgroup is not invariant under the endomorphism");

  // Quotient on minimal coset representatives.
  std::vector<int> repOf(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    int best = n;
    for (int a : sub) best = std::min(best, g.mul(x, a));
    repOf[static_cast<std::size_t>(x)] = best;
  }
  std::vector<int> reps;
  for (int x = 0; x < n; ++x)
    if (repOf[static_cast<std::size_t>(x)] == x) reps.push_back(x);
  std::map<int, int> indexOf;
  for (std::size_t i = 0; i < reps.size(); ++i)
    indexOf[reps[i]] = static_cast<int>(i);

  std::vector<std::vector<int>> qtable(reps.size(),
                                       std::vector<int>(reps.size()));
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j)
      qtable[i][j] = indexOf.at(repOf[static_cast<std::size_t>(g.mul(reps[i], reps[j]))]);
  FiniteGroup q = FiniteGroup::fromTable(qtable);

  std::vector<int> qimage(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i)
    qimage[i] = indexOf.at(repOf[static_cast<std::size_t>(
        f.image[static_cast<std::size_t>(reps[i])])]);
  FiniteEndo qf = makeFiniteEndo(q, std::move(qimage));

  ReidemeisterCount total = reidemeisterFinite(g, f);
  ReidemeisterCount quotient = reidemeisterFinite(q, qf);
  return LiftedInequalityReport{total, quotient,
                                total.value >= quotient.value};
}

Word FreeEndo::apply(const Word& w) const {
  std::map<GeneratorSymbol, Word> map;
  for (std::size_t i = 0; i < basis.size(); ++i) map[basis[i]] = images[i];
  return applyImages(w, map);
}

FreeEndo makeFreeEndo(std::vector<GeneratorSymbol> basis,
                      std::vector<Word> images) {
  if (basis.size() != images.size())
    throw InvalidParams("need exactly one image per basis symbol");
  std::set<GeneratorSymbol> allowed(basis.begin(), basis.end());
  if (allowed.size() != basis.size())
    throw InvalidParams("basis symbols must be distinct");
  for (const Word& w : images)
    for (const Letter& l : w.letters())
      if (!allowed.count(l.sym))
        throw UndeclaredSymbol("image uses the non-basis symbol " +
                               toString(l.sym));
  return FreeEndo{std::move(basis), std::move(images)};
}

CensusResult boundedCensusFree(const FreeEndo& e, int maxLen, int maxWitness) {
  const int rank = static_cast<int>(e.basis.size());
  if (rank > 3 || maxLen > 8 || maxWitness > 4)
    throw BudgetTooLarge("census budget capped at rank 3, words of length 8, "
                         "witnesses of length 4");
  if (maxLen < 0 || maxWitness < 0)
    throw InvalidParams("census lengths must be non-negative");

  std::vector<Letter> alphabet;
  for (const GeneratorSymbol& s : e.basis) {
    alphabet.push_back(Letter{s, +1});
    alphabet.push_back(Letter{s, -1});
  }

  // All reduced words of length <= maxLen, by breadth-first extension.
  std::vector<Word> universe;
  universe.push_back(Word());
  std::size_t layerStart = 0;
  for (int len = 1; len <= maxLen; ++len) {
    std::size_t layerEnd = universe.size();
    for (std::size_t i = layerStart; i < layerEnd; ++i) {
      for (const Letter& l : alphabet) {
        const Word& base = universe[i];
        if (!base.empty() && base.letters().back() == l.inverse()) continue;
        universe.push_back(base * Word::letter(l.sym, l.sign));
      }
    }
    layerStart = layerEnd;
  }
  std::map<Word, int> index;
  for (std::size_t i = 0; i < universe.size(); ++i)
    index.emplace(universe[i], static_cast<int>(i));

  std::vector<std::pair<Word, Word>> witnesses;  // (z, e(z)^-1)
  for (const Word& z : universe) {
    if (z.empty()) continue;
    if (static_cast<int>(z.size()) > maxWitness) continue;
    witnesses.emplace_back(z, e.apply(z).inverse());
  }

  UnionFind uf(universe.size());
  for (std::size_t i = 0; i < universe.size(); ++i) {
    for (const auto& [z, target] : witnesses) {
      Word moved = z * universe[i] * target;
      auto it = index.find(moved);
      if (it != index.end()) uf.unite(static_cast<int>(i), it->second);
    }
  }
  mpz_class classes = 0;
  for (std::size_t i = 0; i < universe.size(); ++i)
    if (uf.find(static_cast<int>(i)) == static_cast<int>(i)) ++classes;
  return CensusResult{classes, universe.size()};
}

}  // namespace surfbraid
