#include "surfbraid/presentation.hpp"

#include <algorithm>
#include <set>

#include "surfbraid/errors.hpp"

namespace surfbraid {

Presentation Presentation::make(std::vector<GeneratorSymbol> generators,
                                std::vector<Word> relators,
                                std::string provenance) {
  std::set<GeneratorSymbol> declared(generators.begin(), generators.end());
  if (declared.size() != generators.size())
    throw InvalidParams("duplicate generator in presentation");
  Presentation p;
  p.generators = std::move(generators);
  p.provenance = std::move(provenance);
  for (Word& r : relators) {
    Word reduced = cyclicallyReduce(r);
    if (reduced.empty()) continue;
    for (const Letter& l : reduced.letters())
      if (!declared.contains(l.sym))
        throw UndeclaredSymbol("relator uses undeclared generator " +
                               toString(l.sym));
    p.relators.push_back(std::move(reduced));
  }
  return p;
}

bool Presentation::hasGenerator(const GeneratorSymbol& s) const {
  return std::find(generators.begin(), generators.end(), s) !=
         generators.end();
}

GroupHom GroupHom::make(Presentation source, Presentation target,
                        std::map<GeneratorSymbol, Word> images) {
  for (const GeneratorSymbol& g : source.generators)
    if (!images.contains(g))
      throw InvalidParams("homomorphism lacks an image for " + toString(g));
  if (images.size() != source.generators.size())
    throw InvalidParams("homomorphism maps symbols outside the source");
  for (const auto& [g, w] : images)
    for (const Letter& l : w.letters())
      if (!target.hasGenerator(l.sym))
        throw UndeclaredSymbol("image of " + toString(g) +
                               " uses undeclared generator " +
                               toString(l.sym));
  GroupHom h;
  h.source = std::move(source);
  h.target = std::move(target);
  h.images = std::move(images);
  return h;
}

GroupHom composeHoms(const GroupHom& h1, const GroupHom& h2) {
  std::map<GeneratorSymbol, Word> images;
  for (const auto& [g, w] : h1.images) images[g] = h2.apply(w);
  return GroupHom::make(h1.source, h2.target, std::move(images));
}

DirectPowerOfFreeStrategy::DirectPowerOfFreeStrategy(
    int copies, std::map<GeneratorSymbol, Word> eliminate)
    : copies_(copies), eliminate_(std::move(eliminate)) {
  if (copies_ < 0) throw InvalidParams("negative copy count");
  for (const auto& [sym, image] : eliminate_)
    for (const Letter& l : image.letters())
      if (eliminate_.contains(l.sym))
        throw InvalidParams("elimination image for " + toString(sym) +
                            " uses an eliminated generator");
}

bool DirectPowerOfFreeStrategy::isIdentity(const Word& w) const {
  Word expanded = w;
  if (!eliminate_.empty()) {
    std::vector<Letter> out;
    for (const Letter& l : w.letters()) {
      auto it = eliminate_.find(l.sym);
      if (it == eliminate_.end()) {
        out.push_back(l);
        continue;
      }
      const Word& img = l.sign > 0 ? it->second : it->second.inverse();
      out.insert(out.end(), img.letters().begin(), img.letters().end());
    }
    expanded = Word::reduced(std::move(out));
  }
  // bucket letters by factor; each projection must vanish on its own
  std::map<int, std::vector<Letter>> byFactor;
  for (const Letter& l : expanded.letters())
    byFactor[l.sym.copy].push_back(l);
  for (auto& [factor, letters] : byFactor)
    if (!Word::reduced(std::move(letters)).empty()) return false;
  return true;
}

HomCheck checkHom(const GroupHom& h, const WordProblemStrategy& strategy) {
  for (const Word& r : h.source.relators)
    if (!strategy.isIdentity(h.apply(r))) return {false, r};
  return {true, std::nullopt};
}

IntMatrix abelianizationMatrix(const Presentation& p) {
  IntMatrix m(p.relators.size(), p.generators.size());
  std::map<GeneratorSymbol, std::size_t> column;
  for (std::size_t c = 0; c < p.generators.size(); ++c)
    column[p.generators[c]] = c;
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (const Letter& l : p.relators[r].letters())
      m.at(r, column.at(l.sym)) += static_cast<int>(l.sign);
  return m;
}

AbelianInvariants abelianInvariants(const Presentation& p) {
  return abelianInvariantsOfMatrix(abelianizationMatrix(p));
}

}  // namespace surfbraid
