#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace surfbraid {

enum class SymbolKind : std::uint8_t { A, Rho, Plain };

// A generator name.  Braid generators come in two indexed shapes: A(i,j) with
// i < j, and rho(strand, sheet).  Everything else is Plain(name, index).  The
// copy tag marks which factor of a direct power a symbol lives in (0 = none).
struct GeneratorSymbol {
  SymbolKind kind = SymbolKind::Plain;
  int i = 0;         // A: first strand index.  Rho: strand.  Plain: index.
  int j = 0;         // A: second strand index. Rho: sheet.  Plain: unused.
  std::string name;  // Plain only
  int copy = 0;

  static GeneratorSymbol a(int i, int j);
  static GeneratorSymbol rho(int strand, int sheet);
  static GeneratorSymbol plain(std::string name, int index = 0);
  GeneratorSymbol withCopy(int c) const;

  bool operator==(const GeneratorSymbol&) const = default;
};

// Total order on symbols, also the term order underlying shortlex rewriting.
// Symbols are grouped by direct-power copy and then by strand so that the
// generators of one factor of a direct product stay contiguous; interleaving
// factors makes completed rewriting systems for product groups blow up.
bool operator<(const GeneratorSymbol& a, const GeneratorSymbol& b);

std::string toString(const GeneratorSymbol& s);
GeneratorSymbol parseSymbol(std::string_view text);

struct Letter {
  GeneratorSymbol sym;
  std::int8_t sign = 1;  // +1 or -1

  Letter inverse() const { return {sym, static_cast<std::int8_t>(-sign)}; }
  bool operator==(const Letter&) const = default;
};

bool letterLess(const Letter& a, const Letter& b);

// A freely reduced word over generator symbols.  The empty word is the
// identity.  All construction paths reduce, so xx^-1 never survives.
class Word {
 public:
  Word() = default;
  static Word reduced(std::vector<Letter> raw);
  static Word letter(const GeneratorSymbol& s, int sign = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  Word inverse() const;
  Word operator*(const Word& rhs) const;
  bool operator==(const Word&) const = default;
  bool operator<(const Word& rhs) const;  // shortlex

 private:
  std::vector<Letter> letters_;
};

// Deletes every letter whose symbol is in `killed`, then freely reduces.
Word substituteKill(const Word& w, const std::set<GeneratorSymbol>& killed);

Word cyclicallyReduce(const Word& w);

Word rotate(const Word& w, std::size_t k);

// Least word among all rotations of w and of w^-1; used to merge relators
// that present the same cyclic word.
Word canonicalCyclic(const Word& w);

// If w is [x,y] = x^-1 y^-1 x y up to rotation and inversion, returns the
// symbol pair with x < y.  Requires w cyclically reduced.
std::optional<std::pair<GeneratorSymbol, GeneratorSymbol>> commutatorShape(
    const Word& w);

// Replaces each letter by the image of its symbol (inverted for negative
// letters) and reduces.  Throws UndeclaredSymbol on a missing image.
Word applyImages(const Word& w, const std::map<GeneratorSymbol, Word>& images);

long exponentSum(const Word& w, const GeneratorSymbol& s);

std::string toString(const Word& w);
// Accepts the rendered form: space-separated letters like "A[1,2]^-1 rho[3,1]",
// with "^k" repetition; "1" or the empty string denote the identity.
Word parseWord(std::string_view text);

}  // namespace surfbraid
