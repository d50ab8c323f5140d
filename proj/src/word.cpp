#include "surfbraid/word.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <sstream>
#include <tuple>

#include "surfbraid/errors.hpp"

namespace surfbraid {

GeneratorSymbol GeneratorSymbol::a(int i, int j) {
  if (i < 1 || j <= i) throw InvalidParams("A-generator needs 1 <= i < j");
  GeneratorSymbol s;
  s.kind = SymbolKind::A;
  s.i = i;
  s.j = j;
  return s;
}

GeneratorSymbol GeneratorSymbol::rho(int strand, int sheet) {
  if (strand < 1 || sheet < 1)
    throw InvalidParams("rho-generator needs strand >= 1 and sheet >= 1");
  GeneratorSymbol s;
  s.kind = SymbolKind::Rho;
  s.i = strand;
  s.j = sheet;
  return s;
}

GeneratorSymbol GeneratorSymbol::plain(std::string name, int index) {
  if (name.empty()) throw InvalidParams("plain generator needs a name");
  GeneratorSymbol s;
  s.kind = SymbolKind::Plain;
  s.name = std::move(name);
  s.i = index;
  return s;
}

GeneratorSymbol GeneratorSymbol::withCopy(int c) const {
  GeneratorSymbol s = *this;
  s.copy = c;
  return s;
}

namespace {

// Strand block: the factor a symbol belongs to once Artin generators are
// killed.  A(i,j) acts on strand j, rho(r,k) on strand r.
int block(const GeneratorSymbol& s) {
  if (s.copy != 0) return s.copy;
  switch (s.kind) {
    case SymbolKind::A:
      return s.j;
    case SymbolKind::Rho:
      return s.i;
    case SymbolKind::Plain:
      return 0;
  }
  return 0;
}

}  // namespace

bool operator<(const GeneratorSymbol& a, const GeneratorSymbol& b) {
  auto key = [](const GeneratorSymbol& s) {
    return std::tuple<int, int, int, const std::string&, int, int>(
        block(s), static_cast<int>(s.kind), s.copy, s.name, s.i, s.j);
  };
  return key(a) < key(b);
}

std::string toString(const GeneratorSymbol& s) {
  std::ostringstream out;
  switch (s.kind) {
    case SymbolKind::A:
      out << "A[" << s.i << ',' << s.j << ']';
      break;
    case SymbolKind::Rho:
      out << "rho[" << s.i << ',' << s.j << ']';
      break;
    case SymbolKind::Plain:
      out << s.name;
      if (s.i != 0) out << '[' << s.i << ']';
      break;
  }
  if (s.copy != 0) out << '@' << s.copy;
  return out.str();
}

bool letterLess(const Letter& a, const Letter& b) {
  if (a.sym < b.sym) return true;
  if (b.sym < a.sym) return false;
  return a.sign > b.sign;  // generator before its inverse
}

Word Word::reduced(std::vector<Letter> raw) {
  Word w;
  w.letters_.reserve(raw.size());
  for (const Letter& l : raw) {
    if (!w.letters_.empty() && w.letters_.back() == l.inverse())
      w.letters_.pop_back();
    else
      w.letters_.push_back(l);
  }
  return w;
}

Word Word::letter(const GeneratorSymbol& s, int sign) {
  if (sign != 1 && sign != -1) throw InvalidParams("letter sign must be +-1");
  Word w;
  w.letters_.push_back({s, static_cast<std::int8_t>(sign)});
  return w;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(it->inverse());
  return w;
}

Word Word::operator*(const Word& rhs) const {
  Word w = *this;
  for (const Letter& l : rhs.letters_) {
    if (!w.letters_.empty() && w.letters_.back() == l.inverse())
      w.letters_.pop_back();
    else
      w.letters_.push_back(l);
  }
  return w;
}

bool Word::operator<(const Word& rhs) const {
  if (letters_.size() != rhs.letters_.size())
    return letters_.size() < rhs.letters_.size();
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (letterLess(letters_[k], rhs.letters_[k])) return true;
    if (letterLess(rhs.letters_[k], letters_[k])) return false;
  }
  return false;
}

Word substituteKill(const Word& w, const std::set<GeneratorSymbol>& killed) {
  std::vector<Letter> kept;
  kept.reserve(w.size());
  for (const Letter& l : w.letters())
    if (!killed.contains(l.sym)) kept.push_back(l);
  return Word::reduced(std::move(kept));
}

Word cyclicallyReduce(const Word& w) {
  std::vector<Letter> ls = w.letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == ls[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return Word::reduced(std::vector<Letter>(ls.begin() + lo, ls.begin() + hi));
}

Word rotate(const Word& w, std::size_t k) {
  const auto& ls = w.letters();
  if (ls.empty()) return w;
  k %= ls.size();
  std::vector<Letter> out(ls.begin() + k, ls.end());
  out.insert(out.end(), ls.begin(), ls.begin() + k);
  return Word::reduced(std::move(out));
}

Word canonicalCyclic(const Word& w) {
  Word r = cyclicallyReduce(w);
  if (r.empty()) return r;
  Word best = r;
  for (const Word& base : {r, r.inverse()})
    for (std::size_t k = 0; k < base.size(); ++k) {
      Word cand = rotate(base, k);
      if (cand < best) best = cand;
    }
  return best;
}

std::optional<std::pair<GeneratorSymbol, GeneratorSymbol>> commutatorShape(
    const Word& w) {
  if (w.size() != 4) return std::nullopt;
  GeneratorSymbol x = w.letters()[0].sym;
  GeneratorSymbol y;
  bool found = false;
  for (const Letter& l : w.letters())
    if (!(l.sym == x)) {
      if (found && !(l.sym == y)) return std::nullopt;
      y = l.sym;
      found = true;
    }
  if (!found) return std::nullopt;
  if (y < x) std::swap(x, y);
  Word comm = Word::letter(x, -1) * Word::letter(y, -1) * Word::letter(x) *
              Word::letter(y);
  for (const Word& base : {comm, comm.inverse()})
    for (std::size_t k = 0; k < 4; ++k)
      if (rotate(base, k) == w) return std::make_pair(x, y);
  return std::nullopt;
}

Word applyImages(const Word& w,
                 const std::map<GeneratorSymbol, Word>& images) {
  Word out;
  for (const Letter& l : w.letters()) {
    auto it = images.find(l.sym);
    if (it == images.end())
      throw UndeclaredSymbol("no image for generator " + toString(l.sym));
    out = out * (l.sign > 0 ? it->second : it->second.inverse());
  }
  return out;
}

long exponentSum(const Word& w, const GeneratorSymbol& s) {
  long total = 0;
  for (const Letter& l : w.letters())
    if (l.sym == s) total += l.sign;
  return total;
}

std::string toString(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const Letter& l : w.letters()) {
    if (!first) out << ' ';
    first = false;
    out << toString(l.sym);
    if (l.sign < 0) out << "^-1";
  }
  return out.str();
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skipSpace() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool done() {
    skipSpace();
    return pos >= text.size();
  }
  char peek() const { return text[pos]; }

  int integer() {
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    int value = 0;
    auto [p, ec] =
        std::from_chars(text.data() + start, text.data() + pos, value);
    if (ec != std::errc() || p != text.data() + pos || start == pos)
      throw ParseError("expected integer at offset " + std::to_string(start) +
                       " in \"" + std::string(text) + "\"");
    return value;
  }

  std::string ident() {
    std::size_t start = pos;
    auto head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto tail = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    if (pos < text.size() && head(text[pos])) {
      ++pos;
      while (pos < text.size() && tail(text[pos])) ++pos;
    }
    if (start == pos)
      throw ParseError("expected generator name at offset " +
                       std::to_string(start) + " in \"" + std::string(text) +
                       "\"");
    return std::string(text.substr(start, pos - start));
  }

  GeneratorSymbol symbol() {
    std::string name = ident();
    std::vector<int> idx;
    if (pos < text.size() && text[pos] == '[') {
      ++pos;
      idx.push_back(integer());
      while (pos < text.size() && text[pos] == ',') {
        ++pos;
        idx.push_back(integer());
      }
      if (pos >= text.size() || text[pos] != ']')
        throw ParseError("unterminated index list in \"" + std::string(text) +
                         "\"");
      ++pos;
    }
    int copy = 0;
    if (pos < text.size() && text[pos] == '@') {
      ++pos;
      copy = integer();
      if (copy < 1) throw ParseError("copy tag must be >= 1");
    }
    GeneratorSymbol s;
    if (idx.size() == 2) {
      if (name == "A")
        s = GeneratorSymbol::a(idx[0], idx[1]);
      else if (name == "rho")
        s = GeneratorSymbol::rho(idx[0], idx[1]);
      else
        throw ParseError("only A and rho take two indices, got \"" + name +
                         "\"");
    } else if (idx.size() == 1) {
      s = GeneratorSymbol::plain(name, idx[0]);
    } else if (idx.empty()) {
      s = GeneratorSymbol::plain(name);
    } else {
      throw ParseError("too many indices on \"" + name + "\"");
    }
    return copy ? s.withCopy(copy) : s;
  }
};

}  // namespace

GeneratorSymbol parseSymbol(std::string_view text) {
  Cursor c{text};
  if (c.done()) throw ParseError("empty generator symbol");
  GeneratorSymbol s = c.symbol();
  if (!c.done()) throw ParseError("trailing input after symbol in \"" +
                                  std::string(text) + "\"");
  return s;
}

Word parseWord(std::string_view text) {
  Cursor c{text};
  std::vector<Letter> letters;
  bool sawIdentity = false;
  while (!c.done()) {
    if (c.peek() == '1') {
      ++c.pos;
      sawIdentity = true;
      continue;
    }
    GeneratorSymbol s = c.symbol();
    int exp = 1;
    if (c.pos < c.text.size() && c.peek() == '^') {
      ++c.pos;
      exp = c.integer();
      if (exp == 0) throw ParseError("zero exponent in \"" + std::string(text) + "\"");
    }
    Letter l{s, static_cast<std::int8_t>(exp > 0 ? 1 : -1)};
    for (int k = 0; k < std::abs(exp); ++k) letters.push_back(l);
  }
  if (sawIdentity && !letters.empty())
    throw ParseError("\"1\" mixed with letters in \"" + std::string(text) + "\"");
  return Word::reduced(std::move(letters));
}

}  // namespace surfbraid
