#pragma once

// Shared fixtures and oracles for the test binaries.  Everything here is
// deliberately independent of the code under test where it matters: the
// window oracle counts twisted classes by brute force, the fixture tables
// come from coset enumeration of standard presentations.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <functional>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "surfbraid/coset.hpp"
#include "surfbraid/finite_group.hpp"
#include "surfbraid/intmat.hpp"
#include "surfbraid/presentation.hpp"
#include "surfbraid/word.hpp"

namespace testsupport {

inline surfbraid::Presentation cyclicPresentation(int n) {
  using namespace surfbraid;
  GeneratorSymbol a = GeneratorSymbol::plain("a");
  Word power;
  for (int i = 0; i < n; ++i) power = power * Word::letter(a, 1);
  return Presentation::make({a}, {power}, "cyclic fixture");
}

inline surfbraid::Presentation parsePresentation(
    const std::vector<std::string>& generators,
    const std::vector<std::string>& relators, const std::string& label) {
  using namespace surfbraid;
  std::vector<GeneratorSymbol> gens;
  for (const std::string& g : generators) gens.push_back(parseSymbol(g));
  std::vector<Word> rels;
  for (const std::string& r : relators) rels.push_back(parseWord(r));
  return Presentation::make(std::move(gens), std::move(rels), label);
}

inline surfbraid::FiniteGroup enumerateGroup(const surfbraid::Presentation& p,
                                             std::size_t maxCosets = 100000) {
  using namespace surfbraid;
  CosetResult r = toddCoxeter(p, maxCosets);
  const auto* t = std::get_if<CosetTable>(&r);
  if (!t) throw std::runtime_error("fixture enumeration overflowed");
  return toFiniteGroup(*t);
}

// The named small groups used as twisted conjugacy oracles.  Orders run
// through 16 plus the order-12 semidirect product the classification needs.
struct NamedGroup {
  std::string name;
  surfbraid::FiniteGroup group;
};

inline std::vector<NamedGroup> oracleGroups() {
  using namespace surfbraid;
  std::vector<NamedGroup> out;
  for (int n : {1, 2, 3, 4, 5, 6})
    out.push_back({"Z" + std::to_string(n), enumerateGroup(cyclicPresentation(n))});
  out.push_back({"Z2xZ2", enumerateGroup(parsePresentation(
                              {"a", "b"}, {"a^2", "b^2", "a^-1 b^-1 a b"},
                              "klein four fixture"))});
  out.push_back({"S3", enumerateGroup(parsePresentation(
                           {"a", "b"}, {"a^2", "b^2", "a b a b a b"},
                           "symmetric group fixture"))});
  out.push_back({"Z8", enumerateGroup(cyclicPresentation(8))});
  out.push_back({"D4", enumerateGroup(parsePresentation(
                           {"a", "b"}, {"a^4", "b^2", "a b a b"},
                           "dihedral 8 fixture"))});
  out.push_back({"Q8", enumerateGroup(parsePresentation(
                           {"a", "b"}, {"a^4", "a^2 b^-2", "b^-1 a b a"},
                           "quaternion fixture"))});
  out.push_back({"Z12", enumerateGroup(cyclicPresentation(12))});
  out.push_back({"Z3:Z4", enumerateGroup(parsePresentation(
                              {"a", "b"}, {"a^3", "b^4", "b a b^-1 a"},
                              "order 12 semidirect fixture"))});
  out.push_back({"D6", enumerateGroup(parsePresentation(
                           {"a", "b"}, {"a^6", "b^2", "a b a b"},
                           "dihedral 12 fixture"))});
  out.push_back({"Z15", enumerateGroup(cyclicPresentation(15))});
  out.push_back({"Z16", enumerateGroup(cyclicPresentation(16))});
  return out;
}

inline surfbraid::FiniteGroup order12Semidirect() {
  return enumerateGroup(parsePresentation(
      {"a", "b"}, {"a^3", "b^4", "b a b^-1 a"}, "order 12 semidirect fixture"));
}

// Smallest normal subgroup containing the seed: closed under products,
// inverses and conjugation by everything.
inline std::vector<int> normalClosure(const surfbraid::FiniteGroup& g,
                                      int seed) {
  std::vector<bool> in(static_cast<std::size_t>(g.order()), false);
  std::vector<int> queue{g.identity(), seed};
  in[g.identity()] = true;
  if (!in[seed]) in[seed] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (int z = 0; z < g.order(); ++z) {
      int conj = g.mul(g.mul(z, x), g.inverse(z));
      if (!in[conj]) {
        in[conj] = true;
        queue.push_back(conj);
      }
    }
    for (std::size_t other = 0; other <= head; ++other) {
      int y = g.mul(x, queue[other]);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  std::vector<int> members;
  for (int x = 0; x < g.order(); ++x)
    if (in[x]) members.push_back(x);
  return members;
}

// Exact membership of d in the integer column span of a k x k matrix given
// by columns, for k <= 2, via Cramer solves and gcd reasoning.  Deliberately
// avoids Smith forms so the oracle shares no code path with the library.
inline bool inColumnSpan(const std::vector<std::vector<long>>& cols,
                         const std::vector<long>& d) {
  if (d.size() == 1) {
    long a = cols[0][0];
    return a == 0 ? d[0] == 0 : d[0] % a == 0;
  }
  const long u1 = cols[0][0], u2 = cols[0][1];
  const long v1 = cols[1][0], v2 = cols[1][1];
  const long det = u1 * v2 - u2 * v1;
  if (det != 0)
    return (d[0] * v2 - d[1] * v1) % det == 0 &&
           (u1 * d[1] - u2 * d[0]) % det == 0;

  // rank <= 1: both columns are multiples of one primitive direction
  auto split = [](long x, long y, long& gx, long& gy) {
    if (x == 0 && y == 0) {
      gx = gy = 0;
      return 0L;
    }
    long g = std::gcd(std::abs(x), std::abs(y));
    gx = x / g;
    gy = y / g;
    return g;
  };
  long ug1, ug2, vg1, vg2;
  long cu = split(u1, u2, ug1, ug2);
  long cv = split(v1, v2, vg1, vg2);
  if (cu == 0 && cv == 0) return d[0] == 0 && d[1] == 0;
  long gx = cu != 0 ? ug1 : vg1;
  long gy = cu != 0 ? ug2 : vg2;
  if (d[0] * gy - d[1] * gx != 0) return false;  // off the line
  long t = gx != 0 ? d[0] / gx : d[1] / gy;
  return t % std::gcd(cu, cv) == 0;
}

// Brute-force count of the twisted classes of x -> Mx meeting a window of
// Z^k: points x, y are identified exactly when x - y lies in the column span
// of I - M.  Every class has a representative of bounded size, so for finite
// index the count equals the index once the window clears that bound, and
// for infinite index it keeps growing with the window.
inline long windowTwistedCount(const surfbraid::IntMatrix& m, long halfWidth) {
  std::size_t k = m.rows();
  long side = 2 * halfWidth + 1;
  long points = 1;
  for (std::size_t i = 0; i < k; ++i) points *= side;

  std::vector<std::vector<long>> cols;
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<long> col(k);
    for (std::size_t r = 0; r < k; ++r) {
      mpz_class entry = (r == c ? 1 : 0) - m.at(r, c);
      col[r] = entry.get_si();
    }
    cols.push_back(col);
  }

  auto pointOf = [&](long idx) {
    std::vector<long> v(k);
    for (std::size_t i = k; i-- > 0;) {
      v[i] = idx % side - halfWidth;
      idx /= side;
    }
    return v;
  };

  std::vector<std::vector<long>> reps;
  for (long idx = 0; idx < points; ++idx) {
    std::vector<long> x = pointOf(idx);
    bool fresh = true;
    for (const auto& r : reps) {
      std::vector<long> diff(k);
      for (std::size_t i = 0; i < k; ++i) diff[i] = x[i] - r[i];
      if (inColumnSpan(cols, diff)) {
        fresh = false;
        break;
      }
    }
    if (fresh) reps.push_back(std::move(x));
  }
  return static_cast<long>(reps.size());
}

struct CommandResult {
  int exitCode = -1;
  std::string output;
};

// Runs a shell command, capturing standard output only; standard error is
// left alone so test logs keep diagnostics visible.
inline CommandResult runCommand(const std::string& command) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"),
                                             pclose);
  if (!pipe) throw std::runtime_error("popen failed for: " + command);
  std::string output;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe.get())) > 0)
    output.append(buffer.data(), got);
  FILE* raw = pipe.release();
  int status = pclose(raw);
  CommandResult r;
  r.output = std::move(output);
  if (WIFEXITED(status)) r.exitCode = WEXITSTATUS(status);
  return r;
}

}  // namespace testsupport
