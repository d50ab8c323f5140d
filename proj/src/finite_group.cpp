#include "surfbraid/finite_group.hpp"

#include <random>

#include "surfbraid/errors.hpp"

namespace surfbraid {

FiniteGroup FiniteGroup::fromTable(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw InvalidParams("multiplication table is empty");
  FiniteGroup g;
  g.order_ = n;
  g.table_.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw InvalidParams("multiplication table is not square");
    for (int entry : row) {
      if (entry < 0 || entry >= n)
        throw InvalidParams("multiplication table entry out of range");
      g.table_.push_back(entry);
    }
  }

  for (int a = 0; a < n; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a)
      throw InvalidParams("element 0 is not a two-sided identity");
  }
  g.inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
        g.inverse_[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
    if (g.inverse_[static_cast<std::size_t>(a)] < 0)
      throw InvalidParams("element without a two-sided inverse");
  }

  auto associative = [&](int a, int b, int c) {
    return g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c));
  };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (!associative(a, b, c))
            throw InvalidParams("multiplication table is not associative");
  } else {
    std::mt19937 rng(12345u);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 4096; ++t)
      if (!associative(pick(rng), pick(rng), pick(rng)))
        throw InvalidParams("multiplication table is not associative");
  }
  return g;
}

int FiniteGroup::elementOrder(int a) const {
  int k = 1;
  int x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

FiniteGroup toFiniteGroup(const CosetTable& t) {
  if (!t.closed()) throw NotClosed("coset table is not closed");
  const int n = t.cosets();

  // Representative words via a breadth-first spanning tree from coset 0,
  // visiting columns in order so the words are reproducible.
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<Letter> parentLetter(static_cast<std::size_t>(n));
  std::vector<int> bfs;
  bfs.push_back(0);
  parent[0] = 0;
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    int c = bfs[head];
    for (std::size_t k = 0; k < t.generators().size(); ++k) {
      for (int sign : {+1, -1}) {
        Letter l{t.generators()[k], static_cast<std::int8_t>(sign)};
        int next = t.step(c, l);
        if (parent[static_cast<std::size_t>(next)] < 0) {
          parent[static_cast<std::size_t>(next)] = c;
          parentLetter[static_cast<std::size_t>(next)] = l;
          bfs.push_back(next);
        }
      }
    }
  }
  for (int c = 0; c < n; ++c)
    if (parent[static_cast<std::size_t>(c)] < 0)
      throw Error("coset table is not transitive");

  std::vector<Word> rep(static_cast<std::size_t>(n));
  for (int c : bfs) {
    if (c == 0) continue;
    int par = parent[static_cast<std::size_t>(c)];
    rep[static_cast<std::size_t>(c)] =
        rep[static_cast<std::size_t>(par)] *
        Word::letter(parentLetter[static_cast<std::size_t>(c)].sym,
                     parentLetter[static_cast<std::size_t>(c)].sign);
  }

  std::vector<std::vector<int>> table(
      static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          t.trace(a, rep[static_cast<std::size_t>(b)]);
  return FiniteGroup::fromTable(table);
}

FiniteGroup cyclicGroup(int n) {
  if (n <= 0) throw InvalidParams("cyclic group order must be positive");
  std::vector<std::vector<int>> table(
      static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          (a + b) % n;
  return FiniteGroup::fromTable(table);
}

}  // namespace surfbraid
