#include "surfbraid/coset.hpp"

#include <algorithm>
#include <numeric>

#include "surfbraid/errors.hpp"

namespace surfbraid {

CosetTable::CosetTable(std::vector<GeneratorSymbol> generators,
                       std::vector<std::vector<int>> rows, bool closed)
    : gens_(std::move(generators)), rows_(std::move(rows)), closed_(closed) {
  for (std::size_t k = 0; k < gens_.size(); ++k)
    genIndex_.emplace(gens_[k], static_cast<int>(k));
}

int CosetTable::column(const Letter& l) const {
  auto it = genIndex_.find(l.sym);
  if (it == genIndex_.end())
    throw UndeclaredSymbol("letter " + toString(l.sym) +
                           " is not a generator of this table");
  return 2 * it->second + (l.sign > 0 ? 0 : 1);
}

int CosetTable::step(int coset, const Letter& l) const {
  return rows_[static_cast<std::size_t>(coset)]
              [static_cast<std::size_t>(column(l))];
}

int CosetTable::trace(int coset, const Word& w) const {
  int c = coset;
  for (const Letter& l : w.letters()) {
    c = step(c, l);
    if (c < 0) return -1;
  }
  return c;
}

namespace {

// Working state for the enumeration.  Cosets are row indices; merged cosets
// are tracked with a union-find whose representative is always the smallest
// live index, so the final numbering does not depend on merge order.
struct Enumerator {
  std::size_t maxCosets;
  int cols;
  std::vector<std::vector<int>> rows;
  std::vector<int> parent;
  std::size_t live = 0;
  std::size_t totalDefines = 0;
  std::vector<int> queue;  // dead cosets whose rows still need draining

  explicit Enumerator(std::size_t maxCosets, int cols)
      : maxCosets(maxCosets), cols(cols) {}

  static int inverseColumn(int x) { return x ^ 1; }

  int rep(int c) {
    int r = c;
    while (parent[static_cast<std::size_t>(r)] != r)
      r = parent[static_cast<std::size_t>(r)];
    while (parent[static_cast<std::size_t>(c)] != r) {
      int next = parent[static_cast<std::size_t>(c)];
      parent[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  bool isLive(int c) { return rep(c) == c; }

  int& slot(int c, int x) {
    return rows[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)];
  }

  // Allocates a new coset as the image of `from` under column x, or returns
  // -1 when the table is full and the caller should trigger a lookahead.
  int define(int from, int x) {
    if (rows.size() >= maxCosets) return -1;
    int fresh = static_cast<int>(rows.size());
    rows.emplace_back(static_cast<std::size_t>(cols), -1);
    parent.push_back(fresh);
    ++live;
    ++totalDefines;
    slot(from, x) = fresh;
    slot(fresh, inverseColumn(x)) = from;
    return fresh;
  }

  void enqueueMerge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
    --live;
    queue.push_back(b);
  }

  // Drains the merge queue, transplanting every edge of a dead coset onto
  // its representative.  New collisions discovered along the way are queued
  // as further merges.
  void processCoincidences() {
    while (!queue.empty()) {
      int dead = queue.back();
      queue.pop_back();
      for (int x = 0; x < cols; ++x) {
        int target = slot(dead, x);
        if (target < 0) continue;
        slot(dead, x) = -1;
        if (slot(target, inverseColumn(x)) == dead)
          slot(target, inverseColumn(x)) = -1;
        int u = rep(dead);
        int v = rep(target);
        if (slot(u, x) >= 0)
          enqueueMerge(slot(u, x), v);
        else if (slot(v, inverseColumn(x)) >= 0)
          enqueueMerge(slot(v, inverseColumn(x)), u);
        else {
          slot(u, x) = v;
          slot(v, inverseColumn(x)) = u;
        }
      }
    }
  }

  enum class ScanOutcome { Done, NeedSpace };

  // Holt's scan-and-fill of one relator from one coset.  With fill off the
  // scan only records deductions and coincidences, which is what the
  // lookahead pass wants.
  ScanOutcome scan(int c, const std::vector<int>& relatorCols, bool fill) {
    if (relatorCols.empty()) return ScanOutcome::Done;
    int f = c;
    int b = c;
    std::size_t i = 0;
    std::size_t j = relatorCols.size() - 1;
    while (true) {
      while (i <= j && slot(f, relatorCols[i]) >= 0) {
        f = slot(f, relatorCols[i]);
        ++i;
      }
      if (i > j) {
        if (f != b) {
          enqueueMerge(f, b);
          processCoincidences();
        }
        return ScanOutcome::Done;
      }
      while (j >= i && slot(b, inverseColumn(relatorCols[j])) >= 0) {
        b = slot(b, inverseColumn(relatorCols[j]));
        if (j == i) {
          // Backward scan met the forward position: the two ends must agree.
          enqueueMerge(f, b);
          processCoincidences();
          return ScanOutcome::Done;
        }
        --j;
      }
      if (j == i) {
        slot(f, relatorCols[i]) = b;
        slot(b, inverseColumn(relatorCols[i])) = f;
        return ScanOutcome::Done;
      }
      if (!fill) return ScanOutcome::Done;
      if (define(f, relatorCols[i]) < 0) return ScanOutcome::NeedSpace;
    }
  }

  // Deduction-only pass over every live coset.  Returns true if it merged
  // anything, i.e. freed space worth compacting.
  bool lookahead(const std::vector<std::vector<int>>& relatorCols) {
    std::size_t before = live;
    for (int c = 0; c < static_cast<int>(rows.size()); ++c) {
      if (!isLive(c)) continue;
      for (const auto& r : relatorCols) {
        scan(c, r, false);
        if (!isLive(c)) break;
      }
    }
    return live < before;
  }

  // Renumbers live cosets downward, preserving their relative order, and
  // returns the old-to-new index map (-1 for dead cosets).
  std::vector<int> compact() {
    std::vector<int> remap(rows.size(), -1);
    int next = 0;
    for (std::size_t c = 0; c < rows.size(); ++c)
      if (isLive(static_cast<int>(c))) remap[c] = next++;
    for (std::size_t c = 0; c < rows.size(); ++c) {
      if (remap[c] < 0) continue;
      for (int x = 0; x < cols; ++x) {
        int e = slot(static_cast<int>(c), x);
        if (e >= 0) slot(static_cast<int>(c), x) = remap[static_cast<std::size_t>(rep(e))];
      }
      if (remap[c] != static_cast<int>(c))
        rows[static_cast<std::size_t>(remap[c])] = std::move(rows[c]);
    }
    rows.resize(static_cast<std::size_t>(next));
    parent.resize(static_cast<std::size_t>(next));
    std::iota(parent.begin(), parent.end(), 0);
    live = static_cast<std::size_t>(next);
    return remap;
  }
};

}  // namespace

CosetResult toddCoxeter(const Presentation& p, std::size_t maxCosets) {
  if (maxCosets == 0) throw InvalidParams("coset budget must be positive");
  const auto& gens = p.generators;
  Enumerator e(maxCosets, 2 * static_cast<int>(gens.size()));

  std::map<GeneratorSymbol, int> genIndex;
  for (std::size_t k = 0; k < gens.size(); ++k)
    genIndex.emplace(gens[k], static_cast<int>(k));
  auto columnOf = [&](const Letter& l) {
    return 2 * genIndex.at(l.sym) + (l.sign > 0 ? 0 : 1);
  };
  std::vector<std::vector<int>> relatorCols;
  relatorCols.reserve(p.relators.size());
  for (const Word& r : p.relators) {
    std::vector<int> colsOfR;
    colsOfR.reserve(r.size());
    for (const Letter& l : r.letters()) colsOfR.push_back(columnOf(l));
    relatorCols.push_back(std::move(colsOfR));
  }

  e.rows.emplace_back(static_cast<std::size_t>(e.cols), -1);
  e.parent.push_back(0);
  e.live = 1;

  for (int c = 0; c < static_cast<int>(e.rows.size()); ++c) {
    if (!e.isLive(c)) continue;
    bool needSpace = false;
    do {
      needSpace = false;
      for (const auto& r : relatorCols) {
        if (e.scan(c, r, true) == Enumerator::ScanOutcome::NeedSpace) {
          needSpace = true;
          break;
        }
        if (!e.isLive(c)) break;
      }
      if (!e.isLive(c)) break;
      if (!needSpace) {
        for (int x = 0; x < e.cols && !needSpace; ++x) {
          if (e.slot(c, x) < 0 && e.define(c, x) < 0) needSpace = true;
        }
      }
      if (needSpace) {
        // Lookahead can free space indefinitely on some infinite groups, so
        // bound the total work as well as the live table size.
        if (e.totalDefines > 50 * maxCosets) return CosetOverflow{maxCosets};
        if (!e.lookahead(relatorCols)) return CosetOverflow{maxCosets};
        std::vector<int> remap = e.compact();
        int image = remap[static_cast<std::size_t>(c)];
        if (image >= 0) {
          c = image;
          continue;  // rescan this coset under its new number
        }
        // The current coset was merged away.  Everything that shifted below
        // its old position is already scanned, so resume just before the
        // first surviving coset that came after it.
        int resume = static_cast<int>(e.rows.size());
        for (std::size_t d = static_cast<std::size_t>(c) + 1;
             d < remap.size(); ++d) {
          if (remap[d] >= 0) {
            resume = remap[d];
            break;
          }
        }
        c = resume - 1;
        break;
      }
    } while (needSpace);
  }

  e.compact();
  return CosetTable(gens, std::move(e.rows), true);
}

CosetTableStrategy::CosetTableStrategy(CosetTable table)
    : table_(std::move(table)) {
  if (!table_.closed())
    throw StrategyUnavailable(
        "coset table strategy needs a closed enumeration");
}

bool CosetTableStrategy::isIdentity(const Word& w) const {
  return table_.trace(0, w) == 0;
}

}  // namespace surfbraid
