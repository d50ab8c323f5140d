#pragma once

#include <cstddef>
#include <map>
#include <variant>
#include <vector>

#include "surfbraid/presentation.hpp"
#include "surfbraid/word.hpp"

namespace surfbraid {

// Coset table over the trivial subgroup.  Column 2k is the action of
// generator k, column 2k+1 of its inverse.  Coset 0 is the subgroup itself,
// i.e. the identity in the regular action.
class CosetTable {
 public:
  CosetTable() = default;
  CosetTable(std::vector<GeneratorSymbol> generators,
             std::vector<std::vector<int>> rows, bool closed);

  const std::vector<GeneratorSymbol>& generators() const { return gens_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  bool closed() const { return closed_; }
  int cosets() const { return static_cast<int>(rows_.size()); }

  int column(const Letter& l) const;
  int step(int coset, const Letter& l) const;  // -1 if undefined
  int trace(int coset, const Word& w) const;

 private:
  std::vector<GeneratorSymbol> gens_;
  std::map<GeneratorSymbol, int> genIndex_;
  std::vector<std::vector<int>> rows_;
  bool closed_ = false;
};

struct CosetOverflow {
  std::size_t maxCosets = 0;
};

using CosetResult = std::variant<CosetTable, CosetOverflow>;

// HLT coset enumeration over the trivial subgroup with a lookahead pass when
// the table fills up.  Definition order is fixed, so results are
// reproducible; a returned table is always closed and compacted.
CosetResult toddCoxeter(const Presentation& p, std::size_t maxCosets = 100000);

class CosetTableStrategy final : public WordProblemStrategy {
 public:
  explicit CosetTableStrategy(CosetTable table);
  bool isIdentity(const Word& w) const override;
  std::string name() const override { return "coset table"; }

 private:
  CosetTable table_;
};

}  // namespace surfbraid
