#pragma once

#include <string>
#include <vector>

#include "surfbraid/coset.hpp"

namespace surfbraid {

// A finite group as an explicit multiplication table.  Element 0 is the
// identity.  Construction validates the axioms: identity and inverses are
// always checked in full, associativity exhaustively up to order 64 and on
// a fixed random sample above that.
class FiniteGroup {
 public:
  static FiniteGroup fromTable(const std::vector<std::vector<int>>& table);

  int order() const { return order_; }
  int identity() const { return 0; }
  int mul(int a, int b) const {
    return table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(order_) +
                  static_cast<std::size_t>(b)];
  }
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int elementOrder(int a) const;
  const std::vector<int>& flatTable() const { return table_; }

 private:
  FiniteGroup() = default;
  int order_ = 0;
  std::vector<int> table_;    // row-major, order x order
  std::vector<int> inverse_;  // two-sided inverse per element
};

// Regular action of a closed coset table: multiplication of coset
// representatives, identity coset 0.
FiniteGroup toFiniteGroup(const CosetTable& t);

// Cyclic group of the given order, for fixtures.
FiniteGroup cyclicGroup(int n);

}  // namespace surfbraid
