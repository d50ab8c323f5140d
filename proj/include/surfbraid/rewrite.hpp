#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "surfbraid/presentation.hpp"
#include "surfbraid/word.hpp"

namespace surfbraid {

using LetterString = std::vector<Letter>;

// length first, then the letter order from word.hpp
bool shortlexLess(const LetterString& a, const LetterString& b);

struct RewriteRule {
  LetterString lhs, rhs;  // lhs > rhs in shortlex

  bool operator==(const RewriteRule&) const = default;
};

// A string rewriting system over a group alphabet (generators and their
// formal inverses).  Free cancellation is part of the rule set, so normal
// forms are freely reduced words.
class RewriteSystem {
 public:
  RewriteSystem() = default;
  RewriteSystem(std::vector<GeneratorSymbol> alphabet,
                std::vector<RewriteRule> rules, bool confluent);

  const std::vector<GeneratorSymbol>& alphabet() const { return alphabet_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  bool confluent() const { return confluent_; }

  // Exhaustive leftmost rewriting; terminates because every rule is
  // shortlex-decreasing.  Unique normal forms need confluent() == true.
  LetterString rewrite(LetterString s) const;

  Word normalForm(const Word& w) const;            // throws NotConfluent
  bool wordsEqual(const Word& a, const Word& b) const;

 private:
  std::vector<GeneratorSymbol> alphabet_;
  std::vector<RewriteRule> rules_;
  bool confluent_ = false;
  std::size_t maxLhs_ = 0;
};

struct KbBudget {
  std::size_t maxRules = 50000;
  std::size_t maxRuleLength = 64;
  std::uint64_t maxSteps = 5000000;
};

enum class KbBudgetDim { Rules, RuleLength, Steps };

std::string toString(KbBudgetDim d);

struct KbExhausted {
  KbBudgetDim dimension;
  std::size_t rules = 0;
  std::uint64_t steps = 0;
};

using KbResult = std::variant<RewriteSystem, KbExhausted>;

// Knuth-Bendix completion under shortlex.  Deterministic: the alphabet and
// relators are sorted first and critical pairs are processed smallest first.
// On success the returned system has verified-confluent rules, so it decides
// the word problem of the presented group.
KbResult kbComplete(std::vector<GeneratorSymbol> alphabet,
                    std::vector<Word> relators, const KbBudget& budget = {});
KbResult kbComplete(const Presentation& p, const KbBudget& budget = {});

class RewriteStrategy final : public WordProblemStrategy {
 public:
  explicit RewriteStrategy(RewriteSystem rs);
  bool isIdentity(const Word& w) const override;
  std::string name() const override { return "confluent rewriting"; }
  const RewriteSystem& system() const { return rs_; }

 private:
  RewriteSystem rs_;
};

}  // namespace surfbraid
