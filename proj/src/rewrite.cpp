#include "surfbraid/rewrite.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "surfbraid/errors.hpp"

namespace surfbraid {

bool shortlexLess(const LetterString& a, const LetterString& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (letterLess(a[k], b[k])) return true;
    if (letterLess(b[k], a[k])) return false;
  }
  return false;
}

namespace {

struct LetterCmp {
  bool operator()(const Letter& a, const Letter& b) const {
    return letterLess(a, b);
  }
};

bool isPrefix(const LetterString& pre, const LetterString& s,
              std::size_t at) {
  if (at + pre.size() > s.size()) return false;
  return std::equal(pre.begin(), pre.end(), s.begin() + at);
}

LetterString splice(const LetterString& s, std::size_t at, std::size_t len,
                    const LetterString& replacement) {
  LetterString out;
  out.reserve(s.size() - len + replacement.size());
  out.insert(out.end(), s.begin(), s.begin() + at);
  out.insert(out.end(), replacement.begin(), replacement.end());
  out.insert(out.end(), s.begin() + at + len, s.end());
  return out;
}

// completion state; pairs are kept normalized (larger side first) in a set
// ordered by shortlex so the smallest unresolved equation is handled next
struct Completion {
  KbBudget budget;
  std::vector<RewriteRule> rules;
  std::vector<bool> active;
  std::size_t activeCount = 0;
  std::size_t maxActiveLhs = 0;
  std::uint64_t steps = 0;
  bool exhausted = false;
  KbBudgetDim tripped = KbBudgetDim::Steps;
  std::map<Letter, std::vector<std::size_t>, LetterCmp> byFirst;

  using Pair = std::pair<LetterString, LetterString>;
  struct PairCmp {
    bool operator()(const Pair& a, const Pair& b) const {
      if (shortlexLess(a.first, b.first)) return true;
      if (shortlexLess(b.first, a.first)) return false;
      return shortlexLess(a.second, b.second);
    }
  };
  std::set<Pair, PairCmp> pending;

  void trip(KbBudgetDim d) {
    exhausted = true;
    tripped = d;
  }

  bool spendStep() {
    if (++steps > budget.maxSteps) {
      trip(KbBudgetDim::Steps);
      return false;
    }
    return true;
  }

  void enqueue(LetterString a, LetterString b) {
    if (a == b) return;
    if (shortlexLess(a, b)) std::swap(a, b);
    pending.emplace(std::move(a), std::move(b));
  }

  LetterString reduce(LetterString s) {
    std::size_t i = 0;
    while (i < s.size() && !exhausted) {
      bool hit = false;
      auto bucket = byFirst.find(s[i]);
      if (bucket != byFirst.end())
        for (std::size_t k : bucket->second) {
          if (!active[k] || !isPrefix(rules[k].lhs, s, i)) continue;
          s = splice(s, i, rules[k].lhs.size(), rules[k].rhs);
          if (!spendStep()) return s;
          i = i >= maxActiveLhs ? i - maxActiveLhs + 1 : 0;
          hit = true;
          break;
        }
      if (!hit) ++i;
    }
    return s;
  }

  void addRule(LetterString lhs, LetterString rhs) {
    if (lhs.size() > budget.maxRuleLength) {
      trip(KbBudgetDim::RuleLength);
      return;
    }
    std::size_t id = rules.size();
    rules.push_back({std::move(lhs), std::move(rhs)});
    active.push_back(true);
    ++activeCount;
    if (activeCount > budget.maxRules) {
      trip(KbBudgetDim::Rules);
      return;
    }
    const RewriteRule& fresh = rules[id];
    byFirst[fresh.lhs.front()].push_back(id);
    maxActiveLhs = std::max(maxActiveLhs, fresh.lhs.size());

    // older rules whose left side the new rule can touch go back to the
    // equation queue; reducible right sides are just renormalized
    for (std::size_t k = 0; k < id && !exhausted; ++k) {
      if (!active[k]) continue;
      bool lhsHit = false;
      for (std::size_t at = 0; at + fresh.lhs.size() <= rules[k].lhs.size();
           ++at)
        if (isPrefix(fresh.lhs, rules[k].lhs, at)) {
          lhsHit = true;
          break;
        }
      if (lhsHit) {
        active[k] = false;
        --activeCount;
        enqueue(rules[k].lhs, rules[k].rhs);
        continue;
      }
      rules[k].rhs = reduce(rules[k].rhs);
    }
    for (std::size_t k = 0; k < rules.size() && !exhausted; ++k) {
      if (!active[k]) continue;
      overlaps(id, k);
      if (k != id) overlaps(k, id);
    }
  }

  // critical pairs from rule a's left side overlapping rule b's
  void overlaps(std::size_t a, std::size_t b) {
    const LetterString &l1 = rules[a].lhs, &r1 = rules[a].rhs;
    const LetterString &l2 = rules[b].lhs, &r2 = rules[b].rhs;
    if (l2.size() <= l1.size())
      for (std::size_t at = 0; at + l2.size() <= l1.size(); ++at) {
        if (a == b && at == 0) continue;  // the rule itself
        if (!isPrefix(l2, l1, at)) continue;
        enqueue(r1, splice(l1, at, l2.size(), r2));
        if (!spendStep()) return;
      }
    std::size_t maxOverlap = std::min(l1.size(), l2.size()) - 1;
    for (std::size_t k = 1; k <= maxOverlap; ++k) {
      bool match = std::equal(l1.end() - k, l1.end(), l2.begin());
      if (!match) continue;
      LetterString left(r1);
      left.insert(left.end(), l2.begin() + k, l2.end());
      LetterString right(l1.begin(), l1.end() - k);
      right.insert(right.end(), r2.begin(), r2.end());
      enqueue(std::move(left), std::move(right));
      if (!spendStep()) return;
    }
  }
};

}  // namespace

RewriteSystem::RewriteSystem(std::vector<GeneratorSymbol> alphabet,
                             std::vector<RewriteRule> rules, bool confluent)
    : alphabet_(std::move(alphabet)),
      rules_(std::move(rules)),
      confluent_(confluent) {
  for (const RewriteRule& r : rules_)
    maxLhs_ = std::max(maxLhs_, r.lhs.size());
}

LetterString RewriteSystem::rewrite(LetterString s) const {
  std::size_t i = 0;
  while (i < s.size()) {
    bool hit = false;
    for (const RewriteRule& r : rules_) {
      if (r.lhs.empty() || !isPrefix(r.lhs, s, i)) continue;
      s = splice(s, i, r.lhs.size(), r.rhs);
      i = i >= maxLhs_ ? i - maxLhs_ + 1 : 0;
      hit = true;
      break;
    }
    if (!hit) ++i;
  }
  return s;
}

Word RewriteSystem::normalForm(const Word& w) const {
  if (!confluent_)
    throw NotConfluent("normal forms need a confluent rewriting system");
  return Word::reduced(rewrite(w.letters()));
}

bool RewriteSystem::wordsEqual(const Word& a, const Word& b) const {
  return normalForm(a) == normalForm(b);
}

std::string toString(KbBudgetDim d) {
  switch (d) {
    case KbBudgetDim::Rules:
      return "rules";
    case KbBudgetDim::RuleLength:
      return "rule_length";
    case KbBudgetDim::Steps:
      return "steps";
  }
  return "?";
}

KbResult kbComplete(std::vector<GeneratorSymbol> alphabet,
                    std::vector<Word> relators, const KbBudget& budget) {
  std::sort(alphabet.begin(), alphabet.end());
  std::sort(relators.begin(), relators.end());

  Completion c;
  c.budget = budget;
  for (const GeneratorSymbol& g : alphabet) {
    Letter pos{g, 1}, neg{g, -1};
    c.addRule({pos, neg}, {});
    c.addRule({neg, pos}, {});
  }
  for (const Word& r : relators) c.enqueue(r.letters(), {});

  while (!c.pending.empty() && !c.exhausted) {
    auto it = c.pending.begin();
    LetterString u = it->first, v = it->second;
    c.pending.erase(it);
    if (!c.spendStep()) break;
    u = c.reduce(std::move(u));
    v = c.reduce(std::move(v));
    if (u == v || c.exhausted) continue;
    if (shortlexLess(u, v)) std::swap(u, v);
    c.addRule(std::move(u), std::move(v));
  }
  if (c.exhausted) return KbExhausted{c.tripped, c.activeCount, c.steps};

  std::vector<RewriteRule> finalRules;
  for (std::size_t k = 0; k < c.rules.size(); ++k)
    if (c.active[k]) finalRules.push_back(c.rules[k]);
  std::sort(finalRules.begin(), finalRules.end(),
            [](const RewriteRule& a, const RewriteRule& b) {
              if (shortlexLess(a.lhs, b.lhs)) return true;
              if (shortlexLess(b.lhs, a.lhs)) return false;
              return shortlexLess(a.rhs, b.rhs);
            });
  RewriteSystem rs(std::move(alphabet), std::move(finalRules), true);

  // completion claims confluence; verify every critical pair resolves before
  // anyone trusts normal forms from this system
  const auto& rules = rs.rules();
  for (std::size_t a = 0; a < rules.size(); ++a)
    for (std::size_t b = 0; b < rules.size(); ++b) {
      const LetterString &l1 = rules[a].lhs, &r1 = rules[a].rhs;
      const LetterString &l2 = rules[b].lhs, &r2 = rules[b].rhs;
      if (l2.size() <= l1.size())
        for (std::size_t at = 0; at + l2.size() <= l1.size(); ++at) {
          if (a == b && at == 0) continue;
          if (!isPrefix(l2, l1, at)) continue;
          if (rs.rewrite(r1) != rs.rewrite(splice(l1, at, l2.size(), r2)))
            throw Error("completion produced a non-confluent system");
        }
      for (std::size_t k = 1; k + 1 <= std::min(l1.size(), l2.size()); ++k) {
        if (k == l2.size()) break;
        if (!std::equal(l1.end() - k, l1.end(), l2.begin())) continue;
        LetterString left(r1);
        left.insert(left.end(), l2.begin() + k, l2.end());
        LetterString right(l1.begin(), l1.end() - k);
        right.insert(right.end(), r2.begin(), r2.end());
        if (rs.rewrite(left) != rs.rewrite(right))
          throw Error("completion produced a non-confluent system");
      }
    }
  return rs;
}

KbResult kbComplete(const Presentation& p, const KbBudget& budget) {
  return kbComplete(p.generators, p.relators, budget);
}

RewriteStrategy::RewriteStrategy(RewriteSystem rs) : rs_(std::move(rs)) {
  if (!rs_.confluent())
    throw NotConfluent("word problem strategy needs a confluent system");
}

bool RewriteStrategy::isIdentity(const Word& w) const {
  return rs_.normalForm(w).empty();
}

}  // namespace surfbraid
