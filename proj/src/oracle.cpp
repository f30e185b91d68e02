#include "parakp/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "parakp/envelope.hpp"

namespace parakp {

namespace {

void check_size(const Instance& instance) {
  if (instance.size() > kMaxOracleItems) {
    throw std::invalid_argument("brute-force oracle limited to " +
                                std::to_string(kMaxOracleItems) + " items, got " +
                                std::to_string(instance.size()));
  }
}

// {a} < {b} on sorted index sets, shorter prefixes first.
bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

template <typename Visit>
void enumerate_feasible(const Instance& instance, const Visit& visit) {
  const int n = instance.size();
  std::vector<int> chosen;
  long long weight = 0;
  long long intercept = 0;
  long long slope = 0;

  auto recurse = [&](auto&& self, int index) -> void {
    if (index == n) {
      visit(chosen, weight, intercept, slope);
      return;
    }
    self(self, index + 1);
    const Item& item = instance.items[static_cast<std::size_t>(index)];
    if (weight + item.weight > instance.capacity) return;  // prune infeasible branch
    weight += item.weight;
    intercept += item.intercept;
    slope += item.slope;
    chosen.push_back(index);
    self(self, index + 1);
    chosen.pop_back();
    weight -= item.weight;
    intercept -= item.intercept;
    slope -= item.slope;
  };
  recurse(recurse, 0);
}

}  // namespace

ExactProfitFunction brute_force_parametric(const Instance& instance) {
  check_size(instance);

  // Only the best intercept per slope can appear on the envelope.
  struct Entry {
    long long intercept;
    std::vector<int> subset;
  };
  std::map<long long, Entry> best_by_slope;
  enumerate_feasible(instance, [&](const std::vector<int>& chosen, long long /*weight*/,
                                   long long intercept, long long slope) {
    auto [it, inserted] = best_by_slope.try_emplace(slope, Entry{intercept, chosen});
    if (inserted) return;
    if (intercept > it->second.intercept ||
        (intercept == it->second.intercept && lex_less(chosen, it->second.subset))) {
      it->second = Entry{intercept, chosen};
    }
  });

  std::vector<AffineFunction> lines;
  std::vector<std::vector<int>> subsets;
  lines.reserve(best_by_slope.size());
  for (auto& [slope, entry] : best_by_slope) {
    lines.emplace_back(Rational(entry.intercept), Rational(slope));
    subsets.push_back(std::move(entry.subset));
  }

  Envelope envelope = upper_envelope(lines);
  std::vector<KnapsackSolution> witnesses;
  witnesses.reserve(envelope.source.size());
  for (const std::size_t idx : envelope.source) {
    witnesses.push_back(KnapsackSolution::from_selection(instance, subsets[idx]));
  }
  return ExactProfitFunction{std::move(envelope.function), std::move(witnesses)};
}

KnapsackSolution brute_force_fixed(const Instance& instance, const Rational& lambda) {
  check_size(instance);

  std::vector<int> best;
  Rational best_profit(0);
  bool first = true;
  enumerate_feasible(instance, [&](const std::vector<int>& chosen, long long /*weight*/,
                                   long long intercept, long long slope) {
    const Rational profit = Rational(intercept) + lambda * Rational(slope);
    if (first || profit > best_profit ||
        (profit == best_profit && lex_less(chosen, best))) {
      best = chosen;
      best_profit = profit;
      first = false;
    }
  });
  return KnapsackSolution::from_selection(instance, std::move(best));
}

}  // namespace parakp
