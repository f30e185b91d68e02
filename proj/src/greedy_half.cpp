#include "parakp/greedy_half.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "parakp/envelope.hpp"

namespace parakp {

namespace {

// Items with non-negative profit at lambda, sorted by decreasing ratio
// p_i / w_i with ties broken by index.
std::vector<int> ratio_order(const Instance& instance, const Rational& lambda) {
  std::vector<int> order;
  std::vector<Rational> profit(instance.items.size());
  for (int i = 0; i < instance.size(); ++i) {
    profit[static_cast<std::size_t>(i)] = instance.items[static_cast<std::size_t>(i)].profit_at(lambda);
    if (profit[static_cast<std::size_t>(i)].sign() >= 0) order.push_back(i);
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    // p_a / w_a vs p_b / w_b with positive weights: cross-multiply.
    const Rational lhs = profit[static_cast<std::size_t>(a)] *
                         Rational(instance.items[static_cast<std::size_t>(b)].weight);
    const Rational rhs = profit[static_cast<std::size_t>(b)] *
                         Rational(instance.items[static_cast<std::size_t>(a)].weight);
    if (lhs != rhs) return lhs > rhs;
    return a < b;
  });
  return order;
}

// Maximal ratio-order prefix that fits, stopping before the first overflow.
KnapsackSolution greedy_prefix(const Instance& instance, const Rational& lambda) {
  std::vector<int> selected;
  long long remaining = instance.capacity;
  for (const int i : ratio_order(instance, lambda)) {
    const long long w = instance.items[static_cast<std::size_t>(i)].weight;
    if (w > remaining) break;
    remaining -= w;
    selected.push_back(i);
  }
  return KnapsackSolution::from_selection(instance, std::move(selected));
}

}  // namespace

std::vector<OrderingEvent> ordering_events(const Instance& instance) {
  std::vector<OrderingEvent> events;
  const int n = instance.size();
  for (int i = 0; i < n; ++i) {
    const Item& item = instance.items[static_cast<std::size_t>(i)];
    if (item.slope == 0) continue;
    events.push_back({Rational(-item.intercept, item.slope),
                      OrderingEvent::Kind::profit_sign_change, i, -1});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Item& a = instance.items[static_cast<std::size_t>(i)];
      const Item& b = instance.items[static_cast<std::size_t>(j)];
      // (a_i + x b_i)/w_i = (a_j + x b_j)/w_j has a unique solution iff the
      // ratio slopes differ.
      const long long denom = b.weight * a.slope - a.weight * b.slope;
      if (denom == 0) continue;
      const long long numer = a.weight * b.intercept - b.weight * a.intercept;
      events.push_back({Rational(numer, denom), OrderingEvent::Kind::ratio_crossing, i, j});
    }
  }
  std::sort(events.begin(), events.end(), [](const OrderingEvent& a, const OrderingEvent& b) {
    if (a.lambda != b.lambda) return a.lambda < b.lambda;
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.first_item != b.first_item) return a.first_item < b.first_item;
    return a.second_item < b.second_item;
  });
  events.erase(std::unique(events.begin(), events.end(),
                           [](const OrderingEvent& a, const OrderingEvent& b) {
                             return a.lambda == b.lambda;
                           }),
               events.end());
  return events;
}

KnapsackSolution greedy_half_fixed(const Instance& instance, const Rational& lambda) {
  KnapsackSolution prefix = greedy_prefix(instance, lambda);

  // Best single non-negative item; every item fits on its own (w_i <= W).
  std::vector<int> best;
  Rational best_profit(0);
  for (int i = 0; i < instance.size(); ++i) {
    const Rational p = instance.items[static_cast<std::size_t>(i)].profit_at(lambda);
    if (p > best_profit) {
      best_profit = p;
      best = {i};
    }
  }

  if (prefix.profit_at(lambda) >= best_profit) return prefix;
  return KnapsackSolution::from_selection(instance, std::move(best));
}

CandidateLines candidate_lines(const Instance& instance) {
  const std::vector<OrderingEvent> events = ordering_events(instance);

  std::vector<Rational> probes;
  if (events.empty()) {
    probes.push_back(Rational(0));
  } else {
    probes.push_back(events.front().lambda - Rational(1));
    for (std::size_t k = 0; k + 1 < events.size(); ++k) {
      probes.push_back((events[k].lambda + events[k + 1].lambda) / Rational(2));
    }
    probes.push_back(events.back().lambda + Rational(1));
  }

  CandidateLines out;
  std::map<std::pair<Rational, Rational>, std::size_t> seen;
  auto add = [&](const AffineFunction& line, KnapsackSolution witness) {
    const auto key = std::make_pair(line.intercept, line.slope);
    if (!seen.emplace(key, out.lines.size()).second) return;
    out.lines.push_back(line);
    out.witnesses.push_back(std::move(witness));
  };

  for (const Rational& lambda : probes) {
    KnapsackSolution prefix = greedy_prefix(instance, lambda);
    AffineFunction line = prefix.profit_line;
    add(line, std::move(prefix));
  }
  for (int i = 0; i < instance.size(); ++i) {
    add(instance.items[static_cast<std::size_t>(i)].profit_line(),
        KnapsackSolution::from_selection(instance, {i}));
  }
  add(AffineFunction(Rational(0), Rational(0)), KnapsackSolution::empty());
  return out;
}

HalfApproxFunction compute_phi(const Instance& instance) {
  CandidateLines candidates = candidate_lines(instance);
  Envelope envelope = upper_envelope(candidates.lines);
  std::vector<KnapsackSolution> witnesses;
  witnesses.reserve(envelope.source.size());
  for (const std::size_t idx : envelope.source) {
    witnesses.push_back(candidates.witnesses[idx]);
  }
  return HalfApproxFunction{std::move(envelope.function), std::move(witnesses)};
}

}  // namespace parakp
