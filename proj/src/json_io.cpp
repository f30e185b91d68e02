#include "parakp/json_io.hpp"

#include <fstream>
#include <stdexcept>
#include <utility>

namespace parakp {

namespace {

using nlohmann::json;

json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());  // decimal string fallback
}

Integer integer_from_json(const json& node) {
  if (node.is_number_integer()) return Integer(static_cast<long>(node.get<std::int64_t>()));
  if (node.is_string()) return Integer(node.get<std::string>());
  throw std::invalid_argument("expected an integer or decimal string");
}

const json& require(const json& node, const char* key) {
  const auto it = node.find(key);
  if (it == node.end()) {
    throw std::invalid_argument(std::string("missing field '") + key + "'");
  }
  return *it;
}

}  // namespace

json rational_to_json(const Rational& value) {
  return json{{"num", integer_to_json(value.numerator())},
              {"den", integer_to_json(value.denominator())}};
}

Rational rational_from_json(const json& node) {
  if (!node.is_object()) throw std::invalid_argument("rational must be {num, den}");
  return Rational(integer_from_json(require(node, "num")),
                  integer_from_json(require(node, "den")));
}

json instance_to_json(const Instance& instance) {
  json items = json::array();
  for (const Item& item : instance.items) {
    items.push_back(json{{"w", item.weight}, {"a", item.intercept}, {"b", item.slope}});
  }
  return json{{"capacity", instance.capacity}, {"items", std::move(items)}};
}

Instance instance_from_json(const json& node) {
  Instance instance;
  instance.capacity = require(node, "capacity").get<long long>();
  for (const json& entry : require(node, "items")) {
    instance.items.push_back(Item{require(entry, "w").get<long long>(),
                                  require(entry, "a").get<long long>(),
                                  require(entry, "b").get<long long>()});
  }
  return instance;
}

namespace {

json bound_to_json(const Interval& interval, bool lower) {
  if (lower) return interval.has_lower() ? rational_to_json(interval.lower()) : json("-inf");
  return interval.has_upper() ? rational_to_json(interval.upper()) : json("+inf");
}

Interval interval_from_json(const json& node) {
  const std::string kind = require(node, "kind").get<std::string>();
  const json& lo = require(node, "lo");
  const json& hi = require(node, "hi");
  if (kind == "single_point") return Interval::single_point(rational_from_json(lo));
  if (kind == "open") {
    return Interval::open(rational_from_json(lo), rational_from_json(hi));
  }
  if (kind == "unbounded_left") return Interval::unbounded_left(rational_from_json(hi));
  if (kind == "unbounded_right") return Interval::unbounded_right(rational_from_json(lo));
  if (kind == "whole_line") return Interval::whole_line();
  throw std::invalid_argument("unknown interval kind '" + kind + "'");
}

}  // namespace

json schedule_to_json(const SolutionSchedule& schedule) {
  json intervals = json::array();
  for (const ScheduleEntry& entry : schedule.entries) {
    json items = json::array();
    for (const int i : entry.solution.selected) items.push_back(i + 1);  // 1-based on disk
    intervals.push_back(json{{"lo", bound_to_json(entry.interval, true)},
                             {"hi", bound_to_json(entry.interval, false)},
                             {"kind", to_string(entry.interval.kind())},
                             {"items", std::move(items)},
                             {"profit",
                              json{{"alpha", rational_to_json(entry.solution.profit_line.intercept)},
                                   {"beta", rational_to_json(entry.solution.profit_line.slope)}}}});
  }
  return json{{"epsilon", rational_to_json(schedule.epsilon)},
              {"intervals", std::move(intervals)}};
}

SolutionSchedule schedule_from_json(const json& node) {
  SolutionSchedule schedule;
  schedule.epsilon = rational_from_json(require(node, "epsilon"));
  for (const json& entry : require(node, "intervals")) {
    ScheduleEntry out{interval_from_json(entry), KnapsackSolution{}};
    for (const json& index : require(entry, "items")) {
      const long long one_based = index.get<long long>();
      out.solution.selected.push_back(static_cast<int>(one_based) - 1);
    }
    const json& profit = require(entry, "profit");
    out.solution.profit_line = AffineFunction(rational_from_json(require(profit, "alpha")),
                                              rational_from_json(require(profit, "beta")));
    if (out.interval.kind() == Interval::Kind::single_point) {
      schedule.criticals.push_back(out.interval.lower());
    }
    schedule.entries.push_back(std::move(out));
  }
  if (schedule.entries.size() != 2 * schedule.criticals.size() + 1) {
    throw std::invalid_argument("schedule intervals do not alternate as expected");
  }
  return schedule;
}

std::size_t rebind_schedule(SolutionSchedule& schedule, const Instance& instance) {
  std::size_t mismatches = 0;
  for (ScheduleEntry& entry : schedule.entries) {
    for (const int i : entry.solution.selected) {
      if (i < 0 || i >= instance.size()) {
        throw std::invalid_argument("schedule selects item " + std::to_string(i + 1) +
                                    " but the instance has " + std::to_string(instance.size()) +
                                    " items");
      }
    }
    const AffineFunction stored = entry.solution.profit_line;
    entry.solution = KnapsackSolution::from_selection(instance, entry.solution.selected);
    if (!(stored == entry.solution.profit_line)) ++mismatches;
  }
  return mismatches;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json node;
  try {
    in >> node;
  } catch (const json::parse_error& error) {
    throw std::runtime_error(path + ": " + error.what());
  }
  return node;
}

void save_json(const std::string& path, const json& node) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << node.dump(2) << '\n';
  if (!out) throw std::runtime_error("failed writing " + path);
}

Instance load_instance(const std::string& path) {
  try {
    return validate_instance(instance_from_json(load_json(path)));
  } catch (const std::invalid_argument& error) {
    throw std::runtime_error(path + ": " + error.what());
  }
}

}  // namespace parakp
