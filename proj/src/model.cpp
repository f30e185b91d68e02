#include "parakp/model.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace parakp {

Instance validate_instance(Instance instance) {
  if (instance.capacity < 0) throw std::invalid_argument("capacity must be non-negative");
  if (instance.items.empty()) throw std::invalid_argument("instance has no items");
  for (std::size_t i = 0; i < instance.items.size(); ++i) {
    const Item& item = instance.items[i];
    if (item.weight < 1) {
      throw std::invalid_argument("item weight must be at least 1, item " +
                                  std::to_string(i + 1));
    }
    if (item.weight > instance.capacity) {
      throw std::invalid_argument("weight exceeds capacity, item " + std::to_string(i + 1));
    }
  }
  return instance;
}

Interval Interval::whole_line() { return Interval(Kind::whole_line, Rational(), Rational()); }

Interval Interval::single_point(Rational value) {
  Rational copy = value;
  return Interval(Kind::single_point, std::move(value), std::move(copy));
}

Interval Interval::open(Rational lower, Rational upper) {
  if (!(lower < upper)) throw std::invalid_argument("open interval needs lower < upper");
  return Interval(Kind::open, std::move(lower), std::move(upper));
}

Interval Interval::unbounded_left(Rational upper) {
  return Interval(Kind::unbounded_left, Rational(), std::move(upper));
}

Interval Interval::unbounded_right(Rational lower) {
  return Interval(Kind::unbounded_right, std::move(lower), Rational());
}

bool Interval::has_lower() const {
  return kind_ == Kind::single_point || kind_ == Kind::open || kind_ == Kind::unbounded_right;
}

bool Interval::has_upper() const {
  return kind_ == Kind::single_point || kind_ == Kind::open || kind_ == Kind::unbounded_left;
}

const Rational& Interval::lower() const {
  if (!has_lower()) throw std::logic_error("interval has no finite lower bound");
  return lower_;
}

const Rational& Interval::upper() const {
  if (!has_upper()) throw std::logic_error("interval has no finite upper bound");
  return upper_;
}

bool Interval::contains(const Rational& x) const {
  switch (kind_) {
    case Kind::single_point: return x == lower_;
    case Kind::open: return lower_ < x && x < upper_;
    case Kind::unbounded_left: return x < upper_;
    case Kind::unbounded_right: return lower_ < x;
    case Kind::whole_line: return true;
  }
  return false;
}

std::string Interval::to_string() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::single_point: os << "[" << lower_ << ", " << lower_ << "]"; break;
    case Kind::open: os << "(" << lower_ << ", " << upper_ << ")"; break;
    case Kind::unbounded_left: os << "(-inf, " << upper_ << ")"; break;
    case Kind::unbounded_right: os << "(" << lower_ << ", +inf)"; break;
    case Kind::whole_line: os << "(-inf, +inf)"; break;
  }
  return os.str();
}

const char* to_string(Interval::Kind kind) {
  switch (kind) {
    case Interval::Kind::single_point: return "single_point";
    case Interval::Kind::open: return "open";
    case Interval::Kind::unbounded_left: return "unbounded_left";
    case Interval::Kind::unbounded_right: return "unbounded_right";
    case Interval::Kind::whole_line: return "whole_line";
  }
  return "?";
}

PiecewiseLinearFunction::PiecewiseLinearFunction(std::vector<Rational> breakpoints,
                                                 std::vector<AffineFunction> lines,
                                                 bool convex)
    : breakpoints_(std::move(breakpoints)), lines_(std::move(lines)), convex_(convex) {
  if (lines_.empty()) throw std::invalid_argument("piecewise function needs a segment");
  if (lines_.size() != breakpoints_.size() + 1) {
    throw std::invalid_argument("segment count must be breakpoint count + 1");
  }
  for (std::size_t k = 0; k + 1 < breakpoints_.size(); ++k) {
    if (!(breakpoints_[k] < breakpoints_[k + 1])) {
      throw std::invalid_argument("breakpoints must strictly increase");
    }
  }
  if (!continuous()) throw std::invalid_argument("adjacent segments disagree at a breakpoint");
  if (convex_ && !strictly_increasing_slopes()) {
    throw std::invalid_argument("convex flag requires strictly increasing slopes");
  }
}

PiecewiseLinearFunction PiecewiseLinearFunction::constant(Rational value) {
  return PiecewiseLinearFunction({}, {AffineFunction(std::move(value), Rational(0))}, true);
}

std::size_t PiecewiseLinearFunction::locate(const Rational& x) const {
  const auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x);
  return static_cast<std::size_t>(it - breakpoints_.begin());
}

std::optional<Rational> PiecewiseLinearFunction::segment_lower(std::size_t j) const {
  if (j == 0) return std::nullopt;
  return breakpoints_[j - 1];
}

std::optional<Rational> PiecewiseLinearFunction::segment_upper(std::size_t j) const {
  if (j + 1 == lines_.size()) return std::nullopt;
  return breakpoints_[j];
}

bool PiecewiseLinearFunction::continuous() const {
  for (std::size_t k = 0; k < breakpoints_.size(); ++k) {
    if (lines_[k].value(breakpoints_[k]) != lines_[k + 1].value(breakpoints_[k])) return false;
  }
  return true;
}

bool PiecewiseLinearFunction::strictly_increasing_slopes() const {
  for (std::size_t k = 0; k + 1 < lines_.size(); ++k) {
    if (!(lines_[k].slope < lines_[k + 1].slope)) return false;
  }
  return true;
}

KnapsackSolution KnapsackSolution::from_selection(const Instance& instance,
                                                  std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  KnapsackSolution solution;
  long long intercept = 0;
  long long slope = 0;
  for (const int i : indices) {
    const Item& item = instance.items.at(static_cast<std::size_t>(i));
    solution.total_weight += item.weight;
    intercept += item.intercept;
    slope += item.slope;
  }
  solution.selected = std::move(indices);
  solution.profit_line = AffineFunction(Rational(intercept), Rational(slope));
  return solution;
}

bool KnapsackSolution::feasible_for(const Instance& instance) const {
  long long weight = 0;
  int previous = -1;
  for (const int i : selected) {
    if (i <= previous || i >= instance.size()) return false;
    weight += instance.items[static_cast<std::size_t>(i)].weight;
    previous = i;
  }
  return weight == total_weight && weight <= instance.capacity;
}

}  // namespace parakp
