#ifndef PARAKP_MODEL_HPP
#define PARAKP_MODEL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "parakp/rational.hpp"

namespace parakp {

/// One affine function of the parameter: value(x) = intercept + x * slope.
struct AffineFunction {
  Rational intercept;
  Rational slope;

  AffineFunction() = default;
  AffineFunction(Rational intercept_, Rational slope_)
      : intercept(std::move(intercept_)), slope(std::move(slope_)) {}

  Rational value(const Rational& x) const { return intercept + x * slope; }
  bool is_zero() const { return intercept.sign() == 0 && slope.sign() == 0; }

  friend bool operator==(const AffineFunction& a, const AffineFunction& b) {
    return a.intercept == b.intercept && a.slope == b.slope;
  }
};

/// A knapsack item with parametric profit weight -> intercept + x * slope.
struct Item {
  long long weight = 1;
  long long intercept = 0;  // a_i
  long long slope = 0;      // b_i

  AffineFunction profit_line() const {
    return AffineFunction(Rational(intercept), Rational(slope));
  }
  Rational profit_at(const Rational& x) const {
    return Rational(intercept) + x * Rational(slope);
  }
};

/// Problem input: capacity plus an ordered item list. Item indices are
/// 0-based in code and 1-based in files, reports and error messages.
struct Instance {
  long long capacity = 0;
  std::vector<Item> items;

  int size() const { return static_cast<int>(items.size()); }
};

/// Checks the structural preconditions every solver relies on; returns the
/// instance unchanged. Throws std::invalid_argument naming the first
/// offending item (1-based).
Instance validate_instance(Instance instance);

/// An interval of parameter values, in the shapes the solution schedule
/// uses. Open and unbounded intervals exclude their finite endpoints.
class Interval {
 public:
  enum class Kind { single_point, open, unbounded_left, unbounded_right, whole_line };

  static Interval whole_line();
  static Interval single_point(Rational value);
  static Interval open(Rational lower, Rational upper);       // requires lower < upper
  static Interval unbounded_left(Rational upper);             // (-inf, upper)
  static Interval unbounded_right(Rational lower);            // (lower, +inf)

  Kind kind() const { return kind_; }
  bool has_lower() const;
  bool has_upper() const;
  const Rational& lower() const;  // only when has_lower()
  const Rational& upper() const;  // only when has_upper()

  bool contains(const Rational& x) const;
  std::string to_string() const;

 private:
  Interval(Kind kind, Rational lower, Rational upper)
      : kind_(kind), lower_(std::move(lower)), upper_(std::move(upper)) {}

  Kind kind_;
  Rational lower_;
  Rational upper_;
};

const char* to_string(Interval::Kind kind);

/// Continuous piecewise-linear function covering the whole real line:
/// breakpoints b_1 < ... < b_{q-1} and q affine pieces, piece j live on
/// [b_j, b_{j+1}] (unbounded at the ends). Adjacent pieces agree at the
/// shared breakpoint. When flagged convex, slopes strictly increase.
class PiecewiseLinearFunction {
 public:
  PiecewiseLinearFunction(std::vector<Rational> breakpoints,
                          std::vector<AffineFunction> lines, bool convex = false);

  static PiecewiseLinearFunction constant(Rational value);

  Rational value(const Rational& x) const { return lines_[locate(x)].value(x); }

  std::size_t segment_count() const { return lines_.size(); }
  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<AffineFunction>& lines() const { return lines_; }
  const AffineFunction& line(std::size_t j) const { return lines_[j]; }

  /// Index of a segment whose closed domain contains x (at a breakpoint the
  /// left segment wins; both agree there by continuity).
  std::size_t locate(const Rational& x) const;

  /// Closed segment domain; nullopt marks an unbounded side.
  std::optional<Rational> segment_lower(std::size_t j) const;
  std::optional<Rational> segment_upper(std::size_t j) const;

  bool flagged_convex() const { return convex_; }

  // Invariant probes used by tests and the acceptance suite.
  bool continuous() const;
  bool strictly_increasing_slopes() const;

 private:
  std::vector<Rational> breakpoints_;
  std::vector<AffineFunction> lines_;
  bool convex_ = false;
};

/// A feasible item selection together with its cached parametric profit
/// line (sum of the selected items' lines).
struct KnapsackSolution {
  std::vector<int> selected;  // 0-based, strictly increasing
  long long total_weight = 0;
  AffineFunction profit_line;

  static KnapsackSolution empty() { return KnapsackSolution{}; }
  static KnapsackSolution from_selection(const Instance& instance, std::vector<int> indices);

  Rational profit_at(const Rational& x) const { return profit_line.value(x); }
  bool feasible_for(const Instance& instance) const;
};

}  // namespace parakp

#endif  // PARAKP_MODEL_HPP
