#include "parakp/subdivision.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace parakp {

namespace {

void check_epsilon(const Rational& eps) {
  if (!(Rational(0) < eps && eps < Rational(1))) {
    throw std::invalid_argument("epsilon must lie in (0,1)");
  }
}

}  // namespace

std::optional<long long> scaled_profit_value(const Rational& profit, const Rational& phi_value,
                                             int n, const Rational& eps) {
  check_epsilon(eps);
  if (profit.sign() < 0) return std::nullopt;
  if (phi_value.sign() <= 0) {
    throw std::domain_error("scaled profit undefined where phi is not positive");
  }
  const Rational scaled = (Rational(n) * profit) / (eps * phi_value);
  return to_long_long(scaled.floor());
}

std::optional<long long> scaled_profit(const Item& item, const AffineFunction& phi_segment,
                                       int n, const Rational& eps, const Rational& lambda) {
  return scaled_profit_value(item.profit_at(lambda), phi_segment.value(lambda), n, eps);
}

MonotonePartition monotone_partition(const Item& item, const PiecewiseLinearFunction& phi) {
  const Rational a(item.intercept);
  const Rational b(item.slope);

  MonotonePartition partition;
  std::vector<int> run_sign;
  for (std::size_t j = 0; j < phi.segment_count(); ++j) {
    const AffineFunction& seg = phi.line(j);
    const int s = (b * seg.intercept - a * seg.slope).sign();
    if (partition.runs.empty()) {
      partition.runs.push_back({j, j, RunDirection::nondecreasing});
      run_sign.push_back(s);
      continue;
    }
    int& current = run_sign.back();
    if (s == 0 || current == 0 || s == current) {
      partition.runs.back().last = j;
      if (current == 0) current = s;
    } else {
      partition.runs.push_back({j, j, RunDirection::nondecreasing});
      run_sign.push_back(s);
    }
  }
  if (partition.runs.size() > 3) {
    throw std::logic_error("ratio direction changes more than twice; phi is not convex");
  }
  for (std::size_t k = 0; k < partition.runs.size(); ++k) {
    partition.runs[k].direction =
        run_sign[k] < 0 ? RunDirection::nonincreasing : RunDirection::nondecreasing;
  }
  return partition;
}

PhiZeroRegion phi_zero_region(const PiecewiseLinearFunction& phi) {
  PhiZeroRegion region;
  auto merge = [&region](std::optional<Rational> lo, std::optional<Rational> hi) {
    if (!region.exists) {
      region.exists = true;
      region.lower = std::move(lo);
      region.upper = std::move(hi);
      return;
    }
    if (!lo) {
      region.lower = std::nullopt;
    } else if (region.lower && *lo < *region.lower) {
      region.lower = std::move(lo);
    }
    if (!hi) {
      region.upper = std::nullopt;
    } else if (region.upper && *region.upper < *hi) {
      region.upper = std::move(hi);
    }
  };

  for (std::size_t j = 0; j < phi.segment_count(); ++j) {
    const AffineFunction& seg = phi.line(j);
    const std::optional<Rational> lo = phi.segment_lower(j);
    const std::optional<Rational> hi = phi.segment_upper(j);
    if (seg.is_zero()) {
      merge(lo, hi);
      continue;
    }
    if (seg.slope.sign() == 0) continue;  // constant non-zero segment
    Rational root = -seg.intercept / seg.slope;
    if (lo && root < *lo) continue;
    if (hi && *hi < root) continue;
    std::optional<Rational> point = std::move(root);
    merge(point, point);
  }
  return region;
}

namespace {

// Endpoint value (or limit) of t(x) = n/eps * p(x) / phi_seg(x) at one end
// of a clipped segment range; nullopt encodes +infinity. Within the
// clipped range p >= 0, so an infinite limit can only point up.
std::optional<Rational> scaled_ratio_at(const Item& item, const AffineFunction& seg,
                                        const Rational& scale,
                                        const std::optional<Rational>& x) {
  const Rational b(item.slope);
  if (x) {
    const Rational pv = item.profit_at(*x);
    const Rational fv = seg.value(*x);
    if (fv.sign() > 0) return scale * pv / fv;
    // Segment value vanishes at this endpoint. With p <= phi this forces
    // p(x) = 0, so p and the segment share the root and t is the constant
    // slope ratio. Anything else means the sandwich is broken; fall back
    // to the conservative unbounded range.
    if (pv.sign() == 0 && seg.slope.sign() != 0) return scale * b / seg.slope;
    return std::nullopt;
  }
  // Unbounded endpoint: limit of the ratio at -inf (lower end) or +inf.
  if (seg.slope.sign() != 0) return scale * b / seg.slope;
  if (item.slope == 0) return scale * Rational(item.intercept) / seg.intercept;
  // Linear profit over constant phi: the clipped range keeps p >= 0, so
  // the ratio grows without bound toward the infinite end.
  return std::nullopt;
}

}  // namespace

std::vector<Rational> critical_lambdas(const Instance& instance, const HalfApproxFunction& phi,
                                       const Rational& eps) {
  check_epsilon(eps);
  const PiecewiseLinearFunction& f = phi.phi;
  const int n = instance.size();
  const long long cap = to_long_long((Rational(2 * n) / eps).floor());
  const Rational scale = Rational(n) / eps;
  const Rational eps_num(eps.numerator());
  const Rational big_n = Rational(n) * Rational(eps.denominator());

  std::vector<Rational> criticals(f.breakpoints().begin(), f.breakpoints().end());

  const PhiZeroRegion zero = phi_zero_region(f);
  if (zero.exists) {
    if (zero.lower) criticals.push_back(*zero.lower);
    if (zero.upper) criticals.push_back(*zero.upper);
  }

  for (const Item& item : instance.items) {
    const Rational a(item.intercept);
    const Rational b(item.slope);
    std::optional<Rational> root;
    if (item.slope != 0) {
      root = Rational(-item.intercept, item.slope);
      criticals.push_back(*root);
    }

    // Validates the <= 3 monotone-run structure; enumeration below visits
    // the runs segment by segment.
    const MonotonePartition partition = monotone_partition(item, f);

    for (const MonotoneRun& run : partition.runs) {
      for (std::size_t j = run.first; j <= run.last; ++j) {
        const AffineFunction& seg = f.line(j);
        if (seg.is_zero()) continue;  // inside the phi = 0 region

        // Clip the segment domain to p >= 0.
        std::optional<Rational> lo = f.segment_lower(j);
        std::optional<Rational> hi = f.segment_upper(j);
        if (item.slope == 0) {
          if (item.intercept < 0) continue;
        } else if (item.slope > 0) {
          if (!lo || *lo < *root) lo = root;
        } else {
          if (!hi || *root < *hi) hi = root;
        }
        if (lo && hi && *hi < *lo) continue;

        // t is monotone on the segment, so its endpoint values bound the
        // attained integer levels.
        const std::optional<Rational> t_lo = scaled_ratio_at(item, seg, scale, lo);
        const std::optional<Rational> t_hi = scaled_ratio_at(item, seg, scale, hi);

        long long v_min = 0;
        long long v_max = cap;
        if (t_lo && t_hi) {
          const Rational& small = parakp::min(*t_lo, *t_hi);
          const Rational& large = parakp::max(*t_lo, *t_hi);
          v_min = std::max(v_min, to_long_long(small.ceil()));
          v_max = std::min(v_max, to_long_long(large.floor()));
        } else if (t_lo || t_hi) {
          const Rational& finite = t_lo ? *t_lo : *t_hi;
          v_min = std::max(v_min, to_long_long(finite.ceil()));
        }

        for (long long v = v_min; v <= v_max; ++v) {
          // Solve n/eps * p(x) = v on this segment:
          //   n*eps_den*(a + x b) = v*eps_num*(alpha + x beta).
          const Rational vr = Rational(v) * eps_num;
          const Rational coefficient = big_n * b - vr * seg.slope;
          if (coefficient.sign() == 0) continue;  // ratio constant at level v
          Rational x = (vr * seg.intercept - big_n * a) / coefficient;
          if (lo && x < *lo) continue;
          if (hi && *hi < x) continue;
          criticals.push_back(std::move(x));
        }
      }
    }
  }

  std::sort(criticals.begin(), criticals.end());
  criticals.erase(std::unique(criticals.begin(), criticals.end()), criticals.end());
  return criticals;
}

std::vector<Interval> build_intervals(std::span<const Rational> criticals) {
  for (std::size_t k = 0; k + 1 < criticals.size(); ++k) {
    if (!(criticals[k] < criticals[k + 1])) {
      throw std::invalid_argument("critical values must be sorted and distinct");
    }
  }
  if (criticals.empty()) return {Interval::whole_line()};

  std::vector<Interval> intervals;
  intervals.reserve(2 * criticals.size() + 1);
  intervals.push_back(Interval::unbounded_left(criticals.front()));
  for (std::size_t k = 0; k < criticals.size(); ++k) {
    intervals.push_back(Interval::single_point(criticals[k]));
    if (k + 1 < criticals.size()) {
      intervals.push_back(Interval::open(criticals[k], criticals[k + 1]));
    }
  }
  intervals.push_back(Interval::unbounded_right(criticals.back()));
  return intervals;
}

Rational representative_lambda(const Interval& interval) {
  switch (interval.kind()) {
    case Interval::Kind::single_point: return interval.lower();
    case Interval::Kind::open: return (interval.lower() + interval.upper()) / Rational(2);
    case Interval::Kind::unbounded_left: return interval.upper() - Rational(1);
    case Interval::Kind::unbounded_right: return interval.lower() + Rational(1);
    case Interval::Kind::whole_line: return Rational(0);
  }
  throw std::logic_error("unreachable interval kind");
}

}  // namespace parakp
