#ifndef PARAKP_RATIONAL_HPP
#define PARAKP_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace parakp {

using Integer = mpz_class;

static_assert(sizeof(long) >= 8, "64-bit long required");

/// Exact arbitrary-precision rational. Always kept canonical:
/// gcd(|num|, den) = 1 and den > 0.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(static_cast<long>(n)) {}  // NOLINT: implicit by design
  Rational(int n) : v_(n) {}                           // NOLINT
  explicit Rational(const Integer& n) : v_(n) {}

  Rational(const Integer& num, const Integer& den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    v_.canonicalize();
  }
  Rational(long long num, long long den)
      : Rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den))) {}

  /// Parses "n" or "n/d" with integer n, d. Anything else (decimals,
  /// embedded whitespace, empty fields) is rejected.
  static Rational parse(std::string_view text) {
    const std::string s(text);
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(Integer(s));
      const Integer num(s.substr(0, slash));
      const Integer den(s.substr(slash + 1));
      return Rational(num, den);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("cannot parse rational from '" + s + "'");
    }
  }

  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  /// Largest integer <= value (floor division, exact for negatives too).
  Integer floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
  }
  Integer ceil() const {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
  }

  double to_double() const { return v_.get_d(); }

  std::string to_string() const {
    std::ostringstream os;
    os << v_;
    return os.str();
  }

  /// Decimal rendering for CSV export; sig_digits significant digits.
  std::string to_decimal(int sig_digits = 12) const {
    std::ostringstream os;
    os.precision(sig_digits);
    os << to_double();
    return os.str();
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return canonical(a.v_ + b.v_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return canonical(a.v_ - b.v_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return canonical(a.v_ * b.v_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.v_ == 0) throw std::domain_error("rational division by zero");
    return canonical(a.v_ / b.v_);
  }
  Rational operator-() const { return canonical(-v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  struct Canonical {};
  Rational(mpq_class q, Canonical) : v_(std::move(q)) {}

  // mpq_class arithmetic keeps results canonical; skip re-normalizing.
  static Rational canonical(mpq_class q) { return Rational(std::move(q), Canonical{}); }

  mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

inline long long to_long_long(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer out of 64-bit range");
  return static_cast<long long>(z.get_si());
}

}  // namespace parakp

#endif  // PARAKP_RATIONAL_HPP
