// Arithmetic modes shared by every problem module.
//
// Exact mode uses GMP rationals: comparisons are decidable and no rounding
// ever happens, so user-supplied rational line sets are handled exactly.
// Adaptive mode wraps an MPFR float at a configurable working precision
// (>= 64 bits) together with a snapping epsilon eps_snap = 2^(-p/2) used by
// the geometric predicates; it covers constructions with irrational
// coordinates (regular-polygon vertices and the like).

#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace planelab {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;
using MpFloat = boost::multiprecision::mpfr_float;  // variable precision

// Default tolerance for double-based modules (overridable per call).
inline constexpr double kDefaultEps = 1e-9;

inline int bits_to_digits10(unsigned bits) {
  return static_cast<int>(std::ceil(bits * 0.30103)) + 2;
}

// Working precision for adaptive arithmetic, thread-local. Entering a scope
// guard switches the MPFR default precision; eps_snap() follows it.
class AdaptivePrecision {
 public:
  explicit AdaptivePrecision(unsigned bits) : prev_bits_(current_bits()) {
    if (bits < 64) throw std::invalid_argument("adaptive precision must be >= 64 bits");
    set(bits);
  }
  ~AdaptivePrecision() { set(prev_bits_); }
  AdaptivePrecision(const AdaptivePrecision&) = delete;
  AdaptivePrecision& operator=(const AdaptivePrecision&) = delete;

  static unsigned current_bits() { return bits_; }

  // Snapping epsilon 2^(-p/2) at working precision p.
  static MpFloat eps_snap() {
    MpFloat e = 1;
    return ldexp(e, -static_cast<int>(bits_ / 2));
  }

 private:
  static void set(unsigned bits) {
    bits_ = bits;
    MpFloat::default_precision(bits_to_digits10(bits));
  }
  static thread_local unsigned bits_;
  unsigned prev_bits_;
};

// Adaptive high-precision real. Plain value semantics; raw comparisons are
// exact comparisons of the underlying MPFR value. Snapped zero tests live in
// the predicates, not in operator==, so ordering stays transitive.
struct AdaptiveReal {
  MpFloat v;

  AdaptiveReal() : v(0) {}
  AdaptiveReal(int x) : v(x) {}                 // NOLINT(google-explicit-constructor)
  AdaptiveReal(long x) : v(x) {}                // NOLINT
  AdaptiveReal(double x) : v(x) {}              // NOLINT
  AdaptiveReal(MpFloat x) : v(std::move(x)) {}  // NOLINT
  explicit AdaptiveReal(const std::string& s) : v(s) {}

  double to_double() const { return v.convert_to<double>(); }

  AdaptiveReal operator-() const { return AdaptiveReal(MpFloat(-v)); }
  AdaptiveReal& operator+=(const AdaptiveReal& o) { v += o.v; return *this; }
  AdaptiveReal& operator-=(const AdaptiveReal& o) { v -= o.v; return *this; }
  AdaptiveReal& operator*=(const AdaptiveReal& o) { v *= o.v; return *this; }
  AdaptiveReal& operator/=(const AdaptiveReal& o) { v /= o.v; return *this; }

  friend AdaptiveReal operator+(AdaptiveReal a, const AdaptiveReal& b) { return a += b; }
  friend AdaptiveReal operator-(AdaptiveReal a, const AdaptiveReal& b) { return a -= b; }
  friend AdaptiveReal operator*(AdaptiveReal a, const AdaptiveReal& b) { return a *= b; }
  friend AdaptiveReal operator/(AdaptiveReal a, const AdaptiveReal& b) { return a /= b; }
  friend bool operator==(const AdaptiveReal& a, const AdaptiveReal& b) { return a.v == b.v; }
  friend bool operator!=(const AdaptiveReal& a, const AdaptiveReal& b) { return a.v != b.v; }
  friend bool operator<(const AdaptiveReal& a, const AdaptiveReal& b) { return a.v < b.v; }
  friend bool operator>(const AdaptiveReal& a, const AdaptiveReal& b) { return a.v > b.v; }
  friend bool operator<=(const AdaptiveReal& a, const AdaptiveReal& b) { return a.v <= b.v; }
  friend bool operator>=(const AdaptiveReal& a, const AdaptiveReal& b) { return a.v >= b.v; }
};

inline AdaptiveReal abs(const AdaptiveReal& a) { return AdaptiveReal(MpFloat(abs(a.v))); }
inline AdaptiveReal sqrt(const AdaptiveReal& a) { return AdaptiveReal(MpFloat(sqrt(a.v))); }

// Scalar traits: how each arithmetic mode converts, compares against zero in
// geometric predicates, and reports itself.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<double> {
  static constexpr bool exact = false;
  static double from_double(double x) { return x; }
  static double to_double(double x) { return x; }
  static int sign(double x) { return (x > 0) - (x < 0); }
  // Snapped sign with the module-default tolerance.
  static int geom_sign(double x) { return std::abs(x) < kDefaultEps ? 0 : sign(x); }
  static double snap_eps() { return kDefaultEps; }
  static double abs_val(double x) { return std::abs(x); }
};

template <>
struct ScalarOps<Rational> {
  static constexpr bool exact = true;
  static Rational from_double(double x) { return Rational(x); }
  static double to_double(const Rational& x) { return x.convert_to<double>(); }
  static int sign(const Rational& x) { return x.sign(); }
  static int geom_sign(const Rational& x) { return x.sign(); }
  static Rational snap_eps() { return Rational(0); }
  static Rational abs_val(const Rational& x) { return abs(x); }
};

template <>
struct ScalarOps<AdaptiveReal> {
  static constexpr bool exact = false;
  static AdaptiveReal from_double(double x) { return AdaptiveReal(x); }
  static double to_double(const AdaptiveReal& x) { return x.to_double(); }
  static int sign(const AdaptiveReal& x) { return x.v.sign(); }
  static int geom_sign(const AdaptiveReal& x) {
    if (abs(x.v) < AdaptivePrecision::eps_snap()) return 0;
    return x.v.sign();
  }
  static AdaptiveReal snap_eps() { return AdaptiveReal(AdaptivePrecision::eps_snap()); }
  static AdaptiveReal abs_val(const AdaptiveReal& x) { return abs(x); }
};

// Parse "p/q", a decimal string, or a plain number into a rational, exactly.
Rational parse_rational(const std::string& s);
std::string rational_to_string(const Rational& q);

}  // namespace planelab
