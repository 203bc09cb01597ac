#ifndef GORB_SCALAR_HH
#define GORB_SCALAR_HH

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <stdexcept>

namespace gorb {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Element of the quartic field Q(sqrt(2), sqrt(-2)), realized as the
// commutative algebra Q[s,t]/(s^2 - 2, t^2 + 2). Coordinates on the basis
// {1, s, t, st}. Only the base-change isometries for the orthogonal
// zero-degree block need the square roots; everything else stays rational.
struct Quartic {
  Rat a, b, c, d; // a + b*s + c*t + d*s*t

  Quartic() = default;
  Quartic(Rat r) : a(std::move(r)) {}
  Quartic(long n) : a(n) {}
  Quartic(Rat a_, Rat b_, Rat c_, Rat d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  static Quartic sqrt2() { return Quartic(Rat(0), Rat(1), Rat(0), Rat(0)); }
  static Quartic sqrt_minus2() { return Quartic(Rat(0), Rat(0), Rat(1), Rat(0)); }

  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  bool is_rational() const { return b == 0 && c == 0 && d == 0; }

  friend Quartic operator+(const Quartic& x, const Quartic& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend Quartic operator-(const Quartic& x, const Quartic& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  friend Quartic operator-(const Quartic& x) { return {-x.a, -x.b, -x.c, -x.d}; }

  // (a + bs + ct + dst)(a' + b's + c't + d'st) with s^2 = 2, t^2 = -2,
  // st*st = -4, s*st = 2t, t*st = -2s.
  friend Quartic operator*(const Quartic& x, const Quartic& y) {
    return {x.a * y.a + 2 * x.b * y.b - 2 * x.c * y.c - 4 * x.d * y.d,
            x.a * y.b + x.b * y.a - 2 * x.c * y.d - 2 * x.d * y.c,
            x.a * y.c + x.c * y.a + 2 * x.b * y.d + 2 * x.d * y.b,
            x.a * y.d + x.d * y.a + x.b * y.c + x.c * y.b};
  }

  Quartic inverse() const;

  friend Quartic operator/(const Quartic& x, const Quartic& y) { return x * y.inverse(); }
  friend bool operator==(const Quartic& x, const Quartic& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator!=(const Quartic& x, const Quartic& y) { return !(x == y); }
};

std::ostream& operator<<(std::ostream& os, const Quartic& q);

} // namespace gorb

#endif
