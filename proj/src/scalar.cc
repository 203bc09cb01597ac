#include "scalar.hh"

#include <ostream>

namespace gorb {

namespace {
Quartic conj_s(const Quartic& x) { return {x.a, -x.b, x.c, -x.d}; }
Quartic conj_t(const Quartic& x) { return {x.a, x.b, -x.c, -x.d}; }
} // namespace

Quartic Quartic::inverse() const {
  if (is_zero())
    throw std::domain_error("Quartic: division by zero");
  // Multiply by the three Galois conjugates; the full product is rational.
  Quartic num = conj_s(*this) * conj_t(*this) * conj_s(conj_t(*this));
  Quartic norm = *this * num;
  if (!(norm.b == 0 && norm.c == 0 && norm.d == 0) || norm.a == 0)
    throw std::logic_error("Quartic: norm computation failed");
  Rat inv = Rat(1) / norm.a;
  return {num.a * inv, num.b * inv, num.c * inv, num.d * inv};
}

std::ostream& operator<<(std::ostream& os, const Quartic& q) {
  os << q.a;
  if (q.b != 0)
    os << (q.b > 0 ? "+" : "") << q.b << "*s";
  if (q.c != 0)
    os << (q.c > 0 ? "+" : "") << q.c << "*t";
  if (q.d != 0)
    os << (q.d > 0 ? "+" : "") << q.d << "*st";
  return os;
}

} // namespace gorb
