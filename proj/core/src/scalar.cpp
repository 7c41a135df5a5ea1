#include "wsa/scalar.hpp"

#include <sstream>

namespace wsa {

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  static const char* names[3] = {"a", "c", "e"};
  for (const auto& [m, q] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << q.get_str();
    for (int v = 0; v < 3; ++v) {
      if (m[v] == 0) continue;
      os << "*" << names[v];
      if (m[v] != 1) os << "^" << m[v];
    }
  }
  return os.str();
}

Rational binomial(long a, long r) {
  if (r < 0) return 0;
  Rational res = 1;
  for (long k = 0; k < r; ++k) {
    res *= Rational(a - k);
    res /= Rational(k + 1);
  }
  return res;
}

}  // namespace wsa
