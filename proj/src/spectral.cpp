#include "drg/spectral.hpp"

#include "drg/error.hpp"

namespace drg {

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(text));
    boost::multiprecision::cpp_int num(text.substr(0, slash)), den(text.substr(slash + 1));
    if (den == 0) throw ArrayError("zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw ArrayError("cannot parse rational '" + text + "'");
  }
}

std::string to_string(const Rational& r) { return r.str(); }

Rational charpoly_eval(const IntersectionArray& a, const Rational& x) {
  return tridiagonal_determinant(a, x);
}

bool has_eigenvalue(const IntersectionArray& a, const Rational& x) { return charpoly_eval(a, x) == 0; }

Rational second_largest_eigenvalue_sq_bipartite_d4(const IntersectionArray& a) {
  if (a.diameter() != 4) throw ArrayError("expected diameter 4, got " + std::to_string(a.diameter()));
  for (int i = 0; i <= 4; ++i)
    if (a.a(i) != 0)
      throw ArrayError(a.str() + " is not bipartite (a_" + std::to_string(i) + " = " + std::to_string(a.a(i)) + ")");
  const long long k = a.valency();
  return Rational((a.c(2) + 1) * k - a.c(2) * (a.c(3) + 1));
}

bool has_eigenvalue_pair_sqrt(const IntersectionArray& a, const Rational& m) {
  const QuadraticElement theta(0, 1, m);
  return tridiagonal_determinant(a, theta).is_zero();
}

}  // namespace drg
