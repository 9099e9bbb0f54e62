#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "drg/intersection_array.hpp"

namespace drg {

/// Exact rational with arbitrary-precision numerator and denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "-p" or "p/q".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

/// Element a + b*theta of Q[theta]/(theta^2 - m).
struct QuadraticElement {
  Rational a, b, m;

  QuadraticElement(Rational a_, Rational b_, Rational m_) : a(std::move(a_)), b(std::move(b_)), m(std::move(m_)) {}
  /// Embeds a rational into the ring with the same modulus.
  QuadraticElement lift(const Rational& r) const { return {r, 0, m}; }
  bool is_zero() const { return a == 0 && b == 0; }

  friend QuadraticElement operator+(const QuadraticElement& x, const QuadraticElement& y) {
    return {x.a + y.a, x.b + y.b, x.m};
  }
  friend QuadraticElement operator-(const QuadraticElement& x, const QuadraticElement& y) {
    return {x.a - y.a, x.b - y.b, x.m};
  }
  friend QuadraticElement operator*(const QuadraticElement& x, const QuadraticElement& y) {
    return {x.a * y.a + x.m * x.b * y.b, x.a * y.b + x.b * y.a, x.m};
  }
};

namespace detail {
inline Rational lift_like(const Rational&, const Rational& r) { return r; }
inline QuadraticElement lift_like(const QuadraticElement& x, const Rational& r) { return x.lift(r); }
}  // namespace detail

/// det(L - xI) for the tridiagonal intersection matrix L (diagonal a_i,
/// superdiagonal b_i, subdiagonal c_{i+1}), by the three-term recurrence
/// f_{i+1} = (a_i - x) f_i - b_{i-1} c_i f_{i-1}.
template <class Ring>
Ring tridiagonal_determinant(const IntersectionArray& arr, const Ring& x) {
  using detail::lift_like;
  Ring prev = lift_like(x, Rational(1));
  Ring cur = lift_like(x, Rational(arr.a(0))) - x;
  for (int i = 1; i <= arr.diameter(); ++i) {
    Ring next = (lift_like(x, Rational(arr.a(i))) - x) * cur -
                lift_like(x, Rational(arr.b(i - 1)) * Rational(arr.c(i))) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Characteristic polynomial of the intersection matrix at x, exactly.
Rational charpoly_eval(const IntersectionArray& a, const Rational& x);

/// Whether x is an eigenvalue of every graph with array a.
bool has_eigenvalue(const IntersectionArray& a, const Rational& x);

/// (c_2 + 1) k - c_2 (c_3 + 1): the square of the second largest eigenvalue
/// of a bipartite diameter-4 array. Throws ArrayError otherwise.
Rational second_largest_eigenvalue_sq_bipartite_d4(const IntersectionArray& a);

/// Whether +-sqrt(m) are both roots, evaluated in Q[theta]/(theta^2 - m).
bool has_eigenvalue_pair_sqrt(const IntersectionArray& a, const Rational& m);

}  // namespace drg
