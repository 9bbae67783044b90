#pragma once

// Closed-form masses and class counts of maximal words of genus g, in exact
// rational arithmetic.
//
//   m1(g)        = 2 (1/12)^g (6g-5)! / (g! (3g-3)!)
//   m2(g; r)     = (2/2)(4/12)^f  / r!      (6f+2r-5)! / (f! (3f+r-3)!),        f = (2g+1-r)/4
//   m3(g; s,t)   = (2/3)(9/12)^f  / (s!t!)  (6f+2s+2t-5)! / (f! (3f+s+t-3)!),   f = (g+1-s-t)/3
//   m6(g; r,s,t) = (2/6)(36/12)^f / (r!s!t!) (6f+2r+2s+2t-5)! / (f! (3f+r+s+t-3)!),
//                                                              f = (2g+5-3r-4s-4t)/12
//
// with m3(1; 0,2) = m6(1; 1,0,1) = 1/6 where the general expressions hit a
// negative factorial. The class counts follow by orbit counting:
//   M1 = m1 + m2 + 2 m3 + 2 m6,  M2 = 2 m2 + 4 m6,  M3 = 3 m3 + 3 m6,  M6 = 6 m6.

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace wicks {

using Integer = mpz_class;
using Rational = mpq_class;

// "p/q", or "p" when q = 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Rational mass_m1(int g);
Rational mass_m2(int g, int r);
Rational mass_m3(int g, int s, int t);
// Arguments are the unscaled r, s, t of the (3r; 2s, 2t) notation.
Rational mass_m6(int g, int r, int s, int t);

struct ParamTuple {
  int r = 0;
  int s = 0;
  int t = 0;
  auto operator<=>(const ParamTuple&) const = default;
};

// Tuples with positive mass for automorphisms of order d in {2, 3, 6}:
// (r) for d = 2, (s, t) for d = 3, unscaled (r, s, t) for d = 6.
std::vector<ParamTuple> feasible_params(int g, int order);

struct MassReport {
  int genus = 0;
  Rational m1;
  std::map<int, Rational> m2_by_r;
  std::map<std::pair<int, int>, Rational> m3_by_st;
  std::map<ParamTuple, Rational> m6_by_rst;  // unscaled keys
  Rational m2;
  Rational m3;
  Rational m6;
  Integer M1;
  Integer M2;
  Integer M3;
  Integer M6;
  std::map<int, Integer> exact_order_counts;  // keys 1, 2, 3, 6
};

// Throws std::logic_error if some M_d is not a nonnegative integer.
MassReport report(int g);

// (12g-6) m_d, the number of linear representatives; d in {1, 2, 3, 6}.
Integer pointed_count(int g, int d);

// 2(6g+1)(6g-1)(2g-1) m1(g) == (g+1) m1(g+1)
bool recursion_check(int g);

}  // namespace wicks
