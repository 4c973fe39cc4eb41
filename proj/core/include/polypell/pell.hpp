#pragma once

#include <optional>
#include <vector>

#include <polypell/integer.hpp>

namespace polypell {

// A raw (x, y) pair standing for x + y*sqrt(m); no norm constraint.
struct xy_pair {
  Int x;
  Int y;

  friend bool operator==(const xy_pair&, const xy_pair&) = default;
};

// N(x, y) = x^2 - m y^2, the norm of x + y*sqrt(m) in Z[sqrt(m)].
Int norm(const xy_pair& p, const Int& m);

// Brahmagupta composition (xx' + myy', xy' + x'y).  Multiplicative in the
// norm, so it also maps a norm-1 unit times a norm-N solution to another
// norm-N solution.
xy_pair compose(const xy_pair& p, const xy_pair& q, const Int& m);

inline xy_pair conjugate(const xy_pair& p) { return {p.x, -p.y}; }
inline xy_pair negated(const xy_pair& p) { return {-p.x, -p.y}; }

// A solution of x^2 - m y^2 = 1 with x > 0.
struct pell_solution {
  Int m;
  Int x;
  Int y;

  xy_pair pair() const { return {x, y}; }
};

// A solution of x^2 - m y^2 = -1.
struct negative_pell_solution {
  Int m;
  Int x;
  Int y;
};

// Periodic continued fraction of sqrt(m): [a0; period repeated].  The period
// is the minimal repeating block and always ends with 2*a0.
struct cf_expansion {
  Int m;
  Int a0;
  std::vector<Int> period;
};

// Continued fraction of sqrt(m) for non-square m > 1.
cf_expansion cf_sqrt(const Int& m);

// The nontrivial solution with minimal x > 0 (and minimal y > 0).  Computed
// from the continued-fraction convergents, never by scanning y.
pell_solution fundamental_solution(const Int& m);

// Composition of two solutions sharing the same m.
pell_solution compose(const pell_solution& p, const pell_solution& q);

// g^n under composition, by repeated squaring; n = 0 gives the identity
// (1, 0).
pell_solution power(const pell_solution& g, unsigned long n);

// Minimal positive solution of x^2 - m y^2 = -1, which exists exactly when
// the continued-fraction period of sqrt(m) has odd length.
std::optional<negative_pell_solution> negative_pell_fundamental(const Int& m);

// x_n / y_n for (x_n, y_n) = g^n.  Satisfies (x_n/y_n)^2 - m = 1/y_n^2
// exactly, so the quotients converge to sqrt(m) quadratically in y_n.
struct rational_approx {
  Int numerator;
  Int denominator;
};

rational_approx sqrt_approx(const Int& m, unsigned long n);

}  // namespace polypell
