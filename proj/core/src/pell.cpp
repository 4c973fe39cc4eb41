#include <polypell/pell.hpp>

#include <cstddef>
#include <utility>

#include <polypell/errors.hpp>

namespace polypell {

namespace {

void require_pell_modulus(const Int& m) {
  if (m <= 1) {
    throw invalid_input("Pell modulus must be an integer > 1, got " + m.get_str());
  }
  if (is_perfect_square(m)) {
    throw perfect_square_input("m = " + m.get_str() +
                               " is a perfect square; x^2 - m y^2 = 1 has only the trivial solution");
  }
}

// Convergent h/k of [a0; period] one term before the period closes.  Its
// norm h^2 - m k^2 is (-1)^len, so it is the fundamental solution for even
// period length and the minimal norm -1 solution for odd length.
xy_pair period_end_convergent(const cf_expansion& cf) {
  Int h_prev = 1, k_prev = 0;
  Int h = cf.a0, k = 1;
  for (std::size_t i = 0; i + 1 < cf.period.size(); ++i) {
    Int h_next = cf.period[i] * h + h_prev;
    Int k_next = cf.period[i] * k + k_prev;
    h_prev = std::move(h);
    k_prev = std::move(k);
    h = std::move(h_next);
    k = std::move(k_next);
  }
  return {std::move(h), std::move(k)};
}

}  // namespace

Int norm(const xy_pair& p, const Int& m) { return p.x * p.x - m * p.y * p.y; }

xy_pair compose(const xy_pair& p, const xy_pair& q, const Int& m) {
  return {p.x * q.x + m * p.y * q.y, p.x * q.y + q.x * p.y};
}

cf_expansion cf_sqrt(const Int& m) {
  require_pell_modulus(m);
  cf_expansion cf;
  cf.m = m;
  cf.a0 = isqrt(m);

  // Recurrence on the complete quotients (P + sqrt(m)) / Q.  For sqrt(m) the
  // expansion is purely periodic after a0, and the period closes exactly at
  // the first return of Q to 1, where the partial quotient is 2*a0.
  Int P = 0, Q = 1, a = cf.a0;
  do {
    P = a * Q - P;
    Q = (m - P * P) / Q;
    a = (cf.a0 + P) / Q;
    cf.period.push_back(a);
  } while (Q != 1);
  return cf;
}

pell_solution fundamental_solution(const Int& m) {
  const cf_expansion cf = cf_sqrt(m);
  xy_pair conv = period_end_convergent(cf);
  if (cf.period.size() % 2 == 0) {
    return {m, std::move(conv.x), std::move(conv.y)};
  }
  // Odd period: conv solves x^2 - m y^2 = -1 and its square is the
  // fundamental unit of norm 1.
  Int x = conv.x * conv.x + m * conv.y * conv.y;
  Int y = 2 * conv.x * conv.y;
  return {m, std::move(x), std::move(y)};
}

pell_solution compose(const pell_solution& p, const pell_solution& q) {
  if (p.m != q.m) {
    throw mixed_modulus("cannot compose solutions for m = " + p.m.get_str() + " and m = " +
                        q.m.get_str());
  }
  xy_pair r = compose(p.pair(), q.pair(), p.m);
  return {p.m, std::move(r.x), std::move(r.y)};
}

pell_solution power(const pell_solution& g, unsigned long n) {
  pell_solution acc{g.m, 1, 0};
  pell_solution base = g;
  while (n > 0) {
    if (n & 1) acc = compose(acc, base);
    n >>= 1;
    if (n) base = compose(base, base);
  }
  return acc;
}

std::optional<negative_pell_solution> negative_pell_fundamental(const Int& m) {
  const cf_expansion cf = cf_sqrt(m);
  if (cf.period.size() % 2 == 0) return std::nullopt;
  xy_pair conv = period_end_convergent(cf);
  return negative_pell_solution{m, std::move(conv.x), std::move(conv.y)};
}

rational_approx sqrt_approx(const Int& m, unsigned long n) {
  if (n == 0) {
    throw invalid_input("approximation order must be >= 1");
  }
  pell_solution gn = power(fundamental_solution(m), n);
  return {std::move(gn.x), std::move(gn.y)};
}

}  // namespace polypell
