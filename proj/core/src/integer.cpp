#include <polypell/integer.hpp>

namespace polypell {

Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::optional<Int> exact_sqrt(const Int& n) {
  if (n < 0) return std::nullopt;
  Int r, rem;
  mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  if (rem != 0) return std::nullopt;
  return r;
}

Int mod_floor(const Int& a, const Int& q) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t());
  return r;
}

bool divides(const Int& d, const Int& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

Int exact_div(const Int& n, const Int& d) {
  Int q;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

bool is_squarefree(const Int& n) {
  Int v = abs(n);
  if (v <= 1) return v == 1;
  if (v % 4 == 0) return false;
  for (Int p = 2; p * p <= v && p <= 1'000'000; ++p) {
    if (v % p == 0) {
      v = exact_div(v, p);
      if (v % p == 0) return false;
    }
  }
  // Any remaining square factor is a prime > 10^6, detectable below only as
  // a full square of the cofactor.
  return !(v > 1 && is_perfect_square(v));
}

}  // namespace polypell
