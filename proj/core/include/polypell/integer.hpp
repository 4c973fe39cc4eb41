#pragma once

#include <gmpxx.h>

#include <optional>

namespace polypell {

// Arbitrary-precision integer used throughout the library.
using Int = mpz_class;

// Floor of the square root; n must be non-negative.
Int isqrt(const Int& n);

bool is_perfect_square(const Int& n);

// The exact square root when n is a perfect square, empty otherwise.
std::optional<Int> exact_sqrt(const Int& n);

// Non-negative representative of a mod q, for q > 0.
Int mod_floor(const Int& a, const Int& q);

bool divides(const Int& d, const Int& n);

// Quotient n / d, requiring d | n.
Int exact_div(const Int& n, const Int& d);

// Trial division up to 10^6 followed by a perfect-square test on the
// cofactor; exact for |n| < 10^18.
bool is_squarefree(const Int& n);

}  // namespace polypell
