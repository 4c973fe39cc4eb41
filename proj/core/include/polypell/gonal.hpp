#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <polypell/integer.hpp>

namespace polypell {

inline constexpr unsigned long default_theorem_power_bound = 64;
inline constexpr unsigned long default_search_bound = 1'000'000;

// P(ell, r) = ((ell-2) r^2 - (ell-4) r) / 2, the r-th ell-gonal number.
// Triangular numbers for ell = 3, squares for ell = 4, pentagonal for
// ell = 5.
Int polygonal_number(long ell, const Int& r);

// The unique index r >= 1 with P(ell, r) = value, or empty if value is not
// an ell-gonal number.  Decides by an exact integer square root of the
// discriminant (ell-4)^2 + 8 (ell-2) value.
std::optional<Int> polygonal_index(long ell, const Int& value);

// Constants of the substitution X = q r - c, Y = q s - c that turns
// P(ell, r) = m P(ell, s) into the norm form equation
//
//   X^2 - m Y^2 = (1 - m) c^2,   X, Y = -c (mod q),  X, Y > 0.
//
// (q, c) = (2 ell - 4, ell - 4) for odd ell, (ell - 2, (ell-4)/2) for
// ell = 2 (mod 4), (ell/2 - 1, (ell-4)/4) for ell = 0 (mod 4); c is a unit
// mod q in every case.  ell = 4 degenerates and is rejected.
struct gonal_transform {
  long ell;
  Int m;
  Int q;
  Int c;
  Int rhs;  // (1 - m) c^2
};

gonal_transform transform_for(long ell, const Int& m);

// A pair P(ell, r) = m * P(ell, s); big is the r side.
struct gonal_pair {
  long ell;
  Int m;
  Int r;
  Int s;
  Int big;
  Int small;

  friend bool operator==(const gonal_pair&, const gonal_pair&) = default;
};

enum class solve_mode {
  // Compose the base solutions (c, c) and (-c, c) with powers of the
  // fundamental Pell unit and keep the candidates landing on valid indices.
  // Throws no_theorem_solutions when the congruence conditions certify that
  // no power can work.
  theorem,
  // Exhaustive scan over the small index s; the slow reference path.
  search,
};

// First `count` pairs ordered by r.  In theorem mode `bound` caps the unit
// power (default 64); in search mode it caps the scanned index s (default
// 10^6) and the scan may be partitioned over `jobs` workers.  Pass bound = 0
// for the default.
std::vector<gonal_pair> solve_multiple(long ell, const Int& m, std::size_t count,
                                       solve_mode mode, unsigned long bound = 0,
                                       unsigned jobs = 1);

// Every theorem-construction pair with r <= r_max, max_power a safety cap.
std::vector<gonal_pair> theorem_pairs_up_to(long ell, const Int& m, const Int& r_max,
                                            unsigned long max_power = default_theorem_power_bound);

// a * delta(r) = b * delta_prime(s) in triangular numbers, for coprime
// square-free a > b >= 1.  Solved through X^2 - ab Y^2 = a (a - b) with
// X = a (2r + 1), Y = 2s + 1.
struct triangular_ratio_pair {
  Int r;
  Int s;
  Int delta;
  Int delta_prime;

  friend bool operator==(const triangular_ratio_pair&, const triangular_ratio_pair&) = default;
};

std::vector<triangular_ratio_pair> solve_triangular_ratio(
    const Int& a, const Int& b, std::size_t count,
    unsigned long max_power = default_theorem_power_bound);

// Exhaustive scan r = 1..r_max testing whether P(ell, r) / m is ell-gonal.
// Independent of the theorem construction; used as its cross-check.  The
// scan may be partitioned over `jobs` workers; output order is always by r.
std::vector<gonal_pair> enumerate_multiples_oracle(long ell, const Int& m, const Int& r_max,
                                                   unsigned jobs = 1);

}  // namespace polypell
