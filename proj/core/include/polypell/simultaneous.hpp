#pragma once

#include <optional>
#include <vector>

#include <polypell/integer.hpp>

namespace polypell {

inline constexpr unsigned long default_v_bound = 1'000'000;

// The curve Y^2 = X (X - A) (X - B) attached to the system
// P(ell, r) = m P(ell, s) = n P(ell, t), with a = 2 (ell - 2), b = ell - 4,
// A = m n (m - 1) b^2 and B = m n (m - n) b^2.  m > n > 1 forces
// A > B > 0, so the cubic has three distinct roots.  ell = 4 (b = 0)
// degenerates and is rejected.
struct curve_spec {
  long ell;
  Int m;
  Int n;
  Int a;
  Int b;
  Int A;
  Int B;
};

curve_spec curve_params(long ell, const Int& m, const Int& n);

// An integer point (X, Y) on the curve with the divisibility a triple must
// satisfy: m^2 n | X and m^2 n^2 | Y.  When the point decomposes as
// X = m^2 n v^2, X - A = m n u^2, X - B = m n^2 w^2 the witness (u, v, w)
// is recorded (non-negative representatives); the origin (0, 0) carries no
// witness.
struct integer_point {
  Int X;
  Int Y;
  Int u;
  Int v;
  Int w;
  bool has_witness;
};

// Enumerates X = m^2 n v^2 over v = 0..v_bound with v = +-b (mod a) and
// keeps the points whose witness equations have exact square solutions.
// Complete up to the bound; the scan may be partitioned over `jobs` workers
// with output ordered by v.
std::vector<integer_point> constrained_integer_points(const curve_spec& spec, const Int& v_bound,
                                                      unsigned jobs = 1);

struct index_triple {
  Int r;
  Int s;
  Int t;

  friend bool operator==(const index_triple&, const index_triple&) = default;
};

// Searches the sign choices of (u, v, w) for the one making
// r = (u + b) / a, s = (v + b) / a, t = (w + b) / a all integers >= 1.
std::optional<index_triple> recover_rst(const Int& u, const Int& v, const Int& w,
                                        const curve_spec& spec);

// A solved triple P = m P1 = n P2 with P = P(ell, r), P1 = P(ell, s),
// P2 = P(ell, t).
struct simultaneous_triple {
  Int r;
  Int s;
  Int t;
  Int P;
  Int P1;
  Int P2;

  friend bool operator==(const simultaneous_triple&, const simultaneous_triple&) = default;
};

// curve_params -> constrained_integer_points -> recover_rst, each triple
// re-validated against the polygonal formula; deduplicated and ordered by r.
std::vector<simultaneous_triple> solve_simultaneous(long ell, const Int& m, const Int& n,
                                                    const Int& v_bound = default_v_bound,
                                                    unsigned jobs = 1);

// Exhaustive scan r = 1..r_max; the independent cross-check for
// solve_simultaneous.
std::vector<simultaneous_triple> brute_force_simultaneous(long ell, const Int& m, const Int& n,
                                                          const Int& r_max, unsigned jobs = 1);

}  // namespace polypell
