#pragma once

#include <optional>
#include <vector>

#include <polypell/integer.hpp>
#include <polypell/pell.hpp>

namespace polypell {

// Residues of a Pell solution modulo q.
struct congruence_class {
  Int q;
  Int xr;
  Int yr;

  friend bool operator==(const congruence_class&, const congruence_class&) = default;
};

// The finite cyclic group G_{m,q} of Pell solutions mod q, generated by the
// fundamental solution g.  classes[i] is the class of g^(i+1); the last one
// is the identity (1, 0) and order = g_m(q) is minimal with that property.
struct congruence_group_info {
  Int m;
  Int q;
  unsigned long order;
  std::vector<congruence_class> classes;
};

congruence_class reduce_mod(const xy_pair& s, const Int& q);

congruence_group_info group_info(const Int& m, const Int& q);

// x + m y = -1 and x + y = -1 (mod q).
bool check_xy_condition(const xy_pair& s, const Int& m, const Int& q);

// m y - x = -1 and x - y = -1 (mod q).
bool check_x_minus_y_condition(const xy_pair& s, const Int& m, const Int& q);

enum class condition_variant { xy, x_minus_y };

struct satisfying_power {
  unsigned long n;
  condition_variant variant;
};

// Smallest n in [1, g_m(q)] whose class satisfies either condition, the xy
// variant preferred when a single power satisfies both.  An empty result is
// conclusive: the classes repeat with period g_m(q), so no power of the
// fundamental solution can ever satisfy the conditions.
std::optional<satisfying_power> find_satisfying_power(const Int& m, const Int& q);

// The classes a solution of the xy condition can lie in: x = -1, y = 0
// always, plus x = q/2 - 1, y = q/2 when gcd(m - 1, q) is even.
std::vector<congruence_class> xy_candidate_classes(const Int& m, const Int& q);

}  // namespace polypell
