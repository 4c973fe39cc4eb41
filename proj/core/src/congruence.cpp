#include <polypell/congruence.hpp>

#include <stdexcept>

#include <polypell/errors.hpp>

namespace polypell {

namespace {

void require_modulus(const Int& q) {
  if (q < 2) throw invalid_modulus("modulus must be >= 2, got " + q.get_str());
}

bool congruent_to_minus_one(const Int& v, const Int& q) { return mod_floor(v + 1, q) == 0; }

}  // namespace

congruence_class reduce_mod(const xy_pair& s, const Int& q) {
  require_modulus(q);
  return {q, mod_floor(s.x, q), mod_floor(s.y, q)};
}

congruence_group_info group_info(const Int& m, const Int& q) {
  require_modulus(q);
  const pell_solution g = fundamental_solution(m);
  const Int mr = mod_floor(m, q);
  const xy_pair gen{mod_floor(g.x, q), mod_floor(g.y, q)};

  congruence_group_info info;
  info.m = m;
  info.q = q;

  // Classes compose like solutions; the generator class is invertible (its
  // norm is 1 mod q), so iterating it must return to the identity within the
  // q^2 available classes.
  xy_pair cur = gen;
  const Int limit = q * q;
  for (Int n = 1; n <= limit; ++n) {
    info.classes.push_back({q, cur.x, cur.y});
    if (cur.x == 1 && cur.y == 0) {
      info.order = mpz_get_ui(n.get_mpz_t());
      return info;
    }
    cur = compose(cur, gen, mr);
    cur.x = mod_floor(cur.x, q);
    cur.y = mod_floor(cur.y, q);
  }
  throw std::logic_error("identity class not reached within q^2 steps");
}

bool check_xy_condition(const xy_pair& s, const Int& m, const Int& q) {
  return congruent_to_minus_one(s.x + m * s.y, q) && congruent_to_minus_one(s.x + s.y, q);
}

bool check_x_minus_y_condition(const xy_pair& s, const Int& m, const Int& q) {
  return congruent_to_minus_one(m * s.y - s.x, q) && congruent_to_minus_one(s.x - s.y, q);
}

std::optional<satisfying_power> find_satisfying_power(const Int& m, const Int& q) {
  const congruence_group_info info = group_info(m, q);
  for (unsigned long n = 1; n <= info.order; ++n) {
    const congruence_class& cls = info.classes[n - 1];
    const xy_pair rep{cls.xr, cls.yr};
    if (check_xy_condition(rep, m, q)) return satisfying_power{n, condition_variant::xy};
    if (check_x_minus_y_condition(rep, m, q)) {
      return satisfying_power{n, condition_variant::x_minus_y};
    }
  }
  return std::nullopt;
}

std::vector<congruence_class> xy_candidate_classes(const Int& m, const Int& q) {
  require_modulus(q);
  std::vector<congruence_class> out;
  out.push_back({q, mod_floor(Int(-1), q), 0});
  Int d = gcd(m - 1, q);
  if (mod_floor(d, 2) == 0) {
    Int half = q / 2;
    out.push_back({q, mod_floor(half - 1, q), half});
  }
  return out;
}

}  // namespace polypell
