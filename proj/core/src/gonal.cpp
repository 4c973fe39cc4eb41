#include <polypell/gonal.hpp>

#include <iterator>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include <polypell/congruence.hpp>
#include <polypell/errors.hpp>
#include <polypell/pell.hpp>

#include "parallel.hpp"

namespace polypell {

namespace {

constexpr std::size_t unbounded = std::numeric_limits<std::size_t>::max();

void require_ell(long ell) {
  if (ell < 3) {
    throw invalid_input("polygon order must be >= 3, got " + std::to_string(ell));
  }
}

void require_nondegenerate_ell(long ell) {
  require_ell(ell);
  if (ell == 4) {
    throw unsupported_ell("ell = 4 reduces P = m P' to r^2 = m s^2, which is a different problem");
  }
}

void require_multiplier(const Int& m) {
  if (m <= 1) {
    throw invalid_input("multiplier must be an integer > 1, got " + m.get_str());
  }
  if (is_perfect_square(m)) {
    throw perfect_square_input("multiplier m = " + m.get_str() + " must not be a perfect square");
  }
}

unsigned long scan_bound_as_ulong(const Int& bound) {
  if (!bound.fits_ulong_p()) {
    throw invalid_input("scan bound too large: " + bound.get_str());
  }
  return mpz_get_ui(bound.get_mpz_t());
}

// P(ell, r+1) - P(ell, r) = (ell - 2) r + 1.
Int polygonal_step(long ell, unsigned long r) { return Int(ell - 2) * r + 1; }

// Walks the candidates +-(base * g^k) for both base solutions and
// k = 0..max_power.  Both streams are strictly increasing in |X| from k = 1
// on, so the walk stops as soon as every stream exceeds the cutoff reported
// by `wanted_max_x`.
template <typename Accept, typename Cutoff>
void walk_unit_streams(const pell_solution& g, const xy_pair& base_sum, const xy_pair& base_diff,
                       unsigned long max_power, Accept&& accept, Cutoff&& wanted_max_x) {
  const xy_pair unit = g.pair();
  xy_pair pk{1, 0};
  for (unsigned long k = 0; k <= max_power; ++k) {
    if (k > 0) pk = compose(pk, unit, g.m);
    Int min_stream_x(-1);
    for (const xy_pair* base : {&base_sum, &base_diff}) {
      const xy_pair cand = compose(*base, pk, g.m);
      accept(cand.x, cand.y);
      accept(-cand.x, -cand.y);
      Int ax = abs(cand.x);
      if (min_stream_x < 0 || ax < min_stream_x) min_stream_x = std::move(ax);
    }
    if (k >= 1) {
      if (auto cut = wanted_max_x(); cut && min_stream_x > *cut) break;
    }
  }
}

struct theorem_limits {
  std::size_t count = unbounded;
  std::optional<Int> r_max;
  unsigned long max_power = default_theorem_power_bound;
};

gonal_pair make_checked_pair(long ell, const Int& m, Int r, Int s) {
  Int big = polygonal_number(ell, r);
  Int small = polygonal_number(ell, s);
  if (big != m * small) {
    throw std::logic_error("gonal pair failed re-validation against the polygonal formula");
  }
  return {ell, m, std::move(r), std::move(s), std::move(big), std::move(small)};
}

// The unit construction: compose the base solutions (c, c) and (-c, c) of
// X^2 - m Y^2 = (1-m) c^2 with powers of the fundamental Pell solution and
// keep candidates with X, Y > 0, X = Y = -c (mod q).  Those map back to
// indices r = (X + c)/q, s = (Y + c)/q.
std::vector<gonal_pair> theorem_enumerate(long ell, const Int& m, const theorem_limits& lim) {
  const gonal_transform tr = transform_for(ell, m);
  if (!find_satisfying_power(m, tr.q)) {
    throw no_theorem_solutions(ell, m, tr.q, group_info(m, tr.q).order);
  }

  const pell_solution g = fundamental_solution(m);
  const Int residue = mod_floor(-tr.c, tr.q);

  std::map<Int, gonal_pair> found;  // keyed by r; X determines the pair

  auto accept = [&](const Int& X, const Int& Y) {
    if (X <= 0 || Y <= 0) return;
    if (mod_floor(X, tr.q) != residue || mod_floor(Y, tr.q) != residue) return;
    Int r = exact_div(X + tr.c, tr.q);
    Int s = exact_div(Y + tr.c, tr.q);
    if (r < 1 || s < 1) return;
    if (lim.r_max && r > *lim.r_max) return;
    if (!found.contains(r)) {
      Int key = r;  // keep the key intact while r moves into the pair
      found.emplace(std::move(key), make_checked_pair(ell, m, std::move(r), std::move(s)));
    }
  };

  auto wanted_max_x = [&]() -> std::optional<Int> {
    if (lim.count != unbounded && found.size() > lim.count) {
      auto it = found.begin();
      std::advance(it, lim.count);
      found.erase(it, found.end());
    }
    std::optional<Int> cut;
    if (lim.r_max) cut = tr.q * *lim.r_max - tr.c;
    if (lim.count != unbounded && found.size() >= lim.count) {
      Int kth = tr.q * std::prev(found.end())->first - tr.c;
      if (!cut || kth < *cut) cut = std::move(kth);
    }
    return cut;
  };

  walk_unit_streams(g, {tr.c, tr.c}, {-tr.c, tr.c}, lim.max_power, accept, wanted_max_x);

  std::vector<gonal_pair> out;
  for (auto& [r, pair] : found) {
    if (out.size() == lim.count) break;
    out.push_back(std::move(pair));
  }
  return out;
}

std::vector<gonal_pair> search_enumerate(long ell, const Int& m, std::size_t count,
                                         unsigned long s_bound, unsigned jobs) {
  if (jobs <= 1) {
    std::vector<gonal_pair> out;
    Int value = 1;  // P(ell, 1)
    for (unsigned long s = 1; s <= s_bound; ++s) {
      if (s > 1) value += polygonal_step(ell, s - 1);
      if (auto r = polygonal_index(ell, m * value)) {
        out.push_back(make_checked_pair(ell, m, std::move(*r), Int(s)));
        if (out.size() == count) break;
      }
    }
    return out;
  }

  auto out = detail::chunked_scan<gonal_pair>(
      s_bound, jobs, [&](unsigned long lo, unsigned long up, std::vector<gonal_pair>& part) {
        Int value = polygonal_number(ell, Int(lo));
        for (unsigned long s = lo; s <= up; ++s) {
          if (s > lo) value += polygonal_step(ell, s - 1);
          if (auto r = polygonal_index(ell, m * value)) {
            part.push_back(make_checked_pair(ell, m, std::move(*r), Int(s)));
          }
        }
      });
  if (out.size() > count) out.resize(count);
  return out;
}

}  // namespace

Int polygonal_number(long ell, const Int& r) {
  require_ell(ell);
  if (r < 1) {
    throw invalid_input("polygonal index must be >= 1, got " + r.get_str());
  }
  Int twice = Int(ell - 2) * r * r - Int(ell - 4) * r;
  return twice / 2;
}

std::optional<Int> polygonal_index(long ell, const Int& value) {
  require_ell(ell);
  if (value < 1) {
    throw invalid_input("polygonal value must be >= 1, got " + value.get_str());
  }
  const Int disc = Int(ell - 4) * (ell - 4) + 8 * Int(ell - 2) * value;
  const auto root = exact_sqrt(disc);
  if (!root) return std::nullopt;
  const Int numerator = *root + (ell - 4);
  const Int denominator = 2 * Int(ell - 2);
  if (!divides(denominator, numerator)) return std::nullopt;
  return exact_div(numerator, denominator);
}

gonal_transform transform_for(long ell, const Int& m) {
  require_nondegenerate_ell(ell);
  require_multiplier(m);

  gonal_transform tr;
  tr.ell = ell;
  tr.m = m;
  if (ell % 2 == 1) {
    tr.q = 2 * ell - 4;
    tr.c = ell - 4;  // negative only for ell = 3, where X = 2r + 1
  } else if (ell % 4 == 2) {
    tr.q = ell - 2;
    tr.c = (ell - 4) / 2;
  } else {
    tr.q = ell / 2 - 1;
    tr.c = (ell - 4) / 4;
  }
  tr.rhs = (1 - m) * tr.c * tr.c;
  return tr;
}

std::vector<gonal_pair> solve_multiple(long ell, const Int& m, std::size_t count, solve_mode mode,
                                       unsigned long bound, unsigned jobs) {
  require_nondegenerate_ell(ell);
  require_multiplier(m);
  if (count == 0) return {};

  if (mode == solve_mode::theorem) {
    theorem_limits lim;
    lim.count = count;
    if (bound != 0) lim.max_power = bound;
    return theorem_enumerate(ell, m, lim);
  }
  return search_enumerate(ell, m, count, bound != 0 ? bound : default_search_bound, jobs);
}

std::vector<gonal_pair> theorem_pairs_up_to(long ell, const Int& m, const Int& r_max,
                                            unsigned long max_power) {
  require_nondegenerate_ell(ell);
  require_multiplier(m);
  if (r_max < 1) return {};

  theorem_limits lim;
  lim.r_max = r_max;
  lim.max_power = max_power;
  return theorem_enumerate(ell, m, lim);
}

std::vector<triangular_ratio_pair> solve_triangular_ratio(const Int& a, const Int& b,
                                                          std::size_t count,
                                                          unsigned long max_power) {
  if (b < 1 || a <= b) {
    throw invalid_input("need a > b >= 1, got a = " + a.get_str() + ", b = " + b.get_str());
  }
  if (gcd(a, b) != 1) {
    throw invalid_input("a and b must be coprime, got a = " + a.get_str() + ", b = " + b.get_str());
  }
  if (!is_squarefree(a) || !is_squarefree(b)) {
    throw invalid_input("a and b must be square-free, got a = " + a.get_str() + ", b = " +
                        b.get_str());
  }
  const Int ab = a * b;
  if (is_perfect_square(ab)) {
    throw perfect_square_input("a*b = " + ab.get_str() + " must not be a perfect square");
  }
  if (count == 0) return {};

  // a delta(r) = b delta(s) multiplied by 4a gives
  // (a (2r+1))^2 - ab (2s+1)^2 = a (a - b), with base solution (a, 1).
  const pell_solution g = fundamental_solution(ab);
  std::map<Int, triangular_ratio_pair> found;  // keyed by r

  auto accept = [&](const Int& X, const Int& Y) {
    if (X <= 0 || Y <= 0) return;
    if (!divides(a, X)) return;
    Int xa = exact_div(X, a);
    if (mod_floor(xa, 2) != 1 || mod_floor(Y, 2) != 1) return;
    Int r = (xa - 1) / 2;
    Int s = (Y - 1) / 2;
    if (r < 1 || s < 1) return;
    if (found.contains(r)) return;
    Int delta = r * (r + 1) / 2;
    Int delta_prime = s * (s + 1) / 2;
    if (a * delta != b * delta_prime) {
      throw std::logic_error("ratio candidate failed re-validation");
    }
    Int key = r;  // keep the key intact while r moves into the pair
    found.emplace(std::move(key), triangular_ratio_pair{std::move(r), std::move(s),
                                                        std::move(delta), std::move(delta_prime)});
  };

  auto wanted_max_x = [&]() -> std::optional<Int> {
    if (found.size() > count) {
      auto it = found.begin();
      std::advance(it, count);
      found.erase(it, found.end());
    }
    if (found.size() < count) return std::nullopt;
    return a * (2 * std::prev(found.end())->first + 1);
  };

  walk_unit_streams(g, {a, 1}, {-a, 1}, max_power, accept, wanted_max_x);

  std::vector<triangular_ratio_pair> out;
  for (auto& [r, pair] : found) {
    if (out.size() == count) break;
    out.push_back(std::move(pair));
  }
  return out;
}

std::vector<gonal_pair> enumerate_multiples_oracle(long ell, const Int& m, const Int& r_max,
                                                   unsigned jobs) {
  require_ell(ell);
  if (m <= 1) {
    throw invalid_input("multiplier must be an integer > 1, got " + m.get_str());
  }
  if (r_max < 1) return {};
  const unsigned long hi = scan_bound_as_ulong(r_max);

  return detail::chunked_scan<gonal_pair>(
      hi, jobs, [&](unsigned long lo, unsigned long up, std::vector<gonal_pair>& out) {
        Int value = polygonal_number(ell, Int(lo));
        for (unsigned long r = lo; r <= up; ++r) {
          if (r > lo) value += polygonal_step(ell, r - 1);
          if (!divides(m, value)) continue;
          Int small = exact_div(value, m);
          if (auto s = polygonal_index(ell, small)) {
            out.push_back({ell, m, Int(r), std::move(*s), value, std::move(small)});
          }
        }
      });
}

}  // namespace polypell
