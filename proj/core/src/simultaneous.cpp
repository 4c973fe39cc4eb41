#include <polypell/simultaneous.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include <polypell/errors.hpp>
#include <polypell/gonal.hpp>

#include "parallel.hpp"

namespace polypell {

namespace {

unsigned long scan_bound_as_ulong(const Int& bound) {
  if (!bound.fits_ulong_p()) {
    throw invalid_input("scan bound too large: " + bound.get_str());
  }
  return mpz_get_ui(bound.get_mpz_t());
}

}  // namespace

curve_spec curve_params(long ell, const Int& m, const Int& n) {
  if (ell < 3) {
    throw invalid_input("polygon order must be >= 3, got " + std::to_string(ell));
  }
  if (ell == 4) {
    throw unsupported_ell("ell = 4 gives b = 0 and the curve degenerates");
  }
  if (n <= 1 || m <= n) {
    throw invalid_ordering("need m > n > 1, got m = " + m.get_str() + ", n = " + n.get_str());
  }

  curve_spec spec;
  spec.ell = ell;
  spec.m = m;
  spec.n = n;
  spec.a = 2 * (ell - 2);
  spec.b = ell - 4;
  const Int mn_b2 = m * n * spec.b * spec.b;
  spec.A = mn_b2 * (m - 1);
  spec.B = mn_b2 * (m - n);
  return spec;
}

std::vector<integer_point> constrained_integer_points(const curve_spec& spec, const Int& v_bound,
                                                      unsigned jobs) {
  std::vector<integer_point> out;
  // X = 0 forces Y = 0: the origin is always on the curve and trivially
  // satisfies the divisibility, but carries no (u, w) witness.
  out.push_back({0, 0, 0, 0, 0, false});
  if (v_bound < 1) return out;
  const unsigned long hi = scan_bound_as_ulong(v_bound);

  const Int res_pos = mod_floor(spec.b, spec.a);
  const Int res_neg = mod_floor(-spec.b, spec.a);
  const Int m2n = spec.m * spec.m * spec.n;
  const Int mn = spec.m * spec.n;
  const Int mn2 = mn * spec.n;
  const Int m2n2 = m2n * spec.n;

  auto scanned = detail::chunked_scan<integer_point>(
      hi, jobs, [&](unsigned long lo, unsigned long up, std::vector<integer_point>& part) {
        Int v, X, t;
        for (unsigned long vi = lo; vi <= up; ++vi) {
          v = vi;
          const Int res = mod_floor(v, spec.a);
          if (res != res_pos && res != res_neg) continue;
          X = m2n * v * v;
          t = X - spec.A;
          if (t < 0) continue;
          // X - A = mn (m v^2 - (m-1) b^2), so mn divides exactly.
          const auto u = exact_sqrt(exact_div(t, mn));
          if (!u) continue;
          t = X - spec.B;
          if (!divides(mn2, t)) continue;
          const auto w = exact_sqrt(exact_div(t, mn2));
          if (!w) continue;
          Int Y = m2n2 * *u * v * *w;
          if (Y * Y != X * (X - spec.A) * (X - spec.B)) {
            throw std::logic_error("constrained point failed the curve identity");
          }
          part.push_back({X, std::move(Y), *u, v, *w, true});
        }
      });

  out.insert(out.end(), std::make_move_iterator(scanned.begin()),
             std::make_move_iterator(scanned.end()));
  return out;
}

std::optional<index_triple> recover_rst(const Int& u, const Int& v, const Int& w,
                                        const curve_spec& spec) {
  auto index_of = [&](const Int& signed_value) -> std::optional<Int> {
    const Int shifted = signed_value + spec.b;
    if (!divides(spec.a, shifted)) return std::nullopt;
    Int idx = exact_div(shifted, spec.a);
    if (idx < 1) return std::nullopt;
    return idx;
  };

  for (int su : {+1, -1}) {
    if (su < 0 && u == 0) continue;
    const auto r = index_of(su * u);
    if (!r) continue;
    for (int sv : {+1, -1}) {
      if (sv < 0 && v == 0) continue;
      const auto s = index_of(sv * v);
      if (!s) continue;
      for (int sw : {+1, -1}) {
        if (sw < 0 && w == 0) continue;
        const auto t = index_of(sw * w);
        if (!t) continue;
        return index_triple{*r, *s, *t};
      }
    }
  }
  return std::nullopt;
}

std::vector<simultaneous_triple> solve_simultaneous(long ell, const Int& m, const Int& n,
                                                    const Int& v_bound, unsigned jobs) {
  const curve_spec spec = curve_params(ell, m, n);
  const auto points = constrained_integer_points(spec, v_bound, jobs);

  std::map<Int, simultaneous_triple> found;  // keyed by r
  for (const auto& pt : points) {
    if (!pt.has_witness) continue;
    const auto rst = recover_rst(pt.u, pt.v, pt.w, spec);
    if (!rst) continue;
    Int P = polygonal_number(ell, rst->r);
    Int P1 = polygonal_number(ell, rst->s);
    Int P2 = polygonal_number(ell, rst->t);
    if (P != m * P1 || P != n * P2) {
      throw std::logic_error("recovered triple failed re-validation");
    }
    found.emplace(rst->r, simultaneous_triple{rst->r, rst->s, rst->t, std::move(P), std::move(P1),
                                              std::move(P2)});
  }

  std::vector<simultaneous_triple> out;
  out.reserve(found.size());
  for (auto& [r, triple] : found) out.push_back(std::move(triple));
  return out;
}

std::vector<simultaneous_triple> brute_force_simultaneous(long ell, const Int& m, const Int& n,
                                                          const Int& r_max, unsigned jobs) {
  if (ell < 3) {
    throw invalid_input("polygon order must be >= 3, got " + std::to_string(ell));
  }
  if (m <= 1 || n <= 1) {
    throw invalid_input("multipliers must be > 1, got m = " + m.get_str() + ", n = " +
                        n.get_str());
  }
  if (r_max < 1) return {};
  const unsigned long hi = scan_bound_as_ulong(r_max);

  return detail::chunked_scan<simultaneous_triple>(
      hi, jobs, [&](unsigned long lo, unsigned long up, std::vector<simultaneous_triple>& part) {
        Int value = polygonal_number(ell, Int(lo));
        for (unsigned long r = lo; r <= up; ++r) {
          if (r > lo) value += Int(ell - 2) * (r - 1) + 1;
          if (!divides(m, value) || !divides(n, value)) continue;
          const auto s = polygonal_index(ell, exact_div(value, m));
          if (!s) continue;
          const auto t = polygonal_index(ell, exact_div(value, n));
          if (!t) continue;
          part.push_back({Int(r), *s, *t, value, exact_div(value, m), exact_div(value, n)});
        }
      });
}

}  // namespace polypell
