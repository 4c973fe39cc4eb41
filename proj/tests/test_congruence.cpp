#include <doctest.h>

#include <set>
#include <utility>
#include <vector>

#include <polypell/congruence.hpp>
#include <polypell/errors.hpp>
#include <polypell/pell.hpp>

using namespace polypell;

namespace {

bool class_in(const std::vector<congruence_class>& classes, const congruence_class& c) {
  for (const auto& e : classes) {
    if (e == c) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("reduce_mod: componentwise non-negative residues") {
  CHECK(reduce_mod(xy_pair{17, 12}, 6) == congruence_class{6, 5, 0});
  CHECK(reduce_mod(xy_pair{1, 0}, 7) == congruence_class{7, 1, 0});
  CHECK(reduce_mod(xy_pair{-1, 1}, 4) == congruence_class{4, 3, 1});
  CHECK_THROWS_AS(reduce_mod(xy_pair{1, 0}, 1), invalid_modulus);
  CHECK_THROWS_AS(reduce_mod(xy_pair{1, 0}, 0), invalid_modulus);
}

TEST_CASE("group_info: worked orders") {
  CHECK(group_info(2, 4).order == 2);

  const auto g26 = group_info(2, 6);
  CHECK(g26.order == 4);
  REQUIRE(g26.classes.size() == 4);
  CHECK(g26.classes[0] == congruence_class{6, 3, 2});
  CHECK(g26.classes[1] == congruence_class{6, 5, 0});
  CHECK(g26.classes[2] == congruence_class{6, 3, 4});
  CHECK(g26.classes[3] == congruence_class{6, 1, 0});

  CHECK(group_info(11, 6).order == 2);
  CHECK(group_info(10, 6).order == 1);
}

TEST_CASE("group_info: class invariants for m <= 50, q <= 12") {
  for (long m = 2; m <= 50; ++m) {
    if (is_perfect_square(Int(m))) continue;
    for (long q = 2; q <= 12; ++q) {
      CAPTURE(m);
      CAPTURE(q);
      const auto info = group_info(m, q);
      REQUIRE(info.order == info.classes.size());
      CHECK(info.classes.back() == congruence_class{q, mod_floor(Int(1), q), 0});
      std::set<std::pair<Int, Int>> seen;
      for (const auto& cls : info.classes) {
        CHECK(cls.xr >= 0);
        CHECK(cls.xr < q);
        CHECK(cls.yr >= 0);
        CHECK(cls.yr < q);
        CHECK(mod_floor(cls.xr * cls.xr - Int(m) * cls.yr * cls.yr - 1, q) == 0);
        seen.emplace(cls.xr, cls.yr);
      }
      // A cyclic group: the powers g, g^2, ..., g^order are pairwise
      // distinct, and the identity recurs exactly at multiples of the order.
      CHECK(seen.size() == info.order);
      const auto gen = info.classes.front();
      xy_pair cur{gen.xr, gen.yr};
      const Int mr = mod_floor(Int(m), q);
      for (unsigned long n = 1; n <= 3 * info.order; ++n) {
        const bool is_identity = (mod_floor(cur.x, q) == mod_floor(Int(1), q)) && (mod_floor(cur.y, q) == 0);
        CHECK(is_identity == (n % info.order == 0));
        cur = compose(cur, {gen.xr, gen.yr}, mr);
        cur.x = mod_floor(cur.x, q);
        cur.y = mod_floor(cur.y, q);
      }
    }
  }
}

TEST_CASE("condition checks: worked examples for q = 6") {
  CHECK(!check_xy_condition(xy_pair{3, 2}, 2, 6));
  CHECK(!check_x_minus_y_condition(xy_pair{3, 2}, 2, 6));
  CHECK(check_xy_condition(xy_pair{17, 12}, 2, 6));
  CHECK(check_x_minus_y_condition(xy_pair{99, 70}, 2, 6));
  CHECK(check_x_minus_y_condition(xy_pair{7, 2}, 12, 6));
  // 1 = -1 (mod 2), so the identity itself passes at q = 2.
  CHECK(check_xy_condition(xy_pair{1, 0}, 5, 2));
  CHECK(check_xy_condition(xy_pair{1, 0}, 2, 2));
}

TEST_CASE("find_satisfying_power: worked examples") {
  const auto p26 = find_satisfying_power(2, 6);
  REQUIRE(p26.has_value());
  CHECK(p26->n == 2);
  CHECK(p26->variant == condition_variant::xy);

  const auto p126 = find_satisfying_power(12, 6);
  REQUIRE(p126.has_value());
  CHECK(p126->n == 1);
  CHECK(p126->variant == condition_variant::x_minus_y);

  CHECK(!find_satisfying_power(10, 6).has_value());
  CHECK(!find_satisfying_power(11, 6).has_value());
}

TEST_CASE("find_satisfying_power: round trip and minimality for m <= 50, q <= 12") {
  for (long m = 2; m <= 50; ++m) {
    if (is_perfect_square(Int(m))) continue;
    for (long q = 2; q <= 12; ++q) {
      CAPTURE(m);
      CAPTURE(q);
      const auto info = group_info(m, q);
      const auto hit = find_satisfying_power(m, q);
      auto satisfies_any = [&](const congruence_class& cls) {
        const xy_pair rep{cls.xr, cls.yr};
        return check_xy_condition(rep, m, q) || check_x_minus_y_condition(rep, m, q);
      };
      if (hit) {
        REQUIRE(hit->n >= 1);
        REQUIRE(hit->n <= info.order);
        const congruence_class& cls = info.classes[hit->n - 1];
        const xy_pair rep{cls.xr, cls.yr};
        if (hit->variant == condition_variant::xy) {
          CHECK(check_xy_condition(rep, m, q));
        } else {
          CHECK(check_x_minus_y_condition(rep, m, q));
          CHECK(!check_xy_condition(rep, m, q));  // xy wins ties
        }
        for (unsigned long n = 1; n < hit->n; ++n) {
          CHECK(!satisfies_any(info.classes[n - 1]));
        }
      } else {
        for (const auto& cls : info.classes) CHECK(!satisfies_any(cls));
      }
    }
  }
}

TEST_CASE("xy_candidate_classes: worked examples") {
  const auto c26 = xy_candidate_classes(2, 6);
  REQUIRE(c26.size() == 1);
  CHECK(c26[0] == congruence_class{6, 5, 0});

  const auto c36 = xy_candidate_classes(3, 6);
  REQUIRE(c36.size() == 2);
  CHECK(c36[0] == congruence_class{6, 5, 0});
  CHECK(c36[1] == congruence_class{6, 2, 3});

  const auto c22 = xy_candidate_classes(2, 2);
  REQUIRE(c22.size() == 1);
  CHECK(c22[0] == congruence_class{2, 1, 0});
}

TEST_CASE("every class accepted by the xy condition is a candidate class") {
  for (long m = 2; m <= 50; ++m) {
    if (is_perfect_square(Int(m))) continue;
    for (long q = 2; q <= 12; ++q) {
      CAPTURE(m);
      CAPTURE(q);
      const auto candidates = xy_candidate_classes(m, q);
      for (const auto& cls : group_info(m, q).classes) {
        if (check_xy_condition(xy_pair{cls.xr, cls.yr}, m, q)) {
          CHECK(class_in(candidates, cls));
        }
      }
    }
  }
}

TEST_CASE("odd group order rules out the xy condition for q >= 3") {
  // Solutions of the xy condition sit in classes of order 2 once q > 2, so
  // an odd g_m(q) leaves none.  q = 2 is the boundary: -1 = 1 there, the
  // identity class itself satisfies the condition, and the rule does not
  // apply (g_12(2) = 1 is odd yet (1, 0) passes).
  for (long m = 2; m <= 50; ++m) {
    if (is_perfect_square(Int(m))) continue;
    for (long q = 3; q <= 12; ++q) {
      const auto info = group_info(m, q);
      if (info.order % 2 == 0) continue;
      CAPTURE(m);
      CAPTURE(q);
      for (const auto& cls : info.classes) {
        CHECK(!check_xy_condition(xy_pair{cls.xr, cls.yr}, m, q));
      }
    }
  }
  CHECK(group_info(12, 2).order == 1);
  CHECK(check_xy_condition(xy_pair{1, 0}, 12, 2));
}
