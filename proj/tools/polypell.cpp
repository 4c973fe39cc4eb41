// polypell: Pell equations, polygonal-number multiples P = m P', triangular
// ratios a*delta = b*delta', and simultaneous systems P = m P' = n P''.
//
// Exit codes: 0 success (possibly with an empty result list), 1 certified
// failure of the congruence conditions (a proven negative for the unit
// construction, not a usage error), 2 invalid input or usage.

#include <cstddef>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <polypell/congruence.hpp>
#include <polypell/errors.hpp>
#include <polypell/gonal.hpp>
#include <polypell/pell.hpp>
#include <polypell/simultaneous.hpp>

namespace {

using nlohmann::ordered_json;
using polypell::Int;

constexpr int exit_ok = 0;
constexpr int exit_certified_negative = 1;
constexpr int exit_invalid_input = 2;

// All big integers travel as decimal strings; several results do not fit in
// 64 bits.
std::string dec(const Int& v) { return v.get_str(); }

Int parse_int(const std::string& text, const std::string& what) {
  try {
    return Int(text);
  } catch (const std::invalid_argument&) {
    throw polypell::invalid_input(what + " must be an integer, got '" + text + "'");
  }
}

ordered_json envelope(const std::string& command, ordered_json inputs, ordered_json results,
                      ordered_json bounds, bool complete_up_to_bound) {
  return ordered_json{{"command", command},
                      {"inputs", std::move(inputs)},
                      {"results", std::move(results)},
                      {"bounds", std::move(bounds)},
                      {"complete_up_to_bound", complete_up_to_bound}};
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

const char* variant_name(polypell::condition_variant v) {
  return v == polypell::condition_variant::xy ? "xy" : "x_minus_y";
}

const char* variant_text(polypell::condition_variant v) {
  return v == polypell::condition_variant::xy ? "x + m y = x + y = -1 (mod q)"
                                              : "m y - x = x - y = -1 (mod q)";
}

struct common_flags {
  bool json = false;
  unsigned jobs = 1;
};

// ---------------------------------------------------------------------------
// pell

struct pell_options {
  std::string m;
  unsigned long power = 0;
  unsigned long approx = 0;
  bool negative = false;
  common_flags common;
};

int run_pell(const pell_options& opt) {
  const Int m = parse_int(opt.m, "m");
  const polypell::pell_solution g = polypell::fundamental_solution(m);

  ordered_json results;
  results["fundamental"] = {{"x", dec(g.x)}, {"y", dec(g.y)}};
  std::optional<polypell::pell_solution> gn;
  if (opt.power > 0) {
    gn = polypell::power(g, opt.power);
    results["power"] = {{"n", opt.power}, {"x", dec(gn->x)}, {"y", dec(gn->y)}};
  }
  std::optional<polypell::rational_approx> approx;
  if (opt.approx > 0) {
    approx = polypell::sqrt_approx(m, opt.approx);
    results["approx"] = {{"n", opt.approx},
                         {"numerator", dec(approx->numerator)},
                         {"denominator", dec(approx->denominator)}};
  }
  std::optional<polypell::negative_pell_solution> neg;
  if (opt.negative) {
    neg = polypell::negative_pell_fundamental(m);
    if (neg) {
      results["negative"] = {{"exists", true}, {"x", dec(neg->x)}, {"y", dec(neg->y)}};
    } else {
      results["negative"] = {{"exists", false}};
    }
  }

  if (opt.common.json) {
    ordered_json inputs{{"m", dec(m)}};
    if (opt.power > 0) inputs["power"] = opt.power;
    if (opt.approx > 0) inputs["approx"] = opt.approx;
    if (opt.negative) inputs["negative"] = true;
    emit(envelope("pell", std::move(inputs), std::move(results), ordered_json::object(), true));
    return exit_ok;
  }

  std::cout << "m = " << m << "\n";
  std::cout << "fundamental: x = " << g.x << ", y = " << g.y << "\n";
  if (gn) std::cout << "power n = " << opt.power << ": x = " << gn->x << ", y = " << gn->y << "\n";
  if (approx) {
    std::cout << "approx n = " << opt.approx << ": " << approx->numerator << "/"
              << approx->denominator << "\n";
  }
  if (opt.negative) {
    if (neg) {
      std::cout << "negative: x = " << neg->x << ", y = " << neg->y << "\n";
    } else {
      std::cout << "negative: none\n";
    }
  }
  return exit_ok;
}

// ---------------------------------------------------------------------------
// gonal

struct gonal_options {
  long ell = 0;
  std::string m;
  std::size_t count = 1;
  std::string mode = "theorem";
  unsigned long bound = 0;
  bool check_only = false;
  common_flags common;
};

ordered_json pair_json(const polypell::gonal_pair& p) {
  return {{"r", dec(p.r)}, {"s", dec(p.s)}, {"big", dec(p.big)}, {"small", dec(p.small)}};
}

int run_gonal(const gonal_options& opt) {
  const Int m = parse_int(opt.m, "m");
  const polypell::gonal_transform tr = polypell::transform_for(opt.ell, m);

  if (opt.check_only) {
    const auto info = polypell::group_info(m, tr.q);
    const auto hit = polypell::find_satisfying_power(m, tr.q);
    if (opt.common.json) {
      ordered_json results{{"q", dec(tr.q)},
                           {"group_order", info.order},
                           {"satisfiable", hit.has_value()}};
      if (hit) {
        results["satisfying_power"] = {{"n", hit->n}, {"variant", variant_name(hit->variant)}};
      } else {
        results["satisfying_power"] = nullptr;
      }
      emit(envelope("gonal",
                    ordered_json{{"ell", opt.ell}, {"m", dec(m)}, {"check_only", true}},
                    std::move(results), ordered_json::object(), true));
    } else {
      std::cout << "ell = " << opt.ell << ", m = " << m << ", q = " << tr.q << "\n";
      std::cout << "g_m(q) = " << info.order << "\n";
      if (hit) {
        std::cout << "satisfying power: n = " << hit->n << ", condition: "
                  << variant_text(hit->variant) << "\n";
      } else {
        std::cout << "conditions not satisfiable: no power of the fundamental solution works\n";
      }
    }
    return hit ? exit_ok : exit_certified_negative;
  }

  const auto mode =
      opt.mode == "search" ? polypell::solve_mode::search : polypell::solve_mode::theorem;
  // One extra pair tells us whether the bound, not the count, cut the list.
  auto pairs = polypell::solve_multiple(opt.ell, m, opt.count + 1, mode, opt.bound,
                                        opt.common.jobs);
  const bool complete = pairs.size() <= opt.count;
  if (!complete) pairs.pop_back();

  const unsigned long effective_bound =
      opt.bound != 0 ? opt.bound
                     : (mode == polypell::solve_mode::theorem ? polypell::default_theorem_power_bound
                                                              : polypell::default_search_bound);
  if (opt.common.json) {
    ordered_json list = ordered_json::array();
    for (const auto& p : pairs) list.push_back(pair_json(p));
    ordered_json bounds{{"mode", opt.mode},
                        {mode == polypell::solve_mode::theorem ? "max_power" : "s_bound",
                         effective_bound}};
    emit(envelope("gonal",
                  ordered_json{{"ell", opt.ell}, {"m", dec(m)}, {"count", opt.count}},
                  ordered_json{{"q", dec(tr.q)}, {"pairs", std::move(list)}}, std::move(bounds),
                  complete));
  } else {
    std::cout << "ell = " << opt.ell << ", m = " << m << " (q = " << tr.q << ")\n";
    for (const auto& p : pairs) {
      std::cout << "r = " << p.r << ", s = " << p.s << ": " << p.big << " = " << m << " * "
                << p.small << "\n";
    }
    if (pairs.empty()) std::cout << "no pairs within bound\n";
  }
  return exit_ok;
}

// ---------------------------------------------------------------------------
// ratio

struct ratio_options {
  std::string a;
  std::string b;
  std::size_t count = 1;
  unsigned long bound = 0;
  common_flags common;
};

int run_ratio(const ratio_options& opt) {
  const Int a = parse_int(opt.a, "a");
  const Int b = parse_int(opt.b, "b");
  const unsigned long max_power =
      opt.bound != 0 ? opt.bound : polypell::default_theorem_power_bound;

  auto pairs = polypell::solve_triangular_ratio(a, b, opt.count + 1, max_power);
  const bool complete = pairs.size() <= opt.count;
  if (!complete) pairs.pop_back();

  if (opt.common.json) {
    ordered_json list = ordered_json::array();
    for (const auto& p : pairs) {
      list.push_back({{"r", dec(p.r)},
                      {"s", dec(p.s)},
                      {"delta", dec(p.delta)},
                      {"delta_prime", dec(p.delta_prime)}});
    }
    emit(envelope("ratio", ordered_json{{"a", dec(a)}, {"b", dec(b)}, {"count", opt.count}},
                  ordered_json{{"pairs", std::move(list)}},
                  ordered_json{{"max_power", max_power}}, complete));
  } else {
    std::cout << "a = " << a << ", b = " << b << "\n";
    for (const auto& p : pairs) {
      std::cout << "r = " << p.r << ", s = " << p.s << ": " << a << " * " << p.delta << " = " << b
                << " * " << p.delta_prime << "\n";
    }
    if (pairs.empty()) std::cout << "no pairs within bound\n";
  }
  return exit_ok;
}

// ---------------------------------------------------------------------------
// simul

struct simul_options {
  long ell = 0;
  std::string m;
  std::string n;
  unsigned long bound = 0;
  bool curve = false;
  common_flags common;
};

int run_simul(const simul_options& opt) {
  const Int m = parse_int(opt.m, "m");
  const Int n = parse_int(opt.n, "n");
  const Int v_bound = opt.bound != 0 ? Int(opt.bound) : Int(polypell::default_v_bound);

  const polypell::curve_spec spec = polypell::curve_params(opt.ell, m, n);
  const auto triples = polypell::solve_simultaneous(opt.ell, m, n, v_bound, opt.common.jobs);

  std::vector<polypell::integer_point> points;
  if (opt.curve) points = polypell::constrained_integer_points(spec, v_bound, opt.common.jobs);

  if (opt.common.json) {
    ordered_json results;
    if (opt.curve) {
      results["curve"] = {{"a", dec(spec.a)}, {"b", dec(spec.b)}, {"A", dec(spec.A)},
                          {"B", dec(spec.B)}};
      ordered_json pts = ordered_json::array();
      for (const auto& p : points) {
        ordered_json pj{{"X", dec(p.X)}, {"Y", dec(p.Y)}};
        if (p.has_witness) {
          pj["witness"] = {{"u", dec(p.u)}, {"v", dec(p.v)}, {"w", dec(p.w)}};
        }
        pts.push_back(std::move(pj));
      }
      results["points"] = std::move(pts);
    }
    ordered_json list = ordered_json::array();
    for (const auto& t : triples) {
      list.push_back({{"r", dec(t.r)},
                      {"s", dec(t.s)},
                      {"t", dec(t.t)},
                      {"P", dec(t.P)},
                      {"P1", dec(t.P1)},
                      {"P2", dec(t.P2)}});
    }
    results["triples"] = std::move(list);
    emit(envelope("simul", ordered_json{{"ell", opt.ell}, {"m", dec(m)}, {"n", dec(n)}},
                  std::move(results), ordered_json{{"v_bound", dec(v_bound)}}, true));
  } else {
    std::cout << "ell = " << opt.ell << ", m = " << m << ", n = " << n << "\n";
    if (opt.curve) {
      std::cout << "curve: Y^2 = X (X - A) (X - B), A = " << spec.A << ", B = " << spec.B << "\n";
      for (const auto& p : points) {
        std::cout << "point: (" << p.X << ", " << p.Y << ")";
        if (p.has_witness) {
          std::cout << " [u = " << p.u << ", v = " << p.v << ", w = " << p.w << "]";
        }
        std::cout << "\n";
      }
    }
    for (const auto& t : triples) {
      std::cout << "r = " << t.r << ", s = " << t.s << ", t = " << t.t << ": P = " << t.P
                << ", P' = " << t.P1 << ", P'' = " << t.P2 << "\n";
    }
    if (triples.empty()) std::cout << "no triples within bound (complete up to bound)\n";
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pell equations and polygonal-number multiple problems"};
  app.require_subcommand(1);

  pell_options pell_opt;
  auto* pell = app.add_subcommand("pell", "fundamental solution of x^2 - m y^2 = 1");
  pell->add_option("m", pell_opt.m, "non-square modulus m > 1")->required();
  pell->add_option("--power", pell_opt.power, "also print g^n");
  pell->add_option("--approx", pell_opt.approx, "also print the rational approximation x_n / y_n");
  pell->add_flag("--negative", pell_opt.negative, "also solve x^2 - m y^2 = -1");
  pell->add_flag("--json", pell_opt.common.json, "machine-readable output");

  gonal_options gonal_opt;
  auto* gonal = app.add_subcommand("gonal", "solve P(ell, r) = m P(ell, s)");
  gonal->add_option("--ell", gonal_opt.ell, "polygon order (>= 3, not 4)")->required();
  gonal->add_option("--m", gonal_opt.m, "non-square multiplier m > 1")->required();
  gonal->add_option("--count", gonal_opt.count, "number of pairs to list (default 1)");
  gonal->add_option("--mode", gonal_opt.mode, "theorem (default) or search")
      ->check(CLI::IsMember({"theorem", "search"}));
  gonal->add_option("--bound", gonal_opt.bound,
                    "unit-power cap (theorem mode) or s scan bound (search mode)");
  gonal->add_flag("--check-only", gonal_opt.check_only,
                  "only report q, the group order and the satisfying power");
  gonal->add_flag("--json", gonal_opt.common.json, "machine-readable output");
  gonal->add_option("--jobs", gonal_opt.common.jobs, "worker threads for scans");

  ratio_options ratio_opt;
  auto* ratio = app.add_subcommand("ratio", "solve a * delta = b * delta' in triangular numbers");
  ratio->add_option("a", ratio_opt.a, "left factor (a > b)")->required();
  ratio->add_option("b", ratio_opt.b, "right factor")->required();
  ratio->add_option("--count", ratio_opt.count, "number of pairs to list (default 1)");
  ratio->add_option("--bound", ratio_opt.bound, "unit-power cap");
  ratio->add_flag("--json", ratio_opt.common.json, "machine-readable output");

  simul_options simul_opt;
  auto* simul = app.add_subcommand("simul", "solve P = m P' = n P'' simultaneously");
  simul->add_option("--ell", simul_opt.ell, "polygon order (>= 3, not 4)")->required();
  simul->add_option("--m", simul_opt.m, "first multiplier (m > n)")->required();
  simul->add_option("--n", simul_opt.n, "second multiplier (n > 1)")->required();
  simul->add_option("--bound", simul_opt.bound, "v scan bound (default 10^6)");
  simul->add_flag("--curve", simul_opt.curve, "also list A, B and the constrained integer points");
  simul->add_flag("--json", simul_opt.common.json, "machine-readable output");
  simul->add_option("--jobs", simul_opt.common.jobs, "worker threads for scans");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_invalid_input;
  }

  try {
    if (pell->parsed()) return run_pell(pell_opt);
    if (gonal->parsed()) return run_gonal(gonal_opt);
    if (ratio->parsed()) return run_ratio(ratio_opt);
    if (simul->parsed()) return run_simul(simul_opt);
  } catch (const polypell::no_theorem_solutions& e) {
    if ((gonal->parsed() && gonal_opt.common.json)) {
      emit(envelope("gonal",
                    ordered_json{{"ell", e.ell}, {"m", dec(e.m)}},
                    ordered_json{{"q", dec(e.q)},
                                 {"group_order", e.group_order},
                                 {"certified_no_theorem_solutions", true},
                                 {"pairs", ordered_json::array()}},
                    ordered_json::object(), true));
    } else {
      std::cout << "certified: " << e.what() << "\n";
    }
    return exit_certified_negative;
  } catch (const polypell::invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_invalid_input;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_invalid_input;
  }
  return exit_ok;
}
