#include <polypell/errors.hpp>

#include <utility>

namespace polypell {

namespace {

std::string describe(long ell, const Int& m, const Int& q, unsigned long group_order) {
  return "no power of the fundamental solution for m = " + m.get_str() +
         " satisfies the congruence conditions mod q = " + q.get_str() + " (ell = " +
         std::to_string(ell) + ", group order " + std::to_string(group_order) + ")";
}

}  // namespace

no_theorem_solutions::no_theorem_solutions(long ell_, Int m_, Int q_, unsigned long group_order_)
    : error(describe(ell_, m_, q_, group_order_)),
      ell(ell_),
      m(std::move(m_)),
      q(std::move(q_)),
      group_order(group_order_) {}

}  // namespace polypell
