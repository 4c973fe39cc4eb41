#pragma once

#include <stdexcept>
#include <string>

#include <polypell/integer.hpp>

namespace polypell {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class invalid_input : public error {
 public:
  using error::error;
};

class perfect_square_input : public invalid_input {
 public:
  using invalid_input::invalid_input;
};

class invalid_modulus : public invalid_input {
 public:
  using invalid_input::invalid_input;
};

class mixed_modulus : public invalid_input {
 public:
  using invalid_input::invalid_input;
};

class unsupported_ell : public invalid_input {
 public:
  using invalid_input::invalid_input;
};

class invalid_ordering : public invalid_input {
 public:
  using invalid_input::invalid_input;
};

// Certified failure of the congruence conditions: every power of the
// fundamental solution was checked modulo q (the classes repeat with period
// group_order), so the unit construction cannot produce any pair.  This says
// nothing about solutions that are not unit multiples of the base solutions.
class no_theorem_solutions : public error {
 public:
  no_theorem_solutions(long ell_, Int m_, Int q_, unsigned long group_order_);

  long ell;
  Int m;
  Int q;
  unsigned long group_order;
};

}  // namespace polypell
