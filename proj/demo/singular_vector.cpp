// Prints the singular vector for a given rank and checks that it is singular and nu-fixed.

#include "a2l2.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
  const int l = argc > 1 ? std::atoi(argv[1]) : 2;
  a2l2::TwistedSl alg(l);
  a2l2::VermaState v = a2l2::perse_vector(alg);
  std::cout << "k = " << alg.level() << "\n";
  std::cout << "v = " << v.to_string() << "\n";
  std::cout << "singular: " << (a2l2::check_singular(v, l) ? "yes" : "no") << "\n";
  std::cout << "nu(v) = v: " << (a2l2::nu_state(v) == v ? "yes" : "no") << "\n";
  a2l2::ZeroModeOrbit orbit = a2l2::zero_mode_orbit(alg, v);
  std::cout << "dim U(g0)v = " << orbit.dim() << "\n";
}
