// Lists the highest weights cut out by the polynomials, with admissibility of the affine weights.

#include "a2l2.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
  const int l = argc > 1 ? std::atoi(argv[1]) : 3;
  a2l2::ProjectionContext ctx(l);
  auto zeros = a2l2::zero_set_oracle(a2l2::lowered_polynomials(ctx));
  auto dominant = a2l2::dominant_integral_filter(zeros);
  for (const auto& mu : zeros) {
    a2l2::AffineWeight lam = a2l2::affinize(mu, l);
    std::cout << mu.to_string() << "  ->  " << lam.to_string()
              << (a2l2::check_admissible(lam).admissible() ? "  admissible" : "  not admissible")
              << (dominant.count(mu) ? "  dominant integral" : "") << "\n";
  }
  std::cout << zeros.size() << " weights, matches closed form: " << (zeros == a2l2::classified_weights(l) ? "yes" : "no")
            << "\n";
}
