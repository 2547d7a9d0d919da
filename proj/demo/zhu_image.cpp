// Projects the singular vector to U(g0) and lowers it to the weight-zero polynomials.

#include "a2l2.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
  const int l = argc > 1 ? std::atoi(argv[1]) : 2;
  a2l2::ProjectionContext ctx(l);
  a2l2::UEAElt image = a2l2::zhu_singular_image(ctx);
  a2l2::UEAElt v1 = a2l2::compute_v1(ctx, image);
  std::cout << "[[v]] = " << image.to_string() << "\n";
  std::cout << "v1 = " << v1.to_string() << "\n";
  auto polys = a2l2::lowered_polynomials(ctx, v1);
  for (int j = 1; j <= l; ++j) std::cout << "p" << j << " = " << a2l2::factored_h_string(polys[j - 1], j) << "\n";
}
