// Prints the U matrix for (a,b,c,d) = (2,2,2,2) from the Racah sum and from
// the polynomial model, and checks they agree up to sign.

#include <iostream>

#include "regge/howe.hpp"
#include "regge/racah.hpp"

int main() {
  using namespace regge;
  const long a = 2, b = 2, c = 2, d = 2;
  const auto oracle = u_oracle_table(a, b, c, d);
  bool agree = true;
  for (const auto& [ef, value] : oracle) {
    const SixJLabels l{a, b, c, d, ef.first, ef.second};
    const SignedSqrt racah = u_coeff(l);
    std::cout << l.to_string() << "  racah " << racah << "  oracle " << value << "\n";
    agree = agree && racah.abs() == value.abs();
  }
  std::cout << (agree ? "agree" : "DISAGREE") << "\n";
  return agree ? 0 : 1;
}
