// A tetrahedron built from three vectors, pushed through the Okamoto shift of
// its trace coordinates, compared with its Regge partner.

#include <iostream>

#include "regge/fuchs.hpp"
#include "regge/tetra.hpp"

int main() {
  using namespace regge;
  const Vec3<double> a1{1.0, 0.2, -0.3}, a2{-0.4, 1.1, 0.5}, a3{0.3, -0.2, 0.9};
  const CTriple t = hermitian_triple(a1, a2, a3);
  const auto lengths = edge_lengths(t.a1, t.a2, t.a3);
  const auto partner = regge_lengths(lengths);

  const auto c = coordinates(t);
  const auto shifted = okamoto_coords(c);
  const auto from_coords = edge_lengths_from_coords(shifted);

  std::cout.precision(12);
  const auto x = lengths.as_array(), y = partner.as_array(), z = from_coords.as_array();
  for (std::size_t i = 0; i < 6; ++i)
    std::cout << "abcdef"[i] << "  " << x[i] << "  regge " << y[i] << "  okamoto " << z[i] << "\n";
  std::cout << "CM " << cayley_menger_det(lengths) << " -> " << cayley_menger_det(partner) << "\n";
  const auto report = verify_regge_correspondence(t);
  std::cout << (report.pass ? "correspondence holds" : report.reason) << "\n";
  return report.pass ? 0 : 1;
}
