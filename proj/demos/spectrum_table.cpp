// Prints the discrete index values 4cos^2(pi/n) up to a chosen n.
#include <cstdlib>
#include <iostream>

#include "jones/spectrum.hpp"

int main(int argc, char** argv) {
  const unsigned n_max = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 12;
  if (n_max < 3) {
    std::cerr << "usage: spectrum_table [n_max >= 3]\n";
    return 2;
  }
  const auto r = jones::jones_spectrum(n_max);
  std::cout << jones::render_table(r);
  return r.consistent() ? 0 : 1;
}
