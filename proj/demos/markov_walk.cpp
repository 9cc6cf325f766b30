// Walks the Markov-type rank-2 seed B = [[0,2],[-2,0]] and prints each cluster
// variable as a Laurent polynomial, then the specialized integer values.
#include <iostream>

#include "jones/cluster.hpp"

int main() {
  using namespace jones;
  const Rank2Params p{2, 2};
  const auto xs = rank2_sequence(p, 8);
  for (std::size_t i = 0; i < xs.size(); ++i) std::cout << "x" << i + 1 << " = " << xs[i].to_string() << "\n";

  const LaurentReport r = check_laurent_phenomenon(Seed::initial({{0, 2}, {-2, 0}}), alternating_path(8));
  std::cout << "\n" << render_table(r);
  return r.passed() ? 0 : 1;
}
