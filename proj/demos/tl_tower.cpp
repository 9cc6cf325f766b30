// Builds TL generators at a few parameters and checks the relations.
#include <iostream>

#include "jones/temperley_lieb.hpp"

int main() {
  using namespace jones;
  bool ok = true;
  for (const Scalar& t : {Scalar(1), Scalar(4), Scalar(3), Scalar::root_of_unity(1, 5)}) {
    const Report r = verify_tl_relations(tl_generators(t, 3));
    std::cout << render_table(r) << "\n";
    ok = ok && r.passed();
  }
  const auto a = audit_printed_formula(Scalar(1));
  std::cout << render_table(a.report());
  return ok ? 0 : 1;
}
