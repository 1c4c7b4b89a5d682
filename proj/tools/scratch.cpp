#include <iostream>
#include "dade/dadegroup.hpp"

using namespace dade;

static void bounds(GroupPtr g, i64 p, const char* label) {
  DadeBounds b = dade_omega_bounds(g, p);
  const char* tag = b.exactness == DadeBounds::exact_lower   ? "exact_lower"
                    : b.exactness == DadeBounds::exact_upper ? "exact_upper"
                                                             : "undetermined";
  std::cout << label << ": lower " << b.lower.to_string() << "  upper " << b.upper.to_string()
            << "  [" << tag << "]\n";
}

int main() {
  bounds(Group::symmetric(3), 3, "S3 p=3");
  bounds(Group::cyclic(4), 2, "C4 p=2");
  bounds(Group::cyclic(2), 2, "C2 p=2");
  bounds(Group::cyclic(8), 2, "C8 p=2");
  bounds(Group::cyclic(3), 3, "C3 p=3");
  bounds(Group::cyclic(5), 5, "C5 p=5");
  bounds(Group::cyclic(9), 3, "C9 p=3");
  bounds(Group::quaternion8(), 2, "Q8 p=2");
  bounds(Group::dihedral(8), 2, "D8 p=2");
  bounds(Group::elem_abelian(2, 2), 2, "V4 p=2");
  bounds(Group::semidirect(7, 3, 1, 0), 7, "C7:C3 p=7");
  bounds(Group::semidirect(3, 2, 1, 1), 3, "C6 p=3");
  bounds(Group::semidirect(5, 2, 2, 0), 5, "C5:C4 p=5");
  bounds(Group::symmetric(4), 3, "S4 p=3");
  bounds(Group::symmetric(4), 2, "S4 p=2");
  std::cout << "expected S3: " << semidirect_expected(3, 2, 1, 0).to_string() << "\n";
  std::cout << "expected C7:C3: " << semidirect_expected(7, 3, 1, 0).to_string() << "\n";
  std::cout << "expected C6: " << semidirect_expected(3, 2, 1, 1).to_string() << "\n";
  std::cout << "expected C5:C4: " << semidirect_expected(5, 2, 2, 0).to_string() << "\n";
  relation_suite(Group::symmetric(3), 3, 50);
  relation_suite(Group::symmetric(4), 2, 20);
  std::cout << "relation suites ok\n";
  return 0;
}
