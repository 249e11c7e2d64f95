// Compares the closed tau_n-inverse orbit formula with the matrix computation
// on the quiver of a 3-admissible example.

#include <iostream>

#include "qct/qct.hpp"

int main() {
  using namespace qct;
  Quiver q = make_quiver({{"1", "2"}, {"1", "9"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"9", "10"}, {"12", "4"},
                          {"10", "8"}, {"11", "12"}, {"8", "1"}, {"7", "8"}, {"6", "7"}, {"5", "6"}, {"5", "11"}});
  ExtOracle oracle(q, FieldSpec(2));
  for (const auto& fp : enumerate_flow_paths(q)) {
    auto orbit = tau_n_orbit(q, fp, 3);
    std::cout << path_to_string(q, fp) << ":";
    Representation cur = oracle.realize_module(orbit.front());
    for (std::size_t j = 0; j < orbit.size(); ++j) {
      if (j > 0) cur = oracle.tau_n_inverse(cur, 3);
      auto got = oracle.identify(cur);
      bool same = got && *got == orbit[j];
      std::cout << " " << module_name(q, orbit[j]) << (same ? "" : " (oracle disagrees)");
    }
    std::cout << "\n";
  }
}
