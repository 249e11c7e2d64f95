// Reads a quiver file and prints, for each n up to 12, whether kQ/J^2 has an
// n-cluster tilting subcategory, followed by the admissible degree.

#include <fstream>
#include <iostream>
#include <sstream>

#include "qct/qct.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: sample_classify QUIVER\n";
    return 2;
  }
  std::ifstream in(argv[1]);
  std::stringstream text;
  text << in.rdbuf();
  try {
    qct::Quiver q = qct::parse_quiver(text.str());
    std::cout << "shape " << qct::classify_shape(q).to_string() << "\n";
    for (long n = 2; n <= 12; ++n)
      std::cout << "n=" << n << " admissible=" << qct::is_n_admissible(q, n).verdict << "\n";
    std::cout << "N(Q)=" << qct::admissible_degree(q) << "\n";
  } catch (const qct::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
