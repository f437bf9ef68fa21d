// Rewrites golden/ from the current build. Not part of the test run.
#include <fstream>
#include <iostream>

#include "corpus.hpp"

int main() {
  for (auto& [file, content] : corpus::golden_artifacts()) {
    std::ofstream(corpus::golden_path(file), std::ios::binary) << content;
    std::cout << file << "\n";
  }
}
