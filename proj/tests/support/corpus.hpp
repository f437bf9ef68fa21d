#pragma once
#include <string>
#include <vector>

#include "octacube/diagram.hpp"

namespace corpus {

struct Entry {
  std::string name;
  octacube::SurfaceDiagram d;
};

std::string data_path(const std::string& file);
octacube::SurfaceDiagram load(const std::string& name);  // data/<name>.sd

// medial diagrams of square-tiled surfaces (n <= 3 squares, k = 2, 3), connected, reduced,
// weakly prime, alternating, colorable, with e >= 4; one per conjugacy class of (right, up)
const std::vector<Entry>& generated();

// hand-made examples in data/
std::vector<std::string> named_examples();

}  // namespace corpus

namespace corpus {

// golden file name -> content, for the examples frozen in golden/
std::vector<std::pair<std::string, std::string>> golden_artifacts();
std::string golden_path(const std::string& file);

}  // namespace corpus
