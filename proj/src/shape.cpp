#include "tonnetz/shape.hpp"

namespace tonnetz {

std::vector<TriadShape> all_shapes_with_scale(int scale) {
  std::vector<TriadShape> shapes;
  if (scale < 3) return shapes;
  for (int n1 = 1; 3 * n1 <= scale; ++n1) {
    for (int n2 = n1; 2 * n2 <= scale - n1; ++n2) {
      const int n3 = scale - n1 - n2;
      if (n3 >= n2) shapes.emplace_back(n1, n2, n3);
    }
  }
  return shapes;
}

std::vector<TriadShape> all_shapes_up_to(int max_scale) {
  std::vector<TriadShape> shapes;
  for (int n = 3; n <= max_scale; ++n) {
    for (const TriadShape& s : all_shapes_with_scale(n)) shapes.push_back(s);
  }
  return shapes;
}

}  // namespace tonnetz
