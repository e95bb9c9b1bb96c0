#include "ecodim/subsets.hpp"

#include <cstdlib>
#include <sstream>

namespace ecodim {

int max_ground_size() {
  static const int cap = [] {
    if (const char* env = std::getenv("MATROID_MAX_N")) {
      int v = std::atoi(env);
      if (v >= 1) return v > kHardMaxGround ? kHardMaxGround : v;
    }
    return kDefaultMaxGround;
  }();
  return cap;
}

std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  while (m) {
    int b = std::countr_zero(m);
    out.push_back(b + 1);
    m &= m - 1;
  }
  return out;
}

std::string to_string(Mask m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : elements_of(m)) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

bool is_cyclic_interval(Mask m, int n) {
  if (m == 0 || m == full_mask(n)) return true;
  // Count cyclic 0->1 transitions walking 1..n.
  int rises = 0;
  for (int e = 1; e <= n; ++e) {
    int prev = e == 1 ? n : e - 1;
    if (has_element(m, e) && !has_element(m, prev)) ++rises;
  }
  return rises == 1;
}

}  // namespace ecodim
