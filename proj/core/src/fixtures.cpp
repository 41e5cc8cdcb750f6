#include "hikeforge/fixtures.hpp"

namespace hikeforge::fixtures {

namespace {

Digraph bidirect(int n, const std::vector<std::pair<int, int>>& edges) {
  return SimpleGraph(n, edges).bidirected();
}

}  // namespace

Digraph crossed_pentagon() {
  return bidirect(5, {{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}});
}

Digraph backtrack_triangle() {
  return Digraph(4, {{0, 1}, {1, 0}, {1, 2}, {2, 3}, {3, 1}});
}

SimpleGraph reconstruction_demo_gamma() {
  return SimpleGraph(8, {{0, 1}, {0, 2}, {1, 2},                  // triangle cluster
                         {2, 3}, {2, 4}, {3, 4},                  // fan at 2
                         {2, 5}, {2, 6}, {5, 6},                  //
                         {5, 7}, {6, 7}, {3, 7}, {4, 7},          // far block
                         {3, 6}, {4, 5}, {3, 5}, {4, 6}});
}

SimpleGraph reconstruction_demo_root() {
  return SimpleGraph(6, {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
}

Digraph slide_pair_left() {
  return Digraph(6, {{0, 1}, {1, 2}, {2, 0}, {2, 4}, {4, 3}, {3, 1}, {4, 5}, {5, 4}});
}

Digraph slide_pair_right() {
  return Digraph(6, {{5, 0}, {2, 5}, {2, 1}, {0, 2}, {4, 2}, {1, 3}, {3, 4}, {4, 3}});
}

Digraph expand_demo_small() { return Digraph(2, {{0, 1}, {1, 0}, {1, 1}}); }

Digraph expand_demo_large() {
  return Digraph(4, {{0, 1}, {1, 0}, {1, 2}, {2, 3}, {3, 1}, {3, 3}});
}

}  // namespace hikeforge::fixtures
