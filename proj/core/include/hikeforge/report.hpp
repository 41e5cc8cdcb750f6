#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hikeforge {

/// Outcome of an exact identity check. A failing report always carries its
/// first counterexample.
struct CheckReport {
  std::string name;
  int bound = 0;
  bool pass = true;
  std::string counterexample;
  // optional per-condition breakdown (multi-condition checks)
  std::vector<std::pair<std::string, bool>> conditions;

  void fail(std::string why) {
    if (pass) counterexample = std::move(why);
    pass = false;
  }
};

}  // namespace hikeforge
