#pragma once

#include <random>
#include <string>
#include <thread>
#include <vector>

#include "waring/workspace.hpp"

namespace testing {

// One workspace per test binary so groups and tables are built once.
inline waring::Workspace& ws() {
  static waring::Workspace w(waring::WorkspaceOptions{waring::kDefaultCap, std::max(1u, std::thread::hardware_concurrency()), ""});
  return w;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 r(20240607);
  return r;
}

inline const std::vector<uint64_t>& sl2_fields() {
  static const std::vector<uint64_t> q = {4, 5, 7, 8, 9, 11, 13, 16, 17};
  return q;
}

// Groups of order at most 10^4 from the verification matrix.
inline std::vector<std::string> small_groups() {
  std::vector<std::string> out = {"A5", "A6", "A7", "S5", "S6"};
  for (uint64_t q : sl2_fields()) {
    out.push_back("SL(2," + std::to_string(q) + ")");
    out.push_back("PSL(2," + std::to_string(q) + ")");
  }
  for (const char* g : {"SL(3,2)", "SL(3,3)", "SU(3,3)"}) out.push_back(g);
  return out;
}

inline std::vector<uint32_t> classes_of_order(const waring::ClassDecomposition& D, uint64_t order) {
  std::vector<uint32_t> out;
  for (uint32_t c = 0; c < D.count(); ++c)
    if (D.cls(c).order == order) out.push_back(c);
  return out;
}

}  // namespace testing
