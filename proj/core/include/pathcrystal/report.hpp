#pragma once

#include <string>
#include <vector>

#include "pathcrystal/crystal.hpp"

namespace pathcrystal {

enum class VerifyStatus { Pass, Fail, Inconclusive };

inline const char* to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Pass: return "PASS";
    case VerifyStatus::Fail: return "FAIL";
    default: return "INCONCLUSIVE";
  }
}

/// Outcome of one verification job; the shared payload of every verifier and
/// of the CLI report files.
struct VerifyReport {
  int theorem = 0;
  char type = '?';
  int rank = 0;
  std::vector<int> nodes;
  long long lhs_count = 0;
  long long rhs_count = 0;
  bool equal = false;
  VerifyStatus status = VerifyStatus::Fail;
  std::vector<Path> dominant_paths;
  std::vector<std::pair<Weight, long long>> decomposition;
  long long elapsed_ms = 0;
  std::string notes;
};

}  // namespace pathcrystal
