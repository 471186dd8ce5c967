#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "pathcrystal/affine.hpp"
#include "pathcrystal/crystal.hpp"
#include "pathcrystal/path.hpp"
#include "pathcrystal/root_system.hpp"

namespace testutil {

using namespace pathcrystal;

inline Weight wt(std::initializer_list<long long> coords) {
  Weight w;
  for (long long c : coords) w.c.push_back(Rational(c));
  return w;
}

inline Weight wtq(std::initializer_list<const char*> coords) {
  Weight w;
  for (const char* c : coords) w.c.push_back(Rational::parse(c));
  return w;
}

/// Level-zero path through the given finite steps.
inline Path fpath(std::initializer_list<Weight> steps) {
  std::vector<AffineWeight> s;
  for (const auto& w : steps) s.push_back(level_zero(w));
  return Path::of(std::move(s));
}

/// Path with explicit (level, finite) steps.
inline Path apath(std::initializer_list<AffineWeight> steps) {
  return Path::of(std::vector<AffineWeight>(steps));
}

inline PathSet to_set(const Crystal& c) {
  return PathSet(c.nodes.begin(), c.nodes.end());
}

}  // namespace testutil
