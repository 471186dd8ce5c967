#pragma once

#include <string>

#include "pathcrystal/report.hpp"
#include "pathcrystal/skein.hpp"

namespace pathcrystal {

// JSON text formats. Rationals are rendered as "p" or "p/q" strings; both
// forms are accepted on input. Node lists are emitted in sorted canonical
// order so identical inputs produce identical bytes.

std::string path_to_json(const Path& p);
Path path_from_json(const RootSystem& rs, const std::string& text);

std::string crystal_to_json(const Crystal& c);
Crystal crystal_from_json(const RootSystem& rs, const std::string& text);
std::string crystal_to_dot(const Crystal& c);

std::string root_system_to_json(const RootSystem& rs);
std::string skein_to_json(const Skein& s);
std::string report_to_json(const VerifyReport& r);

/// Sorted path-set payload used by the cache: {"paths": [path...]}.
std::string path_set_to_json(const PathSet& set);
PathSet path_set_from_json(const RootSystem& rs, const std::string& text);

}  // namespace pathcrystal
