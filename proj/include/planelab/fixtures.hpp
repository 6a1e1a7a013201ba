// Bundled data files (known line configurations, sample curves). The
// directory is resolved from PLANELAB_FIXTURES when set, falling back to the
// source-tree path baked in at configure time.

#pragma once

#include <string>

namespace planelab {

std::string fixtures_dir();
std::string fixture_path(const std::string& name);

}  // namespace planelab
