#include "planelab/fixtures.hpp"

#include <cstdlib>

#ifndef PLANELAB_SOURCE_FIXTURES
#define PLANELAB_SOURCE_FIXTURES "data/fixtures"
#endif

namespace planelab {

std::string fixtures_dir() {
  if (const char* env = std::getenv("PLANELAB_FIXTURES")) return env;
  return PLANELAB_SOURCE_FIXTURES;
}

std::string fixture_path(const std::string& name) { return fixtures_dir() + "/" + name; }

}  // namespace planelab
