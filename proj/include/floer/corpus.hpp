#pragma once

#include <string>
#include <vector>

namespace floer {

struct CorpusCase {
  std::string name;
  bool passed = false;
  std::string detail;  ///< failure description, empty on success
};

/// Runs the built-in regression examples. Every comparison is exact.
std::vector<CorpusCase> run_corpus();

}  // namespace floer
