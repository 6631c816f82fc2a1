#ifndef DISSECTION_SUITES_HPP
#define DISSECTION_SUITES_HPP

#include <string>
#include <vector>

namespace dissection {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // filled on failure or for informational checks
};

// Named verification suites: hopf-axioms, prelie, og, morphism, counting,
// bases, or "all". Throws std::invalid_argument on an unknown name.
std::vector<CheckResult> run_suite(const std::string& suite);
std::vector<std::string> suite_names();

}  // namespace dissection

#endif
