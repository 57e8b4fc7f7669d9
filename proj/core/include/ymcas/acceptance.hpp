#ifndef YMCAS_ACCEPTANCE_HPP
#define YMCAS_ACCEPTANCE_HPP

#include <string>
#include <vector>

namespace ymcas {

/// Outcome of one acceptance criterion. detail is deterministic (counts and
/// values only, never timings) so that repeated runs serialize identically;
/// seconds is reported separately for human output.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the eleven acceptance criteria in order. Each criterion is isolated:
/// an exception fails that criterion with its message as detail and the rest
/// still run. Criteria with a stated wall-clock budget also fail when they
/// exceed it.
std::vector<CriterionResult> run_all();

} // namespace ymcas

#endif
