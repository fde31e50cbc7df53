// Built-in end-to-end verification: five embedded worked examples exercised
// through the public API.  A mutation index perturbs one embedded constant
// (negative-control mode): every slot must flip at least one case to fail.
#ifndef ETKK_VERIFY_HPP
#define ETKK_VERIFY_HPP

#include <string>
#include <vector>

namespace etkk {

struct CaseResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CaseResult> cases;
  bool all_pass = false;
};

// Runs the embedded cases; mutation in [0, mutation_slot_count()) perturbs
// one constant by +1, mutation < 0 runs the pristine suite.
VerifyReport verify_paper(int mutation = -1);

int mutation_slot_count();

}  // namespace etkk

#endif  // ETKK_VERIFY_HPP
