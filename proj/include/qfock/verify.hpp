#pragma once
// Cross-route checks shared by the command line and the acceptance runner.
//
// Every check either compares two independent computations of the same
// quantity (rewriting vs boxed linear algebra, fitted polynomials vs counting
// at a fresh prime, wedge assembly vs triangular elimination) or sweeps a
// structural identity over a fixed range.  Results carry a detail line naming
// the sweep or the first mismatch.

#include <string>
#include <vector>

namespace qfock {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  int n = 0;           // restrict to one modulus; 0 = both 2 and 3
  int max_weight = 0;  // lower the weight caps; 0 = per-check defaults
  int threads = 1;
};

std::vector<CheckResult> verify_straighten(const VerifyOptions& opt);
std::vector<CheckResult> verify_hecke_relations(const VerifyOptions& opt);
std::vector<CheckResult> verify_involution(const VerifyOptions& opt);
std::vector<CheckResult> verify_hall(const VerifyOptions& opt);
std::vector<CheckResult> verify_gamma(const VerifyOptions& opt);
std::vector<CheckResult> verify_bases(const VerifyOptions& opt);
std::vector<CheckResult> verify_kl(const VerifyOptions& opt);

const std::vector<std::string>& verify_suite_names();  // ends with "all"
std::vector<CheckResult> verify_run(const std::string& suite,
                                    const VerifyOptions& opt);

std::string report_json(const std::string& suite,
                        const std::vector<CheckResult>& checks);

}  // namespace qfock
