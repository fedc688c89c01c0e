#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace prym {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  long millis = 0;  // wall time, reported in text output only (JSON reports
                    // must be byte-identical across reruns)
};

struct VerificationReport {
  int max_g = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

// The ten acceptance checks, in criterion order.
CheckResult check_pipeline_vs_closed_form(int g_lo, int g_hi);        // 1
CheckResult check_cross_case_agreement(int g_lo, int g_hi);           // 2
CheckResult check_pushforward_identities(int max_r);                  // 3
CheckResult check_gauss_degree(int g_lo, int g_hi);                   // 4
CheckResult check_h0_triple_agreement(std::uint64_t seed);            // 5
CheckResult check_martens_contract();                                 // 6
CheckResult check_singular_strata();                                  // 7
CheckResult check_cyclic_order(int max_n);                            // 8
CheckResult check_hessian(std::uint64_t seed, int samples);           // 9
CheckResult check_cc_parity(int g_lo, int g_hi);                      // 10

VerificationReport run_all_checks(int max_g, std::uint64_t seed);

// Deterministic JSON for the report (no timings).
nlohmann::ordered_json verification_report_json(const VerificationReport& rep);
std::string verification_report_text(const VerificationReport& rep);

}  // namespace prym
