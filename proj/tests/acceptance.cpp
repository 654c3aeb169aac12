// Acceptance suite: one PASS/FAIL line per criterion over the built-in corpus.
// All comparisons are exact; the only inequalities are the tail bound
// 2 t max|c| m_*^-39 for the special values and the explicit constant
// C = #abelian subgroups + 2^N_max for the dominant asymptotic.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "hcomm/verify.hpp"

int main() {
  using namespace hcomm;
  const VerifyReport report = verify_corpus();

  std::map<int, std::vector<const CheckSummary*>> by_criterion;
  for (const auto& c : report.checks) by_criterion[c.criterion].push_back(&c);

  int failures = 0;
  for (int criterion = 1; criterion <= 13; ++criterion) {
    const auto it = by_criterion.find(criterion);
    bool ok = it != by_criterion.end();
    std::string names;
    if (ok) {
      for (const auto* c : it->second) {
        ok = ok && c->ok;
        names += (names.empty() ? "" : ", ") + c->name + (c->expected_pass ? "" : " (expected to fail)");
      }
    }
    std::printf("criterion %2d: %s  [%s]\n", criterion, ok ? "PASS" : "FAIL", names.c_str());
    if (!ok) {
      ++failures;
      if (it == by_criterion.end()) continue;
      for (const auto* c : it->second) {
        for (const auto& row : c->rows) {
          if (row.passed != c->expected_pass) {
            std::printf("    %s %s [%s]: %s\n", c->name.c_str(), row.group.c_str(), row.params.c_str(),
                        row.detail.c_str());
          }
        }
      }
    }
  }
  for (const auto* c : by_criterion[0]) {
    std::printf("auxiliary   : %s  [%s]\n", c->ok ? "PASS" : "FAIL", c->name.c_str());
    if (!c->ok) ++failures;
  }
  for (const auto& c : report.checks) {
    if (c.expected_pass) continue;
    for (const auto& row : c.rows) {
      if (!row.passed && row.group == "quaternion8" && row.params == "r=1") {
        std::printf("documented discrepancy: %s at (%s, %s): %s\n", c.name.c_str(), row.group.c_str(),
                    row.params.c_str(), row.detail.c_str());
      }
    }
  }
  std::printf("%s\n", failures == 0 ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return failures == 0 ? 0 : 1;
}
