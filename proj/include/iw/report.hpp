#ifndef IW_REPORT_HPP
#define IW_REPORT_HPP

#include <string>
#include <vector>

#include "iw/fock.hpp"

namespace iw {

enum class CaseStatus { Pass, Fail, Inconclusive };

struct CheckCase {
  std::string id;
  CaseStatus status = CaseStatus::Pass;
  std::string witness;  // empty unless the case has something to show
};

/*
 * Deterministic result of one suite run: cases appear in a fixed order that
 * depends only on the configuration, never on scheduling.  Inconclusive
 * cases are marked but do not fail the run.
 */
struct Report {
  std::string suite;
  Params params;
  std::vector<CheckCase> cases;

  void add(std::string id, bool ok, std::string witness = "");
  void add_inconclusive(std::string id, std::string witness = "");
  void append(const Report& other);

  long passed() const;
  long failed() const;
  long inconclusive() const;
  bool all_ok() const { return failed() == 0; }

  std::string to_text() const;
  std::string to_json() const;
};

}  // namespace iw

#endif
