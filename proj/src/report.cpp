#include "iw/report.hpp"

#include <json.hpp>

namespace iw {

void Report::add(std::string id, bool ok, std::string witness) {
  cases.push_back(CheckCase{std::move(id), ok ? CaseStatus::Pass : CaseStatus::Fail,
                            std::move(witness)});
}

void Report::add_inconclusive(std::string id, std::string witness) {
  cases.push_back(CheckCase{std::move(id), CaseStatus::Inconclusive, std::move(witness)});
}

void Report::append(const Report& other) {
  cases.insert(cases.end(), other.cases.begin(), other.cases.end());
}

long Report::passed() const {
  long k = 0;
  for (const auto& c : cases) k += c.status == CaseStatus::Pass;
  return k;
}

long Report::failed() const {
  long k = 0;
  for (const auto& c : cases) k += c.status == CaseStatus::Fail;
  return k;
}

long Report::inconclusive() const {
  long k = 0;
  for (const auto& c : cases) k += c.status == CaseStatus::Inconclusive;
  return k;
}

std::string Report::to_text() const {
  std::string out = "suite: " + suite + "\n";
  out += "params: n=" + std::to_string(params.n) + " r=" + std::to_string(params.r) +
         " gamma2=" + params.gamma2.to_string() + " lambda=";
  for (std::size_t k = 0; k < params.lambda.size(); ++k) {
    if (k) out += ",";
    out += params.lambda[k].to_string();
  }
  out += "\n";
  for (const auto& c : cases) {
    const char* tag = c.status == CaseStatus::Pass           ? "PASS"
                      : c.status == CaseStatus::Inconclusive ? "INCONCLUSIVE"
                                                             : "FAIL";
    out += std::string(tag) + "  " + c.id;
    if (!c.witness.empty()) out += "  [" + c.witness + "]";
    out += "\n";
  }
  out += "passed: " + std::to_string(passed()) + "  failed: " + std::to_string(failed()) +
         "  inconclusive: " + std::to_string(inconclusive()) + "\n";
  return out;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  nlohmann::ordered_json jp;
  jp["n"] = params.n;
  jp["r"] = params.r;
  jp["gamma2"] = params.gamma2.to_string();
  std::vector<std::string> lam;
  for (const auto& l : params.lambda) lam.push_back(l.to_string());
  jp["lambda"] = lam;
  j["params"] = jp;
  nlohmann::ordered_json jcases = nlohmann::ordered_json::array();
  for (const auto& c : cases) {
    nlohmann::ordered_json jc;
    jc["id"] = c.id;
    jc["pass"] = c.status != CaseStatus::Fail;
    if (c.witness.empty() && c.status != CaseStatus::Inconclusive) {
      jc["witness"] = nullptr;
    } else if (c.status == CaseStatus::Inconclusive && c.witness.empty()) {
      jc["witness"] = "INCONCLUSIVE";
    } else {
      jc["witness"] = c.witness;
    }
    jcases.push_back(jc);
  }
  j["cases"] = jcases;
  j["passed"] = passed();
  j["failed"] = failed();
  j["inconclusive"] = inconclusive();
  return j.dump(2) + "\n";
}

}  // namespace iw
