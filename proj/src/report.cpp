#include "canext/report.hpp"

#include <json.hpp>

namespace canext {

void Report::add(std::string name, bool passed, std::string detail, double millis) {
  items_.push_back({std::move(name), passed, std::move(detail), millis});
}

void Report::merge(const Report& other) {
  for (const CheckItem& it : other.items_) {
    CheckItem copy = it;
    if (!other.title_.empty()) copy.name = other.title_ + ": " + copy.name;
    items_.push_back(std::move(copy));
  }
}

bool Report::ok() const {
  for (const CheckItem& it : items_)
    if (!it.passed) return false;
  return true;
}

std::string Report::text() const {
  std::string out;
  if (!title_.empty()) out += title_ + "\n";
  for (const CheckItem& it : items_) {
    out += (it.passed ? "  pass  " : "  FAIL  ");
    out += it.name;
    if (!it.detail.empty()) out += " -- " + it.detail;
    out += "\n";
  }
  out += ok() ? "result: pass\n" : "result: FAIL\n";
  return out;
}

std::string Report::json(bool includeTiming) const {
  nlohmann::json j;
  j["title"] = title_;
  j["ok"] = ok();
  j["checks"] = nlohmann::json::array();
  for (const CheckItem& it : items_) {
    nlohmann::json c;
    c["name"] = it.name;
    c["passed"] = it.passed;
    c["detail"] = it.detail;
    if (includeTiming) c["millis"] = it.millis;
    j["checks"].push_back(std::move(c));
  }
  return j.dump(2);
}

}  // namespace canext
