#pragma once

#include <string>
#include <vector>

namespace canext {

// One verified property: pass/fail plus a witness or summary string.
struct CheckItem {
  std::string name;
  bool passed = true;
  std::string detail;
  double millis = 0.0;
};

// Result of a check-style operation. Never thrown; failures carry witnesses.
class Report {
 public:
  Report() = default;
  explicit Report(std::string title) : title_(std::move(title)) {}

  void add(std::string name, bool passed, std::string detail = "", double millis = 0.0);
  void merge(const Report& other);

  bool ok() const;
  const std::string& title() const { return title_; }
  const std::vector<CheckItem>& items() const { return items_; }

  std::string text() const;
  std::string json(bool includeTiming = true) const;

 private:
  std::string title_;
  std::vector<CheckItem> items_;
};

}  // namespace canext
