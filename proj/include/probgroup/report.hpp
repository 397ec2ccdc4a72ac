#pragma once

#include <string>
#include <vector>

#include "probgroup/check.hpp"
#include "probgroup/scalar.hpp"

namespace probgroup {

/// Reports are built from preformatted strings so that text and structured
/// renderings show identical numbers: every floating value passes through
/// fmtReal/fmtComplex exactly once.
struct ReportItem {
  std::string key;
  std::string value;
};

struct ReportSection {
  std::string title;
  std::vector<ReportItem> items;
  std::vector<Check> checks;

  void item(std::string key, std::string value) {
    items.push_back({std::move(key), std::move(value)});
  }
};

struct Report {
  std::string command;
  std::string input;
  Tolerances tol;
  std::vector<ReportSection> sections;

  ReportSection& section(std::string title) {
    sections.push_back(ReportSection{std::move(title), {}, {}});
    return sections.back();
  }
  bool pass() const;
  int checkCount() const;
  int failureCount() const;
};

/// Fixed 12-significant-digit rendering; negative zero collapses to "0".
std::string fmtReal(double x);
std::string fmtComplex(Complex z);
std::string fmtComplexVector(const std::vector<Complex>& v);

std::string renderText(const Report& r);
std::string renderStructured(const Report& r);

}  // namespace probgroup
