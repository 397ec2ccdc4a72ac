#include "probgroup/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace probgroup {

bool Report::pass() const {
  for (const ReportSection& s : sections)
    for (const Check& c : s.checks)
      if (!c.pass) return false;
  return true;
}

int Report::checkCount() const {
  int n = 0;
  for (const ReportSection& s : sections) n += static_cast<int>(s.checks.size());
  return n;
}

int Report::failureCount() const {
  int n = 0;
  for (const ReportSection& s : sections)
    for (const Check& c : s.checks)
      if (!c.pass) ++n;
  return n;
}

std::string fmtReal(double x) {
  if (x == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string fmtComplex(Complex z) {
  if (z.imag() == 0.0) return fmtReal(z.real());
  std::string out = fmtReal(z.real());
  out += z.imag() < 0.0 ? " - " : " + ";
  out += fmtReal(std::abs(z.imag()));
  out += "i";
  return out;
}

std::string fmtComplexVector(const std::vector<Complex>& v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += fmtComplex(v[i]);
  }
  return out + "]";
}

std::string renderText(const Report& r) {
  std::ostringstream os;
  os << "== " << r.command << ": " << r.input << " ==\n";
  os << "tolerances: eq=" << fmtReal(r.tol.eq) << " integer=" << fmtReal(r.tol.integer)
     << "\n";
  for (const ReportSection& s : r.sections) {
    os << "\n-- " << s.title << " --\n";
    for (const ReportItem& it : s.items) os << it.key << ": " << it.value << "\n";
    for (const Check& c : s.checks) {
      os << (c.pass ? "[ok]   " : "[FAIL] ") << c.name;
      if (c.deviation != 0.0) os << " (deviation " << fmtReal(c.deviation) << ")";
      if (!c.witness.empty()) os << " at " << c.witness;
      os << "\n";
    }
  }
  os << "\nsummary: " << (r.pass() ? "PASS" : "FAIL")
     << " checks=" << r.checkCount() << " failures=" << r.failureCount() << "\n";
  return os.str();
}

std::string renderStructured(const Report& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["input"] = r.input;
  j["tolerances"] = {{"eq", fmtReal(r.tol.eq)}, {"integer", fmtReal(r.tol.integer)}};
  j["sections"] = nlohmann::ordered_json::array();
  for (const ReportSection& s : r.sections) {
    nlohmann::ordered_json sec;
    sec["title"] = s.title;
    sec["items"] = nlohmann::ordered_json::array();
    for (const ReportItem& it : s.items)
      sec["items"].push_back({{"key", it.key}, {"value", it.value}});
    sec["checks"] = nlohmann::ordered_json::array();
    for (const Check& c : s.checks) {
      nlohmann::ordered_json ch;
      ch["name"] = c.name;
      ch["pass"] = c.pass;
      ch["deviation"] = fmtReal(c.deviation);
      ch["witness"] = c.witness;
      sec["checks"].push_back(std::move(ch));
    }
    j["sections"].push_back(std::move(sec));
  }
  j["summary"] = {{"pass", r.pass()},
                  {"checks", r.checkCount()},
                  {"failures", r.failureCount()}};
  return j.dump(2) + "\n";
}

}  // namespace probgroup
