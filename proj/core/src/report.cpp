#include "omkit/report.hpp"

#include <algorithm>
#include <sstream>

namespace omkit {

LawResult& ValidationReport::add(std::string name, Severity severity) {
  LawResult& r = laws_.emplace_back();
  r.name = std::move(name);
  r.severity = severity;
  return r;
}

void ValidationReport::merge(const ValidationReport& other) {
  laws_.insert(laws_.end(), other.laws_.begin(), other.laws_.end());
  notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
}

bool ValidationReport::passed() const { return violation_count() == 0; }

std::size_t ValidationReport::violation_count() const {
  std::size_t total = 0;
  for (const LawResult& r : laws_) {
    if (r.severity == Severity::law) total += r.violations;
  }
  return total;
}

const LawResult* ValidationReport::find(std::string_view name) const {
  auto it = std::find_if(laws_.begin(), laws_.end(),
                         [&](const LawResult& r) { return r.name == name; });
  return it == laws_.end() ? nullptr : &*it;
}

bool ValidationReport::holds(std::string_view name) const {
  const LawResult* r = find(name);
  return r != nullptr && r->holds();
}

std::string render_witness(const Witness& w,
                           const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.elements.size(); ++i) {
    if (i) os << ", ";
    const ElementId e = w.elements[i];
    if (e >= 0 && static_cast<std::size_t>(e) < labels.size()) {
      os << labels[static_cast<std::size_t>(e)];
    } else {
      os << '#' << e;
    }
  }
  os << ')';
  if (!w.detail.empty()) os << ' ' << w.detail;
  return os.str();
}

std::string render_report(const ValidationReport& report,
                          const std::vector<std::string>& labels) {
  std::ostringstream os;
  for (const LawResult& r : report.laws()) {
    std::string verdict;
    if (r.skipped) {
      verdict = "skip";
    } else if (r.severity == Severity::property) {
      verdict = r.holds() ? "yes " : "no  ";
    } else if (r.severity == Severity::info) {
      verdict = r.holds() ? "ok  " : "info";
    } else {
      verdict = r.holds() ? "pass" : "FAIL";
    }
    os << verdict << "  " << r.name;
    if (r.violations > 0) {
      os << "  (" << r.violations << (r.violations == 1 ? " violation)" : " violations)");
    }
    if (!r.note.empty()) os << "  " << r.note;
    os << '\n';
    for (const Witness& w : r.witnesses) {
      os << "      witness " << render_witness(w, labels) << '\n';
    }
  }
  for (const std::string& n : report.notes()) os << "note  " << n << '\n';
  const std::size_t v = report.violation_count();
  os << "RESULT " << (v == 0 ? "pass" : "fail") << ' ' << v << '\n';
  return os.str();
}

}  // namespace omkit
