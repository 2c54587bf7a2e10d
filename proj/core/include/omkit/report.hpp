#pragma once

#include <cstddef>
#include <deque>
#include <string>
#include <string_view>
#include <vector>

#include "omkit/subset.hpp"

namespace omkit {

inline constexpr std::size_t kDefaultWitnessCap = 10;

// Concrete counterexample for a law: the offending elements plus an
// optional human-readable explanation.
struct Witness {
  std::vector<ElementId> elements;
  std::string detail;
};

// law: a failure means the structure is not in the class being validated.
// property: a yes/no attribute (divisible, idempotent) that is reported but
// does not make the report fail.
// info: observations only.
enum class Severity { law, property, info };

struct LawResult {
  std::string name;
  Severity severity = Severity::law;
  std::size_t violations = 0;
  std::vector<Witness> witnesses;
  bool skipped = false;
  std::string note;

  bool holds() const { return !skipped && violations == 0; }

  // Counts every violation; keeps at most `cap` witnesses.
  void record(Witness w, std::size_t cap = kDefaultWitnessCap) {
    ++violations;
    if (witnesses.size() < cap) witnesses.push_back(std::move(w));
  }
};

class ValidationReport {
 public:
  LawResult& add(std::string name, Severity severity = Severity::law);
  void merge(const ValidationReport& other);
  void add_note(std::string note) { notes_.push_back(std::move(note)); }

  // True iff no law-severity entry has violations.
  bool passed() const;
  std::size_t violation_count() const;

  const LawResult* find(std::string_view name) const;
  // False when the entry is missing, skipped or has violations.
  bool holds(std::string_view name) const;

  const std::deque<LawResult>& laws() const { return laws_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  // deque: references returned by add() stay valid.
  std::deque<LawResult> laws_;
  std::vector<std::string> notes_;
};

// Plain-text rendering: one line per law, witnesses indented beneath,
// notes, then a final `RESULT pass|fail <n_violations>` line.
std::string render_report(const ValidationReport& report,
                          const std::vector<std::string>& labels);

std::string render_witness(const Witness& w,
                           const std::vector<std::string>& labels);

}  // namespace omkit
