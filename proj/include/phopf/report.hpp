#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "phopf/linalg.hpp"

namespace phopf {

enum class Verdict { pass, fail, undetermined };
const char* verdict_name(Verdict v);

struct Witness {
  std::vector<std::size_t> tuple;
  std::vector<std::string> labels;
  Vec lhs;
  Vec rhs;
};

struct AxiomResult {
  std::string id;
  std::string statement;
  Verdict verdict = Verdict::pass;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::vector<Witness> witnesses;  // lexicographic in the tuple, capped at kMaxWitnesses
  std::string note;
  // Optional properties (such as symmetry) are reported but do not fail the report.
  bool informational = false;

  static constexpr std::size_t kMaxWitnesses = 64;
  bool has_witness(const std::vector<std::size_t>& tuple) const;
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string subject) : subject_(std::move(subject)) {}

  const std::string& subject() const { return subject_; }
  const std::vector<AxiomResult>& axioms() const { return axioms_; }
  const std::map<std::string, bool>& flags() const { return flags_; }
  const std::map<std::string, std::size_t>& dims() const { return dims_; }
  const std::vector<std::string>& notes() const { return notes_; }

  void add(AxiomResult r) { axioms_.push_back(std::move(r)); }
  // Adds an optional property and returns whether it holds.
  bool add_property(AxiomResult r);
  // Records a single yes/no fact as an axiom with no witnesses.
  void add_fact(std::string id, std::string statement, bool holds, std::string note = {});
  void add_undetermined(std::string id, std::string statement, std::string note);
  void append(const Report& other, const std::string& prefix);
  void set_flag(const std::string& k, bool v) { flags_[k] = v; }
  void set_dim(const std::string& k, std::size_t v) { dims_[k] = v; }
  void note(std::string n) { notes_.push_back(std::move(n)); }

  bool passed() const;
  bool has_failure() const { return !passed(); }
  const AxiomResult* find(const std::string& id) const;
  const AxiomResult* first_failure() const;
  bool flag(const std::string& k) const;
  std::vector<std::string> failed_ids() const;

 private:
  std::string subject_;
  std::vector<AxiomResult> axioms_;
  std::map<std::string, bool> flags_;
  std::map<std::string, std::size_t> dims_;
  std::vector<std::string> notes_;
};

// One index range of an axiom quantifier, with a printer for witness labels.
struct Axis {
  std::size_t size;
  std::function<std::string(std::size_t)> label;
};

Axis basis_axis(std::size_t size, const std::vector<std::string>& names);

using Instance = std::vector<std::size_t>;
using Evaluation = std::pair<Vec, Vec>;

// Evaluates both sides of an identity on every tuple of the product of axes
// (lexicographic order) and records the disagreements.
AxiomResult check_identity(std::string id, std::string statement, const std::vector<Axis>& axes,
                           const std::function<Evaluation(const Instance&)>& eval);

void set_check_threads(unsigned n);
unsigned check_threads();

}  // namespace phopf
