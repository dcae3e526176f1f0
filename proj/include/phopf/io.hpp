#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "phopf/coalgebra_partial.hpp"
#include "phopf/group.hpp"
#include "phopf/groups.hpp"
#include "phopf/hopf_algebroid.hpp"
#include "phopf/partial_actions.hpp"
#include "phopf/partial_coactions.hpp"
#include "phopf/report.hpp"
#include "phopf/scalar.hpp"
#include "phopf/structures.hpp"

namespace phopf {

inline constexpr const char* kFixtureSchema = "phopf-fixture/1";
inline constexpr const char* kReportSchema = "phopf-report/1";

// A bilinear form between two named objects; rows belong to `left`.
struct Pairing {
  std::string left, right;
  Mat form;

  friend bool operator==(const Pairing&, const Pairing&) = default;
};

using FixtureValue =
    std::variant<FiniteGroup, AlgebraSC, CoalgebraSC, HopfPackage, Pairing, PartialAction, RightPartialAction,
                 PartialCoaction, SetPartialAction, FiniteGroupoid, HopfAlgebroid, PartialModuleCoalgebra,
                 PartialComoduleCoalgebra, CRing>;

const char* kind_name(const FixtureValue& v);

struct FixtureEntry {
  std::string name;
  FixtureValue value;
  // Names of the objects this one is built from, keyed by role ("hopf", "algebra", ...).
  std::map<std::string, std::string> refs;
};

class FixtureFile {
 public:
  FixtureFile() = default;
  explicit FixtureFile(Field f) : field_(f) {}

  Field field() const { return field_; }
  const std::string& main() const { return main_; }
  void set_main(std::string name) { main_ = std::move(name); }
  const std::map<std::string, FixtureEntry>& entries() const { return entries_; }

  bool contains(const std::string& name) const;
  const FixtureEntry& at(const std::string& name) const;
  // Objects of a kind, by name.
  std::vector<std::string> names_of(const std::string& kind) const;

  // Adds an object under `name`, registering its constituents. A constituent equal to an
  // existing object (names included) is shared; otherwise it is stored as "name.role".
  void add(const std::string& name, const FiniteGroup& g);
  void add(const std::string& name, const AlgebraSC& a);
  void add(const std::string& name, const CoalgebraSC& c);
  void add(const std::string& name, const HopfPackage& h);
  void add(const std::string& name, const Pairing& p);
  void add(const std::string& name, const PartialAction& pa);
  void add(const std::string& name, const RightPartialAction& ra);
  void add(const std::string& name, const PartialCoaction& pc);
  void add(const std::string& name, const SetPartialAction& spa);
  void add(const std::string& name, const FiniteGroupoid& gd);
  void add(const std::string& name, const HopfAlgebroid& hh);
  void add(const std::string& name, const PartialModuleCoalgebra& pm);
  void add(const std::string& name, const PartialComoduleCoalgebra& pcc);
  void add(const std::string& name, const CRing& cr);

  // Raw insertion; refs must already resolve.
  void insert(FixtureEntry e);

  template <class T>
  const T& get(const std::string& name) const {
    const auto& e = at(name);
    if (auto* p = std::get_if<T>(&e.value)) return *p;
    throw SchemaError("object \"" + name + "\" is a " + kind_name(e.value));
  }

  friend bool operator==(const FixtureFile& a, const FixtureFile& b);

 private:
  template <class T>
  std::string ensure(const std::string& owner, const std::string& role, const T& v);

  Field field_;
  std::string main_;
  std::map<std::string, FixtureEntry> entries_;
};

// Adds the objects of `from`; a name present in both must denote the same object.
void merge(FixtureFile& into, const FixtureFile& from);

// Canonical serialization: sorted keys, two-space indent, sparse entries sorted, zeros omitted.
std::string dump_fixture(const FixtureFile& f);
// Parses a fixture. `field_override`, when set, reinterprets every scalar in that field.
FixtureFile parse_fixture(const std::string& text, const Field* field_override = nullptr);
FixtureFile load(const std::string& path, const Field* field_override = nullptr);
void save(const FixtureFile& f, const std::string& path);

std::string report_to_json(const std::vector<Report>& reports);
std::string report_to_text(const std::vector<Report>& reports);
// Reads a phopf-report/1 document back.
std::vector<Report> parse_report(const std::string& text);

}  // namespace phopf
