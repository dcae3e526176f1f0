#include "phopf/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "phopf/coalgebra_partial.hpp"
#include "phopf/dualities.hpp"
#include "phopf/groups.hpp"
#include "phopf/hopf_algebroid.hpp"
#include "phopf/io.hpp"
#include "phopf/partial_actions.hpp"
#include "phopf/partial_coactions.hpp"
#include "phopf/structures.hpp"

namespace phopf {

namespace {

struct Options {
  std::vector<std::string> files;
  std::string object;
  std::string as;
  std::string format = "text";
  std::string field;
  unsigned threads = 1;
  std::string out;
  std::string name;
  std::string pairing;
  std::string action, coaction, module, comodule;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string negate(const std::string& hypothesis) {
  for (auto [from, to] : {std::pair{" is ", " not "}, std::pair{" has an ", " has no "}}) {
    auto pos = hypothesis.find(from);
    if (pos != std::string::npos)
      return hypothesis.substr(0, pos) + to + hypothesis.substr(pos + std::string(from).size());
  }
  return "fails: " + hypothesis;
}

FixtureFile load_all(const Options& o) {
  Field f;
  const Field* override_field = nullptr;
  if (!o.field.empty()) {
    f = Field::parse(o.field);
    override_field = &f;
  }
  FixtureFile merged;
  bool first = true;
  for (const auto& path : o.files) {
    auto file = load(path, override_field);
    if (first) {
      merged = std::move(file);
      first = false;
    } else {
      merge(merged, file);
    }
  }
  return merged;
}

std::string kind_of(const FixtureFile& f, const std::string& name) { return kind_name(f.at(name).value); }

// Picks the named object, else `main`, else the only object of an accepted kind.
std::string select(const FixtureFile& f, const std::string& requested, const std::vector<std::string>& kinds,
                   const std::string& role) {
  auto accepts = [&](const std::string& name) {
    return std::find(kinds.begin(), kinds.end(), kind_of(f, name)) != kinds.end();
  };
  std::string want;
  for (const auto& k : kinds) want += (want.empty() ? "" : " or ") + k;
  if (!requested.empty()) {
    if (!accepts(requested))
      throw SchemaError("object \"" + requested + "\" is a " + kind_of(f, requested) + ", expected " + want);
    return requested;
  }
  if (!f.main().empty() && accepts(f.main())) return f.main();
  std::vector<std::string> found;
  for (const auto& k : kinds)
    for (const auto& n : f.names_of(k)) found.push_back(n);
  if (found.size() == 1) return found.front();
  if (found.empty()) throw SchemaError("no " + want + " found for the " + role);
  throw UsageError("several objects could be the " + role + "; choose one by name");
}

// The pairing between two named objects, rows on `left`.
std::string select_pairing(const FixtureFile& f, const std::string& requested, const std::string& left,
                           const std::string& right) {
  if (!requested.empty()) {
    const auto& p = f.get<Pairing>(requested);
    if (p.left != left || p.right != right)
      throw SchemaError("pairing \"" + requested + "\" does not pair " + left + " with " + right);
    return requested;
  }
  for (const auto& n : f.names_of("pairing")) {
    const auto& p = f.get<Pairing>(n);
    if (p.left == left && p.right == right) return n;
  }
  throw SchemaError("no pairing between " + left + " and " + right);
}

// The object and everything it refers to.
FixtureFile closure(const FixtureFile& f, const std::string& root) {
  FixtureFile out(f.field());
  std::set<std::string> done;
  std::function<void(const std::string&)> visit = [&](const std::string& n) {
    if (!done.insert(n).second) return;
    const auto& e = f.at(n);
    for (const auto& [role, target] : e.refs) visit(target);
    out.insert(e);
  };
  visit(root);
  out.set_main(root);
  return out;
}

Report pairing_report(const FixtureFile& f, const Pairing& p) {
  const auto& l = f.at(p.left).value;
  const auto& r = f.at(p.right).value;
  if (auto* h = std::get_if<HopfPackage>(&l)) {
    if (auto* k = std::get_if<HopfPackage>(&r)) return check_pairing(p.form, *h, *k, PairingKind::hopf, false);
    if (auto* c = std::get_if<CoalgebraSC>(&r)) return check_pairing(p.form, h->algebra, *c, false);
  }
  if (auto* a = std::get_if<AlgebraSC>(&l)) {
    if (auto* c = std::get_if<CoalgebraSC>(&r)) return check_pairing(p.form, *a, *c, false);
    if (auto* k = std::get_if<HopfPackage>(&r)) return check_pairing(p.form, *a, k->coalgebra, false);
  }
  throw SchemaError("a pairing needs an algebra or hopf on the left and a coalgebra or hopf on the right");
}

Report algebroid_report(const HopfAlgebroid& h) {
  try {
    return check_hopf_algebroid(h);
  } catch (const BialgebroidFailure& e) {
    Report rep("Hopf algebroid");
    rep.append(e.reports()[0], "left:");
    rep.append(e.reports()[1], "right:");
    return rep;
  }
}

Report check_object(const FixtureFile& f, const std::string& name, const std::string& as) {
  const auto& v = f.at(name).value;
  std::string kind = kind_name(v);
  Report rep(name);
  if (auto* h = std::get_if<HopfPackage>(&v)) {
    static const std::map<std::string, PackageLevel> levels = {{"algebra", PackageLevel::algebra},
                                                               {"coalgebra", PackageLevel::coalgebra},
                                                               {"bialgebra", PackageLevel::bialgebra},
                                                               {"hopf", PackageLevel::hopf}};
    auto it = levels.find(as.empty() ? "hopf" : as);
    if (it == levels.end()) throw UsageError("a hopf object cannot be checked as " + as);
    rep.append(check_package(*h, it->second), "");
    rep.set_flag("commutative", h->algebra.is_commutative());
    rep.set_flag("cocommutative", h->coalgebra.is_cocommutative());
    return rep;
  }
  if (auto* ha = std::get_if<HopfAlgebroid>(&v)) {
    if (as == "bialgebroid") {
      rep.append(check_left_bialgebroid(*ha), "left:");
      rep.append(check_right_bialgebroid(*ha), "right:");
    } else if (as.empty() || as == kind) {
      rep.append(algebroid_report(*ha), "");
    } else {
      throw UsageError("a hopf-algebroid cannot be checked as " + as);
    }
    rep.set_dim("carrier", ha->dim());
    return rep;
  }
  if (!as.empty() && as != kind) throw UsageError("object \"" + name + "\" is a " + kind + ", not a " + as);
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FiniteGroup>) {
          rep.add_fact("group", "the table is a group", true);
          rep.set_flag("abelian", x.is_abelian());
          rep.set_dim("order", x.order());
        } else if constexpr (std::is_same_v<T, AlgebraSC>) {
          rep.append(check_algebra(x), "");
          rep.set_flag("commutative", x.is_commutative());
        } else if constexpr (std::is_same_v<T, CoalgebraSC>) {
          rep.append(check_coalgebra(x), "");
          rep.set_flag("cocommutative", x.is_cocommutative());
        } else if constexpr (std::is_same_v<T, Pairing>) {
          rep.append(pairing_report(f, x), "");
        } else if constexpr (std::is_same_v<T, PartialAction>) {
          rep.append(check_partial_action(x), "");
        } else if constexpr (std::is_same_v<T, RightPartialAction>) {
          rep.append(check_right_partial_action(x), "");
        } else if constexpr (std::is_same_v<T, PartialCoaction>) {
          rep.append(check_partial_coaction(x), "");
        } else if constexpr (std::is_same_v<T, SetPartialAction>) {
          rep.append(check_set_partial_action(x), "");
        } else if constexpr (std::is_same_v<T, FiniteGroupoid>) {
          rep.append(check_groupoid(x), "");
          rep.set_dim("arrows", x.arrow_count());
        } else if constexpr (std::is_same_v<T, PartialModuleCoalgebra>) {
          rep.append(check_partial_module_coalgebra(x), "");
        } else if constexpr (std::is_same_v<T, PartialComoduleCoalgebra>) {
          rep.append(check_partial_comodule_coalgebra(x), "");
        } else if constexpr (std::is_same_v<T, CRing>) {
          rep.append(check_cring(x), "");
        }
      },
      v);
  return rep;
}

void emit(const std::vector<Report>& reports, const Options& o, std::ostream& out) {
  std::string text = o.format == "json" ? report_to_json(reports) : report_to_text(reports);
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file || !(file << text)) throw SchemaError("cannot write " + o.out);
}

int verdict(const std::vector<Report>& reports) {
  bool ok = std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.passed(); });
  return ok ? kExitPass : kExitAxiomFailure;
}

int cmd_check(const Options& o, std::ostream& out) {
  auto f = load_all(o);
  std::string name;
  if (!o.object.empty()) {
    name = o.object;
    f.at(name);
  } else if (!f.main().empty()) {
    name = f.main();
  } else {
    auto kinds = o.as.empty() ? std::vector<std::string>{} : std::vector<std::string>{o.as};
    if (o.as == "bialgebra" || o.as == "algebra" || o.as == "coalgebra") kinds.push_back("hopf");
    if (o.as == "bialgebroid") kinds = {"hopf-algebroid"};
    if (kinds.empty()) throw UsageError("no main object; choose one by name");
    name = select(f, "", kinds, "checked object");
  }
  std::vector<Report> reports{check_object(f, name, o.as)};
  emit(reports, o, out);
  return verdict(reports);
}

int cmd_report(const Options& o, std::ostream& out) {
  if (o.files.size() == 1) {
    std::ifstream in(o.files[0], std::ios::binary);
    if (!in) throw SchemaError("cannot open " + o.files[0]);
    std::stringstream ss;
    ss << in.rdbuf();
    if (ss.str().find(kReportSchema) != std::string::npos) {
      auto reports = parse_report(ss.str());
      emit(reports, o, out);
      return verdict(reports);
    }
  }
  auto f = load_all(o);
  std::vector<Report> reports;
  for (const auto& [name, e] : f.entries()) reports.push_back(check_object(f, name, ""));
  emit(reports, o, out);
  return verdict(reports);
}

struct Construction {
  std::string flag;
  std::string help;
  std::string suffix;
};

const std::vector<Construction>& constructions() {
  static const std::vector<Construction> list = {
      {"smash-algebroid", "A#H from a partial action", "smash"},
      {"split-algebroid", "(A⊗K)ρ(1) from a partial coaction", "split"},
      {"groupoid", "groupoid of a set partial action", "groupoid"},
      {"function-algebroid", "function algebroid of a groupoid or set partial action", "fun"},
      {"kG", "partial kG-action of a set partial action", "kG"},
      {"dual", "partial (kG)*-coaction of a set partial action", "dual"},
      {"cring", "C-ring of a partial module coalgebra", "cring"},
      {"cosmash", "cosmash coproduct of a partial comodule coalgebra", "cosmash"},
      {"to-coaction", "partial coaction from a partial action through a pairing", "coaction"},
      {"to-action", "partial action from a partial coaction through a pairing", "action"},
  };
  return list;
}

int cmd_build(const Options& o, const std::string& which, std::ostream& out) {
  auto f = load_all(o);
  std::string src, kind;
  auto target = [&](const std::string& suffix) { return o.name.empty() ? src + "." + suffix : o.name; };
  std::string made;
  std::size_t dim = 0;
  auto hopf_of = [&](const std::string& n) { return f.at(n).refs.at("hopf"); };

  if (which == "smash-algebroid") {
    src = select(f, o.object, {"partial-action"}, "partial action");
    auto hh = smash_hopf_algebroid(f.get<PartialAction>(src));
    made = target("smash"), dim = hh.dim();
    f.add(made, hh);
  } else if (which == "split-algebroid") {
    src = select(f, o.object, {"partial-coaction"}, "partial coaction");
    auto hh = partial_split_hopf_algebroid(f.get<PartialCoaction>(src));
    made = target("split"), dim = hh.dim();
    f.add(made, hh);
  } else if (which == "groupoid") {
    src = select(f, o.object, {"set-partial-action"}, "set partial action");
    auto gd = groupoid_of_action(f.get<SetPartialAction>(src));
    made = target("groupoid"), dim = gd.arrow_count();
    f.add(made, gd);
  } else if (which == "function-algebroid") {
    src = select(f, o.object, {"groupoid", "set-partial-action"}, "groupoid");
    FiniteGroupoid gd = kind_of(f, src) == "groupoid" ? f.get<FiniteGroupoid>(src)
                                                       : groupoid_of_action(f.get<SetPartialAction>(src));
    auto hh = function_hopf_algebroid(gd);
    made = target("fun"), dim = hh.dim();
    f.add(made, hh);
  } else if (which == "kG" || which == "dual") {
    src = select(f, o.object, {"set-partial-action"}, "set partial action");
    const auto& spa = f.get<SetPartialAction>(src);
    if (which == "kG") {
      auto pa = to_kG_partial_action(spa);
      made = target("kG"), dim = pa.a.dim();
      f.add(made, pa);
    } else {
      auto pc = to_dual_partial_coaction(spa);
      made = target("dual"), dim = pc.a.dim();
      f.add(made, pc);
    }
  } else if (which == "cring") {
    src = select(f, o.object, {"partial-module-coalgebra"}, "partial module coalgebra");
    auto cr = cring(f.get<PartialModuleCoalgebra>(src));
    made = target("cring"), dim = cr.dim();
    f.add(made, cr);
  } else if (which == "cosmash") {
    src = select(f, o.object, {"partial-comodule-coalgebra"}, "partial comodule coalgebra");
    auto cs = cosmash(f.get<PartialComoduleCoalgebra>(src));
    made = target("cosmash"), dim = cs.dim();
    f.add(made, cs.coalgebra);
  } else if (which == "to-coaction") {
    src = select(f, o.object.empty() ? o.action : o.object, {"partial-action"}, "partial action");
    const auto& pa = f.get<PartialAction>(src);
    std::string pn;
    if (!o.pairing.empty()) {
      pn = o.pairing;
    } else {
      for (const auto& n : f.names_of("pairing"))
        if (f.get<Pairing>(n).left == hopf_of(src) && kind_of(f, f.get<Pairing>(n).right) == "hopf") pn = n;
      if (pn.empty()) throw SchemaError("no pairing with " + hopf_of(src) + " on the left");
    }
    const auto& p = f.get<Pairing>(pn);
    if (p.left != hopf_of(src)) throw SchemaError("pairing \"" + pn + "\" does not start at " + hopf_of(src));
    auto pc = coaction_from_action(pa, f.get<HopfPackage>(p.right), p.form);
    made = target("coaction"), dim = pc.a.dim();
    f.add(made, pc);
  } else if (which == "to-action") {
    src = select(f, o.object.empty() ? o.coaction : o.object, {"partial-coaction"}, "partial coaction");
    const auto& pc = f.get<PartialCoaction>(src);
    std::string pn;
    if (!o.pairing.empty()) {
      pn = o.pairing;
    } else {
      for (const auto& n : f.names_of("pairing"))
        if (f.get<Pairing>(n).right == hopf_of(src) && kind_of(f, f.get<Pairing>(n).left) == "hopf") pn = n;
      if (pn.empty()) throw SchemaError("no pairing with " + hopf_of(src) + " on the right");
    }
    const auto& p = f.get<Pairing>(pn);
    if (p.right != hopf_of(src)) throw SchemaError("pairing \"" + pn + "\" does not end at " + hopf_of(src));
    auto pa = action_from_coaction(pc, f.get<HopfPackage>(p.left), p.form);
    made = target("action"), dim = pa.a.dim();
    f.add(made, pa);
  }

  auto result = closure(f, made);
  std::string text = dump_fixture(result);
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file || !(file << text)) throw SchemaError("cannot write " + o.out);
    out << made << ": " << kind_of(f, made) << ", dim " << dim << "\n";
  }
  return kExitPass;
}

int cmd_pair(const Options& o, const std::string& which, std::ostream& out) {
  auto f = load_all(o);
  Report rep;
  if (which == "skew") {
    auto pc_name = select(f, o.coaction, {"partial-coaction"}, "partial coaction");
    auto pa_name = select(f, o.action, {"partial-action"}, "partial action");
    auto pn = select_pairing(f, o.pairing, f.at(pa_name).refs.at("hopf"), f.at(pc_name).refs.at("hopf"));
    auto sp = canonical_skew_pairing(f.get<PartialCoaction>(pc_name), f.get<PartialAction>(pa_name),
                                     f.get<Pairing>(pn).form);
    rep = Report(pc_name + " | " + pa_name);
    rep.append(check_skew_pairing(sp), "");
  } else if (which == "smash-cosmash") {
    auto pa_name = select(f, o.action, {"partial-action"}, "partial action");
    auto cc_name = select(f, o.comodule, {"partial-comodule-coalgebra"}, "partial comodule coalgebra");
    const auto& pa = f.get<PartialAction>(pa_name);
    const auto& pcc = f.get<PartialComoduleCoalgebra>(cc_name);
    auto hp = select_pairing(f, "", f.at(pa_name).refs.at("hopf"), f.at(cc_name).refs.at("hopf"));
    auto sp = select_pairing(f, o.pairing, f.at(pa_name).refs.at("algebra"), f.at(cc_name).refs.at("coalgebra"));
    auto res = smash_cosmash_pairing(pa, pcc, f.get<Pairing>(hp).form, f.get<Pairing>(sp).form);
    rep = Report(pa_name + " | " + cc_name);
    rep.append(res.report, "");
  } else if (which == "module-transfer") {
    auto pm_name = select(f, o.module, {"partial-module-coalgebra"}, "partial module coalgebra");
    const auto& pm = f.get<PartialModuleCoalgebra>(pm_name);
    std::string pn = o.pairing;
    if (pn.empty()) {
      for (const auto& n : f.names_of("pairing"))
        if (f.get<Pairing>(n).right == f.at(pm_name).refs.at("coalgebra") &&
            kind_of(f, f.get<Pairing>(n).left) == "algebra")
          pn = n;
      if (pn.empty()) throw SchemaError("no pairing of an algebra with " + f.at(pm_name).refs.at("coalgebra"));
    }
    const auto& p = f.get<Pairing>(pn);
    auto res = module_coalgebra_vs_module_algebra(pm, f.get<AlgebraSC>(p.left), p.form);
    rep = Report(pm_name + " | " + pn);
    rep.append(res.report, "");
  } else if (which == "comodule-transfer") {
    auto cc_name = select(f, o.comodule, {"partial-comodule-coalgebra"}, "partial comodule coalgebra");
    auto pc_name = select(f, o.coaction, {"partial-coaction"}, "partial coaction");
    auto pn = select_pairing(f, o.pairing, f.at(pc_name).refs.at("algebra"), f.at(cc_name).refs.at("coalgebra"));
    auto res = comodule_coalgebra_vs_comodule_algebra(f.get<PartialComoduleCoalgebra>(cc_name),
                                                      f.get<PartialCoaction>(pc_name), f.get<Pairing>(pn).form);
    rep = Report(cc_name + " | " + pc_name);
    rep.append(res, "");
  }
  std::vector<Report> reports{rep};
  emit(reports, o, out);
  return verdict(reports);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partial Hopf actions, coactions and their Hopf algebroids"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("files", o.files, "Fixture files (merged in order)")->required();
    sub->add_option("--object", o.object, "Object to use");
    sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--field", o.field, "Reinterpret scalars over Q or Fp:<p>");
    sub->add_option("--threads", o.threads, "Checker threads")->check(CLI::PositiveNumber);
    sub->add_option("--out", o.out, "Output path");
  };

  auto* check = app.add_subcommand("check", "Check the axioms of an object");
  common(check);
  check->add_option("--as", o.as, "Structure to check for");

  auto* build = app.add_subcommand("build", "Construct a derived object");
  common(build);
  build->add_option("--name", o.name, "Name of the constructed object");
  build->add_option("--pairing", o.pairing, "Pairing for transfers");
  build->add_option("--action", o.action, "Partial action");
  build->add_option("--coaction", o.coaction, "Partial coaction");
  auto* build_group = build->add_option_group("construction");
  std::map<std::string, bool> build_flags;
  for (const auto& c : constructions()) build_group->add_flag("--" + c.flag, build_flags[c.flag], c.help);
  build_group->require_option(1);

  auto* pair = app.add_subcommand("pair", "Check a pairing between constructions");
  common(pair);
  pair->add_option("--pairing", o.pairing, "Structure or Hopf pairing");
  pair->add_option("--action", o.action, "Partial action");
  pair->add_option("--coaction", o.coaction, "Partial coaction");
  pair->add_option("--module", o.module, "Partial module coalgebra");
  pair->add_option("--comodule", o.comodule, "Partial comodule coalgebra");
  auto* pair_group = pair->add_option_group("pairing kind");
  std::map<std::string, bool> pair_flags;
  for (std::string k : {"skew", "smash-cosmash", "module-transfer", "comodule-transfer"})
    pair_group->add_flag("--" + k, pair_flags[k]);
  pair_group->require_option(1);

  auto* report = app.add_subcommand("report", "Check every object, or re-render a saved report");
  common(report);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitSchema;
  }

  set_check_threads(o.threads);
  try {
    if (check->parsed()) return cmd_check(o, out);
    if (report->parsed()) return cmd_report(o, out);
    if (build->parsed()) {
      for (const auto& [k, on] : build_flags)
        if (on) return cmd_build(o, k, out);
    }
    if (pair->parsed()) {
      for (const auto& [k, on] : pair_flags)
        if (on) return cmd_pair(o, k, out);
    }
    return kExitSchema;
  } catch (const PreconditionFailure& e) {
    err << "refused: " << negate(e.hypothesis()) << "\n";
    return kExitPrecondition;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const BialgebroidFailure& e) {
    std::vector<Report> reports = e.reports();
    emit(reports, o, out);
    err << e.what() << "\n";
    return kExitAxiomFailure;
  } catch (const Error& e) {
    err << e.what() << "\n";
    static const std::set<std::string> schema = {"SchemaError",       "UnresolvedReference", "FieldMismatch",
                                                 "DimensionMismatch", "MalformedTable",      "InvalidGroupTable"};
    static const std::set<std::string> refused = {"DegeneratePairing", "NotGlobal", "NotCentral", "NotIdempotent"};
    if (schema.count(e.kind())) return kExitSchema;
    if (refused.count(e.kind())) return kExitPrecondition;
    return kExitAxiomFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitSchema;
  }
}

}  // namespace phopf
