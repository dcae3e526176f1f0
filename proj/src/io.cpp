#include "phopf/io.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

namespace phopf {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

std::string message(const Error& e) { return std::string(e.what()).substr(e.kind().size() + 2); }

template <class... F>
struct overloaded : F... {
  using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

// ---------------------------------------------------------------- writing

json scalar_json(const Scalar& s) { return s.str(); }

json vec_json(const Vec& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.push_back({i, scalar_json(v[i])});
  return out;
}

json mat_json(const Mat& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) entries.push_back({i, j, scalar_json(m(i, j))});
  return {{"shape", {m.rows(), m.cols()}}, {"entries", entries}};
}

json tensor_json(const std::vector<SparseVec>& vs, std::size_t n) {
  json out = json::array();
  for (std::size_t x = 0; x < vs.size(); ++x)
    for (const auto& [k, c] : vs[x])
      if (!c.is_zero()) out.push_back({x, k / n, k % n, scalar_json(c)});
  return out;
}

json algebra_json(const AlgebraSC& a) {
  json products = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (const auto& [k, c] : a.product(i, j))
        if (!c.is_zero()) products.push_back({i, j, k, scalar_json(c)});
  return {{"kind", "algebra"}, {"dim", a.dim()}, {"names", a.names()}, {"products", products},
          {"unit", vec_json(a.unit())}};
}

json coalgebra_json(const CoalgebraSC& c) {
  std::vector<SparseVec> d;
  for (std::size_t i = 0; i < c.dim(); ++i) d.push_back(c.coproduct(i));
  return {{"kind", "coalgebra"}, {"dim", c.dim()}, {"names", c.names()}, {"coproducts", tensor_json(d, c.dim())},
          {"counit", vec_json(c.counit())}};
}

json group_json(const FiniteGroup& g) { return {{"kind", "group"}, {"names", g.names()}, {"table", g.table()}}; }

json set_action_json(const SetPartialAction& s) {
  json domains = json::array();
  for (const auto& d : s.domains) {
    json row = json::array();
    for (std::size_t x = 0; x < d.size(); ++x)
      if (d[x]) row.push_back(x);
    domains.push_back(row);
  }
  return {{"kind", "set-partial-action"}, {"points", s.points}, {"domains", domains}, {"maps", s.maps}};
}

json groupoid_json(const FiniteGroupoid& gd) {
  json arrows = json::array();
  for (const auto& a : gd.arrows) arrows.push_back({a.source, a.target, a.name});
  json compose = json::array();
  std::size_t n = gd.arrow_count();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (gd.comp(a, b) >= 0) compose.push_back({a, b, gd.comp(a, b)});
  return {{"kind", "groupoid"}, {"objects", gd.objects}, {"arrows", arrows}, {"compose", compose},
          {"inverse", gd.inverse}, {"units", gd.units}};
}

json algebroid_json(const HopfAlgebroid& h) {
  json j = {{"kind", "hopf-algebroid"},
            {"s_l", mat_json(h.s_l)},
            {"t_l", mat_json(h.t_l)},
            {"s_r", mat_json(h.s_r)},
            {"t_r", mat_json(h.t_r)},
            {"delta_l", tensor_json(h.delta_l, h.dim())},
            {"delta_r", tensor_json(h.delta_r, h.dim())},
            {"eps_l", mat_json(h.eps_l)},
            {"eps_r", mat_json(h.eps_r)}};
  if (h.antipode) j["antipode"] = mat_json(*h.antipode);
  return j;
}

json cring_json(const CRing& cr) {
  return {{"kind", "c-ring"},
          {"carrier", mat_json(cr.carrier.basis())},
          {"cotensor", mat_json(cr.cotensor.basis())},
          {"lambda", mat_json(cr.lambda)},
          {"rho", mat_json(cr.rho)},
          {"mu", mat_json(cr.mu)},
          {"eta", mat_json(cr.eta)},
          {"names", cr.names}};
}

json value_json(const FixtureValue& v) {
  return std::visit(
      overloaded{
          [](const FiniteGroup& g) { return group_json(g); },
          [](const AlgebraSC& a) { return algebra_json(a); },
          [](const CoalgebraSC& c) { return coalgebra_json(c); },
          [](const HopfPackage& h) {
            json j = {{"kind", "hopf"}};
            if (h.antipode) j["antipode"] = mat_json(*h.antipode);
            return j;
          },
          [](const Pairing& p) { return json{{"kind", "pairing"}, {"form", mat_json(p.form)}}; },
          [](const PartialAction& pa) { return json{{"kind", "partial-action"}, {"act", mat_json(pa.act)}}; },
          [](const RightPartialAction& ra) {
            return json{{"kind", "right-partial-action"}, {"act", mat_json(ra.act)}};
          },
          [](const PartialCoaction& pc) { return json{{"kind", "partial-coaction"}, {"rho", mat_json(pc.rho)}}; },
          [](const SetPartialAction& s) { return set_action_json(s); },
          [](const FiniteGroupoid& gd) { return groupoid_json(gd); },
          [](const HopfAlgebroid& h) { return algebroid_json(h); },
          [](const PartialModuleCoalgebra& pm) {
            return json{{"kind", "partial-module-coalgebra"}, {"act", mat_json(pm.act)}};
          },
          [](const PartialComoduleCoalgebra& pcc) {
            return json{{"kind", "partial-comodule-coalgebra"}, {"lam", mat_json(pcc.lam)}};
          },
          [](const CRing& cr) { return cring_json(cr); },
      },
      v);
}

bool is_flat(const json& j) {
  return std::none_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); });
}

// Like dump(2), but arrays without nested containers stay on one line.
void pretty(std::string& out, const json& j, int depth) {
  std::string pad(2 * (depth + 1), ' '), close(2 * depth, ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      out += (first ? "" : ",\n") + pad + json(it.key()).dump() + ": ";
      pretty(out, it.value(), depth + 1);
      first = false;
    }
    out += "\n" + close + "}";
  } else if (j.is_array() && !j.empty() && !is_flat(j)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += (i ? ",\n" : "") + pad;
      pretty(out, j[i], depth + 1);
    }
    out += "\n" + close + "]";
  } else if (j.is_array()) {
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
    out += "]";
  } else {
    out += j.dump();
  }
}

json entry_json(const FixtureEntry& e) {
  json j = value_json(e.value);
  for (const auto& [role, target] : e.refs) j[role] = target;
  return j;
}

// ---------------------------------------------------------------- reading

std::size_t line_of(const std::string& raw, const json& offending) {
  if (!offending.is_string()) return 0;
  auto pos = raw.find(offending.dump());
  if (pos == std::string::npos) return 0;
  return static_cast<std::size_t>(std::count(raw.begin(), raw.begin() + pos, '\n')) + 1;
}

class Reader {
 public:
  Reader(const std::string& raw, Field field) : raw_(raw), field_(field) {}

  Field field() const { return field_; }

  [[noreturn]] void fail(const std::string& path, const std::string& msg, const json* at = nullptr) const {
    std::string where = "field " + path;
    if (at) {
      if (auto line = line_of(raw_, *at)) where = "line " + std::to_string(line) + ", " + where;
    }
    throw SchemaError(where + ": " + msg);
  }

  const json& member(const json& j, const std::string& key, const std::string& path) const {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path + "." + key, "missing");
    return *it;
  }

  std::size_t index(const json& j, const std::string& path) const {
    if (!j.is_number_integer() || j.get<long long>() < 0) fail(path, "expected a non-negative integer", &j);
    return j.get<std::size_t>();
  }

  long long integer(const json& j, const std::string& path) const {
    if (!j.is_number_integer()) fail(path, "expected an integer", &j);
    return j.get<long long>();
  }

  std::string string(const json& j, const std::string& path) const {
    if (!j.is_string()) fail(path, "expected a string", &j);
    return j.get<std::string>();
  }

  Scalar scalar(const json& j, const std::string& path) const {
    if (!j.is_string()) fail(path, "scalars are strings \"p/q\"", &j);
    try {
      return Scalar::parse(j.get<std::string>(), field_);
    } catch (const Error& e) {
      fail(path, message(e), &j);
    }
  }

  const json& array(const json& j, const std::string& path) const {
    if (!j.is_array()) fail(path, "expected an array", &j);
    return j;
  }

  std::vector<std::string> strings(const json& j, const std::string& path) const {
    std::vector<std::string> out;
    std::size_t i = 0;
    for (const auto& s : array(j, path)) out.push_back(string(s, path + "[" + std::to_string(i++) + "]"));
    return out;
  }

  // A fixed-length tuple of indices followed by a scalar.
  std::pair<std::vector<std::size_t>, Scalar> coord(const json& j, std::size_t arity, const std::string& path,
                                                    const std::vector<std::size_t>& bounds) const {
    if (!j.is_array() || j.size() != arity + 1) fail(path, "expected " + std::to_string(arity + 1) + " items");
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < arity; ++k) {
      auto p = path + "[" + std::to_string(k) + "]";
      idx.push_back(index(j[k], p));
      if (idx.back() >= bounds[k]) fail(p, "index out of range");
    }
    return {idx, scalar(j[arity], path + "[" + std::to_string(arity) + "]")};
  }

  // Entries must be strictly increasing and nonzero.
  template <class Fn>
  void coords(const json& j, std::size_t arity, const std::string& path, const std::vector<std::size_t>& bounds,
              Fn&& fn) const {
    std::vector<std::size_t> prev;
    std::size_t i = 0;
    for (const auto& item : array(j, path)) {
      auto p = path + "[" + std::to_string(i++) + "]";
      auto [idx, c] = coord(item, arity, p, bounds);
      if (c.is_zero()) fail(p, "zero entries are omitted");
      if (!prev.empty() && !(prev < idx)) fail(p, "entries are not sorted");
      prev = idx;
      fn(idx, c);
    }
  }

  Vec vec(const json& j, std::size_t n, const std::string& path) const {
    Vec v = zeros(n);
    coords(j, 1, path, {n}, [&](const auto& idx, const Scalar& c) { v[idx[0]] = c; });
    return v;
  }

  Mat mat(const json& j, const std::string& path) const {
    const auto& shape = array(member(j, "shape", path), path + ".shape");
    if (shape.size() != 2) fail(path + ".shape", "expected [rows, cols]");
    std::size_t r = index(shape[0], path + ".shape[0]"), c = index(shape[1], path + ".shape[1]");
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < c; ++k) m(i, k) = Scalar::in_field(0, field_);
    coords(member(j, "entries", path), 2, path + ".entries", {r, c},
           [&](const auto& idx, const Scalar& s) { m(idx[0], idx[1]) = s; });
    return m;
  }

  Mat mat(const json& j, const std::string& key, const std::string& path, std::size_t rows,
          std::size_t cols) const {
    Mat m = mat(member(j, key, path), path + "." + key);
    if (m.rows() != rows || m.cols() != cols)
      fail(path + "." + key + ".shape", "expected " + std::to_string(rows) + "×" + std::to_string(cols));
    return m;
  }

  std::vector<SparseVec> tensor(const json& j, std::size_t count, std::size_t n, const std::string& path) const {
    std::vector<SparseVec> out(count);
    coords(j, 3, path, {count, n, n}, [&](const auto& idx, const Scalar& c) { out[idx[0]][idx[1] * n + idx[2]] = c; });
    return out;
  }

 private:
  const std::string& raw_;
  Field field_;
};

std::vector<std::string> names_or_default(const Reader& rd, const json& j, const std::string& path, std::size_t n,
                                          const std::string& stem) {
  auto it = j.find("names");
  if (it == j.end()) return default_names(n, stem);
  auto names = rd.strings(*it, path + ".names");
  if (names.size() != n) rd.fail(path + ".names", "expected " + std::to_string(n) + " names");
  return names;
}

AlgebraSC read_algebra(const Reader& rd, const json& j, const std::string& path) {
  std::size_t n = rd.index(rd.member(j, "dim", path), path + ".dim");
  std::vector<SparseVec> products(n * n);
  rd.coords(rd.member(j, "products", path), 3, path + ".products", {n, n, n},
            [&](const auto& idx, const Scalar& c) { products[idx[0] * n + idx[1]][idx[2]] = c; });
  Vec unit = rd.vec(rd.member(j, "unit", path), n, path + ".unit");
  return AlgebraSC(n, std::move(products), std::move(unit), names_or_default(rd, j, path, n, "e"));
}

CoalgebraSC read_coalgebra(const Reader& rd, const json& j, const std::string& path) {
  std::size_t n = rd.index(rd.member(j, "dim", path), path + ".dim");
  auto d = rd.tensor(rd.member(j, "coproducts", path), n, n, path + ".coproducts");
  Vec counit = rd.vec(rd.member(j, "counit", path), n, path + ".counit");
  return CoalgebraSC(n, std::move(d), std::move(counit), names_or_default(rd, j, path, n, "c"));
}

FiniteGroup read_group(const Reader& rd, const json& j, const std::string& path) {
  std::vector<std::vector<std::size_t>> table;
  const auto& rows = rd.array(rd.member(j, "table", path), path + ".table");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto p = path + ".table[" + std::to_string(i) + "]";
    std::vector<std::size_t> row;
    std::size_t k = 0;
    for (const auto& x : rd.array(rows[i], p)) row.push_back(rd.index(x, p + "[" + std::to_string(k++) + "]"));
    table.push_back(std::move(row));
  }
  std::vector<std::string> names;
  if (j.contains("names")) names = rd.strings(j["names"], path + ".names");
  return FiniteGroup(std::move(table), std::move(names));
}

std::optional<Mat> optional_mat(const Reader& rd, const json& j, const std::string& key, const std::string& path,
                                std::size_t n) {
  if (!j.contains(key)) return std::nullopt;
  return rd.mat(j, key, path, n, n);
}

class Loader {
 public:
  Loader(const Reader& rd, const json& objects, FixtureFile& out) : rd_(rd), objects_(objects), out_(out) {}

  void resolve(const std::string& name, const std::string& from) {
    if (out_.contains(name)) return;
    auto it = objects_.find(name);
    if (it == objects_.end())
      throw UnresolvedReference("\"" + name + "\"" + (from.empty() ? "" : " referenced from " + from));
    if (active_.count(name)) throw SchemaError("field objects." + name + ": circular reference");
    active_.insert(name);
    auto path = "objects." + name;
    try {
      out_.insert(read(name, *it, path));
    } catch (const SchemaError&) {
      throw;
    } catch (const UnresolvedReference&) {
      throw;
    } catch (const Error& e) {
      rd_.fail(path, e.what());
    }
    active_.erase(name);
  }

 private:
  template <class T>
  const T& ref(const json& j, const std::string& role, const std::string& path, std::map<std::string, std::string>& refs) {
    auto target = rd_.string(rd_.member(j, role, path), path + "." + role);
    resolve(target, path + "." + role);
    refs[role] = target;
    return out_.get<T>(target);
  }

  const HopfPackage& hopf_ref(const json& j, const std::string& role, const std::string& path,
                              std::map<std::string, std::string>& refs) {
    return ref<HopfPackage>(j, role, path, refs);
  }

  // Dimension of a referenced object on one side of a pairing.
  std::size_t side_dim(const json& j, const std::string& role, const std::string& path,
                       std::map<std::string, std::string>& refs) {
    auto target = rd_.string(rd_.member(j, role, path), path + "." + role);
    resolve(target, path + "." + role);
    refs[role] = target;
    return std::visit(overloaded{
                          [](const AlgebraSC& a) { return a.dim(); },
                          [](const CoalgebraSC& c) { return c.dim(); },
                          [](const HopfPackage& h) { return h.dim(); },
                          [&](const auto&) -> std::size_t {
                            rd_.fail(path + "." + role, "a pairing side must be an algebra, coalgebra or hopf");
                          },
                      },
                      out_.at(target).value);
  }

  FixtureEntry read(const std::string& name, const json& j, const std::string& path) {
    FixtureEntry e{name, FiniteGroup(), {}};
    auto kind = rd_.string(rd_.member(j, "kind", path), path + ".kind");
    auto& refs = e.refs;
    if (kind == "group") {
      e.value = read_group(rd_, j, path);
    } else if (kind == "algebra") {
      e.value = read_algebra(rd_, j, path);
    } else if (kind == "coalgebra") {
      e.value = read_coalgebra(rd_, j, path);
    } else if (kind == "hopf") {
      const auto& a = ref<AlgebraSC>(j, "algebra", path, refs);
      const auto& c = ref<CoalgebraSC>(j, "coalgebra", path, refs);
      if (a.dim() != c.dim()) rd_.fail(path, "algebra and coalgebra dimensions differ");
      e.value = HopfPackage(a, c, optional_mat(rd_, j, "antipode", path, a.dim()));
    } else if (kind == "pairing") {
      std::size_t l = side_dim(j, "left", path, refs), r = side_dim(j, "right", path, refs);
      e.value = Pairing{refs["left"], refs["right"], rd_.mat(j, "form", path, l, r)};
    } else if (kind == "partial-action" || kind == "right-partial-action") {
      const auto& h = hopf_ref(j, "hopf", path, refs);
      const auto& a = ref<AlgebraSC>(j, "algebra", path, refs);
      Mat act = rd_.mat(j, "act", path, a.dim(), a.dim() * h.dim());
      if (kind == "partial-action")
        e.value = PartialAction(h, a, act);
      else
        e.value = RightPartialAction{h, a, act};
    } else if (kind == "partial-coaction") {
      const auto& k = hopf_ref(j, "hopf", path, refs);
      const auto& a = ref<AlgebraSC>(j, "algebra", path, refs);
      e.value = PartialCoaction(k, a, rd_.mat(j, "rho", path, a.dim() * k.dim(), a.dim()));
    } else if (kind == "set-partial-action") {
      const auto& g = ref<FiniteGroup>(j, "group", path, refs);
      auto points = rd_.strings(rd_.member(j, "points", path), path + ".points");
      std::size_t n = points.size();
      const auto& dj = rd_.array(rd_.member(j, "domains", path), path + ".domains");
      const auto& mj = rd_.array(rd_.member(j, "maps", path), path + ".maps");
      if (dj.size() != g.order()) rd_.fail(path + ".domains", "one domain per group element");
      if (mj.size() != g.order()) rd_.fail(path + ".maps", "one map per group element");
      std::vector<std::vector<bool>> domains(g.order(), std::vector<bool>(n, false));
      std::vector<std::vector<std::int64_t>> maps(g.order());
      for (std::size_t gi = 0; gi < g.order(); ++gi) {
        auto dp = path + ".domains[" + std::to_string(gi) + "]";
        std::size_t k = 0;
        for (const auto& x : rd_.array(dj[gi], dp)) {
          auto xi = rd_.index(x, dp + "[" + std::to_string(k++) + "]");
          if (xi >= n) rd_.fail(dp, "point out of range");
          domains[gi][xi] = true;
        }
        auto mp = path + ".maps[" + std::to_string(gi) + "]";
        if (!mj[gi].is_array() || mj[gi].size() != n) rd_.fail(mp, "expected one entry per point");
        for (std::size_t x = 0; x < n; ++x) maps[gi].push_back(rd_.integer(mj[gi][x], mp + "[" + std::to_string(x) + "]"));
      }
      e.value = SetPartialAction(g, n, std::move(domains), std::move(maps), std::move(points));
    } else if (kind == "groupoid") {
      FiniteGroupoid gd;
      gd.objects = rd_.strings(rd_.member(j, "objects", path), path + ".objects");
      const auto& aj = rd_.array(rd_.member(j, "arrows", path), path + ".arrows");
      for (std::size_t i = 0; i < aj.size(); ++i) {
        auto p = path + ".arrows[" + std::to_string(i) + "]";
        if (!aj[i].is_array() || aj[i].size() != 3) rd_.fail(p, "expected [source, target, name]");
        Arrow a{rd_.index(aj[i][0], p + "[0]"), rd_.index(aj[i][1], p + "[1]"), rd_.string(aj[i][2], p + "[2]")};
        if (a.source >= gd.objects.size() || a.target >= gd.objects.size()) rd_.fail(p, "object out of range");
        gd.arrows.push_back(a);
      }
      std::size_t n = gd.arrows.size();
      gd.compose.assign(n * n, -1);
      const auto& cj = rd_.array(rd_.member(j, "compose", path), path + ".compose");
      for (std::size_t i = 0; i < cj.size(); ++i) {
        auto p = path + ".compose[" + std::to_string(i) + "]";
        if (!cj[i].is_array() || cj[i].size() != 3) rd_.fail(p, "expected [a, b, a∘b]");
        std::size_t a = rd_.index(cj[i][0], p + "[0]"), b = rd_.index(cj[i][1], p + "[1]"),
                    c = rd_.index(cj[i][2], p + "[2]");
        if (a >= n || b >= n || c >= n) rd_.fail(p, "arrow out of range");
        gd.compose[a * n + b] = static_cast<std::int64_t>(c);
      }
      auto indices = [&](const std::string& key, std::size_t len, std::size_t bound) {
        std::vector<std::size_t> out;
        const auto& arr = rd_.array(rd_.member(j, key, path), path + "." + key);
        if (arr.size() != len) rd_.fail(path + "." + key, "expected " + std::to_string(len) + " entries");
        for (std::size_t i = 0; i < len; ++i) {
          out.push_back(rd_.index(arr[i], path + "." + key + "[" + std::to_string(i) + "]"));
          if (out.back() >= bound) rd_.fail(path + "." + key, "arrow out of range");
        }
        return out;
      };
      gd.inverse = indices("inverse", n, n);
      gd.units = indices("units", gd.objects.size(), n);
      e.value = std::move(gd);
    } else if (kind == "hopf-algebroid") {
      HopfAlgebroid h;
      h.total = ref<AlgebraSC>(j, "total", path, refs);
      h.base = ref<AlgebraSC>(j, "base", path, refs);
      std::size_t n = h.total.dim(), a = h.base.dim();
      h.s_l = rd_.mat(j, "s_l", path, n, a);
      h.t_l = rd_.mat(j, "t_l", path, n, a);
      h.s_r = rd_.mat(j, "s_r", path, n, a);
      h.t_r = rd_.mat(j, "t_r", path, n, a);
      h.delta_l = rd_.tensor(rd_.member(j, "delta_l", path), n, n, path + ".delta_l");
      h.delta_r = rd_.tensor(rd_.member(j, "delta_r", path), n, n, path + ".delta_r");
      h.eps_l = rd_.mat(j, "eps_l", path, a, n);
      h.eps_r = rd_.mat(j, "eps_r", path, a, n);
      h.antipode = optional_mat(rd_, j, "antipode", path, n);
      e.value = std::move(h);
    } else if (kind == "partial-module-coalgebra") {
      const auto& h = hopf_ref(j, "hopf", path, refs);
      const auto& c = ref<CoalgebraSC>(j, "coalgebra", path, refs);
      e.value = PartialModuleCoalgebra(h, c, rd_.mat(j, "act", path, c.dim(), c.dim() * h.dim()));
    } else if (kind == "partial-comodule-coalgebra") {
      const auto& k = hopf_ref(j, "hopf", path, refs);
      const auto& c = ref<CoalgebraSC>(j, "coalgebra", path, refs);
      e.value = PartialComoduleCoalgebra(k, c, rd_.mat(j, "lam", path, k.dim() * c.dim(), c.dim()));
    } else if (kind == "c-ring") {
      CRing cr;
      cr.h = hopf_ref(j, "hopf", path, refs);
      cr.c = ref<CoalgebraSC>(j, "coalgebra", path, refs);
      std::size_t amb = cr.h.dim() * cr.c.dim();
      Mat basis = rd_.mat(rd_.member(j, "carrier", path), path + ".carrier");
      if (basis.cols() != amb) rd_.fail(path + ".carrier.shape", "expected " + std::to_string(amb) + " columns");
      std::vector<Vec> rows;
      for (std::size_t i = 0; i < basis.rows(); ++i) rows.push_back(basis.row(i));
      cr.carrier = Subspace::span(amb, rows);
      if (cr.carrier.dim() != basis.rows()) rd_.fail(path + ".carrier", "rows are linearly dependent");
      std::size_t n = cr.carrier.dim(), nc = cr.c.dim();
      Mat cot = rd_.mat(rd_.member(j, "cotensor", path), path + ".cotensor");
      if (cot.cols() != n * n) rd_.fail(path + ".cotensor.shape", "expected " + std::to_string(n * n) + " columns");
      rows.clear();
      for (std::size_t i = 0; i < cot.rows(); ++i) rows.push_back(cot.row(i));
      cr.cotensor = Subspace::span(n * n, rows);
      cr.lambda = rd_.mat(j, "lambda", path, nc * n, n);
      cr.rho = rd_.mat(j, "rho", path, n * nc, n);
      cr.mu = rd_.mat(j, "mu", path, n, n * n);
      cr.eta = rd_.mat(j, "eta", path, n, nc);
      cr.names = names_or_default(rd_, j, path, n, "x");
      e.value = std::move(cr);
    } else {
      rd_.fail(path + ".kind", "unknown kind \"" + kind + "\"", &j["kind"]);
    }
    return e;
  }

  const Reader& rd_;
  const json& objects_;
  FixtureFile& out_;
  std::set<std::string> active_;
};

// ---------------------------------------------------------------- reports

ojson witness_json(const Witness& w) {
  auto v = [](const Vec& x) {
    ojson a = ojson::array();
    for (const auto& s : x) a.push_back(s.str());
    return a;
  };
  return {{"tuple", w.tuple}, {"labels", w.labels}, {"lhs", v(w.lhs)}, {"rhs", v(w.rhs)}};
}

std::string vec_text(const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + "]";
}

std::string tuple_text(const Witness& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.labels.size(); ++i) s += (i ? "," : "") + w.labels[i];
  return s + ")";
}

}  // namespace

// ---------------------------------------------------------------- FixtureFile

const char* kind_name(const FixtureValue& v) {
  static const char* names[] = {"group",
                                "algebra",
                                "coalgebra",
                                "hopf",
                                "pairing",
                                "partial-action",
                                "right-partial-action",
                                "partial-coaction",
                                "set-partial-action",
                                "groupoid",
                                "hopf-algebroid",
                                "partial-module-coalgebra",
                                "partial-comodule-coalgebra",
                                "c-ring"};
  return names[v.index()];
}

bool FixtureFile::contains(const std::string& name) const { return entries_.count(name) != 0; }

const FixtureEntry& FixtureFile::at(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw UnresolvedReference("\"" + name + "\"");
  return it->second;
}

std::vector<std::string> FixtureFile::names_of(const std::string& kind) const {
  std::vector<std::string> out;
  for (const auto& [name, e] : entries_)
    if (kind == kind_name(e.value)) out.push_back(name);
  return out;
}

void FixtureFile::insert(FixtureEntry e) {
  for (const auto& [role, target] : e.refs)
    if (!contains(target)) throw UnresolvedReference("\"" + target + "\" referenced from " + e.name + "." + role);
  auto name = e.name;
  entries_.insert_or_assign(name, std::move(e));
}

template <class T>
std::string FixtureFile::ensure(const std::string& owner, const std::string& role, const T& v) {
  FixtureFile scratch = *this;
  std::string name = owner + "." + role;
  for (int k = 2; contains(name); ++k) name = owner + "." + role + std::to_string(k);
  scratch.add(name, v);
  json body = entry_json(scratch.at(name));
  for (const auto& [other, e] : entries_)
    if (entry_json(e) == body) return other;
  *this = std::move(scratch);
  return name;
}

void FixtureFile::add(const std::string& name, const FiniteGroup& g) { insert({name, g, {}}); }
void FixtureFile::add(const std::string& name, const AlgebraSC& a) { insert({name, a, {}}); }
void FixtureFile::add(const std::string& name, const CoalgebraSC& c) { insert({name, c, {}}); }

void FixtureFile::add(const std::string& name, const HopfPackage& h) {
  std::map<std::string, std::string> refs{{"algebra", ensure(name, "algebra", h.algebra)},
                                          {"coalgebra", ensure(name, "coalgebra", h.coalgebra)}};
  insert({name, h, refs});
}

void FixtureFile::add(const std::string& name, const Pairing& p) {
  insert({name, p, {{"left", p.left}, {"right", p.right}}});
}

void FixtureFile::add(const std::string& name, const PartialAction& pa) {
  std::map<std::string, std::string> refs{{"hopf", ensure(name, "hopf", pa.h)},
                                          {"algebra", ensure(name, "algebra", pa.a)}};
  insert({name, pa, refs});
}

void FixtureFile::add(const std::string& name, const RightPartialAction& ra) {
  std::map<std::string, std::string> refs{{"hopf", ensure(name, "hopf", ra.h)},
                                          {"algebra", ensure(name, "algebra", ra.a)}};
  insert({name, ra, refs});
}

void FixtureFile::add(const std::string& name, const PartialCoaction& pc) {
  std::map<std::string, std::string> refs{{"hopf", ensure(name, "hopf", pc.k)},
                                          {"algebra", ensure(name, "algebra", pc.a)}};
  insert({name, pc, refs});
}

void FixtureFile::add(const std::string& name, const SetPartialAction& spa) {
  insert({name, spa, {{"group", ensure(name, "group", spa.g)}}});
}

void FixtureFile::add(const std::string& name, const FiniteGroupoid& gd) { insert({name, gd, {}}); }

void FixtureFile::add(const std::string& name, const HopfAlgebroid& hh) {
  std::map<std::string, std::string> refs{{"total", ensure(name, "total", hh.total)},
                                          {"base", ensure(name, "base", hh.base)}};
  insert({name, hh, refs});
}

void FixtureFile::add(const std::string& name, const PartialModuleCoalgebra& pm) {
  std::map<std::string, std::string> refs{{"hopf", ensure(name, "hopf", pm.h)},
                                          {"coalgebra", ensure(name, "coalgebra", pm.c)}};
  insert({name, pm, refs});
}

void FixtureFile::add(const std::string& name, const PartialComoduleCoalgebra& pcc) {
  std::map<std::string, std::string> refs{{"hopf", ensure(name, "hopf", pcc.k)},
                                          {"coalgebra", ensure(name, "coalgebra", pcc.c)}};
  insert({name, pcc, refs});
}

void FixtureFile::add(const std::string& name, const CRing& cr) {
  std::map<std::string, std::string> refs{{"hopf", ensure(name, "hopf", cr.h)},
                                          {"coalgebra", ensure(name, "coalgebra", cr.c)}};
  insert({name, cr, refs});
}

void merge(FixtureFile& into, const FixtureFile& from) {
  if (!(into.field() == from.field()))
    throw FieldMismatch("merging fixtures over " + into.field().name() + " and " + from.field().name());
  std::vector<const FixtureEntry*> pending;
  for (const auto& [name, e] : from.entries()) {
    if (!into.contains(name)) {
      pending.push_back(&e);
    } else if (entry_json(into.at(name)) != entry_json(e)) {
      throw SchemaError("object \"" + name + "\" is defined differently in two files");
    }
  }
  while (!pending.empty()) {
    auto ready = std::stable_partition(pending.begin(), pending.end(), [&](const FixtureEntry* e) {
      return std::all_of(e->refs.begin(), e->refs.end(), [&](const auto& r) { return into.contains(r.second); });
    });
    if (ready == pending.begin()) into.insert(*pending.front());  // reports the unresolved reference
    for (auto it = pending.begin(); it != ready; ++it) into.insert(**it);
    pending.erase(pending.begin(), ready);
  }
  if (into.main().empty()) into.set_main(from.main());
}

bool operator==(const FixtureFile& a, const FixtureFile& b) { return dump_fixture(a) == dump_fixture(b); }

// ---------------------------------------------------------------- files

std::string dump_fixture(const FixtureFile& f) {
  json objects = json::object();
  for (const auto& [name, e] : f.entries()) objects[name] = entry_json(e);
  json doc = {{"schema", kFixtureSchema}, {"field", f.field().name()}, {"objects", objects}};
  if (!f.main().empty()) doc["main"] = f.main();
  std::string out;
  pretty(out, doc, 0);
  return out + "\n";
}

FixtureFile parse_fixture(const std::string& text, const Field* field_override) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
  Reader probe(text, Field{});
  const auto& schema = probe.member(doc, "schema", "");
  if (!schema.is_string() || schema.get<std::string>() != kFixtureSchema)
    probe.fail("schema", std::string("expected \"") + kFixtureSchema + "\"", &schema);
  Field field;
  const auto& fj = probe.member(doc, "field", "");
  try {
    field = Field::parse(probe.string(fj, "field"));
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    probe.fail("field", message(e), &fj);
  }
  if (field_override) field = *field_override;
  Reader rd(text, field);
  FixtureFile out(field);
  const auto& objects = rd.member(doc, "objects", "");
  if (!objects.is_object()) rd.fail("objects", "expected an object");
  Loader loader(rd, objects, out);
  for (auto it = objects.begin(); it != objects.end(); ++it) loader.resolve(it.key(), "");
  if (doc.contains("main")) {
    auto main = rd.string(doc["main"], "main");
    if (!out.contains(main)) throw UnresolvedReference("\"" + main + "\" referenced from main");
    out.set_main(main);
  }
  return out;
}

FixtureFile load(const std::string& path, const Field* field_override) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_fixture(ss.str(), field_override);
}

void save(const FixtureFile& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SchemaError("cannot write " + path);
  out << dump_fixture(f);
  if (!out) throw SchemaError("write failed for " + path);
}

// ---------------------------------------------------------------- reports

std::string report_to_json(const std::vector<Report>& reports) {
  ojson list = ojson::array();
  for (const auto& r : reports) {
    ojson axioms = ojson::array();
    for (const auto& a : r.axioms()) {
      ojson ws = ojson::array();
      for (const auto& w : a.witnesses) ws.push_back(witness_json(w));
      ojson aj = {{"id", a.id},
                  {"statement", a.statement},
                  {"verdict", verdict_name(a.verdict)},
                  {"informational", a.informational},
                  {"instances", a.instances},
                  {"failures", a.failures},
                  {"witnesses", ws}};
      if (!a.note.empty()) aj["note"] = a.note;
      axioms.push_back(aj);
    }
    ojson flags = ojson::object();
    for (const auto& [k, v] : r.flags()) flags[k] = v;
    ojson dims = ojson::object();
    for (const auto& [k, v] : r.dims()) dims[k] = v;
    list.push_back({{"subject", r.subject()},
                    {"passed", r.passed()},
                    {"axioms", axioms},
                    {"flags", flags},
                    {"dims", dims},
                    {"notes", r.notes()}});
  }
  ojson doc = {{"schema", kReportSchema}, {"reports", list}};
  return doc.dump(2) + "\n";
}

std::string report_to_text(const std::vector<Report>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << "== " << r.subject() << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& a : r.axioms()) {
      std::string tag = a.verdict == Verdict::pass ? "pass" : a.verdict == Verdict::fail ? "FAIL" : "open";
      if (a.informational && a.verdict != Verdict::pass) tag = "info";
      os << "  " << tag << "  " << a.id;
      if (!a.statement.empty() && a.statement != a.id) os << "  " << a.statement;
      if (a.failures)
        os << "  [" << a.failures << "/" << a.instances << " fail]";
      else if (a.instances)
        os << "  [" << a.instances << "]";
      os << "\n";
      for (const auto& w : a.witnesses) os << "        at " << tuple_text(w) << ": " << vec_text(w.lhs) << " ≠ " << vec_text(w.rhs) << "\n";
      if (!a.note.empty()) os << "        note: " << a.note << "\n";
    }
    if (!r.flags().empty()) {
      os << "  flags:";
      for (const auto& [k, v] : r.flags()) os << " " << k << "=" << (v ? "yes" : "no");
      os << "\n";
    }
    if (!r.dims().empty()) {
      os << "  dims:";
      for (const auto& [k, v] : r.dims()) os << " " << k << "=" << v;
      os << "\n";
    }
    for (const auto& n : r.notes()) os << "  note: " << n << "\n";
  }
  return os.str();
}

std::vector<Report> parse_report(const std::string& text) {
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
  if (doc.value("schema", "") != kReportSchema) throw SchemaError(std::string("expected \"") + kReportSchema + "\"");
  std::vector<Report> out;
  try {
    for (const auto& rj : doc.at("reports")) {
      Report r(rj.at("subject").get<std::string>());
      for (const auto& aj : rj.at("axioms")) {
        AxiomResult a;
        a.id = aj.at("id").get<std::string>();
        a.statement = aj.at("statement").get<std::string>();
        auto v = aj.at("verdict").get<std::string>();
        a.verdict = v == "pass" ? Verdict::pass : v == "fail" ? Verdict::fail : Verdict::undetermined;
        a.informational = aj.at("informational").get<bool>();
        a.instances = aj.at("instances").get<std::size_t>();
        a.failures = aj.at("failures").get<std::size_t>();
        a.note = aj.value("note", "");
        for (const auto& wj : aj.at("witnesses")) {
          Witness w;
          w.tuple = wj.at("tuple").get<std::vector<std::size_t>>();
          w.labels = wj.at("labels").get<std::vector<std::string>>();
          for (const auto& s : wj.at("lhs")) w.lhs.push_back(Scalar::parse(s.get<std::string>()));
          for (const auto& s : wj.at("rhs")) w.rhs.push_back(Scalar::parse(s.get<std::string>()));
          a.witnesses.push_back(std::move(w));
        }
        r.add(std::move(a));
      }
      for (const auto& [k, v] : rj.at("flags").items()) r.set_flag(k, v.get<bool>());
      for (const auto& [k, v] : rj.at("dims").items()) r.set_dim(k, v.get<std::size_t>());
      for (const auto& n : rj.at("notes")) r.note(n.get<std::string>());
      out.push_back(std::move(r));
    }
  } catch (const ojson::exception& e) {
    throw SchemaError(std::string("malformed report: ") + e.what());
  }
  return out;
}

}  // namespace phopf
