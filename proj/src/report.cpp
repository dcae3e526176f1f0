#include "phopf/report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

namespace phopf {

namespace {
std::atomic<unsigned> g_threads{1};
}

void set_check_threads(unsigned n) { g_threads = n == 0 ? 1 : n; }
unsigned check_threads() { return g_threads; }

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::undetermined: return "undetermined";
  }
  return "?";
}

bool AxiomResult::has_witness(const std::vector<std::size_t>& tuple) const {
  return std::any_of(witnesses.begin(), witnesses.end(),
                     [&](const Witness& w) { return w.tuple == tuple; });
}

void Report::add_fact(std::string id, std::string statement, bool holds, std::string note) {
  AxiomResult r;
  r.id = std::move(id);
  r.statement = std::move(statement);
  r.instances = 1;
  r.failures = holds ? 0 : 1;
  r.verdict = holds ? Verdict::pass : Verdict::fail;
  r.note = std::move(note);
  axioms_.push_back(std::move(r));
}

void Report::add_undetermined(std::string id, std::string statement, std::string note) {
  AxiomResult r;
  r.id = std::move(id);
  r.statement = std::move(statement);
  r.verdict = Verdict::undetermined;
  r.note = std::move(note);
  axioms_.push_back(std::move(r));
}

void Report::append(const Report& other, const std::string& prefix) {
  for (auto r : other.axioms_) {
    r.id = prefix + r.id;
    axioms_.push_back(std::move(r));
  }
  for (const auto& [k, v] : other.flags_) flags_[prefix + k] = v;
  for (const auto& [k, v] : other.dims_) dims_[prefix + k] = v;
  for (const auto& n : other.notes_) notes_.push_back(prefix + n);
}

bool Report::add_property(AxiomResult r) {
  r.informational = true;
  bool holds = r.verdict == Verdict::pass;
  axioms_.push_back(std::move(r));
  return holds;
}

bool Report::passed() const {
  return std::none_of(axioms_.begin(), axioms_.end(), [](const AxiomResult& r) {
    return r.verdict == Verdict::fail && !r.informational;
  });
}

const AxiomResult* Report::find(const std::string& id) const {
  for (const auto& r : axioms_)
    if (r.id == id) return &r;
  return nullptr;
}

const AxiomResult* Report::first_failure() const {
  for (const auto& r : axioms_)
    if (r.verdict == Verdict::fail && !r.informational) return &r;
  return nullptr;
}

bool Report::flag(const std::string& k) const {
  auto it = flags_.find(k);
  return it != flags_.end() && it->second;
}

std::vector<std::string> Report::failed_ids() const {
  std::vector<std::string> ids;
  for (const auto& r : axioms_)
    if (r.verdict == Verdict::fail && !r.informational) ids.push_back(r.id);
  return ids;
}

Axis basis_axis(std::size_t size, const std::vector<std::string>& names) {
  return Axis{size, [names](std::size_t i) {
                return i < names.size() ? names[i] : "e" + std::to_string(i);
              }};
}

namespace {

struct Chunk {
  std::size_t failures = 0;
  std::vector<Witness> witnesses;
};

Instance decode(std::size_t flat, const std::vector<Axis>& axes) {
  Instance t(axes.size());
  for (std::size_t k = axes.size(); k-- > 0;) {
    t[k] = flat % axes[k].size;
    flat /= axes[k].size;
  }
  return t;
}

void run_range(std::size_t lo, std::size_t hi, const std::vector<Axis>& axes,
               const std::function<Evaluation(const Instance&)>& eval, Chunk& out) {
  for (std::size_t f = lo; f < hi; ++f) {
    Instance t = decode(f, axes);
    auto [lhs, rhs] = eval(t);
    if (lhs == rhs) continue;
    ++out.failures;
    if (out.witnesses.size() < AxiomResult::kMaxWitnesses) {
      Witness w;
      w.tuple = t;
      for (std::size_t k = 0; k < t.size(); ++k) w.labels.push_back(axes[k].label(t[k]));
      w.lhs = std::move(lhs);
      w.rhs = std::move(rhs);
      out.witnesses.push_back(std::move(w));
    }
  }
}

}  // namespace

AxiomResult check_identity(std::string id, std::string statement, const std::vector<Axis>& axes,
                           const std::function<Evaluation(const Instance&)>& eval) {
  AxiomResult r;
  r.id = std::move(id);
  r.statement = std::move(statement);
  std::size_t total = 1;
  for (const auto& a : axes) total *= a.size;
  r.instances = total;

  unsigned threads = std::min<std::size_t>(check_threads(), std::max<std::size_t>(total, 1));
  std::vector<Chunk> chunks(threads);
  if (threads <= 1) {
    run_range(0, total, axes, eval, chunks[0]);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    std::size_t step = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      std::size_t lo = std::min(total, t * step), hi = std::min(total, lo + step);
      pool.emplace_back([&, t, lo, hi] {
        try {
          run_range(lo, hi, axes, eval, chunks[t]);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  for (auto& c : chunks) {
    r.failures += c.failures;
    for (auto& w : c.witnesses)
      if (r.witnesses.size() < AxiomResult::kMaxWitnesses) r.witnesses.push_back(std::move(w));
  }
  r.verdict = r.failures == 0 ? Verdict::pass : Verdict::fail;
  return r;
}

}  // namespace phopf
