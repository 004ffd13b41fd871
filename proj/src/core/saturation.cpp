#include "sdpabs/saturation.hpp"

namespace sdpabs {

const char* verdict_name(Verdict v) { return v == Verdict::Sat ? "sat" : "unsat"; }

namespace {

class Collect final : public DerivationSink {
 public:
  explicit Collect(std::vector<PredId>& out) : out_(out) {}
  void derive(PredId conclusion, std::span<const PredId>) override { out_.push_back(conclusion); }

 private:
  std::vector<PredId>& out_;
};

class Conflicts final : public ContradictionSink {
 public:
  explicit Conflicts(std::vector<std::vector<PredId>>& out) : out_(out) {}
  void contradiction(std::span<const PredId> ants) override { out_.emplace_back(ants.begin(), ants.end()); }

 private:
  std::vector<std::vector<PredId>>& out_;
};

}  // namespace

DpResult dp_check(Theory& theory, std::span<const PredId> g, DpOptions options) {
  DpResult result;
  FactSet w;
  for (PredId p : g) w.insert(p);

  const std::size_t bound = options.iterations.value_or(theory.depth_bound());
  std::size_t new_from = 0;
  std::vector<PredId> derived;
  for (std::size_t i = 0; i < bound; ++i) {
    // Everything derivable from facts older than new_from was added in an
    // earlier iteration, so only rule instances touching new facts matter.
    const std::size_t before = w.size();
    derived.clear();
    Collect sink(derived);
    theory.infer(w, new_from, sink);
    for (PredId p : derived) w.insert(p);
    new_from = before;
    ++result.iterations;
    if (options.record_trace) result.trace.emplace_back(w.items().begin(), w.items().end());
    if (options.stop_at_fixpoint && w.size() == before) break;
  }

  Conflicts sink(result.conflicts);
  theory.contradictions(w, sink);
  result.verdict = result.conflicts.empty() ? Verdict::Sat : Verdict::Unsat;
  result.facts.assign(w.items().begin(), w.items().end());
  return result;
}

}  // namespace sdpabs
