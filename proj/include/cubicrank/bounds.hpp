#pragma once

#include <optional>

#include "cubicrank/invariants.hpp"
#include "cubicrank/io.hpp"

namespace cubicrank {

// one removal of the substitution method: drop the given slice of the given
// mode (1, 2 or 3) and fold it into the kept slices with fresh symbolic
// multipliers, one per kept slice
struct SubstStep {
  int mode = 1;
  int index = 0;
};

struct SubstSchedule {
  std::vector<SubstStep> steps;
};

Json schedule_to_json(const SubstSchedule& s);
SubstSchedule schedule_from_json(const Json& j);

enum class BoundField { Complex, Real };

struct BoundReport {
  int lower = 0;
  std::optional<int> upper;  // absent when no upper bound is known
  BoundField field = BoundField::Complex;
  std::vector<Json> certificates;  // one machine-checkable record per bound
};

Json bound_report_to_json(const BoundReport& r);

// rank of the mode-m unfolding; the maximum over modes is a rank lower bound
int unfolding_rank(const GeneralTensor& t, int mode);
int flattening_lower_bound(const GeneralTensor& t);

// Run the schedule with symbolic multipliers.  Conclusive exactly when the
// final square slice has a nonzero constant determinant; the bound is then
// (#removals) + (final slice size).  Invalid schedules (zero or dependent
// removed slice, final slice not square) throw with the failing step.
std::optional<BoundReport> subst_lower_bound(const GeneralTensor& t,
                                             const SubstSchedule& s);

// Deterministic search over single-mode removal schedules (at most
// per_mode_cap removals, all orders), merged with the flattening bound.
BoundReport subst_schedule_search(const GeneralTensor& t, int per_mode_cap = 3,
                                  bool parallel = true);

// one real substitution step at explicit multipliers (exact when rational)
GeneralTensor real_subst_reduce(const GeneralTensor& t, int mode, int index,
                                const std::vector<FieldElement>& lambda);

// claim: target = sum of squares + constant (so constant > 0 certifies that
// the target has no real zeros)
struct SosCertificate {
  QPoly target;
  std::vector<QPoly> squares;
  Rat constant = 0;
};

Json sos_to_json(const SosCertificate& c);
SosCertificate sos_from_json(const Json& j);

struct SosCheck {
  bool ok = false;
  std::string first_diff;  // first differing monomial when the check fails
};

SosCheck verify_sos(const SosCertificate& c);

// Exact symmetric border rank for n <= 4 through the test ladder
// (flattening minors, compressed-core Aronhold/Strassen, quintic orbit
// membership); an interval for n > 4 where only partial tests apply.
BoundReport border_rank_ladder(const CubicForm& f, std::uint64_t seed = 1,
                               int trials = 24, bool parallel = true);

struct ComonVerdict {
  bool coincide = false;
  int sym_ub = 0;
  int flattening = 0;
  std::string reasoning;
};

// rank/symmetric-rank coincidence from a verified decomposition: the bound
// it certifies must not exceed flattening rank + 2
ComonVerdict comon_verdict(const CubicForm& f, const Decomposition& d);

// Non-certifying numeric evidence for the real substitution method: the
// smallest |final determinant| found by multistart minimization over real
// multipliers.  A strictly positive infimum is only evidence, never a proof.
struct RealInfimumReport {
  double infimum = 0.0;
  int restarts = 0;
};

RealInfimumReport real_det_infimum(const GeneralTensor& t,
                                   const SubstSchedule& s,
                                   std::uint64_t seed = 1, int restarts = 16);

}  // namespace cubicrank
