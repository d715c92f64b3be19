#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "chores/instance.hpp"
#include "chores/mms.hpp"
#include "chores/rational.hpp"
#include "chores/valuation.hpp"

namespace chores {

// value / reference with the conventions 0/0 = 0 and x/0 = infinity for x > 0.
struct Ratio {
  Rational value;
  bool infinite = false;

  static Ratio of(const Rational& value, const Rational& reference);
  std::string fraction() const;  // "p/q" or "inf"
  double decimal() const;
  bool at_most(const Rational& alpha) const { return !infinite && value <= alpha; }
  bool at_least(const Rational& target) const { return infinite || value >= target; }
};

bool operator<(const Ratio& a, const Ratio& b);

// Reference value for an agent: exact MMS, or a lower bound when the partition
// search is over budget (ratios against a lower bound overstate the true ratio).
struct MmsReference {
  Rational value;
  bool exact = true;
};

std::vector<MmsReference> mms_references(const ChoreInstance& inst, const OracleBudget& budget = {});
std::vector<MmsReference> mms_references(const MmsProfile& profile);

struct AgentAudit {
  int agent = 0;
  Rational value;
  bool value_exact = true;
  Rational reference;  // MMS_i for MMS audits, v_i(M)/n for PROP audits
  bool reference_exact = true;
  Ratio ratio;
  bool passes = false;  // MMS: ratio <= alpha; PROP: PROP1 at alpha

  // PROP audits only: smallest alpha at which the agent is PROP1 / PROPX.
  Ratio prop1_alpha;
  Ratio propx_alpha;
  bool prop1 = false;
  bool propx = false;
};

enum class AuditNotion { Mms, Prop };

struct AuditReport {
  AuditNotion notion = AuditNotion::Mms;
  Rational alpha;
  std::vector<AgentAudit> agents;
  Ratio max_ratio;  // overall alpha achieved (MMS) or max PROP1 alpha (PROP)
  bool all_pass = true;
  bool heuristic = false;  // some value or reference is not exact
};

AuditReport audit_mms(const ChoreInstance& inst, const Allocation& alloc,
                      const std::vector<MmsReference>& mms, const Rational& alpha = Rational(1),
                      const OracleBudget& budget = {});

AuditReport audit_prop(const ChoreInstance& inst, const Allocation& alloc, const Rational& alpha,
                       const OracleBudget& budget = {});

// CSV columns: instance_id,agent,value,reference,ratio,ratio_decimal,verdict,exact
void write_audit_csv_header(std::ostream& out);
void write_audit_csv_rows(std::ostream& out, const std::string& instance_id,
                          const AuditReport& report);
void write_audit_summary(std::ostream& out, const AuditReport& report);

// ---------------------------------------------------------------------------
// Lower-bound certification.
// ---------------------------------------------------------------------------

enum class CertifyMode { Exhaustive, Sampled };

struct CertifyOptions {
  CertifyMode mode = CertifyMode::Exhaustive;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  std::uint64_t max_allocations = 10'000'000;
  OracleBudget budget;
};

struct LowerBoundCertificate {
  CertifyMode mode = CertifyMode::Exhaustive;
  Rational target;
  std::uint64_t allocations_checked = 0;
  std::uint64_t seed = 0;
  std::vector<Rational> mms;
  // Over all checked allocations, the smallest value of max_i v_i(X_i) / MMS_i.
  Ratio min_max_ratio;
  Allocation best_allocation;  // attains min_max_ratio
  bool certified = false;      // every checked allocation reached the target
  std::optional<Allocation> counterexample;
  std::string statement;
};

// Exhaustive mode walks all n^m allocations (BudgetExceeded beyond
// max_allocations); sampled mode draws uniform random allocations and only
// reports evidence.
LowerBoundCertificate certify_lower_bound(const ChoreInstance& inst, const Rational& target,
                                          const CertifyOptions& options = {});

// Covering-plane refutation: if every agent i misses some plane C_{i,l_i}, the
// point (l_1, ..., l_n) lies in no bundle and is returned. A genuine partition
// therefore always yields nullopt.
std::optional<std::vector<int>> uncovered_point(const ChoreInstance& inst, const Allocation& alloc);

}  // namespace chores
