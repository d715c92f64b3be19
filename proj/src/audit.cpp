#include "chores/audit.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <memory>
#include <numeric>
#include <sstream>

#include "chores/subset_cache.hpp"

namespace chores {

Ratio Ratio::of(const Rational& value, const Rational& reference) {
  if (reference == 0) return value == 0 ? Ratio{Rational(0), false} : Ratio{Rational(0), true};
  return Ratio{value / reference, false};
}

std::string Ratio::fraction() const { return infinite ? "inf" : format_fraction(value); }

double Ratio::decimal() const {
  return infinite ? std::numeric_limits<double>::infinity() : to_double(value);
}

bool operator<(const Ratio& a, const Ratio& b) {
  if (a.infinite) return false;
  if (b.infinite) return true;
  return a.value < b.value;
}

std::vector<MmsReference> mms_references(const ChoreInstance& inst, const OracleBudget& budget) {
  std::vector<MmsReference> refs;
  for (int i = 0; i < inst.n; ++i) {
    try {
      refs.push_back({mms_exact(inst, i, budget).value, true});
    } catch (const BudgetExceeded&) {
      refs.push_back({mms_bounds(inst, i, budget).lower, false});
    }
  }
  return refs;
}

std::vector<MmsReference> mms_references(const MmsProfile& profile) {
  std::vector<MmsReference> refs;
  for (const auto& entry : profile.agents) refs.push_back({entry.value, true});
  return refs;
}

namespace {

// Exact values through a subset cache where possible, heuristic upper values
// (flagged) beyond the oracle budget.
class AgentValuer {
 public:
  AgentValuer(const ChoreInstance& inst, int agent, const OracleBudget& budget)
      : inst_(inst), agent_(agent), budget_(budget) {
    if (inst.m <= SubsetValueCache::kMaxItems)
      cache_ = std::make_unique<SubsetValueCache>(inst, agent, budget);
  }

  Valuation operator()(const ItemSet& items) {
    if (exact_within_budget(inst_, agent_, items.size(), budget_)) {
      if (cache_) return Valuation{cache_->value(mask_of(items)), std::monostate{}, true};
      return value_exact(inst_, agent_, items, budget_);
    }
    return value_upper_heuristic(inst_, agent_, items);
  }

 private:
  const ChoreInstance& inst_;
  int agent_;
  OracleBudget budget_;
  std::unique_ptr<SubsetValueCache> cache_;
};

void finish(AuditReport& report) {
  report.max_ratio = Ratio{Rational(0), false};
  for (const auto& a : report.agents) {
    const Ratio& r = report.notion == AuditNotion::Mms ? a.ratio : a.prop1_alpha;
    if (report.max_ratio < r) report.max_ratio = r;
    report.all_pass = report.all_pass && a.passes;
    report.heuristic = report.heuristic || !a.value_exact || !a.reference_exact;
  }
}

}  // namespace

AuditReport audit_mms(const ChoreInstance& inst, const Allocation& alloc,
                      const std::vector<MmsReference>& mms, const Rational& alpha,
                      const OracleBudget& budget) {
  require_partition(alloc, inst.n, inst.m);
  if (static_cast<int>(mms.size()) != inst.n)
    throw std::invalid_argument("audit_mms: need one MMS reference per agent");
  AuditReport report;
  report.notion = AuditNotion::Mms;
  report.alpha = alpha;
  for (int i = 0; i < inst.n; ++i) {
    AgentValuer valuer(inst, i, budget);
    Valuation v = valuer(alloc.bundles[i]);
    AgentAudit a;
    a.agent = i;
    a.value = v.value;
    a.value_exact = v.exact;
    a.reference = mms[i].value;
    a.reference_exact = mms[i].exact;
    a.ratio = Ratio::of(a.value, a.reference);
    a.passes = a.ratio.at_most(alpha);
    report.agents.push_back(std::move(a));
  }
  finish(report);
  return report;
}

AuditReport audit_prop(const ChoreInstance& inst, const Allocation& alloc, const Rational& alpha,
                       const OracleBudget& budget) {
  require_partition(alloc, inst.n, inst.m);
  AuditReport report;
  report.notion = AuditNotion::Prop;
  report.alpha = alpha;
  ItemSet everything(inst.m);
  std::iota(everything.begin(), everything.end(), 0);

  for (int i = 0; i < inst.n; ++i) {
    AgentValuer valuer(inst, i, budget);
    const Valuation grand = valuer(everything);
    const ItemSet& bundle = alloc.bundles[i];
    const Valuation own = valuer(bundle);

    AgentAudit a;
    a.agent = i;
    a.value = own.value;
    a.value_exact = own.exact;
    a.reference = grand.value / inst.n;
    a.reference_exact = grand.exact;
    a.ratio = Ratio::of(a.value, a.reference);

    if (bundle.empty()) {
      a.prop1_alpha = a.propx_alpha = Ratio{Rational(0), false};
    } else {
      std::optional<Rational> least, most;
      for (std::size_t k = 0; k < bundle.size(); ++k) {
        ItemSet rest;
        for (std::size_t t = 0; t < bundle.size(); ++t)
          if (t != k) rest.push_back(bundle[t]);
        const Valuation v = valuer(rest);
        a.value_exact = a.value_exact && v.exact;
        if (!least || v.value < *least) least = v.value;
        if (!most || v.value > *most) most = v.value;
      }
      a.prop1_alpha = Ratio::of(*least, a.reference);
      a.propx_alpha = Ratio::of(*most, a.reference);
    }
    a.prop1 = a.prop1_alpha.at_most(alpha);
    a.propx = a.propx_alpha.at_most(alpha);
    a.passes = a.prop1;
    report.agents.push_back(std::move(a));
  }
  finish(report);
  return report;
}

void write_audit_csv_header(std::ostream& out) {
  out << "instance_id,agent,value,reference,ratio,ratio_decimal,verdict,exact\n";
}

namespace {

std::string decimal_text(const Ratio& r) {
  if (r.infinite) return "inf";
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << r.decimal();
  return os.str();
}

}  // namespace

void write_audit_csv_rows(std::ostream& out, const std::string& instance_id,
                          const AuditReport& report) {
  for (const auto& a : report.agents) {
    out << instance_id << ',' << a.agent + 1 << ',' << format_value(a.value) << ','
        << format_value(a.reference) << ',' << a.ratio.fraction() << ',' << decimal_text(a.ratio)
        << ',' << (a.passes ? "pass" : "fail") << ','
        << (a.value_exact && a.reference_exact ? "exact" : "heuristic") << '\n';
  }
}

void write_audit_summary(std::ostream& out, const AuditReport& report) {
  const bool mms = report.notion == AuditNotion::Mms;
  out << "notion: " << (mms ? "mms" : "prop") << '\n';
  out << "alpha: " << format_value(report.alpha) << '\n';
  out << "agents: " << report.agents.size() << '\n';
  for (const auto& a : report.agents) {
    out << "agent " << a.agent + 1 << ": value " << format_value(a.value)
        << (a.value_exact ? "" : " (heuristic)") << ", " << (mms ? "mms " : "prop ")
        << format_value(a.reference) << (a.reference_exact ? "" : " (bound)") << ", ratio "
        << a.ratio.fraction();
    if (!mms)
      out << ", prop1 alpha " << a.prop1_alpha.fraction() << ", propx alpha "
          << a.propx_alpha.fraction();
    out << ", " << (a.passes ? "pass" : "fail") << '\n';
  }
  out << (mms ? "max ratio: " : "max prop1 alpha: ") << report.max_ratio.fraction() << " ("
      << decimal_text(report.max_ratio) << ")\n";
  out << "verdict: " << (report.all_pass ? "pass" : "fail")
      << (report.heuristic ? " (heuristic values or bounds involved)" : "") << '\n';
}

}  // namespace chores
