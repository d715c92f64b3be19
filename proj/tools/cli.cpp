#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "chores/allocators.hpp"
#include "chores/audit.hpp"
#include "chores/generators.hpp"
#include "chores/io.hpp"
#include "chores/mms.hpp"

namespace chores::cli {

namespace {

struct Options {
  std::string kind;
  std::string instance;
  std::string allocation;
  std::string allocator;
  std::string alpha = "2";
  std::string delta = "1/10";
  std::string out;
  std::string format = "text";
  std::string notion = "mms";
  std::string mode = "auto";
  std::string model = "bin";
  std::string family = "random-binpacking";
  std::uint64_t seed = 1;
  std::uint64_t trials = 100000;
  int budget_items = 0;
  int n = 3;
  int m = 9;
  int count = 100;
  int threads = 0;
  Size max_capacity = 50;
  int max_machines = 3;
  Size max_speed = 5;
  Size max_size = 20;
};

// Thrown for command-line mistakes found after parsing.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

OracleBudget budget_of(const Options& o) {
  OracleBudget budget;
  if (o.budget_items < 0) throw UsageError("--budget-items must be positive");
  if (o.budget_items > 0) budget.max_items = budget.mms_max_items = o.budget_items;
  return budget;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty())
    out << text;
  else
    write_file(o.out, text);
}

std::string instance_id(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

ChoreInstance load_instance(const Options& o) {
  if (o.instance.empty()) throw UsageError("--instance is required");
  return parse_instance(read_file(o.instance));
}

void require_format(const Options& o) {
  if (o.format != "text" && o.format != "csv")
    throw UsageError("--format must be text or csv, got '" + o.format + "'");
}

std::string bundle_text(const ItemSet& items) {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < items.size(); ++k) os << (k ? "," : "") << items[k] + 1;
  os << '}';
  return os.str();
}

std::string allocation_text(const Allocation& alloc) {
  std::string text;
  for (std::size_t i = 0; i < alloc.bundles.size(); ++i)
    text += (i ? " " : "") + bundle_text(alloc.bundles[i]);
  return text;
}

// ---------------------------------------------------------------------------

int cmd_generate(const Options& o, std::ostream& out) {
  ChoreInstance inst;
  if (o.kind == "random-binpacking") {
    inst = random_bin_packing({o.n, o.m, o.max_capacity}, o.seed);
  } else if (o.kind == "random-jobscheduling") {
    inst = random_job_scheduling({o.n, o.m, o.max_machines, o.max_speed, o.max_size}, o.seed);
  } else if (o.kind == "covering-planes") {
    inst = gen_covering_planes(o.n);
  } else if (o.kind == "tight-binpacking") {
    inst = gen_tight_binpacking();
  } else if (o.kind == "propx") {
    PropxInstances both = gen_propx_instances(o.n);
    if (o.model == "bin")
      inst = both.bin_packing;
    else if (o.model == "job")
      inst = both.job_scheduling;
    else
      throw UsageError("--model must be bin or job");
  } else {
    throw UsageError("unknown instance kind '" + o.kind + "'");
  }
  require_valid(inst);
  emit(o, serialize_instance(inst), out);
  return kSuccess;
}

int cmd_solve(const Options& o, std::ostream& out) {
  if (o.allocator.empty()) throw UsageError("--allocator is required");
  const ChoreInstance inst = load_instance(o);
  SolveOptions options;
  options.delta = parse_rational(o.delta);
  options.budget = budget_of(o);
  const SolveResult result = solve(inst, parse_allocator(o.allocator), options);

  for (int i = 0; i < inst.n; ++i) {
    const auto& cert = result.certificates[i].valuation;
    if (std::holds_alternative<std::monostate>(cert.certificate)) continue;
    if (certificate_value(inst, i, result.allocation.bundles[i], cert.certificate) != cert.value)
      throw InvalidAllocation("certificate of agent " + std::to_string(i + 1) +
                              " does not reproduce its value");
  }
  emit(o, serialize_solution(inst, result), out);
  return kSuccess;
}

int cmd_audit(const Options& o, std::ostream& out) {
  require_format(o);
  if (o.allocation.empty()) throw UsageError("--allocation is required");
  const ChoreInstance inst = load_instance(o);
  const Allocation alloc = parse_allocation(read_file(o.allocation));
  require_partition(alloc, inst.n, inst.m);
  const Rational alpha = parse_rational(o.alpha);
  const OracleBudget budget = budget_of(o);

  AuditReport report;
  if (o.notion == "mms")
    report = audit_mms(inst, alloc, mms_references(inst, budget), alpha, budget);
  else if (o.notion == "prop")
    report = audit_prop(inst, alloc, alpha, budget);
  else
    throw UsageError("--notion must be mms or prop");

  std::ostringstream text;
  if (o.format == "csv") {
    write_audit_csv_header(text);
    write_audit_csv_rows(text, instance_id(o.instance), report);
  } else {
    write_audit_summary(text, report);
  }
  emit(o, text.str(), out);
  return report.all_pass ? kSuccess : kFailure;
}

int cmd_mms(const Options& o, std::ostream& out) {
  require_format(o);
  const ChoreInstance inst = load_instance(o);
  const OracleBudget budget = budget_of(o);
  std::ostringstream text;
  if (o.format == "csv") text << "instance_id,agent,mms,lower,upper,method,exact\n";
  for (int i = 0; i < inst.n; ++i) {
    MmsBounds bounds;
    std::optional<MmsEntry> entry;
    try {
      entry = mms_exact(inst, i, budget);
      bounds = bounds_from_exact(*entry);
    } catch (const BudgetExceeded&) {
      bounds = mms_bounds(inst, i, budget);
    }
    if (o.format == "csv") {
      text << instance_id(o.instance) << ',' << i + 1 << ','
           << (entry ? format_value(entry->value) : "") << ',' << format_value(bounds.lower)
           << ',' << format_value(bounds.upper) << ',' << method_name(bounds.method) << ','
           << (entry ? "exact" : "bounds") << '\n';
    } else if (entry) {
      text << "agent " << i + 1 << ": mms " << format_value(entry->value) << " (exact), partition "
           << allocation_text(entry->partition) << '\n';
    } else {
      text << "agent " << i + 1 << ": mms in [" << format_value(bounds.lower) << ", "
           << format_value(bounds.upper) << "] (" << method_name(bounds.method)
           << (bounds.upper_exact ? "" : ", heuristic upper") << ")\n";
    }
  }
  emit(o, text.str(), out);
  return kSuccess;
}

int cmd_certify(const Options& o, std::ostream& out) {
  const ChoreInstance inst = load_instance(o);
  CertifyOptions options;
  options.trials = o.trials;
  options.seed = o.seed;
  options.budget = budget_of(o);
  if (o.mode == "exhaustive") {
    options.mode = CertifyMode::Exhaustive;
  } else if (o.mode == "sampled") {
    options.mode = CertifyMode::Sampled;
  } else if (o.mode == "auto") {
    double space = std::pow(static_cast<double>(inst.n), inst.m);
    options.mode = space <= static_cast<double>(options.max_allocations) ? CertifyMode::Exhaustive
                                                                         : CertifyMode::Sampled;
  } else {
    throw UsageError("--mode must be exhaustive, sampled or auto");
  }
  const LowerBoundCertificate cert = certify_lower_bound(inst, parse_rational(o.alpha), options);

  std::ostringstream text;
  text << "mode: " << (cert.mode == CertifyMode::Exhaustive ? "exhaustive" : "sampled") << '\n';
  text << "target ratio: " << format_value(cert.target) << '\n';
  text << "mms:";
  for (const auto& v : cert.mms) text << ' ' << format_value(v);
  text << '\n';
  text << "allocations checked: " << cert.allocations_checked << '\n';
  text << "min over allocations of max ratio: " << cert.min_max_ratio.fraction() << '\n';
  text << "attained by: " << allocation_text(cert.best_allocation) << '\n';
  if (cert.counterexample) text << "counterexample: " << allocation_text(*cert.counterexample) << '\n';
  text << cert.statement << '\n';
  emit(o, text.str(), out);
  return cert.certified ? kSuccess : kFailure;
}

// ---------------------------------------------------------------------------

struct BenchRow {
  std::string instance_id;
  std::string allocator;
  int n = 0;
  int m = 0;
  Ratio max_ratio;
  bool pass = false;
  bool exact = true;
};

std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> names;
  std::stringstream ss(list);
  for (std::string name; std::getline(ss, name, ',');)
    if (!name.empty()) names.push_back(name);
  return names;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.count < 0) throw UsageError("--count must be nonnegative");
  const bool bins = o.family == "random-binpacking";
  if (!bins && o.family != "random-jobscheduling")
    throw UsageError("--family must be random-binpacking or random-jobscheduling");
  std::vector<AllocatorKind> allocators;
  const std::string list =
      !o.allocator.empty() ? o.allocator : (bins ? "bagfill,bagfill32" : "roundrobin,threshold-search");
  for (const auto& name : split_names(list)) {
    allocators.push_back(parse_allocator(name));
    if (!allocator_supports(allocators.back(),
                            bins ? ValuationKind::BinPacking : ValuationKind::JobScheduling))
      throw UsageError("allocator '" + name + "' does not fit family " + o.family);
  }
  SolveOptions options;
  options.delta = parse_rational(o.delta);
  options.budget = budget_of(o);
  const Rational alpha = parse_rational(o.alpha);
  const int width = std::max<int>(4, static_cast<int>(std::to_string(o.count).size()));

  std::vector<std::vector<BenchRow>> rows(o.count);
  std::atomic<int> next{0};
  std::mutex failure_lock;
  std::exception_ptr failure;
  auto worker = [&] {
    for (int k = next++; k < o.count; k = next++) {
      try {
        const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(k);
        const ChoreInstance inst =
            bins ? random_bin_packing({o.n, o.m, o.max_capacity}, seed)
                 : random_job_scheduling({o.n, o.m, o.max_machines, o.max_speed, o.max_size}, seed);
        std::ostringstream id;
        id << (bins ? "bin-" : "job-") << std::setw(width) << std::setfill('0') << k;
        const auto refs = mms_references(inst, options.budget);
        for (AllocatorKind a : allocators) {
          const SolveResult result = solve(inst, a, options);
          const AuditReport report = audit_mms(inst, result.allocation, refs, alpha, options.budget);
          rows[k].push_back({id.str(), std::string(allocator_name(a)), inst.n, inst.m,
                             report.max_ratio, report.all_pass, !report.heuristic});
        }
      } catch (...) {
        std::lock_guard lock(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  int threads = o.threads > 0 ? o.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, std::max(1, o.count));
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<BenchRow> flat;
  for (auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
  std::sort(flat.begin(), flat.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.instance_id, a.allocator) < std::tie(b.instance_id, b.allocator);
  });

  std::ostringstream csv;
  csv << "instance_id,allocator,n,m,max_ratio,max_ratio_decimal,verdict,exact\n";
  bool all_pass = true;
  for (const auto& r : flat) {
    std::ostringstream dec;
    dec << std::fixed << std::setprecision(6) << r.max_ratio.decimal();
    csv << r.instance_id << ',' << r.allocator << ',' << r.n << ',' << r.m << ','
        << r.max_ratio.fraction() << ',' << (r.max_ratio.infinite ? "inf" : dec.str()) << ','
        << (r.pass ? "pass" : "fail") << ',' << (r.exact ? "exact" : "heuristic") << '\n';
    all_pass = all_pass && r.pass;
  }
  emit(o, csv.str(), out);

  for (AllocatorKind a : allocators) {
    const std::string name(allocator_name(a));
    Ratio worst{Rational(0), false};
    double sum = 0;
    int count = 0;
    for (const auto& r : flat) {
      if (r.allocator != name) continue;
      if (worst < r.max_ratio) worst = r.max_ratio;
      sum += r.max_ratio.decimal();
      ++count;
    }
    err << name << ": instances " << count << ", max ratio " << worst.fraction();
    if (count > 0) err << ", mean ratio " << std::fixed << std::setprecision(6) << sum / count;
    err << '\n';
  }
  return all_pass ? kSuccess : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximin-share allocation of chores"};
  app.require_subcommand(1);
  Options o;

  auto* generate = app.add_subcommand("generate", "write an instance file");
  generate->add_option("kind", o.kind,
                       "random-binpacking | random-jobscheduling | covering-planes | tight-binpacking | propx")
      ->required();
  generate->add_option("--n", o.n, "agents (propx: parameter n)");
  generate->add_option("--m", o.m, "items");
  generate->add_option("--seed", o.seed);
  generate->add_option("--max-capacity", o.max_capacity);
  generate->add_option("--max-machines", o.max_machines);
  generate->add_option("--max-speed", o.max_speed);
  generate->add_option("--max-size", o.max_size);
  generate->add_option("--model", o.model, "propx model: bin | job");
  generate->add_option("--out", o.out);

  auto* solve_cmd = app.add_subcommand("solve", "run an allocator");
  solve_cmd->add_option("--instance", o.instance)->required();
  solve_cmd->add_option("--allocator", o.allocator)->required();
  solve_cmd->add_option("--delta", o.delta);
  solve_cmd->add_option("--budget-items", o.budget_items);
  solve_cmd->add_option("--out", o.out);

  auto* audit = app.add_subcommand("audit", "audit an allocation");
  audit->add_option("--instance", o.instance)->required();
  audit->add_option("--allocation", o.allocation)->required();
  audit->add_option("--alpha", o.alpha);
  audit->add_option("--notion", o.notion, "mms | prop");
  audit->add_option("--budget-items", o.budget_items);
  audit->add_option("--format", o.format, "text | csv");
  audit->add_option("--out", o.out);

  auto* mms = app.add_subcommand("mms", "maximin shares of every agent");
  mms->add_option("--instance", o.instance)->required();
  mms->add_option("--budget-items", o.budget_items);
  mms->add_option("--format", o.format, "text | csv");
  mms->add_option("--out", o.out);

  auto* certify = app.add_subcommand("certify", "check that no allocation beats a ratio");
  certify->add_option("--instance", o.instance)->required();
  certify->add_option("--alpha", o.alpha, "target ratio");
  certify->add_option("--mode", o.mode, "exhaustive | sampled | auto");
  certify->add_option("--trials", o.trials);
  certify->add_option("--seed", o.seed);
  certify->add_option("--budget-items", o.budget_items);
  certify->add_option("--out", o.out);

  auto* bench = app.add_subcommand("bench", "solve and audit a random sweep");
  bench->add_option("--family", o.family, "random-binpacking | random-jobscheduling");
  bench->add_option("--count", o.count, "number of instances");
  bench->add_option("--allocator", o.allocator, "comma-separated allocator names");
  bench->add_option("--n", o.n);
  bench->add_option("--m", o.m);
  bench->add_option("--seed", o.seed);
  bench->add_option("--max-capacity", o.max_capacity);
  bench->add_option("--max-machines", o.max_machines);
  bench->add_option("--max-speed", o.max_speed);
  bench->add_option("--max-size", o.max_size);
  bench->add_option("--alpha", o.alpha);
  bench->add_option("--delta", o.delta);
  bench->add_option("--budget-items", o.budget_items);
  bench->add_option("--threads", o.threads);
  bench->add_option("--out", o.out);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (generate->parsed()) return cmd_generate(o, out);
    if (solve_cmd->parsed()) return cmd_solve(o, out);
    if (audit->parsed()) return cmd_audit(o, out);
    if (mms->parsed()) return cmd_mms(o, out);
    if (certify->parsed()) return cmd_certify(o, out);
    if (bench->parsed()) return cmd_bench(o, out, err);
  } catch (const InvalidInstance& e) {
    err << "invalid instance: " << e.what() << '\n';
    return kFailure;
  } catch (const InvalidAllocation& e) {
    err << "invalid allocation: " << e.what() << '\n';
    return kFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "over budget: " << e.what() << '\n';
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace chores::cli
