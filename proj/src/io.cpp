#include "chores/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace chores {

using json = nlohmann::ordered_json;

namespace {

template <typename T>
void write_row(std::ostream& out, const std::vector<T>& row) {
  out << '[';
  for (std::size_t k = 0; k < row.size(); ++k) out << (k ? ", " : "") << row[k];
  out << ']';
}

template <typename T>
void write_matrix(std::ostream& out, std::string_view key, const std::vector<std::vector<T>>& rows,
                  bool last) {
  out << "  \"" << key << "\": [";
  if (rows.empty()) {
    out << ']';
  } else {
    out << '\n';
    for (std::size_t r = 0; r < rows.size(); ++r) {
      out << "    ";
      write_row(out, rows[r]);
      out << (r + 1 < rows.size() ? ",\n" : "\n");
    }
    out << "  ]";
  }
  out << (last ? "\n" : ",\n");
}

template <typename T>
T field(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("field \"") + key + "\" has the wrong type");
  }
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

json items_json(const ItemSet& items) {
  json out = json::array();
  for (int j : items) out.push_back(j + 1);
  return out;
}

// Indented JSON with arrays of scalars kept on one line.
void pretty(std::ostream& out, const json& value, int indent) {
  const std::string pad(indent + 2, ' ');
  if (value.is_object()) {
    if (value.empty()) {
      out << "{}";
      return;
    }
    out << "{\n";
    std::size_t k = 0;
    for (auto it = value.begin(); it != value.end(); ++it, ++k) {
      out << pad << json(it.key()).dump() << ": ";
      pretty(out, it.value(), indent + 2);
      out << (k + 1 < value.size() ? ",\n" : "\n");
    }
    out << std::string(indent, ' ') << '}';
  } else if (value.is_array() &&
             std::any_of(value.begin(), value.end(), [](const json& v) { return v.is_structured(); })) {
    out << "[\n";
    for (std::size_t k = 0; k < value.size(); ++k) {
      out << pad;
      pretty(out, value[k], indent + 2);
      out << (k + 1 < value.size() ? ",\n" : "\n");
    }
    out << std::string(indent, ' ') << ']';
  } else if (value.is_array()) {
    out << '[';
    for (std::size_t k = 0; k < value.size(); ++k) out << (k ? ", " : "") << value[k].dump();
    out << ']';
  } else {
    out << value.dump();
  }
}

json groups_json(const std::vector<ItemSet>& groups) {
  json out = json::array();
  for (const auto& g : groups) out.push_back(items_json(g));
  return out;
}

}  // namespace

std::string serialize_instance(const ChoreInstance& inst) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"kind\": \"" << kind_name(inst.kind()) << "\",\n";
  out << "  \"n\": " << inst.n << ",\n";
  out << "  \"m\": " << inst.m << ",\n";
  switch (inst.kind()) {
    case ValuationKind::BinPacking:
      out << "  \"capacities\": ";
      write_row(out, inst.bin_packing().capacities);
      out << ",\n";
      break;
    case ValuationKind::JobScheduling:
      write_matrix(out, "speeds", inst.job_scheduling().speeds, false);
      break;
    case ValuationKind::CoveringPlane:
      out << "  \"dimension\": " << inst.covering_plane().dimension << ",\n";
      write_matrix(out, "points", inst.covering_plane().points, true);
      break;
    case ValuationKind::Additive: break;
  }
  if (inst.has_sizes()) write_matrix(out, "sizes", inst.sizes, true);
  out << "}\n";
  return out.str();
}

ChoreInstance parse_instance(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("instance must be a JSON object");
  ChoreInstance inst;
  ValuationKind kind;
  try {
    kind = parse_kind(field<std::string>(doc, "kind"));
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  inst.n = field<int>(doc, "n");
  inst.m = field<int>(doc, "m");
  switch (kind) {
    case ValuationKind::BinPacking:
      inst.spec = BinPackingSpec{field<std::vector<Size>>(doc, "capacities")};
      break;
    case ValuationKind::JobScheduling:
      inst.spec = JobSchedulingSpec{field<std::vector<std::vector<Size>>>(doc, "speeds")};
      break;
    case ValuationKind::CoveringPlane:
      inst.spec = CoveringPlaneSpec{field<int>(doc, "dimension"),
                                    field<std::vector<std::vector<int>>>(doc, "points")};
      break;
    case ValuationKind::Additive: inst.spec = AdditiveSpec{}; break;
  }
  if (kind != ValuationKind::CoveringPlane) inst.sizes = field<SizeMatrix>(doc, "sizes");
  require_valid(inst);
  return inst;
}

std::string serialize_solution(const ChoreInstance& inst, const SolveResult& result) {
  json doc;
  doc["allocator"] = std::string(allocator_name(result.allocator));
  doc["kind"] = std::string(kind_name(inst.kind()));
  doc["n"] = inst.n;
  doc["m"] = inst.m;
  doc["ido_round_trip"] = result.ido_round_trip;
  doc["bundles"] = groups_json(result.allocation.bundles);
  json certs = json::array();
  for (std::size_t i = 0; i < result.certificates.size(); ++i) {
    const AgentCertificate& c = result.certificates[i];
    json entry;
    entry["agent"] = i + 1;
    entry["value"] = format_value(c.valuation.value);
    entry["exact"] = c.valuation.exact;
    if (const auto* p = std::get_if<PackingCertificate>(&c.valuation.certificate)) {
      entry["bins"] = groups_json(p->bins);
    } else if (const auto* s = std::get_if<ScheduleCertificate>(&c.valuation.certificate)) {
      entry["machines"] = groups_json(s->machines);
      entry["makespan"] = format_value(s->makespan);
    } else if (const auto* pc = std::get_if<PlaneCover>(&c.valuation.certificate)) {
      entry["planes"] = pc->planes;
    }
    if (c.tau) {
      entry["tau"] = format_value(*c.tau);
      entry["iterations"] = c.iterations;
    }
    certs.push_back(std::move(entry));
  }
  doc["certificates"] = std::move(certs);
  std::ostringstream out;
  pretty(out, doc, 0);
  out << '\n';
  return out.str();
}

Allocation parse_allocation(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("allocation file must be a JSON object");
  const auto bundles = field<std::vector<std::vector<int>>>(doc, "bundles");
  if (bundles.empty()) throw ParseError("allocation has no bundles");
  Allocation alloc;
  for (const auto& b : bundles) {
    ItemSet items;
    for (int j : b) {
      if (j < 1) throw ParseError("item indices are 1-based; got " + std::to_string(j));
      items.push_back(j - 1);
    }
    alloc.bundles.push_back(std::move(items));
  }
  return alloc;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace chores
