#include "json_io.hpp"

#include <fstream>
#include <sstream>

#include "lcmcap/errors.hpp"

namespace lcmcap {

Json rat_json(const Rat& value) { return rat_str(value); }

Json int_json(const Int& value) { return int_str(value); }

Json family_json(const SetFamily& family) {
  Json doc;
  doc["ground_size"] = family.ground_size;
  if (!family.labels.empty()) doc["labels"] = family.labels;
  Json members = Json::array();
  for (std::uint64_t mask : family.members) {
    Json member = Json::array();
    for (int i = 0; i < family.ground_size; ++i)
      if (mask >> i & 1) member.push_back(i);
    members.push_back(std::move(member));
  }
  doc["members"] = std::move(members);
  return doc;
}

namespace {

[[noreturn]] void bad_field(const std::string& where, const std::string& what) {
  throw InvalidInput(where + ": " + what);
}

int require_int(const Json& doc, const std::string& key, const std::string& where) {
  if (!doc.contains(key)) bad_field(where, "missing \"" + key + "\"");
  const Json& v = doc.at(key);
  if (!v.is_number_integer()) bad_field(where + "." + key, "expected an integer");
  return v.get<int>();
}

}  // namespace

SetFamily family_from_json(const Json& doc) {
  const std::string where = "family";
  if (!doc.is_object()) bad_field(where, "expected an object");
  const int ground_size = require_int(doc, "ground_size", where);
  if (ground_size < 0 || ground_size > 64)
    bad_field(where + ".ground_size", "must lie in [0, 64]");

  std::vector<std::uint64_t> labels;
  if (doc.contains("labels")) {
    const Json& ls = doc.at("labels");
    if (!ls.is_array()) bad_field(where + ".labels", "expected an array");
    for (const Json& l : ls) {
      if (!l.is_number_unsigned() && !l.is_number_integer())
        bad_field(where + ".labels", "expected integers");
      if (l.is_number_integer() && l.get<std::int64_t>() < 0)
        bad_field(where + ".labels", "labels must be nonnegative");
      labels.push_back(l.get<std::uint64_t>());
    }
  }

  if (!doc.contains("members")) bad_field(where, "missing \"members\"");
  const Json& ms = doc.at("members");
  if (!ms.is_array()) bad_field(where + ".members", "expected an array of arrays");
  std::vector<std::uint64_t> members;
  for (std::size_t m = 0; m < ms.size(); ++m) {
    const Json& member = ms[m];
    const std::string at = where + ".members[" + std::to_string(m) + "]";
    if (!member.is_array()) bad_field(at, "expected an array of element indices");
    std::uint64_t mask = 0;
    for (const Json& e : member) {
      if (!e.is_number_integer()) bad_field(at, "expected integer element indices");
      const std::int64_t idx = e.get<std::int64_t>();
      if (idx < 0 || idx >= ground_size)
        bad_field(at, "element index " + std::to_string(idx) +
                          " outside [0, " + std::to_string(ground_size) + ")");
      if (mask >> idx & 1)
        bad_field(at, "element index " + std::to_string(idx) + " repeats");
      mask |= std::uint64_t{1} << idx;
    }
    members.push_back(mask);
  }
  for (const auto& kv : doc.items())
    if (kv.key() != "ground_size" && kv.key() != "labels" && kv.key() != "members")
      bad_field(where, "unknown key \"" + kv.key() + "\"");
  return SetFamily::from_members(ground_size, std::move(members), std::move(labels));
}

Json wgs_json(const WeightedGroundSet& wgs) {
  Json doc;
  if (!wgs.labels.empty()) doc["labels"] = wgs.labels;
  Json weights = Json::array();
  for (const Rat& w : wgs.weights) weights.push_back(rat_str(w));
  doc["weights"] = std::move(weights);
  return doc;
}

WeightedGroundSet wgs_from_json(const Json& doc) {
  const std::string where = "weighted ground set";
  if (!doc.is_object()) bad_field(where, "expected an object");
  WeightedGroundSet wgs;
  if (doc.contains("labels")) {
    const Json& ls = doc.at("labels");
    if (!ls.is_array()) bad_field(where + ".labels", "expected an array");
    for (const Json& l : ls) {
      if (!l.is_number_unsigned() && !l.is_number_integer())
        bad_field(where + ".labels", "expected integers");
      wgs.labels.push_back(l.get<std::uint64_t>());
    }
  }
  if (!doc.contains("weights")) bad_field(where, "missing \"weights\"");
  const Json& ws = doc.at("weights");
  if (!ws.is_array()) bad_field(where + ".weights", "expected an array");
  for (const Json& w : ws) {
    if (w.is_string())
      wgs.weights.push_back(rat_parse(w.get<std::string>()));
    else if (w.is_number_integer())
      wgs.weights.push_back(Rat(w.get<long>()));
    else
      bad_field(where + ".weights", "expected \"p/q\" strings");
  }
  for (const auto& kv : doc.items())
    if (kv.key() != "labels" && kv.key() != "weights")
      bad_field(where, "unknown key \"" + kv.key() + "\"");
  wgs.validate();
  return wgs;
}

Json fk_json(const FkResult& result) {
  Json doc;
  doc["N"] = result.N;
  doc["k"] = result.k;
  doc["value"] = rat_str(result.value);
  doc["value_float"] = rat_double(result.value);
  doc["optimal_set"] = result.optimal_set;
  doc["exact"] = result.exact;
  doc["nodes"] = result.nodes;
  return doc;
}

Json capacity_json(const CapacityResult& result) {
  Json doc;
  doc["n"] = result.n;
  doc["k"] = result.k;
  doc["F"] = result.F;
  doc["witness"] = family_json(result.witness);
  if (result.n >= 1 && result.F >= 1)
    doc["capacity_estimate"] = capacity_lower_estimate(result);
  doc["exact"] = result.exact;
  doc["nodes"] = result.nodes;
  return doc;
}

Json ledger_json(const HarmonicLedger& ledger) {
  Json doc;
  doc["bound"] = ledger.bound;
  doc["ell"] = ledger.ell;
  if (ledger.exact) doc["exact"] = rat_str(*ledger.exact);
  doc["value"] = ledger.value;
  doc["terms"] = ledger.terms;
  return doc;
}

Json g_constant_json(const TruncatedConstant& constant) {
  Json doc;
  doc["z"] = constant.z;
  doc["cutoff"] = constant.cutoff;
  doc["value"] = constant.value;
  doc["tail_bound"] = constant.tail_bound;
  return doc;
}

Json params_json(const NDrivenParams& params) {
  Json doc;
  doc["L"] = params.L;
  doc["delta"] = params.delta;
  doc["t"] = params.t;
  doc["x"] = params.x;
  doc["y"] = params.y;
  return doc;
}

Json freeness_json(const FreenessCheck& check) {
  Json doc;
  doc["checked"] = check.checked;
  if (check.checked) doc["free"] = check.free;
  if (!check.witness.empty()) doc["witness"] = check.witness;
  doc["method"] = check.method;
  return doc;
}

Json product_report_json(const ProductConstructionReport& report) {
  Json doc;
  Json params;
  params["k"] = report.k;
  params["r"] = report.r;
  params["t"] = report.block_count;
  params["B"] = report.threshold;
  params["delta"] = rat_str(report.cap);
  params["exponent"] = report.predicted_exponent;
  doc["params"] = std::move(params);
  doc["harmonic_sum"] = rat_str(report.harmonic_sum);
  doc["harmonic_sum_float"] = rat_double(report.harmonic_sum);
  doc["element_count"] = report.element_count;
  doc["enumerated"] = report.enumerated;
  doc["truncated"] = report.truncated;
  if (report.sum_matches) doc["sum_matches"] = *report.sum_matches;
  if (report.enumerated) {
    Json elems = Json::array();
    for (const Int& e : report.elements) elems.push_back(int_str(e));
    doc["elements"] = std::move(elems);
  }
  if (report.support) doc["support"] = family_json(*report.support);
  doc["freeness"] = freeness_json(report.freeness);
  return doc;
}

Json family_report_json(const FamilyConstructionReport& report) {
  Json doc;
  Json params;
  params["k"] = report.k;
  params["t"] = report.block_count;
  params["family_size"] = report.family_size;
  params["seed"] = report.seed;
  doc["params"] = std::move(params);
  doc["harmonic_sum"] = rat_str(report.harmonic_sum);
  doc["harmonic_sum_float"] = rat_double(report.harmonic_sum);
  doc["lower_bound_ok"] = report.lower_bound_ok;
  if (!report.samples.empty()) {
    Json samples = Json::array();
    for (const Int& s : report.samples) samples.push_back(int_str(s));
    doc["samples"] = std::move(samples);
  }
  if (report.sample_support) doc["sample_support"] = family_json(*report.sample_support);
  doc["freeness"] = freeness_json(report.freeness);
  return doc;
}

Json pipeline_report_json(const WeightedPipelineReport& report) {
  Json doc;
  Json blocks = Json::array();
  for (const auto& b : report.partition.blocks) blocks.push_back(b);
  doc["blocks"] = std::move(blocks);
  doc["remainder"] = report.partition.remainder;
  doc["family"] = family_json(report.family);
  doc["measure"] = rat_str(report.measure);
  doc["measure_float"] = rat_double(report.measure);
  Json none = Json::array(), one = Json::array();
  for (const Rat& r : report.block_none) none.push_back(rat_str(r));
  for (const Rat& q : report.block_one) one.push_back(rat_str(q));
  doc["block_none"] = std::move(none);
  doc["block_one"] = std::move(one);
  doc["remainder_none"] = rat_str(report.remainder_none);
  doc["measure_identity_ok"] = report.measure_identity_ok;
  doc["ratio_identity_ok"] = report.ratio_identity_ok;
  if (report.harmonic_identity_ok)
    doc["harmonic_identity_ok"] = *report.harmonic_identity_ok;
  if (!report.family.labels.empty())
    doc["harmonic_sum"] = rat_str(report.harmonic_sum);
  doc["freeness"] = freeness_json(report.freeness);
  return doc;
}

std::string dump_json(const Json& doc) { return doc.dump(2) + "\n"; }

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(origin + ": " + e.what());
  }
}

Json parse_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

}  // namespace lcmcap
