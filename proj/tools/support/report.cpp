#include "report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <set>
#include <thread>

#include "lcmcap/errors.hpp"

namespace lcmcap {

namespace {

void reject_unknown_keys(const Json& obj, const std::set<std::string>& known,
                         const std::string& where) {
  for (const auto& kv : obj.items())
    if (!known.count(kv.key()))
      throw InvalidInput(where + ": unknown key \"" + kv.key() + "\"");
}

std::uint64_t get_u64(const Json& obj, const std::string& key,
                      const std::string& where) {
  if (!obj.contains(key)) throw InvalidInput(where + ": missing \"" + key + "\"");
  const Json& v = obj.at(key);
  if (!v.is_number_integer() ||
      (!v.is_number_unsigned() && v.get<std::int64_t>() < 0))
    throw InvalidInput(where + "." + key + ": expected a nonnegative integer");
  return v.get<std::uint64_t>();
}

double get_double(const Json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw InvalidInput(where + ": missing \"" + key + "\"");
  if (!obj.at(key).is_number())
    throw InvalidInput(where + "." + key + ": expected a number");
  return obj.at(key).get<double>();
}

std::string run_hl_trend(const Json& exp, const std::string& where) {
  reject_unknown_keys(exp, {"name", "kind", "Ns", "ells"}, where);
  if (!exp.contains("Ns") || !exp.at("Ns").is_array() || exp.at("Ns").empty())
    throw InvalidInput(where + ": \"Ns\" must be a nonempty array");
  if (!exp.contains("ells") || !exp.at("ells").is_array() || exp.at("ells").empty())
    throw InvalidInput(where + ": \"ells\" must be a nonempty array");
  std::vector<std::uint64_t> Ns;
  for (const Json& n : exp.at("Ns")) {
    if (!n.is_number_integer()) throw InvalidInput(where + ".Ns: expected integers");
    Ns.push_back(n.get<std::uint64_t>());
  }
  std::vector<int> ells;
  for (const Json& l : exp.at("ells")) {
    if (!l.is_number_integer()) throw InvalidInput(where + ".ells: expected integers");
    ells.push_back(l.get<int>());
  }
  const std::uint64_t limit = *std::max_element(Ns.begin(), Ns.end());
  OmegaSieve sieve(limit);
  return harmonic_trend_csv(sieve, Ns, ells);
}

std::string run_gb_sweep(const Json& exp, const std::string& where) {
  reject_unknown_keys(exp, {"name", "kind", "ks", "B_min", "B_max", "steps"}, where);
  if (!exp.contains("ks") || !exp.at("ks").is_array() || exp.at("ks").empty())
    throw InvalidInput(where + ": \"ks\" must be a nonempty array");
  std::vector<int> ks;
  for (const Json& k : exp.at("ks")) {
    if (!k.is_number_integer()) throw InvalidInput(where + ".ks: expected integers");
    ks.push_back(k.get<int>());
  }
  const double b_min = get_double(exp, "B_min", where);
  const double b_max = get_double(exp, "B_max", where);
  const std::uint64_t steps = get_u64(exp, "steps", where);
  if (!(b_min > 0) || !(b_max > b_min))
    throw InvalidInput(where + ": need 0 < B_min < B_max");
  if (steps < 1) throw InvalidInput(where + ": need steps >= 1");

  std::string csv = "k,B,exponent,B_star,c_k\n";
  char buf[160];
  for (int k : ks) {
    const double b_star = optimal_B(k);
    const double c_k = ck(k);
    for (std::uint64_t i = 0; i <= steps; ++i) {
      const double B = b_min + (b_max - b_min) * static_cast<double>(i) /
                                   static_cast<double>(steps);
      std::snprintf(buf, sizeof buf, "%d,%.12g,%.12g,%.12g,%.12g\n", k, B,
                    bucket_exponent(k, B), b_star, c_k);
      csv += buf;
    }
  }
  return csv;
}

std::string run_fk_table(const Json& exp, const std::string& where) {
  reject_unknown_keys(exp, {"name", "kind", "N_max", "k", "budget"}, where);
  const std::uint64_t n_max = get_u64(exp, "N_max", where);
  const std::uint64_t k = get_u64(exp, "k", where);
  const std::uint64_t budget =
      exp.contains("budget") ? get_u64(exp, "budget", where) : kDefaultFkBudget;
  if (n_max < 1) throw InvalidInput(where + ": need N_max >= 1");

  std::string csv = "N,value,value_float,exact,nodes,witness\n";
  char buf[96];
  for (std::uint64_t N = 1; N <= n_max; ++N) {
    const FkResult row =
        exact_fk(N, static_cast<int>(k), budget, /*exact_ceiling=*/n_max);
    csv += std::to_string(N);
    csv += ',';
    csv += rat_str(row.value);
    std::snprintf(buf, sizeof buf, ",%.12g,%d,%llu,", rat_double(row.value),
                  row.exact ? 1 : 0, static_cast<unsigned long long>(row.nodes));
    csv += buf;
    for (std::size_t i = 0; i < row.optimal_set.size(); ++i) {
      if (i) csv += ' ';
      csv += std::to_string(row.optimal_set[i]);
    }
    csv += '\n';
  }
  return csv;
}

}  // namespace

ReportBundle run_report(const Json& config, int jobs) {
  if (!config.is_object()) throw InvalidInput("config: expected an object");
  reject_unknown_keys(config, {"seed", "experiments"}, "config");
  const std::uint64_t seed =
      config.contains("seed") ? get_u64(config, "seed", "config") : 1;
  if (!config.contains("experiments") || !config.at("experiments").is_array())
    throw InvalidInput("config: \"experiments\" must be an array");
  const Json& experiments = config.at("experiments");
  if (jobs < 1) throw InvalidInput("worker count must be >= 1");

  // Validate names and kinds up front so a bad config fails before any work.
  std::set<std::string> names;
  for (std::size_t i = 0; i < experiments.size(); ++i) {
    const Json& exp = experiments[i];
    const std::string where = "experiments[" + std::to_string(i) + "]";
    if (!exp.is_object()) throw InvalidInput(where + ": expected an object");
    if (!exp.contains("name") || !exp.at("name").is_string())
      throw InvalidInput(where + ": missing string \"name\"");
    const std::string name = exp.at("name").get<std::string>();
    if (name.empty() ||
        name.find_first_not_of(
            "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789-_") !=
            std::string::npos)
      throw InvalidInput(where + ": name must be nonempty [A-Za-z0-9-_]");
    if (!names.insert(name).second)
      throw InvalidInput(where + ": duplicate name \"" + name + "\"");
    if (!exp.contains("kind") || !exp.at("kind").is_string())
      throw InvalidInput(where + ": missing string \"kind\"");
    const std::string kind = exp.at("kind").get<std::string>();
    if (kind != "hl-trend" && kind != "gb-sweep" && kind != "fk-table")
      throw InvalidInput(where + ": unknown kind \"" + kind + "\"");
  }

  struct Outcome {
    bool ok = false;
    std::string error;
    std::string content;
  };
  std::vector<Outcome> outcomes(experiments.size());

  auto run_one = [&experiments, &outcomes](std::size_t i) {
    const Json& exp = experiments[i];
    const std::string where = "experiments[" + std::to_string(i) + "]";
    const std::string kind = exp.at("kind").get<std::string>();
    try {
      if (kind == "hl-trend")
        outcomes[i].content = run_hl_trend(exp, where);
      else if (kind == "gb-sweep")
        outcomes[i].content = run_gb_sweep(exp, where);
      else
        outcomes[i].content = run_fk_table(exp, where);
      outcomes[i].ok = true;
    } catch (const std::exception& e) {
      outcomes[i].error = e.what();
    }
  };

  if (jobs == 1 || experiments.size() <= 1) {
    for (std::size_t i = 0; i < experiments.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&next, &experiments, &run_one] {
      for (std::size_t i = next.fetch_add(1); i < experiments.size();
           i = next.fetch_add(1))
        run_one(i);
    };
    std::vector<std::thread> pool;
    const std::size_t n_threads =
        std::min<std::size_t>(static_cast<std::size_t>(jobs), experiments.size());
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  ReportBundle bundle;
  Json rows = Json::array();
  for (std::size_t i = 0; i < experiments.size(); ++i) {
    const Json& exp = experiments[i];
    const std::string name = exp.at("name").get<std::string>();
    Json row;
    row["name"] = name;
    row["kind"] = exp.at("kind");
    if (outcomes[i].ok) {
      const std::string file = name + ".csv";
      row["status"] = "ok";
      row["file"] = file;
      bundle.files.emplace_back(file, std::move(outcomes[i].content));
    } else {
      row["status"] = "failed";
      row["error"] = outcomes[i].error;
      ++bundle.hard_failures;
    }
    rows.push_back(std::move(row));
  }
  bundle.summary["seed"] = seed;
  bundle.summary["experiments"] = std::move(rows);
  bundle.files.emplace_back("summary.json", dump_json(bundle.summary));
  return bundle;
}

}  // namespace lcmcap
