#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cache.hpp"
#include "json_io.hpp"
#include "report.hpp"

#include "lcmcap/capacity.hpp"
#include "lcmcap/constructions.hpp"
#include "lcmcap/errors.hpp"
#include "lcmcap/harmonic.hpp"
#include "lcmcap/lcmfree.hpp"
#include "lcmcap/primes.hpp"
#include "lcmcap/setfam.hpp"

namespace {

using lcmcap::Json;
using lcmcap::Rat;

// Problems with user-supplied files (as opposed to bad flags) exit with 65.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json load_json(const std::string& path) {
  try {
    return lcmcap::parse_json_file(path);
  } catch (const lcmcap::Error& e) {
    throw DataError(e.what());
  }
}

lcmcap::SetFamily load_family(const std::string& path) {
  try {
    return lcmcap::family_from_json(lcmcap::parse_json_file(path));
  } catch (const lcmcap::Error& e) {
    throw DataError(std::string(path) + ": " + e.what());
  }
}

lcmcap::WeightedGroundSet load_wgs(const std::string& path) {
  try {
    return lcmcap::wgs_from_json(lcmcap::parse_json_file(path));
  } catch (const lcmcap::Error& e) {
    throw DataError(std::string(path) + ": " + e.what());
  }
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw DataError("cannot write " + out_path);
  out << content;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& text,
                                          const std::string& what) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    const std::string item = text.substr(pos, next - pos);
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw lcmcap::InvalidInput(what + ": bad integer \"" + item + "\"");
    }
    pos = next + 1;
  }
  if (out.empty()) throw lcmcap::InvalidInput(what + ": empty list");
  return out;
}

// Prime pools for the construction commands: either every prime up to a
// limit, or the primes in a (lo, hi] range ([lo, hi] with closed_left).
struct PoolOpts {
  std::uint64_t prime_limit = 0;
  std::string prime_range;
  bool closed_left = false;
};

void add_pool_options(CLI::App* cmd, PoolOpts& opts) {
  cmd->add_option("--prime-limit", opts.prime_limit,
                  "use every prime up to this bound as the pool");
  cmd->add_option("--prime-range", opts.prime_range,
                  "use the primes in (lo,hi], written lo:hi");
  cmd->add_flag("--closed-left", opts.closed_left,
                "make --prime-range closed on the left ([lo,hi])");
}

std::vector<std::uint64_t> build_pool(const PoolOpts& opts) {
  if (!opts.prime_range.empty()) {
    const std::size_t colon = opts.prime_range.find(':');
    if (colon == std::string::npos)
      throw lcmcap::InvalidInput("--prime-range must look like lo:hi");
    double lo = 0, hi = 0;
    try {
      lo = std::stod(opts.prime_range.substr(0, colon));
      hi = std::stod(opts.prime_range.substr(colon + 1));
    } catch (const std::exception&) {
      throw lcmcap::InvalidInput("--prime-range must look like lo:hi");
    }
    if (!(hi >= 2) || !(hi >= lo))
      throw lcmcap::InvalidInput("--prime-range needs 2 <= hi and lo <= hi");
    const lcmcap::PrimeTable table =
        lcmcap::cached_prime_table(static_cast<std::uint64_t>(std::ceil(hi)));
    return table.primes_in(lo, hi, opts.closed_left);
  }
  if (opts.prime_limit >= 2) {
    return lcmcap::cached_prime_table(opts.prime_limit).primes;
  }
  throw lcmcap::InvalidInput("pass --prime-limit or --prime-range to pick the pool");
}

double parse_threshold(const std::string& text, int k) {
  if (text == "auto") return lcmcap::optimal_B(k);
  try {
    std::size_t used = 0;
    const double B = std::stod(text, &used);
    if (used != text.size() || !(B > 0)) throw std::invalid_argument(text);
    return B;
  } catch (const std::exception&) {
    throw lcmcap::InvalidInput("--B must be a positive number or \"auto\"");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact experiments with LCM-k-free sets, sunflower-free families, and "
      "their harmonic-sum yardsticks"};
  app.require_subcommand(1);
  int exit_code = 0;
  std::string out_path;
  app.add_option("--out", out_path, "write the JSON result here instead of stdout")
      ->group("Output");

  // ---- fk-exact ------------------------------------------------------------
  auto* fk = app.add_subcommand(
      "fk-exact", "maximum reciprocal sum of an LCM-k-free subset of 1..N");
  struct {
    std::uint64_t N = 0;
    int k = 3;
    std::uint64_t budget = lcmcap::kDefaultFkBudget;
    std::uint64_t ceiling = lcmcap::kDefaultFkCeiling;
  } fk_opts;
  fk->add_option("--N", fk_opts.N, "range bound")->required();
  fk->add_option("--k", fk_opts.k, "tuple size (>= 3)")->required();
  fk->add_option("--budget", fk_opts.budget, "search-node budget");
  fk->add_option("--ceiling", fk_opts.ceiling, "largest N accepted for exact search");
  fk->callback([&] {
    const lcmcap::FkResult result =
        lcmcap::exact_fk(fk_opts.N, fk_opts.k, fk_opts.budget, fk_opts.ceiling);
    emit(out_path, lcmcap::dump_json(lcmcap::fk_json(result)));
    if (!result.exact) exit_code = 2;
  });

  // ---- capacity ------------------------------------------------------------
  auto* cap = app.add_subcommand(
      "capacity", "largest k-sunflower-free family on an n-element ground set");
  struct {
    int n = 0;
    int k = 3;
    std::uint64_t budget = lcmcap::kDefaultCapacityBudget;
    bool co = false;
  } cap_opts;
  cap->add_option("--n", cap_opts.n, "ground-set size")->required();
  cap->add_option("--k", cap_opts.k, "tuple size (>= 3)")->required();
  cap->add_option("--budget", cap_opts.budget, "search-node budget");
  cap->add_flag("--co", cap_opts.co, "search cosunflower-free families instead");
  cap->callback([&] {
    const lcmcap::CapacityResult result =
        cap_opts.co ? lcmcap::max_cosunflower_free(cap_opts.n, cap_opts.k,
                                                   cap_opts.budget)
                    : lcmcap::max_sunflower_free(cap_opts.n, cap_opts.k,
                                                 cap_opts.budget);
    emit(out_path, lcmcap::dump_json(lcmcap::capacity_json(result)));
    if (!result.exact) exit_code = 2;
  });

  // ---- sunflower-check -----------------------------------------------------
  auto* check = app.add_subcommand(
      "sunflower-check", "search a family file for k equal pairwise meets/joins");
  struct {
    std::string family_path;
    int k = 3;
    bool co = false;
  } check_opts;
  check->add_option("--family", check_opts.family_path, "family JSON file")
      ->required();
  check->add_option("--k", check_opts.k, "tuple size (>= 3)")->required();
  check->add_flag("--co", check_opts.co, "look for cosunflowers (equal unions)");
  check->callback([&] {
    const lcmcap::SetFamily family = load_family(check_opts.family_path);
    const auto witness = check_opts.co
                             ? lcmcap::find_k_cosunflower(family, check_opts.k)
                             : lcmcap::find_k_sunflower(family, check_opts.k);
    Json doc;
    doc["kind"] = check_opts.co ? "cosunflower" : "sunflower";
    doc["k"] = check_opts.k;
    doc["free"] = !witness.has_value();
    if (witness) {
      doc["witness_indices"] = *witness;
      Json members = Json::array();
      for (int idx : *witness) {
        Json member = Json::array();
        for (int i = 0; i < family.ground_size; ++i)
          if (family.members[idx] >> i & 1) member.push_back(i);
        members.push_back(std::move(member));
      }
      doc["witness_members"] = std::move(members);
    }
    emit(out_path, lcmcap::dump_json(doc));
  });

  // ---- support-family ------------------------------------------------------
  auto* supp = app.add_subcommand(
      "support-family", "prime-support family of a squarefree integer set");
  struct {
    std::string elements;
  } supp_opts;
  supp->add_option("--elements", supp_opts.elements,
                   "comma-separated squarefree integers")
      ->required();
  supp->callback([&] {
    const std::vector<std::uint64_t> elements =
        parse_u64_list(supp_opts.elements, "--elements");
    std::uint64_t max_e = 2;
    for (std::uint64_t e : elements) max_e = std::max(max_e, e);
    const std::uint64_t limit =
        std::max<std::uint64_t>(2, static_cast<std::uint64_t>(std::ceil(
                                       std::sqrt(static_cast<double>(max_e)))) +
                                       1);
    const lcmcap::PrimeTable table = lcmcap::cached_prime_table(limit);
    const lcmcap::LcmInstance instance =
        lcmcap::LcmInstance::from_elements(elements, table);
    emit(out_path,
         lcmcap::dump_json(lcmcap::family_json(lcmcap::support_family(instance))));
  });

  // ---- construct -----------------------------------------------------------
  auto* construct =
      app.add_subcommand("construct", "build a reciprocal-sum lower-bound set");
  construct->require_subcommand(1);

  auto* thm12 = construct->add_subcommand(
      "thm12", "product construction: one r-subset per prime block");
  struct {
    int k = 3;
    std::string B = "auto";
    int count_target = 0;
    bool emit_elements = false;
    std::size_t cap = lcmcap::kDefaultElementCap;
    bool allow_truncate = false;
    PoolOpts pool;
  } t12;
  thm12->add_option("--k", t12.k, "tuple size (>= 3)")->required();
  thm12->add_option("--B", t12.B, "bucket threshold, or \"auto\" for the optimum");
  thm12->add_option("--count-target", t12.count_target,
                    "fail unless at least this many blocks complete");
  thm12->add_flag("--emit-elements", t12.emit_elements,
                  "materialize the elements and verify the sum identity");
  thm12->add_option("--cap", t12.cap, "materialization cap");
  thm12->add_flag("--allow-truncate", t12.allow_truncate,
                  "materialize only a prefix when the cap is exceeded");
  add_pool_options(thm12, t12.pool);
  thm12->callback([&] {
    const double B = parse_threshold(t12.B, t12.k);
    const lcmcap::BlockPartition buckets =
        lcmcap::greedy_buckets(build_pool(t12.pool), B, t12.count_target);
    const lcmcap::ProductConstructionReport report = lcmcap::thm12_construction(
        t12.k, buckets, t12.emit_elements, t12.cap, t12.allow_truncate);
    emit(out_path, lcmcap::dump_json(lcmcap::product_report_json(report)));
  });

  auto* thm15 = construct->add_subcommand(
      "thm15", "family-indexed construction: one prime per selected block");
  struct {
    std::string family_path;
    int k = 3;
    bool sample = false;
    std::uint64_t seed = 1;
    std::size_t cap = lcmcap::kDefaultElementCap;
    PoolOpts pool;
  } t15;
  thm15->add_option("--family", t15.family_path, "family JSON file")->required();
  thm15->add_option("--k", t15.k, "tuple size (>= 3)");
  thm15->add_flag("--sample", t15.sample, "sample one element per member");
  thm15->add_option("--seed", t15.seed, "sampling seed");
  thm15->add_option("--cap", t15.cap, "sample cap");
  add_pool_options(thm15, t15.pool);
  thm15->callback([&] {
    const lcmcap::SetFamily family = load_family(t15.family_path);
    const lcmcap::BlockPartition buckets =
        lcmcap::greedy_buckets(build_pool(t15.pool), 1.0, family.ground_size);
    const lcmcap::FamilyConstructionReport report = lcmcap::thm15_construction(
        family, t15.k, buckets, t15.sample, t15.seed, t15.cap);
    emit(out_path, lcmcap::dump_json(lcmcap::family_report_json(report)));
  });

  auto* weighted = construct->add_subcommand(
      "weighted", "blow-up of a base family over a weighted prime partition");
  struct {
    std::string c = "1/4";
    std::string base_path;
    std::string weights = "1/(p+1)";
    std::string wgs_path;
    int k = 3;
    bool partition_only = false;
    PoolOpts pool;
  } wtd;
  weighted->add_option("--c", wtd.c, "partition level, a rational in (0,1)");
  weighted->add_option("--base", wtd.base_path,
                       "base family JSON file (ground size = block count)");
  weighted->add_option("--weights", wtd.weights,
                       "weight rule for the prime pool; only \"1/(p+1)\" is defined");
  weighted->add_option("--wgs", wtd.wgs_path,
                       "weighted ground set JSON file (instead of a prime pool)");
  weighted->add_option("--k", wtd.k, "tuple size (>= 3)");
  weighted->add_flag("--partition-only", wtd.partition_only,
                     "print the weighted partition and stop (no base needed)");
  add_pool_options(weighted, wtd.pool);
  weighted->callback([&] {
    lcmcap::WeightedGroundSet wgs;
    if (!wtd.wgs_path.empty()) {
      wgs = load_wgs(wtd.wgs_path);
    } else {
      if (wtd.weights != "1/(p+1)")
        throw lcmcap::InvalidInput("the only built-in weight rule is \"1/(p+1)\"");
      wgs.labels = build_pool(wtd.pool);
      for (std::uint64_t p : wgs.labels)
        wgs.weights.emplace_back(1, static_cast<unsigned long>(p + 1));
    }
    const Rat c = lcmcap::rat_parse(wtd.c);
    if (wtd.partition_only) {
      const lcmcap::WeightedPartition part = lcmcap::weighted_partition(wgs, c);
      Json doc;
      doc["c"] = lcmcap::rat_str(c);
      doc["block_count"] = part.blocks.size();
      Json blocks = Json::array();
      for (const auto& b : part.blocks) blocks.push_back(b);
      doc["blocks"] = std::move(blocks);
      doc["remainder"] = part.remainder;
      emit(out_path, lcmcap::dump_json(doc));
      return;
    }
    if (wtd.base_path.empty())
      throw lcmcap::InvalidInput("pass --base (or --partition-only)");
    const lcmcap::SetFamily base = load_family(wtd.base_path);
    const lcmcap::WeightedPipelineReport report =
        lcmcap::weighted_cosunflower_pipeline(wgs, c, base, wtd.k);
    emit(out_path, lcmcap::dump_json(lcmcap::pipeline_report_json(report)));
  });

  // ---- params --------------------------------------------------------------
  auto* params =
      app.add_subcommand("params", "size-driven parameter choices (no sieving)");
  params->require_subcommand(1);
  struct {
    double N = 0;
    int k = 3;
    std::string B = "auto";
  } par;
  auto* params12 = params->add_subcommand("thm12", "product-construction regime");
  params12->add_option("--N", par.N, "target integer size")->required();
  params12->add_option("--k", par.k, "tuple size (>= 3)")->required();
  params12->add_option("--B", par.B, "bucket threshold, or \"auto\"");
  params12->callback([&] {
    const double B = parse_threshold(par.B, par.k);
    emit(out_path,
         lcmcap::dump_json(lcmcap::params_json(lcmcap::thm12_params(par.N, par.k, B))));
  });
  auto* params15 =
      params->add_subcommand("thm15", "family-indexed construction regime");
  params15->add_option("--N", par.N, "target integer size")->required();
  params15->callback([&] {
    emit(out_path, lcmcap::dump_json(lcmcap::params_json(lcmcap::thm15_params(par.N))));
  });

  // ---- harmonic ------------------------------------------------------------
  auto* harmonic = app.add_subcommand("harmonic", "analytic yardstick sums");
  harmonic->require_subcommand(1);
  struct {
    std::uint64_t N = 0;
    int ell = 0;
    double z = 1;
    std::uint64_t cutoff = 1'000'000;
    std::string mode = "auto";
    std::string primes;
    double lo = 0, hi = 0;
    bool closed_left = false;
    bool exact = false;
  } h;

  auto* hl = harmonic->add_subcommand(
      "Hl", "reciprocal sum over squarefree n <= N with omega(n) = l");
  hl->add_option("--N", h.N, "range bound")->required();
  hl->add_option("--l", h.ell, "distinct-prime-factor count")->required();
  hl->add_option("--mode", h.mode, "auto | exact | float");
  hl->callback([&] {
    lcmcap::SumMode mode = lcmcap::SumMode::kAuto;
    if (h.mode == "exact")
      mode = lcmcap::SumMode::kExact;
    else if (h.mode == "float")
      mode = lcmcap::SumMode::kFloat;
    else if (h.mode != "auto")
      throw lcmcap::InvalidInput("--mode must be auto, exact, or float");
    const lcmcap::OmegaSieve sieve(h.N);
    emit(out_path,
         lcmcap::dump_json(lcmcap::ledger_json(lcmcap::h_ell(sieve, h.N, h.ell, mode))));
  });

  auto* al = harmonic->add_subcommand(
      "Al", "count of squarefree n <= x with omega(n) = l");
  al->add_option("--x", h.N, "range bound")->required();
  al->add_option("--l", h.ell, "distinct-prime-factor count")->required();
  al->callback([&] {
    const lcmcap::OmegaSieve sieve(h.N);
    Json doc;
    doc["bound"] = h.N;
    doc["ell"] = h.ell;
    doc["count"] = lcmcap::a_ell(sieve, h.N, h.ell);
    emit(out_path, lcmcap::dump_json(doc));
  });

  auto* zsum = harmonic->add_subcommand("zsum", "sum of z^omega(m)/m over m <= X");
  zsum->add_option("--X", h.N, "range bound")->required();
  zsum->add_option("--z", h.z, "weight")->required();
  zsum->callback([&] {
    const lcmcap::OmegaSieve sieve(h.N);
    Json doc;
    doc["bound"] = h.N;
    doc["z"] = h.z;
    doc["value"] = lcmcap::z_omega_sum(sieve, h.N, h.z);
    emit(out_path, lcmcap::dump_json(doc));
  });

  auto* majorant = harmonic->add_subcommand(
      "majorant", "Euler-product upper bound for the zsum at the same X");
  majorant->add_option("--X", h.N, "range bound")->required();
  majorant->add_option("--z", h.z, "weight")->required();
  majorant->callback([&] {
    const lcmcap::PrimeTable table = lcmcap::cached_prime_table(h.N);
    Json doc;
    doc["bound"] = h.N;
    doc["z"] = h.z;
    doc["value"] = lcmcap::euler_majorant(table, h.N, h.z);
    emit(out_path, lcmcap::dump_json(doc));
  });

  auto* gc = harmonic->add_subcommand(
      "G", "truncated Euler-product constant with its tail bound");
  gc->add_option("--z", h.z, "parameter in [0, 2)")->required();
  gc->add_option("--cutoff", h.cutoff, "prime cutoff");
  gc->callback([&] {
    const lcmcap::PrimeTable table = lcmcap::cached_prime_table(h.cutoff);
    emit(out_path, lcmcap::dump_json(lcmcap::g_constant_json(
                       lcmcap::g_constant(table, h.z, h.cutoff))));
  });

  auto* ss = harmonic->add_subcommand(
      "ss-main", "predicted count of squarefree l-almost primes up to x");
  ss->add_option("--x", h.N, "range bound")->required();
  ss->add_option("--l", h.ell, "distinct-prime-factor count")->required();
  ss->add_option("--cutoff", h.cutoff, "prime cutoff for the constant");
  ss->callback([&] {
    const lcmcap::PrimeTable table = lcmcap::cached_prime_table(h.cutoff);
    Json doc;
    doc["bound"] = h.N;
    doc["ell"] = h.ell;
    doc["cutoff"] = h.cutoff;
    doc["value"] = lcmcap::sathe_selberg_main_term(table, h.N, h.ell, h.cutoff);
    emit(out_path, lcmcap::dump_json(doc));
  });

  auto* psum = harmonic->add_subcommand(
      "prime-sum", "sum of 1/p over the primes in a range");
  psum->add_option("--lo", h.lo, "lower end (excluded unless --closed-left)")
      ->required();
  psum->add_option("--hi", h.hi, "upper end (included)")->required();
  psum->add_flag("--closed-left", h.closed_left, "include a prime equal to lo");
  psum->add_flag("--exact", h.exact, "also report the exact rational");
  psum->callback([&] {
    const lcmcap::PrimeTable table =
        lcmcap::cached_prime_table(static_cast<std::uint64_t>(std::ceil(h.hi)));
    Json doc;
    doc["lo"] = h.lo;
    doc["hi"] = h.hi;
    doc["closed_left"] = h.closed_left;
    if (h.closed_left) {
      // closed-left form: nudge below lo so a prime at lo is included
      const double lo_open = std::nextafter(h.lo, -1.0);
      doc["value"] = lcmcap::prime_harmonic_sum(table, lo_open, h.hi);
      if (h.exact)
        doc["exact"] = lcmcap::rat_str(
            lcmcap::prime_harmonic_sum_exact(table, lo_open, h.hi));
    } else {
      doc["value"] = lcmcap::prime_harmonic_sum(table, h.lo, h.hi);
      if (h.exact)
        doc["exact"] =
            lcmcap::rat_str(lcmcap::prime_harmonic_sum_exact(table, h.lo, h.hi));
    }
    emit(out_path, lcmcap::dump_json(doc));
  });

  auto* tail = harmonic->add_subcommand(
      "tail", "majorant for the reciprocal sum of large squarefree products");
  tail->add_option("--primes", h.primes, "comma-separated prime list")->required();
  tail->add_option("--N", h.N, "tail threshold (>= 3)")->required();
  tail->callback([&] {
    const std::vector<std::uint64_t> P = parse_u64_list(h.primes, "--primes");
    std::uint64_t max_p = 2;
    for (std::uint64_t p : P) max_p = std::max(max_p, p);
    const lcmcap::PrimeTable table = lcmcap::cached_prime_table(max_p);
    const lcmcap::TailBound bound = lcmcap::tail_harmonic_bound(table, P, h.N);
    Json doc;
    doc["N"] = h.N;
    doc["majorant"] = bound.majorant;
    doc["exact_checked"] = bound.exact_checked;
    if (bound.exact_checked) {
      doc["exact_tail"] = lcmcap::rat_str(bound.exact_tail);
      doc["within"] = bound.within;
    }
    emit(out_path, lcmcap::dump_json(doc));
  });

  // ---- report --------------------------------------------------------------
  auto* report = app.add_subcommand(
      "report", "run an experiment config into a deterministic file bundle");
  struct {
    std::string config_path;
    std::string out_dir;
    int jobs = 1;
  } rep;
  report->add_option("--config", rep.config_path, "experiment config JSON")
      ->required();
  report->add_option("--out-dir", rep.out_dir, "directory for the bundle files")
      ->required();
  report->add_option("--jobs", rep.jobs, "parallel experiment workers");
  report->callback([&] {
    const Json config = load_json(rep.config_path);
    const lcmcap::ReportBundle bundle = lcmcap::run_report(config, rep.jobs);
    std::error_code ec;
    std::filesystem::create_directories(rep.out_dir, ec);
    if (ec) throw DataError("cannot create " + rep.out_dir);
    for (const auto& [name, content] : bundle.files) {
      std::ofstream out(rep.out_dir + "/" + name, std::ios::binary);
      if (!out) throw DataError("cannot write " + rep.out_dir + "/" + name);
      out << content;
    }
    emit(out_path, lcmcap::dump_json(bundle.summary));
    if (bundle.hard_failures > 0) exit_code = 65;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 64;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 65;
  } catch (const lcmcap::ResourceLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 65;
  } catch (const lcmcap::BucketShortfall& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 65;
  } catch (const lcmcap::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
  return exit_code;
}
