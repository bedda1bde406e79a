#include "incpart/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>

#include "incpart/coefficients.hpp"
#include "incpart/gap_representation.hpp"
#include "incpart/law_io.hpp"
#include "incpart/laws.hpp"
#include "incpart/models.hpp"
#include "incpart/set_partition.hpp"

namespace incpart::cli {

namespace {

constexpr int kDefaultCap = 12;

/// Raised for conditions that should exit with kUsageError.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

EnumerationLimits limits_for(int n, bool force) {
  if (n < 1) throw UsageError("n must be at least 1");
  if (n > kDefaultCap && !force) {
    throw UsageError("n=" + std::to_string(n) + " exceeds the brute-force cap of " +
                     std::to_string(kDefaultCap) + "; pass --force to override");
  }
  return EnumerationLimits{std::max(n, kDefaultCap)};
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

LawDocument load_document(const std::string& path) {
  std::string text;
  try {
    text = read_text_file(path);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  try {
    return parse_law_document(text);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

int cmd_compositions(int n, std::optional<int> k, std::ostream& out) {
  if (n < 1) throw UsageError("n must be at least 1");
  if (k && (*k < 1 || *k > n)) throw UsageError("--k must satisfy 1 <= k <= n");
  const auto list = k ? enumerate_compositions(n, *k) : all_compositions(n);
  for (const auto& c : list) out << to_string(c) << '\n';
  return kSuccess;
}

int cmd_partitions(int n, bool force, std::ostream& out) {
  const auto limits = limits_for(n, force);
  for_each_set_partition(
      n, [&](const SetPartition& p) { out << to_rgs_string(p) << '\t' << to_string(p) << '\n'; },
      limits);
  return kSuccess;
}

int cmd_rtable(int n, int k, const std::string& method_name, bool force, std::ostream& out) {
  const auto limits = limits_for(n, force);
  if (k < 1 || k > n) throw UsageError("k must satisfy 1 <= k <= n");
  const auto method = parse_coefficient_method(method_name);
  if (!method) throw UsageError("unknown method '" + method_name + "'");
  const RTable table(n, k, *method, limits);
  out << "# r(d;b) on S_{" << n << "," << k << "} via " << name_of(*method)
      << "; rows b, columns d, decreasing dictionary order\n";
  out << "b\\d";
  for (const auto& d : table.order()) out << '\t' << to_string(d);
  out << '\n';
  for (std::size_t j = 0; j < table.size(); ++j) {
    out << to_string(table.order()[j]);
    for (std::size_t i = 0; i < table.size(); ++i) out << '\t' << table.at(i, j).get_str();
    out << '\n';
  }
  return kSuccess;
}

int cmd_forward(const std::string& in, const std::string& out_path, std::ostream& out,
                std::ostream& err) {
  auto doc = load_document(in);
  PartitionLaw p = [&] {
    try {
      return to_partition_law(doc);
    } catch (const std::exception& e) {
      throw UsageError(in + ": " + e.what());
    }
  }();
  const auto validity = validate_partition_law(p);
  if (!validity.valid) {
    err << "invalid partition law: " << validity.message << '\n';
    return kVerificationFailed;
  }
  emit(format_law(forward_map(p)), out_path, out);
  return kSuccess;
}

int cmd_invert(const std::string& in, const std::string& out_path, bool allow_sparse,
               std::ostream& out, std::ostream& err) {
  auto doc = load_document(in);
  IncrementLaw q = [&] {
    try {
      return to_increment_law(doc, allow_sparse);
    } catch (const std::exception& e) {
      throw UsageError(in + ": " + e.what());
    }
  }();
  const auto result = invert_map(q);
  emit(format_law(result.law), out_path, out);
  if (!result.feasible) {
    err << "infeasible: " << result.reason << '\n';
    return kVerificationFailed;
  }
  return kSuccess;
}

CrpParameter parse_theta(const std::string& text) {
  try {
    return CrpParameter::parse(text);
  } catch (const std::exception& e) {
    throw UsageError("--theta: " + std::string(e.what()));
  }
}

Rational parse_flag_rational(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const ParseError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

int cmd_crp(int n, const std::string& theta_text, const std::string& out_path, std::ostream& out) {
  if (n < 1) throw UsageError("n must be at least 1");
  emit(format_law(crp_law(n, parse_theta(theta_text))), out_path, out);
  return kSuccess;
}

void print_checks(const std::vector<FrequencyCheck>& checks, std::ostream& out) {
  out << std::fixed << std::setprecision(6);
  for (const auto& c : checks) {
    out << c.label << "\thits=" << c.hits << "\ttrials=" << c.trials << "\tempirical=" << c.empirical
        << "\texpected=" << c.expected << "\tz=" << std::setprecision(3) << c.z
        << std::setprecision(6) << '\n';
  }
}

struct SampleOptions {
  std::string model;
  int n = 0;
  std::string theta;
  std::string alpha = "0";
  std::size_t count = 1;
  std::uint64_t seed = 0;
  bool summary = false;
};

int cmd_sample(const SampleOptions& opt, std::ostream& out) {
  if (opt.n < 1) throw UsageError("n must be at least 1");
  std::vector<SetPartition> samples;
  std::vector<FrequencyCheck> checks;
  if (opt.model == "crp") {
    const auto theta = parse_theta(opt.theta);
    samples = sample_crp_many(opt.n, theta, opt.count, opt.seed);
    if (opt.summary) checks = composition_frequency_check(samples, crp_law(opt.n, theta));
  } else {
    std::optional<TwoParameter> params;
    try {
      params.emplace(parse_flag_rational("--alpha", opt.alpha),
                     parse_flag_rational("--theta", opt.theta));
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    samples = sample_two_parameter_many(opt.n, *params, opt.count, opt.seed);
    if (opt.summary) checks = transition_frequency_check(samples, *params);
  }
  if (!opt.summary) {
    for (const auto& s : samples) out << to_rgs_string(s) << '\n';
    return kSuccess;
  }
  out << "# monte carlo summary (floating point), " << opt.count << " samples, seed " << opt.seed
      << '\n';
  print_checks(checks, out);
  const bool ok = std::all_of(checks.begin(), checks.end(),
                              [](const FrequencyCheck& c) { return c.within(3.0); });
  out << (ok ? "all within 3 standard errors" : "some frequencies exceed 3 standard errors")
      << '\n';
  return ok ? kSuccess : kVerificationFailed;
}

int cmd_check_theorem1(int n, int trials, std::uint64_t seed, bool force, std::ostream& out) {
  const auto limits = limits_for(n, force);
  if (trials < 1) throw UsageError("--trials must be positive");
  std::mt19937_64 rng(seed);
  const LinearSystem system(n);
  for (int t = 0; t < trials; ++t) {
    const auto p = random_partially_exchangeable_law(n, rng, limits);
    const auto q = forward_map(p, system);
    const auto back = invert_map(q, system);
    if (!back.feasible || back.law != p) {
      out << "theorem1 n=" << n << " trial " << t << ": round trip FAILED\n";
      return kVerificationFailed;
    }
  }
  out << "theorem1 n=" << n << " trials=" << trials << ": invert(forward(p)) == p for every trial\n";
  return kSuccess;
}

int cmd_check_theorem2(const std::string& in, std::ostream& out, std::ostream& err) {
  auto doc = load_document(in);
  IncrementLaw q = [&] {
    try {
      return to_increment_law(doc);
    } catch (const std::exception& e) {
      throw UsageError(in + ": " + e.what());
    }
  }();
  const auto inverse = invert_map(q);
  if (!inverse.feasible) {
    err << "not applicable: " << inverse.reason << '\n';
    return kVerificationFailed;
  }
  try {
    const auto report = verify_theorem2(q, inverse.law);
    out << "u2 = " << to_string(report.u2) << '\n';
    out << "theta = " << to_string(report.theta) << '\n';
    for (const auto& f : report.failures) out << "counterexample: " << f << '\n';
    return report.verified ? kSuccess : kVerificationFailed;
  } catch (const NotApplicableError& e) {
    err << "not applicable: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

int cmd_check_genfun(int n, bool force, std::ostream& out) {
  limits_for(n, force);
  int failures = 0;
  for (int k = 1; k <= n; ++k) {
    const auto order = enumerate_compositions(n, k);
    for (const auto& d : order) {
      const auto poly = genfun_expand(d);
      for (const auto& b : order) {
        if (poly.coefficient_for(b) != r_via_formula(d, b)) {
          out << "mismatch at d=" << to_string(d) << " b=" << to_string(b) << '\n';
          ++failures;
        }
      }
      BigInt ones = 1;
      for (int i = 0; i < d.k(); ++i) {
        BigInt power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(i + 1),
                      static_cast<unsigned long>(d[static_cast<std::size_t>(i)] - 1));
        ones *= power;
      }
      if (poly.evaluate_at_ones() != ones) {
        out << "evaluation at ones fails for d=" << to_string(d) << '\n';
        ++failures;
      }
    }
    out << "k=" << k << ": " << order.size() << " gap compositions checked\n";
  }
  out << (failures ? "generating function identity FAILED" : "generating function identity holds")
      << '\n';
  return failures ? kVerificationFailed : kSuccess;
}

int cmd_check_gaps(int n, const std::string& theta_text, bool force, std::ostream& out) {
  limits_for(n, force);
  const auto theta = parse_theta(theta_text);
  for (int m = 1; m <= n; ++m) {
    const auto p = crp_law(m, theta);
    const auto y = independent_binary_law(crp_increment_probs(m, theta));
    const auto gaps = gap_size_distribution(y);
    const auto blocks = block_size_distribution(p);
    if (gaps != blocks) {
      out << "n=" << m << ": gap multiset law differs from block-size law\n";
      for (const auto& [multiset, value] : blocks.table) {
        auto it = gaps.table.find(multiset);
        out << "  " << to_string(multiset) << "\tblocks=" << to_string(value)
            << "\tgaps=" << (it == gaps.table.end() ? "0/1" : to_string(it->second)) << '\n';
      }
      return kVerificationFailed;
    }
    const auto sums = verify_partial_sum_identity(p, y);
    if (!sums.holds) {
      out << "n=" << m << ": partial sums differ at m=" << sums.first_mismatch << '\n';
      return kVerificationFailed;
    }
    out << "n=" << m << ": gap representation and partial-sum identity hold\n";
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Increment encodings of partially exchangeable random partitions"};
  app.require_subcommand(1, 1);

  int n = 0;
  int k = 0;
  std::optional<int> k_filter;
  bool force = false;
  std::string method = "formula";
  std::string in_path;
  std::string out_path;
  bool allow_sparse = false;
  std::string theta;
  int trials = 100;
  std::uint64_t seed = 0;
  SampleOptions sample;

  auto* compositions = app.add_subcommand("compositions", "List compositions of n");
  compositions->add_option("n", n)->required();
  compositions->add_option("--k", k_filter, "Only compositions with k parts");

  auto* partitions = app.add_subcommand("partitions", "List set partitions of [n]");
  partitions->add_option("n", n)->required();
  partitions->add_flag("--force", force);

  auto* rtable = app.add_subcommand("rtable", "Coefficient table r(d;b) on S_{n,k}");
  rtable->add_option("n", n)->required();
  rtable->add_option("k", k)->required();
  rtable->add_option("--method", method)->check(CLI::IsMember({"formula", "bruteforce", "genfun"}));
  rtable->add_flag("--force", force);

  auto* forward = app.add_subcommand("forward", "Partition law -> increment law");
  forward->add_option("--in", in_path)->required();
  forward->add_option("--out", out_path);

  auto* invert = app.add_subcommand("invert", "Increment law -> partition law");
  invert->add_option("--in", in_path)->required();
  invert->add_option("--out", out_path);
  invert->add_flag("--allow-sparse", allow_sparse, "Treat missing compositions as zero");

  auto* crp = app.add_subcommand("crp", "CRP(theta) partition law");
  crp->add_option("n", n)->required();
  crp->add_option("--theta", theta, "Positive rational, zero or inf")->required();
  crp->add_option("--out", out_path);

  auto* sampler = app.add_subcommand("sample", "Seeded samples as restricted-growth sequences");
  sampler->add_option("model", sample.model)->required()->check(CLI::IsMember({"crp", "two-param"}));
  sampler->add_option("n", sample.n)->required();
  sampler->add_option("--theta", sample.theta)->required();
  sampler->add_option("--alpha", sample.alpha);
  sampler->add_option("--count", sample.count)->required()->check(CLI::PositiveNumber);
  sampler->add_option("--seed", sample.seed)->required();
  sampler->add_flag("--summary", sample.summary, "Print frequency checks instead of samples");

  auto* theorem1 = app.add_subcommand("check-theorem1", "Round trip on random laws");
  theorem1->add_option("n", n)->required();
  theorem1->add_option("--trials", trials);
  theorem1->add_option("--seed", seed);
  theorem1->add_flag("--force", force);

  auto* theorem2 = app.add_subcommand("check-theorem2", "Recover theta from an increment law");
  theorem2->add_option("--in", in_path)->required();

  auto* genfun = app.add_subcommand("check-genfun", "Generating-function identity for all d");
  genfun->add_option("n", n)->required();
  genfun->add_flag("--force", force);

  auto* gaps = app.add_subcommand("check-gaps", "Gap representation of CRP(theta) for 1..n");
  gaps->add_option("n", n)->required();
  gaps->add_option("--theta", theta)->required();
  gaps->add_flag("--force", force);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }
  try {
    if (compositions->parsed()) return cmd_compositions(n, k_filter, out);
    if (partitions->parsed()) return cmd_partitions(n, force, out);
    if (rtable->parsed()) return cmd_rtable(n, k, method, force, out);
    if (forward->parsed()) return cmd_forward(in_path, out_path, out, err);
    if (invert->parsed()) return cmd_invert(in_path, out_path, allow_sparse, out, err);
    if (crp->parsed()) return cmd_crp(n, theta, out_path, out);
    if (sampler->parsed()) return cmd_sample(sample, out);
    if (theorem1->parsed()) return cmd_check_theorem1(n, trials, seed, force, out);
    if (theorem2->parsed()) return cmd_check_theorem2(in_path, out, err);
    if (genfun->parsed()) return cmd_check_genfun(n, force, out);
    if (gaps->parsed()) return cmd_check_gaps(n, theta, force, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace incpart::cli
