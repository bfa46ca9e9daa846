// zerolab: batch runner for the random-matrix, explicit-formula and sieve experiments.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "zerolab/arith.hpp"
#include "zerolab/error.hpp"
#include "zerolab/family.hpp"
#include "zerolab/format.hpp"
#include "zerolab/kernels.hpp"
#include "zerolab/lfun.hpp"
#include "zerolab/lfun_io.hpp"
#include "zerolab/rmt.hpp"
#include "zerolab/testfn.hpp"

using json = nlohmann::ordered_json;
using namespace zerolab;

namespace {

constexpr int kSchemaVersion = 1;

enum ExitCode { kOk = 0, kInputFailure = 1, kNumericFailure = 2 };

// A report is a table: CSV prints it as rows, JSON as an array of objects.
struct Report {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
  json config = json::object();
  int exit_code = kOk;
};

std::string csv_cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) return format_double(v.get<double>());
  return v.dump();
}

std::string render(const Report& report, const std::string& subcommand, const std::string& format) {
  std::ostringstream out;
  if (format == "csv") {
    for (std::size_t i = 0; i < report.columns.size(); ++i) out << (i ? "," : "") << report.columns[i];
    out << '\n';
    for (const auto& row : report.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
      out << '\n';
    }
    return out.str();
  }
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["subcommand"] = subcommand;
  doc["config"] = report.config;
  json results = json::array();
  for (const auto& row : report.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[report.columns[i]] = row[i];
    results.push_back(std::move(obj));
  }
  doc["results"] = std::move(results);
  return doc.dump(2) + "\n";
}

// Options shared by every subcommand.
struct Common {
  std::string out = "csv";
  std::string output;
};

void add_common(CLI::App* sub, Common& common) {
  sub->add_option("--out", common.out, "Report format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  sub->add_option("--output", common.output, "Write the report here instead of stdout");
}

struct Options {
  std::string test_fn = "fejer:1";
  std::string group = "U";
  int dim = 30;
  std::size_t draws = 20000;
  std::uint64_t seed = 0;
  std::string symmetry = "all";
  std::string input;
  double conductor = 0.0;
  unsigned nu_max = 2;
  std::string measure = "sato_tate";
  std::string log_c = "15,30";
  std::uint64_t q_max = 1000;
  unsigned vectors = 10;
  std::string support = "2/3";
  std::uint64_t limit = 1000000;
  bool list = false;
  double tol = 1e-8;
};

using Runner = std::function<Report(const Options&)>;

json number(double v) { return json(v); }

Report run_rmt(const Options& o, rmt::Statistic stat) {
  const auto fp = testfn::parse_test_fn(o.test_fn);
  const rmt::HaarDrawConfig config{rmt::parse_group(o.group), o.dim, o.seed};
  const auto mc = rmt::monte_carlo(config, o.draws, stat, fp);
  const double target = rmt::limit_target(config.group, stat, fp);
  Report r;
  r.config = {{"group", o.group}, {"dim", o.dim}, {"draws", o.draws}, {"seed", o.seed}, {"test_fn", o.test_fn}};
  r.columns = {"group", "n", "draws", "statistic", "mean", "stderr", "target", "abs_dev"};
  r.rows.push_back({std::string(rmt::to_string(config.group)), rmt::matrix_size(config.group, o.dim), mc.draws,
                    std::string(rmt::to_string(stat)), number(mc.mean), number(mc.std_error), number(target),
                    number(std::abs(mc.mean - target))});
  return r;
}

Report run_kernel_pair(const Options& o) {
  const auto fp = testfn::parse_test_fn(o.test_fn);
  std::vector<kernels::Symmetry> labels;
  if (o.symmetry == "all") {
    labels = {kernels::Symmetry::U, kernels::Symmetry::Sp, kernels::Symmetry::SOeven, kernels::Symmetry::SOodd,
              kernels::Symmetry::O};
  } else {
    labels = {kernels::parse_symmetry(o.symmetry)};
  }
  Report r;
  r.config = {{"test_fn", o.test_fn}, {"symmetry", o.symmetry}};
  r.columns = {"symmetry", "pairing", "spatial_pairing", "abs_diff"};
  for (const auto label : labels) {
    const auto w = kernels::kernel(label);
    const double a = kernels::pairing(w, fp);
    const double b = kernels::spatial_pairing(w, fp);
    r.rows.push_back({std::string(kernels::to_string(label)), number(a), number(b), number(std::abs(a - b))});
  }
  return r;
}

Report run_indist(const Options& o) {
  const auto fp = testfn::parse_test_fn(o.test_fn);
  const auto rep = kernels::indistinguishability_report(fp);
  Report r;
  r.config = {{"test_fn", o.test_fn}};
  r.columns = {"support", "hypothesis_holds", "orthogonal_agree", "O", "SOeven", "SOodd", "Sp", "U", "orthogonal_spread"};
  r.rows.push_back({number(fp.support_radius), rep.hypothesis_holds, rep.orthogonal_agree, number(rep.o),
                    number(rep.so_even), number(rep.so_odd), number(rep.sp), number(rep.u),
                    number(rep.orthogonal_spread)});
  return r;
}

Report run_ef_density(const Options& o) {
  const auto fp = testfn::parse_test_fn(o.test_fn);
  Report r;
  r.config = {{"test_fn", o.test_fn}, {"nu_max", o.nu_max}};
  std::optional<lfun::AutoRep> rep;
  std::string source;
  if (!o.input.empty()) {
    rep = lfun::load_coefficients(o.input);
    source = o.input;
    r.config["input"] = o.input;
  } else {
    if (!(o.conductor > 1.0)) throw InputError("ef-density: give --input or a --conductor above 1");
    family::FamilyConfig config;
    config.size = 1;
    config.conductor = o.conductor;
    config.horizon = std::max<std::uint64_t>(2, lfun::required_horizon(o.conductor, fp.support_radius));
    config.measure = family::parse_satake_measure(o.measure);
    config.seed = o.seed;
    rep = family::sample_family(config).members().front();
    source = "synthetic:" + o.measure;
    r.config["conductor"] = o.conductor;
    r.config["measure"] = o.measure;
    r.config["seed"] = o.seed;
  }
  const auto ef = lfun::explicit_formula_density(*rep, fp, o.nu_max);
  r.columns = {"source", "conductor", "nu_max", "value", "tail_bound"};
  std::vector<json> row = {source, number(rep->conductor()), o.nu_max, number(ef.value), number(ef.tail_bound)};
  for (std::size_t k = 0; k < ef.per_nu.size(); ++k) {
    r.columns.push_back("P" + std::to_string(k + 1));
    row.push_back(number(ef.per_nu[k]));
  }
  r.rows.push_back(std::move(row));
  return r;
}

Report run_family_density(const Options& o) {
  if (o.input.empty()) throw InputError("family-density: --input <manifest> is required");
  const auto fp = testfn::parse_test_fn(o.test_fn);
  const auto fam = family::load_family_manifest(o.input);
  const auto avg = family::averaged_density(fam, fp, o.nu_max);
  Report r;
  r.config = {{"test_fn", o.test_fn}, {"nu_max", o.nu_max}, {"input", o.input}};
  r.columns = {"family", "members", "nu_max", "mean", "orthogonal_prediction", "deviation"};
  r.rows.push_back({fam.label(), fam.members().size(), o.nu_max, number(avg.mean), number(avg.predicted),
                    number(avg.deviation)});
  return r;
}

Report run_density_from_zeros(const Options& o) {
  if (o.input.empty()) throw InputError("density-from-zeros: --input <zeros file> is required");
  const auto fp = testfn::parse_test_fn(o.test_fn);
  const auto zeros = lfun::load_zeros(o.input);
  Report r;
  r.config = {{"test_fn", o.test_fn}, {"input", o.input}};
  r.columns = {"conductor", "zeros", "density"};
  r.rows.push_back({number(zeros.conductor), zeros.ordinates.size(), number(lfun::density_from_zeros(zeros, fp))});
  return r;
}

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InputError(std::string("malformed ") + what + " '" + item + "'");
    }
  }
  if (out.empty()) throw InputError(std::string("empty ") + what + " list");
  return out;
}

Report run_second_moment(const Options& o) {
  const auto fp = testfn::parse_test_fn(o.test_fn);
  Report r;
  r.config = {{"test_fn", o.test_fn}, {"log_c", o.log_c}};
  r.columns = {"log_c", "sum", "target", "deviation"};
  for (const double log_c : parse_list(o.log_c, "log c")) {
    const auto shift = family::second_order_shift(fp, log_c);
    r.rows.push_back({number(log_c), number(shift.sum), number(shift.target), number(shift.deviation)});
  }
  return r;
}

Report run_sieve_check(const Options& o) {
  const auto summary = family::sieve_check(o.q_max, o.vectors, o.seed);
  Report r;
  r.config = {{"q_max", o.q_max}, {"vectors", o.vectors}, {"seed", o.seed}};
  r.columns = {"q_max", "vectors", "checked", "mismatches", "status"};
  r.rows.push_back({summary.q_max, summary.vectors_per_modulus, summary.checked, summary.mismatches,
                    summary.all_exact() ? "all exact" : "MISMATCH"});
  if (!summary.all_exact()) r.exit_code = kNumericFailure;
  return r;
}

Report run_nonvanish(const Options& o) {
  const auto arg = testfn::parse_real_arg(o.support);
  const auto report = arg.exact ? family::nonvanishing_bounds(*arg.exact) : family::nonvanishing_bounds(arg.value);
  Report r;
  r.config = {{"support", o.support}};
  r.columns = {"support", "multiplicity_bound", "p0_lower", "nontrivial"};
  r.rows.push_back({number(report.support), number(report.multiplicity_bound), number(report.p0_lower),
                    report.nontrivial});
  return r;
}

Report run_primes(const Options& o) {
  const auto table = arith::sieve_primes(o.limit);
  Report r;
  r.config = {{"limit", o.limit}, {"list", o.list}};
  if (o.list) {
    r.columns = {"p"};
    for (const auto p : table) r.rows.push_back({p});
  } else {
    r.columns = {"limit", "count", "largest"};
    r.rows.push_back({o.limit, table.size(), table.empty() ? std::uint64_t{0} : table.primes().back()});
  }
  return r;
}

Report run_verify_testfn(const Options& o) {
  const auto fp = testfn::parse_test_fn(o.test_fn);
  const auto rep = testfn::verify_pair(fp, o.tol);
  Report r;
  r.config = {{"test_fn", o.test_fn}, {"tol", o.tol}};
  r.columns = {"test_fn", "pass", "evenness_dev", "support_dev", "integral_dev", "hat_integral_dev", "inversion_dev",
               "max_deviation"};
  r.rows.push_back({o.test_fn, rep.pass, number(rep.evenness_dev), number(rep.support_dev), number(rep.integral_dev),
                    number(rep.hat_integral_dev), number(rep.inversion_dev), number(rep.max_deviation)});
  if (!rep.pass) r.exit_code = kNumericFailure;
  return r;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// Reads `key = value` lines into flag form. A `subcommand = name` line names the
// subcommand when the command line does not.
std::vector<std::string> read_config(const std::string& path, std::string& subcommand) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config '" + path + "'");
  std::vector<std::string> args;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(path, line_no, "expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (key.empty()) throw ParseError(path, line_no, "missing key");
    std::replace(key.begin(), key.end(), '_', '-');
    if (key == "subcommand") {
      subcommand = value;
    } else if (value == "true") {
      args.push_back("--" + key);
    } else if (value != "false") {
      args.push_back("--" + key);
      args.push_back(value);
    }
  }
  return args;
}

struct Command {
  const char* name;
  const char* description;
  std::vector<const char*> flags;
  Runner run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "zerolab: low-lying zero statistics for random matrices and synthetic L-functions.\n"
      "Every run is determined by its flags, config file and input files; reruns are byte-identical\n"
      "for any ZEROLAB_THREADS setting. Flags may also come from --config FILE (key = value lines,\n"
      "keys are flag names); flags given on the command line take precedence over the file.\n"
      "Exit codes: 0 success, 1 input error, 2 numeric failure.",
      "zerolab"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  std::string config_path;
  app.add_option("--config", config_path, "key = value file of flag defaults");

  Options opt;
  Common common;
  const std::vector<Command> commands = {
      {"rmt-density",
       "Monte-Carlo one-level density sum_j phi(N theta_j / 2 pi) of Haar-random matrices, compared with the\n"
       "pairing of phi against the limiting density W of the group's symmetry type.\n"
       "CSV: group,n,draws,statistic,mean,stderr,target,abs_dev",
       {"group", "dim", "draws", "seed", "test-fn"},
       [](const Options& o) { return run_rmt(o, rmt::Statistic::one_level); }},
      {"rmt-paircorr",
       "Monte-Carlo pair correlation (1/N) sum_{j != k} phi(N (theta_j - theta_k) / 2 pi), differences taken on\n"
       "the circle, compared with int phi(x) (1 - (sin pi x / pi x)^2) dx.\n"
       "CSV: group,n,draws,statistic,mean,stderr,target,abs_dev",
       {"group", "dim", "draws", "seed", "test-fn"},
       [](const Options& o) { return run_rmt(o, rmt::Statistic::pair_corr); }},
      {"kernel-pair",
       "Pairing int phi W of a test function with the limiting one-level densities W of U, Sp, SO(even),\n"
       "SO(odd) and O, evaluated on the Fourier side and by spatial quadrature.\n"
       "CSV: symmetry,pairing,spatial_pairing,abs_diff",
       {"test-fn", "symmetry"},
       run_kernel_pair},
      {"indist-check",
       "For supp phi_hat inside (-1, 1) the three orthogonal densities give the same pairing\n"
       "phi_hat(0) + phi(0)/2, while Sp gives phi_hat(0) - phi(0)/2.\n"
       "CSV: support,hypothesis_holds,orthogonal_agree,O,SOeven,SOodd,Sp,U,orthogonal_spread",
       {"test-fn"},
       run_indist},
      {"ef-density",
       "One-level density of a degree-2 L-function through the explicit formula\n"
       "phi_hat(0) - sum_{nu <= nu_max} P^(nu), with a majorant for the terms beyond nu_max. Reads a coefficients\n"
       "file (--input) or samples Satake angles for --conductor.\n"
       "CSV: source,conductor,nu_max,value,tail_bound,P1..P<nu_max>",
       {"test-fn", "input", "conductor", "nu-max", "measure", "seed"},
       run_ef_density},
      {"family-density",
       "Average of the explicit-formula density over the family listed in a manifest (--input), beside the\n"
       "orthogonal prediction phi_hat(0) + phi(0)/2.\n"
       "CSV: family,members,nu_max,mean,orthogonal_prediction,deviation",
       {"test-fn", "input", "nu-max"},
       run_family_density},
      {"density-from-zeros",
       "One-level density sum_j phi(gamma_j log c / 2 pi) from a file of zero ordinates.\n"
       "CSV: conductor,zeros,density",
       {"test-fn", "input"},
       run_density_from_zeros},
      {"second-moment",
       "Second-moment prime sum (2 / log c) sum_p phi_hat(2 log p / log c) log p / p, which tends to\n"
       "phi(0)/2 with an O(1/log c) error. --log-c takes a comma-separated list.\n"
       "CSV: log_c,sum,target,deviation",
       {"test-fn", "log-c"},
       run_second_moment},
      {"sieve-check",
       "Exact integer check that lambda_2 * (tau_2 * L) = L and tau_2 * (lambda_2 * L) = L on the divisor\n"
       "lattice of every q <= q_max, for random integer vectors L. Exit 2 on any mismatch.\n"
       "CSV: q_max,vectors,checked,mismatches,status",
       {"q-max", "vectors", "seed"},
       run_sieve_check},
      {"nonvanish",
       "Bounds from the orthogonal one-level density with supp phi_hat = [-T, T]: sum_m m p_m <= 1/2 + 1/T and\n"
       "p_0 >= 1/2 - 1/T. --support accepts a ratio such as 2/3, evaluated exactly.\n"
       "CSV: support,multiplicity_bound,p0_lower,nontrivial",
       {"support"},
       run_nonvanish},
      {"primes",
       "Primes up to --limit by the sieve of Eratosthenes.\n"
       "CSV: limit,count,largest (or one column p with --list)",
       {"limit", "list"},
       run_primes},
      {"verify-testfn",
       "Numerical check that a test function pair is even, has compactly supported transform, and that the\n"
       "closed-form transform matches quadrature. Exit 2 if any deviation exceeds --tol.\n"
       "CSV: test_fn,pass,evenness_dev,support_dev,integral_dev,hat_integral_dev,inversion_dev,max_deviation",
       {"test-fn", "tol"},
       run_verify_testfn},
  };

  std::string chosen;
  for (const auto& cmd : commands) {
    auto* sub = app.add_subcommand(cmd.name, cmd.description);
    sub->callback([&chosen, name = cmd.name] { chosen = name; });
    add_common(sub, common);
    for (const std::string flag : cmd.flags) {
      if (flag == "test-fn") sub->add_option("--test-fn", opt.test_fn, "Test function, e.g. fejer:0.8 or fejer:2/3")->capture_default_str();
      if (flag == "group") sub->add_option("--group", opt.group, "U, SO_even, SO_odd or USp")->capture_default_str();
      if (flag == "dim") sub->add_option("--dim", opt.dim, "Size parameter: N for U(N), SO(2N), SO(2N+1), USp(2N)")->capture_default_str();
      if (flag == "draws") sub->add_option("--draws", opt.draws, "Number of Haar draws (>= 2)")->capture_default_str();
      if (flag == "seed") sub->add_option("--seed", opt.seed, "Random seed")->capture_default_str();
      if (flag == "symmetry") sub->add_option("--symmetry", opt.symmetry, "U, Sp, SOeven, SOodd, O or all")->capture_default_str();
      if (flag == "input") sub->add_option("--input", opt.input, "Input data file");
      if (flag == "conductor") sub->add_option("--conductor", opt.conductor, "Analytic conductor c > 1");
      if (flag == "nu-max") sub->add_option("--nu-max", opt.nu_max, "Highest prime-power block kept (>= 2)")->capture_default_str();
      if (flag == "measure") sub->add_option("--measure", opt.measure, "Satake angle law: uniform or sato_tate")->capture_default_str();
      if (flag == "log-c") sub->add_option("--log-c", opt.log_c, "Comma-separated values of log c")->capture_default_str();
      if (flag == "q-max") sub->add_option("--q-max", opt.q_max, "Largest modulus checked")->capture_default_str();
      if (flag == "vectors") sub->add_option("--vectors", opt.vectors, "Random vectors per modulus")->capture_default_str();
      if (flag == "support") sub->add_option("--support", opt.support, "Support radius T, decimal or a/b")->capture_default_str();
      if (flag == "limit") sub->add_option("--limit", opt.limit, "Sieve limit")->capture_default_str();
      if (flag == "list") sub->add_flag("--list", opt.list, "List every prime instead of the count");
      if (flag == "tol") sub->add_option("--tol", opt.tol, "Largest accepted deviation")->capture_default_str();
    }
  }

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    // Config flags go straight after the subcommand so later command-line flags win.
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i] == "--config" && i + 1 < args.size()) {
        config_path = args[i + 1];
        args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        break;
      }
      if (args[i].starts_with("--config=")) {
        config_path = args[i].substr(9);
        args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
        break;
      }
    }
    if (!config_path.empty()) {
      std::string config_sub;
      const auto extra = read_config(config_path, config_sub);
      auto sub_it = std::find_if(args.begin(), args.end(), [](const std::string& a) { return !a.starts_with("-"); });
      if (sub_it == args.end()) {
        if (config_sub.empty()) throw InputError("no subcommand on the command line or in '" + config_path + "'");
        args.insert(args.begin(), config_sub);
        sub_it = args.begin();
      }
      args.insert(sub_it + 1, extra.begin(), extra.end());
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputFailure;
  }

  const auto first = std::find_if(args.begin(), args.end(), [](const std::string& a) { return !a.starts_with("-"); });
  if (first != args.end() &&
      std::none_of(commands.begin(), commands.end(), [&](const Command& c) { return *first == c.name; })) {
    std::cerr << "error: unknown subcommand '" << *first << "'\n\n" << app.help();
    return kInputFailure;
  }

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n";
    const auto subs = app.get_subcommands();
    std::cerr << (subs.empty() ? app.help() : subs.front()->help());
    return kInputFailure;
  }

  const auto it = std::find_if(commands.begin(), commands.end(), [&](const Command& c) { return chosen == c.name; });
  try {
    const Report report = it->run(opt);
    const std::string text = render(report, chosen, common.out);
    if (common.output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(common.output, std::ios::binary);
      if (!out) throw InputError("cannot write '" + common.output + "'");
      out << text;
    }
    return report.exit_code;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputFailure;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputFailure;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kNumericFailure;
  }
}
