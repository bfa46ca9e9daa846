#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "zerolab_cli_test";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Run run(const std::string& args, const std::string& env = "") {
  const auto out = scratch() / "stdout.txt";
  const auto err = scratch() / "stderr.txt";
  const std::string cmd = env + " " + ZEROLAB_CLI_PATH + " " + args + " >" + out.string() + " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

void write(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

}  // namespace

TEST_CASE("nonvanish with an exact ratio") {
  const auto r = run("nonvanish --support 2/3 --out json");
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["results"][0]["multiplicity_bound"].get<double>() == 2.0);
  const auto csv = run("nonvanish --support 2");
  CHECK(csv.out == "support,multiplicity_bound,p0_lower,nontrivial\n2,1,0,false\n");
}

TEST_CASE("sieve-check reports all exact") {
  const auto r = run("sieve-check --q-max 1000 --seed 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("all exact") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
  const auto unknown = run("frobnicate");
  CHECK(unknown.code == 1);
  CHECK(unknown.err.find("Usage") != std::string::npos);
  CHECK(run("").code == 1);
  CHECK(run("rmt-density --group GL").code == 1);
  CHECK(run("rmt-density --draws 1 --dim 2").code == 1);
  CHECK(run("nonvanish --support 0").code == 1);
  CHECK(run("primes --limit 10 --out xml").code == 1);
  CHECK(run("verify-testfn --test-fn gauss:1").code == 1);
  CHECK(run("--help").code == 0);
  const auto help = run("rmt-density --help");
  CHECK(help.code == 0);
  CHECK(help.out.find("group,n,draws,statistic,mean,stderr,target,abs_dev") != std::string::npos);
}

TEST_CASE("malformed data files give a line-numbered error") {
  const auto zeros = scratch() / "bad_zeros.txt";
  write(zeros, "conductor 1000\n0.25\n3+4i\n");
  const auto r = run("density-from-zeros --input " + zeros.string());
  CHECK(r.code == 1);
  CHECK(r.err.find("bad_zeros.txt:3:") != std::string::npos);

  const auto coeffs = scratch() / "bad_coeffs.txt";
  write(coeffs, "conductor 100 root 1\n2 0.1\n3 0.2\n5 seven\n");
  const auto c = run("ef-density --input " + coeffs.string());
  CHECK(c.code == 1);
  CHECK(c.err.find("bad_coeffs.txt:4:") != std::string::npos);

  const auto cfg = scratch() / "bad.cfg";
  write(cfg, "draws 10\n");
  const auto k = run("rmt-density --config " + cfg.string());
  CHECK(k.code == 1);
  CHECK(k.err.find("bad.cfg:1:") != std::string::npos);
}

TEST_CASE("numeric failures exit 2") {
  const auto r = run("verify-testfn --test-fn fejer:0.8 --tol 1e-20");
  CHECK(r.code == 2);
  CHECK(r.out.find("false") != std::string::npos);
}

TEST_CASE("reruns are byte-identical for any worker count") {
  const std::string args = "rmt-density --group SO_odd --dim 4 --draws 400 --seed 7 --test-fn fejer:0.8 --out json";
  const auto a = run(args, "ZEROLAB_THREADS=1");
  const auto b = run(args, "ZEROLAB_THREADS=3");
  const auto c = run(args, "ZEROLAB_THREADS=1");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  const auto doc = nlohmann::json::parse(a.out);
  CHECK(doc["results"][0]["n"] == 9);
  CHECK(doc["results"][0]["draws"] == 400);
}

TEST_CASE("config file supplies defaults that flags override") {
  const auto cfg = scratch() / "run.cfg";
  write(cfg,
        "# U(6) run\n"
        "subcommand = rmt-density\n"
        "group = U\n"
        "dim = 6\n"
        "draws = 50\n"
        "seed = 3\n"
        "test_fn = fejer:0.8\n");
  const auto from_file = run("--config " + cfg.string());
  REQUIRE(from_file.code == 0);
  const auto explicit_flags = run("rmt-density --group U --dim 6 --draws 50 --seed 3 --test-fn fejer:0.8");
  CHECK(from_file.out == explicit_flags.out);
  const auto overridden = run("rmt-density --config " + cfg.string() + " --dim 5");
  CHECK(overridden.out.find("U,5,50,one_level") != std::string::npos);
}

TEST_CASE("output file, explicit formula and zeros") {
  const auto coeffs = scratch() / "rep.txt";
  write(coeffs, "conductor 1.9 root 1\n2 0.5\n");
  const auto report = scratch() / "ef.csv";
  const auto r = run("ef-density --input " + coeffs.string() + " --test-fn fejer:1 --output " + report.string());
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  const auto text = slurp(report);
  CHECK(text.rfind("source,conductor,nu_max,value,tail_bound,P1,P2\n", 0) == 0);
  CHECK(text.find(",1.9,2,1,") != std::string::npos);

  const auto synthetic = run("ef-density --conductor 1000 --seed 2 --nu-max 4 --out json");
  REQUIRE(synthetic.code == 0);
  CHECK(nlohmann::json::parse(synthetic.out)["results"][0].contains("P4"));
  CHECK(run("ef-density").code == 1);

  const auto zeros = scratch() / "zeros.txt";
  write(zeros, "conductor 100\n0\n");
  const auto z = run("density-from-zeros --input " + zeros.string() + " --test-fn fejer:0.8");
  CHECK(z.out == "conductor,zeros,density\n100,1,0.8\n");
}

TEST_CASE("remaining subcommands run") {
  CHECK(run("primes --limit 1000000").out == "limit,count,largest\n1000000,78498,999983\n");
  CHECK(run("primes --limit 10 --list").out == "p\n2\n3\n5\n7\n");
  const auto k = run("kernel-pair --test-fn fejer:0.9 --symmetry O");
  CHECK(k.code == 0);
  CHECK(k.out.find("O,1.45,") != std::string::npos);
  const auto ind = run("indist-check --test-fn fejer:0.9");
  CHECK(ind.out.find("0.9,true,true") != std::string::npos);
  const auto sm = run("second-moment --log-c 10,15");
  CHECK(sm.code == 0);
  CHECK(sm.out.find("\n10,0.32792297411227") != std::string::npos);
  CHECK(run("second-moment --log-c 10,x").code == 1);
  const auto pc = run("rmt-paircorr --group U --dim 8 --draws 20 --seed 1");
  CHECK(pc.out.find("U,8,20,pair_corr") != std::string::npos);
  const auto vt = run("verify-testfn --test-fn fejer:2/3");
  CHECK(vt.code == 0);
}

TEST_CASE("family-density from a manifest") {
  const auto dir = scratch();
  write(dir / "m1.txt", "conductor 20 root 1 horizon 20\n2 1.0471975511965976\n3 1.0471975511965976\n"
                        "5 1.0471975511965976\n7 1.0471975511965976\n11 1.0471975511965976\n"
                        "13 1.0471975511965976\n17 1.0471975511965976\n19 1.0471975511965976\n");
  write(dir / "fam.list", "m1.txt\n");
  const auto r = run("family-density --input " + (dir / "fam.list").string() + " --test-fn fejer:1");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("family,members,nu_max,mean,orthogonal_prediction,deviation\nfam,1,2,", 0) == 0);
  write(dir / "bad.list", "m1.txt\nnope.txt\n");
  const auto bad = run("family-density --input " + (dir / "bad.list").string());
  CHECK(bad.code == 1);
  CHECK(bad.err.find("bad.list:2:") != std::string::npos);
}
