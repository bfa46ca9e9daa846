#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "zerolab/arith.hpp"
#include "zerolab/error.hpp"
#include "zerolab/lfun_io.hpp"

using namespace zerolab;
using namespace zerolab::lfun;

namespace {

AutoRep parse(const std::string& text) {
  std::istringstream in(text);
  return parse_coefficients(in, "mem");
}

std::size_t error_line(const std::string& text, bool zeros = false) {
  std::istringstream in(text);
  try {
    if (zeros) {
      parse_zeros(in, "mem");
    } else {
      parse_coefficients(in, "mem");
    }
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("coefficients file parses with comments and defaults") {
  const auto rep = parse(
      "# synthetic form\n"
      "conductor 1000 root -1\n"
      "\n"
      "2 ramified\n"
      "3 1.5\n"
      "5 ramified\n"
      "7 0.25  \n");
  CHECK(rep.conductor() == 1000.0);
  CHECK(rep.root_number() == -1);
  CHECK(rep.arithmetic_conductor() == 10);
  CHECK(rep.horizon() == 7);
  CHECK(rep.locals().size() == 4);
  CHECK(rep.locals()[1].theta == 1.5);
  CHECK(rep.locals()[2].ramified);
}

TEST_CASE("explicit arith and horizon fields") {
  const auto rep = parse("conductor 50 root +1 arith 4 horizon 10\n2 ramified\n3 0.1\n5 0.2\n7 0.3\n");
  CHECK(rep.arithmetic_conductor() == 4);
  CHECK(rep.horizon() == 10);
}

TEST_CASE("coefficients round trip") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> angle(0.0, 3.141592653589793);
  for (const std::uint64_t q : {1, 6, 12, 35}) {
    std::vector<SatakeLocal> locals;
    for (const auto p : arith::sieve_primes(60)) {
      locals.push_back(q % p == 0 ? SatakeLocal::ramified_at(p) : SatakeLocal::unramified(p, angle(rng)));
    }
    const AutoRep rep(123.456, q, 60, locals, q % 2 ? 1 : -1);
    const auto text = dump_coefficients(rep);
    CHECK(parse(text) == rep);
    CHECK(dump_coefficients(parse(text)) == text);
  }
}

TEST_CASE("malformed coefficients files report the offending line") {
  CHECK(error_line("# only a comment\n") == 1);
  CHECK(error_line("conductor x root 1\n") == 1);
  CHECK(error_line("# c\nconductor 10 root 2\n") == 2);
  CHECK(error_line("conductor 10 root 1 colour red\n") == 1);
  CHECK(error_line("conductor 10 root 1\n2 0.1\n3\n") == 3);
  CHECK(error_line("conductor 10 root 1\n2 0.1\n\n3 4.0\n") == 4);
  CHECK(error_line("conductor 10 root 1\n3 0.1\n2 0.2\n") == 3);
  CHECK(error_line("conductor 10 root 1\n2 abc\n") == 2);
  // Missing prime 3: the structural check is reported on the header line.
  CHECK(error_line("conductor 10 root 1\n2 0.1\n5 0.2\n") == 1);
  // Ramified prime 2 with an explicit arithmetic conductor it does not divide.
  CHECK(error_line("conductor 10 root 1 arith 3\n2 ramified\n3 ramified\n") == 1);
  CHECK_THROWS_AS(parse(""), ParseError);
}

TEST_CASE("zeros file") {
  std::istringstream in("# zeros\nconductor 1e6\n0.5\n-0.5\n\n14.134725\n");
  const auto zeros = parse_zeros(in, "mem");
  CHECK(zeros.conductor == 1e6);
  CHECK(zeros.ordinates == std::vector<double>{0.5, -0.5, 14.134725});
  std::istringstream again(dump_zeros(zeros));
  CHECK(parse_zeros(again, "mem") == zeros);

  CHECK(error_line("conductor 1e6\n0.5\n1+2i\n", true) == 3);
  CHECK(error_line("conductor 1e6\n0.5 0.1\n", true) == 2);
  CHECK(error_line("conductor 1\n", true) == 1);
  CHECK(error_line("zeros 5\n", true) == 1);
  CHECK(error_line("conductor 100\nnan\n", true) == 2);
}

TEST_CASE("files on disk") {
  const auto dir = std::filesystem::temp_directory_path() / "zerolab_io_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / "rep.txt");
    out << "conductor 30 root 1\n2 0.5\n3 ramified\n";
  }
  const auto rep = load_coefficients(dir / "rep.txt");
  CHECK(rep.arithmetic_conductor() == 3);
  CHECK_THROWS_AS(load_coefficients(dir / "missing.txt"), InputError);
  try {
    std::ofstream out(dir / "bad.txt");
    out << "conductor 30 root 1\n2 0.5\n3 ramfied\n";
    out.close();
    load_coefficients(dir / "bad.txt");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("bad.txt:3:") != std::string::npos);
  }
  std::filesystem::remove_all(dir);
}
