#include "zerolab/lfun_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

#include "zerolab/error.hpp"
#include "zerolab/format.hpp"

namespace zerolab::lfun {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

bool skippable(const std::vector<std::string_view>& tokens) {
  return tokens.empty() || tokens.front().starts_with('#');
}

struct LineReader {
  std::istream& in;
  const std::string& source;
  std::size_t line_no = 0;
  std::string line;

  // Next non-skippable line, or empty if the stream ended.
  std::vector<std::string_view> next() {
    while (std::getline(in, line)) {
      ++line_no;
      auto tokens = split_ws(line);
      if (!skippable(tokens)) return tokens;
    }
    return {};
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(source, line_no, what); }

  double real(std::string_view token, const char* what) const {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(v)) {
      fail(std::string("expected ") + what + ", got '" + std::string(token) + "'");
    }
    return v;
  }

  std::uint64_t integer(std::string_view token, const char* what) const {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      fail(std::string("expected ") + what + ", got '" + std::string(token) + "'");
    }
    return v;
  }
};

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  return in;
}

}  // namespace

AutoRep parse_coefficients(std::istream& in, const std::string& source) {
  LineReader reader{in, source, 0, {}};
  const auto header = reader.next();
  if (header.size() < 4 || header.size() % 2 != 0 || header[0] != "conductor" || header[2] != "root") {
    reader.fail("header must be 'conductor <real> root <+1|-1> [arith <q>] [horizon <n>]'");
  }
  const double conductor = reader.real(header[1], "conductor");
  int root = 0;
  if (header[3] == "+1" || header[3] == "1") {
    root = 1;
  } else if (header[3] == "-1") {
    root = -1;
  } else {
    reader.fail("root number must be +1 or -1");
  }
  std::optional<std::uint64_t> arith, horizon;
  for (std::size_t i = 4; i + 1 < header.size(); i += 2) {
    if (header[i] == "arith") {
      arith = reader.integer(header[i + 1], "arithmetic conductor");
    } else if (header[i] == "horizon") {
      horizon = reader.integer(header[i + 1], "horizon");
    } else {
      reader.fail("unknown header field '" + std::string(header[i]) + "'");
    }
  }
  const std::size_t header_line = reader.line_no;

  std::vector<SatakeLocal> locals;
  std::uint64_t ramified_product = 1;
  for (auto tokens = reader.next(); !tokens.empty(); tokens = reader.next()) {
    if (tokens.size() != 2) reader.fail("expected '<p> <theta>' or '<p> ramified'");
    const std::uint64_t p = reader.integer(tokens[0], "prime");
    if (!locals.empty() && p <= locals.back().p) reader.fail("primes must be strictly increasing");
    if (tokens[1] == "ramified") {
      locals.push_back(SatakeLocal::ramified_at(p));
      ramified_product *= p;
    } else {
      const double theta = reader.real(tokens[1], "Satake angle");
      if (!(theta >= 0.0 && theta <= std::numbers::pi)) reader.fail("Satake angle outside [0, pi]");
      locals.push_back({p, false, theta});
    }
  }

  const std::uint64_t h = horizon.value_or(locals.empty() ? 1 : locals.back().p);
  try {
    return AutoRep(conductor, arith.value_or(ramified_product), h, std::move(locals), root);
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(source, header_line, e.what());
  }
}

AutoRep load_coefficients(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse_coefficients(in, path.string());
}

std::string dump_coefficients(const AutoRep& rep) {
  std::ostringstream out;
  out << "conductor " << format_double(rep.conductor()) << " root " << (rep.root_number() > 0 ? "+1" : "-1");

  std::uint64_t ramified_product = 1;
  for (const auto& local : rep.locals()) {
    if (local.ramified) ramified_product *= local.p;
  }
  if (rep.arithmetic_conductor() != ramified_product) out << " arith " << rep.arithmetic_conductor();
  const std::uint64_t last = rep.locals().empty() ? 1 : rep.locals().back().p;
  if (rep.horizon() != last) out << " horizon " << rep.horizon();
  out << '\n';

  for (const auto& local : rep.locals()) {
    out << local.p << ' ' << (local.ramified ? std::string("ramified") : format_double(local.theta)) << '\n';
  }
  return out.str();
}

ZerosRecord parse_zeros(std::istream& in, const std::string& source) {
  LineReader reader{in, source, 0, {}};
  const auto header = reader.next();
  if (header.size() != 2 || header[0] != "conductor") reader.fail("header must be 'conductor <real>'");
  ZerosRecord zeros;
  zeros.conductor = reader.real(header[1], "conductor");
  if (!(zeros.conductor > 1.0)) reader.fail("conductor must exceed 1");

  for (auto tokens = reader.next(); !tokens.empty(); tokens = reader.next()) {
    if (tokens.size() != 1) reader.fail("expected one real ordinate per line (complex ordinates are not accepted)");
    const auto token = tokens[0];
    if (token.find_first_of("iIjJ") != std::string_view::npos && token.find_first_of("nN") == std::string_view::npos) {
      reader.fail("complex ordinate '" + std::string(token) + "' (ordinates must be real)");
    }
    zeros.ordinates.push_back(reader.real(token, "real ordinate"));
  }
  return zeros;
}

ZerosRecord load_zeros(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse_zeros(in, path.string());
}

std::string dump_zeros(const ZerosRecord& zeros) {
  std::ostringstream out;
  out << "conductor " << format_double(zeros.conductor) << '\n';
  for (const double gamma : zeros.ordinates) out << format_double(gamma) << '\n';
  return out.str();
}

}  // namespace zerolab::lfun
