#include "zerolab/format.hpp"

#include <array>
#include <charconv>

namespace zerolab {

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return ec == std::errc{} ? std::string(buf.data(), ptr) : std::string("nan");
}

}  // namespace zerolab
