#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace qfl::cli {

enum class Format { Csv, Json, Svg };

struct RunConfig {
  std::string subcommand;
  std::int64_t b = 1;
  std::uint64_t x = 0;
  std::uint64_t lo = 1;
  double K = 3.0;
  std::uint64_t B = 0;
  std::uint32_t k_max = 0;  // 0: default cutoff
  std::uint64_t digit_cap = 10'000;
  std::uint64_t segment_size = 1 << 15;
  unsigned threads = 0;  // 0: QFL_THREADS, then 1
  std::uint64_t checkpoints = 10;
  Format format = Format::Csv;
  std::string out;     // empty: stdout
  std::string vx_out;  // nx only
};

/// Exit codes: 0 success, 1 usage error, 2 computation error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qfl::cli
