#include "qfl/report.hpp"

#include <cstdio>

namespace qfl {

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string density_csv(const DensityReport& report) {
  std::string out = "x,rho,ratio\n";
  for (const auto& c : report.checkpoints) {
    out += std::to_string(c.x) + ',' + std::to_string(c.rho) + ',' + format_real(c.ratio) + '\n';
  }
  return out;
}

std::string census_csv(const Census& census) {
  std::string out = "n\n";
  for (std::uint64_t n : census.non_primitive) out += std::to_string(n) + '\n';
  return out;
}

std::string chebyshev_csv(const ChebyshevReport& r) {
  std::string out = "x,K,log_Qx,sum_S,sum_Sprime,s,sprime,t,u\n";
  out += std::to_string(r.x) + ',' + format_real(r.K) + ',' + format_real(r.log_Qx) + ',' + format_real(r.sum_S) +
         ',' + format_real(r.sum_Sprime) + ',' + std::to_string(r.s) + ',' + std::to_string(r.s_prime) + ',' +
         std::to_string(r.t) + ',' + std::to_string(r.u) + '\n';
  return out;
}

std::string nx_csv(const NxHistogram& hist) {
  std::string out = "p,count\n";
  for (const auto& [p, c] : hist.counts) out += std::to_string(p) + ',' + std::to_string(c) + '\n';
  return out;
}

std::string vx_csv(const std::vector<VxWindow>& windows) {
  std::string out = "v,V,x_over_log_v\n";
  for (const auto& w : windows) {
    out += format_real(w.v) + ',' + std::to_string(w.V) + ',' + format_real(w.x_over_log_v) + '\n';
  }
  return out;
}

std::string density_ct_csv(const std::vector<DensityCount>& v) {
  std::string out = "x,count,ratio\n";
  for (const auto& d : v) out += std::to_string(d.x) + ',' + std::to_string(d.count) + ',' + format_real(d.ratio) + '\n';
  return out;
}

}  // namespace qfl
