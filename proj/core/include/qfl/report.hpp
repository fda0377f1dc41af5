#pragma once

// CSV renderings of the reports. Comma separated, '.' decimal point, LF line
// endings, header row always present, floats with 12 significant digits.

#include <string>

#include "qfl/primitive.hpp"
#include "qfl/statistics.hpp"

namespace qfl {

/// printf("%.12g").
std::string format_real(double v);

std::string density_csv(const DensityReport& report);            // x,rho,ratio
std::string census_csv(const Census& census);                    // n
std::string chebyshev_csv(const ChebyshevReport& report);        // x,K,log_Qx,sum_S,sum_Sprime,s,sprime,t,u
std::string nx_csv(const NxHistogram& hist);                     // p,count
std::string vx_csv(const std::vector<VxWindow>& windows);        // v,V,x_over_log_v
std::string density_ct_csv(const std::vector<DensityCount>& v);  // x,count,ratio

}  // namespace qfl
