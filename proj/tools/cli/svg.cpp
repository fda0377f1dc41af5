#include "svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "qfl/error.hpp"
#include "qfl/report.hpp"

namespace qfl::cli {

namespace {

constexpr double kWidth = 640, kHeight = 400;
constexpr double kLeft = 60, kRight = 20, kTop = 30, kBottom = 40;

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string svg_document(std::span<const Point> series, std::optional<double> reference, const std::string& title) {
  if (series.empty()) throw Error(ErrorCode::PreconditionViolated, "cannot plot an empty series");

  auto [xmin_it, xmax_it] =
      std::minmax_element(series.begin(), series.end(), [](const Point& a, const Point& b) { return a.first < b.first; });
  auto [ymin_it, ymax_it] = std::minmax_element(series.begin(), series.end(),
                                                [](const Point& a, const Point& b) { return a.second < b.second; });
  double x0 = xmin_it->first, x1 = xmax_it->first;
  double y0 = ymin_it->second, y1 = ymax_it->second;
  if (reference) {
    y0 = std::min(y0, *reference);
    y1 = std::max(y1, *reference);
  }
  if (x1 == x0) x1 = x0 + 1;
  const double pad = y1 > y0 ? 0.05 * (y1 - y0) : 0.05;
  y0 -= pad;
  y1 += pad;

  const double plot_w = kWidth - kLeft - kRight, plot_h = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * plot_w; };
  auto sy = [&](double y) { return kTop + (y1 - y) / (y1 - y0) * plot_h; };

  std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" viewBox=\"0 0 640 400\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"640\" height=\"400\" fill=\"white\"/>\n";
  if (!title.empty()) {
    svg += "<text x=\"320\" y=\"18\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
           escape(title) + "</text>\n";
  }
  // axes
  svg += "<line x1=\"" + fixed(kLeft) + "\" y1=\"" + fixed(kTop + plot_h) + "\" x2=\"" + fixed(kLeft + plot_w) +
         "\" y2=\"" + fixed(kTop + plot_h) + "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + fixed(kLeft) + "\" y1=\"" + fixed(kTop) + "\" x2=\"" + fixed(kLeft) + "\" y2=\"" +
         fixed(kTop + plot_h) + "\" stroke=\"black\"/>\n";
  const auto label = [&](double x, double y, const std::string& anchor, const std::string& text) {
    svg += "<text x=\"" + fixed(x) + "\" y=\"" + fixed(y) + "\" text-anchor=\"" + anchor +
           "\" font-family=\"sans-serif\" font-size=\"11\">" + text + "</text>\n";
  };
  label(kLeft, kHeight - 12, "start", format_real(x0));
  label(kLeft + plot_w, kHeight - 12, "end", format_real(x1));
  label(kLeft - 6, kTop + 4, "end", format_real(y1));
  label(kLeft - 6, kTop + plot_h, "end", format_real(y0));

  if (reference) {
    const double y = sy(*reference);
    svg += "<line class=\"reference\" data-value=\"" + format_real(*reference) + "\" x1=\"" + fixed(kLeft) +
           "\" y1=\"" + fixed(y) + "\" x2=\"" + fixed(kLeft + plot_w) + "\" y2=\"" + fixed(y) +
           "\" stroke=\"gray\" stroke-dasharray=\"6 4\"/>\n";
  }

  svg += "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (i) svg += ' ';
    svg += fixed(sx(series[i].first)) + ',' + fixed(sy(series[i].second));
  }
  svg += "\"/>\n</svg>\n";
  return svg;
}

void emit_svg(std::span<const Point> series, std::optional<double> reference, const std::filesystem::path& path,
              const std::string& title) {
  const std::string doc = svg_document(series, reference, title);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path.string() + " for writing");
  out << doc;
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

}  // namespace qfl::cli
