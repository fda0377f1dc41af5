#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>

namespace qfl::cli {

using Point = std::pair<double, double>;

/// Self-contained SVG line chart of `series`, with an optional dashed
/// horizontal reference line. Throws PreconditionViolated on an empty series.
std::string svg_document(std::span<const Point> series, std::optional<double> reference,
                         const std::string& title = {});

/// Writes svg_document(...) to `path`; I/O failures are reported with the path.
void emit_svg(std::span<const Point> series, std::optional<double> reference, const std::filesystem::path& path,
              const std::string& title = {});

}  // namespace qfl::cli
