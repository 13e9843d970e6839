#pragma once

/**
 * @file report.hpp
 * @brief JSON and markdown renderings of theorem reports.
 *
 * Everything except the elapsed_ms fields is a pure function of the corpus
 * names and the reports, so two runs over the same input differ only there.
 */

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "aprime/theorems.hpp"

namespace aprime {

nlohmann::ordered_json report_to_json(std::span<const std::string> corpus_names,
                                      std::span<const TheoremReport> reports);

/// Same document with every "elapsed_ms" member removed.
nlohmann::ordered_json strip_timing(nlohmann::ordered_json doc);

std::string report_to_markdown(std::span<const std::string> corpus_names, std::span<const TheoremReport> reports);

} // namespace aprime
