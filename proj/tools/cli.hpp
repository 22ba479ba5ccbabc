#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "racg/classifier.hpp"

namespace racg::cli {

enum ExitCode { kOk = 0, kUsage = 1, kParse = 2, kInternal = 3 };

/// Runs the `racg` command line; never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::ordered_json to_json(const PresentationGraph& graph, VertexSet s);
nlohmann::ordered_json to_json(const PresentationGraph& graph, const SeparatorCertificate& cert);
nlohmann::ordered_json to_json(const PresentationGraph& graph, const Classification& c);

}  // namespace racg::cli
