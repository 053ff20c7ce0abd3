#pragma once

#include <string>

#include <json.hpp>

#include "wordmaps/rigidity.hpp"
#include "wordmaps/wordmap.hpp"

namespace wordmaps {

using json = nlohmann::ordered_json;

/// Comparison report schema:
/// { "w1", "w2", "rank", "mode", "results": [ { "group", "order", "verdict",
///   "witness": {"element", "count1"?, "count2"?} } ], "first_differ" }.
/// The witness object is present only on differ rows; counts only in measure
/// mode. Rendering is deterministic byte for byte.
json to_json(const CompareReport& report);
std::string to_csv(const CompareReport& report);

/// Extends the comparison schema with "classification"
/// {"kind","root","multiplicity","gcd"} and "theorem_main2".
json to_json(const ExperimentReport& report);
std::string to_csv(const ExperimentReport& report);

json image_json(const std::string& word_text, int rank, const std::string& group_spec,
                const WordImage& img);
std::string image_csv(const WordImage& img);

json measure_json(const std::string& word_text, int rank, const std::string& group_spec,
                  const FiberMeasure& m);
std::string measure_csv(const FiberMeasure& m);

json classification_json(const std::string& word_text, const Classification& c);

}  // namespace wordmaps
