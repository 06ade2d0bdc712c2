#pragma once

// Dataset files (JSON). Numbers are read from their source text so decimals
// stay exact; probabilities may also be "p/q" strings.
//
//   {"alternatives": ["a","b","c"],
//    "mu": {"a,b": "1/2", "a,b,c": 0.5},
//    "lambda": {"a": 0.25, "b": "1/2", "c": 0.25},
//    "outside_option": false, "xi": {...}, "feasible": ["a", "a,b"]}

#include <string>
#include <string_view>

#include "margchoice/domain.hpp"

namespace margchoice {

/// Throws Parse naming the offending field.
RawDataset parse_dataset_json(std::string_view text);
/// Throws Parse when the file cannot be read.
RawDataset read_dataset_file(const std::string& path);
/// Canonical JSON text (probabilities as rational strings).
std::string dataset_to_json(const RawDataset& raw, int indent = 2);

}  // namespace margchoice
