#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lrb/band.hpp"
#include "lrb/words.hpp"

namespace lrb {

/// Parsed band description: labels, identity label or "auto", table of
/// labels. Mirrors printed multiplication tables for easy transcription.
struct BandDocument {
  std::vector<std::string> labels;
  std::string identity = "auto";
  std::vector<std::vector<std::string>> table;
  std::map<std::string, std::string> metadata;
};

struct ParseError {
  int line = 0;
  int col = 0;
  std::string message;
};

/// Text format: `elements: <labels>`, optional `identity: <label|auto>`,
/// then one row of n labels per element. '#' starts a comment. A JSON
/// object with the same fields is accepted when the text starts with '{'.
std::variant<BandDocument, std::vector<ParseError>> parse_band_document(std::string_view text);

std::string serialize_band_document(const BandDocument& doc);

/// The document realized as table data: identity resolved (adjoined at
/// index 0 for "auto") and labels mapped to indices.
struct RealizedTable {
  std::vector<int> table;
  int n = 0;
  int identity = 0;
  bool adjoined = false;
  std::vector<std::string> labels;
};

std::variant<RealizedTable, std::vector<ParseError>> realize(const BandDocument& doc);

/// Word serialization: whitespace-separated letter names, base letters
/// "a<k>", fresh letters "t:<owner>:<tag>:<round>" with element labels and
/// "-" for the empty tag. The empty word prints as "".
std::string word_to_string(const FreeWord& w, const AlphabetRegistry& reg,
                           const std::vector<std::string>* labels = nullptr);

std::optional<FreeWord> word_from_string(std::string_view text, AlphabetRegistry& reg,
                                         const std::vector<std::string>& labels);

}  // namespace lrb
