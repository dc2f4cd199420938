#pragma once

#include <memory>
#include <string>
#include <string_view>

#include <json.hpp>

#include "dtc/moves.hpp"

namespace dtc {

/// Parses whitespace-separated tokens T+<id>, T-<id>, M1@<id> and
/// M2@<id>[:<bottom pants>] into a word over `base`. The word is checked
/// for legality while parsing; errors are ParseError with the 1-based column
/// of the offending token.
MappingWord parse_word(std::string_view text, std::shared_ptr<const PantsDecomposition> base);

/// Token-stream form, e.g. "T+0 M1@0 T-0 M1@0". An explicit bottom pants is
/// written only when it was given.
std::string format_word(const MappingWord& w);
std::string format_generator(const Generator& g);

/// JSON form: array of token strings.
nlohmann::json word_to_json(const MappingWord& w);
MappingWord word_from_json(const nlohmann::json& doc, std::shared_ptr<const PantsDecomposition> base);

}  // namespace dtc
