#pragma once

#include "trifree/coloring.hpp"
#include "trifree/document.hpp"
#include "trifree/format_error.hpp"
#include "trifree/online_game.hpp"

#include <string>
#include <string_view>

namespace trifree {

/// Family JSON. Rationals are written as "num/den" strings.
std::string family_to_json(const FamilyDocument& doc);
/// Throws FormatError.
FamilyDocument family_from_json(std::string_view text);

std::string shape_to_json(const CatalogEntry& entry);
std::string tree_to_json(const StrategyTree& tree);
std::string transcript_to_json(const GameResult& result, int k, std::string_view painter);
/// {"vertex": color, ...}
std::string coloring_to_json(const Coloring& coloring);
std::string chromatic_to_json(const ChromaticResult& result, const Graph& g);

}  // namespace trifree
