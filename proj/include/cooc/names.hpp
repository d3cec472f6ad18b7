#pragma once

#include <string>
#include <string_view>

#include "cooc/export.hpp"
#include "cooc/graph.hpp"
#include "cooc/matrix.hpp"

namespace cooc {

// Enum spellings used in config files, JSON exports, and CLI flags.
// Parsers throw InputError naming the accepted values.

std::string to_string(CountMode m);
std::string to_string(RowGrouping g);
std::string to_string(CooccurKind k);
std::string to_string(CommunityMethod m);
std::string to_string(GraphFormat f);

CountMode count_mode_from(std::string_view s);
RowGrouping row_grouping_from(std::string_view s);
CooccurKind cooccur_kind_from(std::string_view s);
CommunityMethod community_method_from(std::string_view s);
GraphFormat graph_format_from(std::string_view s);

} // namespace cooc
