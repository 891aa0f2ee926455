#pragma once

#include <string>

#include "dicut/digraph.hpp"
#include "dicut/selection.hpp"

namespace dicut {

// Graph files: either TSV lines "tail<TAB>head<TAB>weight" (weights are
// rational literals, '#' starts a comment) or a JSON document
// {"vertices": [...], "edges": [{"tail","head","w"}, ...]}. Duplicate
// (tail, head) pairs are merged by summing. Format is sniffed from the
// content.
WeightedDigraph load_graph(const std::string& path);
WeightedDigraph parse_graph(const std::string& text, const std::string& origin);

enum class GraphFormat { Tsv, Json };
std::string format_graph(const WeightedDigraph& g, GraphFormat fmt);
void save_graph(const WeightedDigraph& g, const std::string& path, GraphFormat fmt);

// Selection files: JSON {"kind":"plsigmoid","b":"149/309"} or
// {"kind":"antisym_piecewise","thresholds":[...],"values":[...]} with
// rational strings or numbers.
Selection load_selection(const std::string& path);
Selection parse_selection(const std::string& text, const std::string& origin);
std::string format_selection(const Selection& s);

}  // namespace dicut
