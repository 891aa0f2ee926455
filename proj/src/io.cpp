#include "dicut/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace dicut {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void fail_at(const std::string& origin, size_t line, size_t col,
                          const std::string& why) {
  throw std::invalid_argument(origin + ":" + std::to_string(line) + ":" + std::to_string(col) +
                              ": " + why);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::pair<size_t, size_t> line_col_of(const std::string& text, size_t byte) {
  size_t line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

ordered_json parse_json(const std::string& text, const std::string& origin) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_col_of(text, e.byte ? e.byte - 1 : 0);
    fail_at(origin, line, col, e.what());
  }
}

Rat rat_from_json(const ordered_json& v, const std::string& origin) {
  try {
    if (v.is_string()) return rat_from_string(v.get<std::string>());
    if (v.is_number_integer()) return Rat(static_cast<long>(v.get<int64_t>()));
    if (v.is_number_float()) return rat_from_string(v.dump());
  } catch (const std::exception& e) {
    throw std::invalid_argument(origin + ": " + e.what());
  }
  throw std::invalid_argument(origin + ": expected a rational (string or number), got " +
                              v.dump());
}

WeightedDigraph graph_from_json(const ordered_json& j, const std::string& origin) {
  if (!j.is_object()) throw std::invalid_argument(origin + ": graph JSON must be an object");
  std::vector<std::string> vertices;
  if (j.contains("vertices"))
    for (const auto& v : j.at("vertices")) vertices.push_back(v.get<std::string>());
  std::vector<std::tuple<std::string, std::string, Rat>> edges;
  for (const auto& e : j.value("edges", ordered_json::array())) {
    if (!e.contains("tail") || !e.contains("head") || !e.contains("w"))
      throw std::invalid_argument(origin + ": edge needs tail, head, w");
    edges.emplace_back(e.at("tail").get<std::string>(), e.at("head").get<std::string>(),
                       rat_from_json(e.at("w"), origin));
  }
  return WeightedDigraph::from_edges(edges, vertices);
}

WeightedDigraph graph_from_tsv(const std::string& text, const std::string& origin) {
  std::vector<std::tuple<std::string, std::string, Rat>> edges;
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    size_t tab1 = line.find('\t');
    size_t tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
    if (tab1 == std::string::npos || tab2 == std::string::npos)
      fail_at(origin, lineno, 1, "expected tail<TAB>head<TAB>weight");
    std::string tail = line.substr(0, tab1);
    std::string head = line.substr(tab1 + 1, tab2 - tab1 - 1);
    std::string wtext = line.substr(tab2 + 1);
    if (tail.empty() || head.empty()) fail_at(origin, lineno, 1, "empty vertex id");
    Rat w;
    try {
      w = rat_from_string(wtext);
    } catch (const std::exception& e) {
      fail_at(origin, lineno, tab2 + 2, e.what());
    }
    if (w < 0) fail_at(origin, lineno, tab2 + 2, "negative weight");
    edges.emplace_back(std::move(tail), std::move(head), std::move(w));
  }
  return WeightedDigraph::from_edges(edges);
}

}  // namespace

WeightedDigraph parse_graph(const std::string& text, const std::string& origin) {
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return graph_from_json(parse_json(text, origin), origin);
  return graph_from_tsv(text, origin);
}

WeightedDigraph load_graph(const std::string& path) {
  return parse_graph(read_file(path), path);
}

std::string format_graph(const WeightedDigraph& g, GraphFormat fmt) {
  if (fmt == GraphFormat::Tsv) {
    std::ostringstream os;
    for (const auto& e : g.edges())
      os << g.name(e.tail) << '\t' << g.name(e.head) << '\t' << rat_to_string(e.w) << '\n';
    return os.str();
  }
  ordered_json j;
  j["vertices"] = ordered_json::array();
  for (const auto& v : g.vertices()) j["vertices"].push_back(v);
  j["edges"] = ordered_json::array();
  for (const auto& e : g.edges())
    j["edges"].push_back({{"tail", g.name(e.tail)},
                          {"head", g.name(e.head)},
                          {"w", rat_to_string(e.w)}});
  return j.dump(2) + "\n";
}

void save_graph(const WeightedDigraph& g, const std::string& path, GraphFormat fmt) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << format_graph(g, fmt);
}

Selection parse_selection(const std::string& text, const std::string& origin) {
  ordered_json j = parse_json(text, origin);
  if (!j.is_object() || !j.contains("kind"))
    throw std::invalid_argument(origin + ": selection JSON needs a \"kind\"");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "plsigmoid") return make_plsigmoid(rat_from_json(j.at("b"), origin));
  if (kind == "antisym_piecewise") {
    std::vector<Rat> t, p;
    for (const auto& v : j.at("thresholds")) t.push_back(rat_from_json(v, origin));
    for (const auto& v : j.at("values")) p.push_back(rat_from_json(v, origin));
    return make_antisym_piecewise(std::move(t), std::move(p));
  }
  throw std::invalid_argument(origin + ": unknown selection kind '" + kind + "'");
}

Selection load_selection(const std::string& path) {
  return parse_selection(read_file(path), path);
}

std::string format_selection(const Selection& s) {
  ordered_json j;
  if (const auto* pl = std::get_if<PLSigmoid>(&s)) {
    j["kind"] = "plsigmoid";
    j["b"] = rat_to_string(pl->b);
  } else {
    const auto& ap = std::get<AntisymPiecewise>(s);
    j["kind"] = "antisym_piecewise";
    j["thresholds"] = ordered_json::array();
    for (const auto& t : ap.thresholds) j["thresholds"].push_back(rat_to_string(t));
    j["values"] = ordered_json::array();
    for (const auto& p : ap.values) j["values"].push_back(rat_to_string(p));
  }
  return j.dump(2) + "\n";
}

}  // namespace dicut
