#include "hyperres/text_format.hpp"

#include <sstream>
#include <string>
#include <vector>

#include "hyperres/error.hpp"

namespace hyperres {

Hypergraph parse_hypergraph_text(std::string_view text, BuildOptions options) {
  std::vector<std::vector<std::string>> edges;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::istringstream tokens{std::string(line)};
    std::vector<std::string> edge;
    for (std::string label; tokens >> label;) edge.push_back(label);
    if (!edge.empty()) edges.push_back(std::move(edge));
    start = end + 1;
  }
  if (edges.empty()) throw Error(ErrorCode::kEmptyFile, "no edge lines");
  return Hypergraph::from_labels(edges, options);
}

std::string format_hypergraph(const Hypergraph& h) {
  std::string out;
  for (const auto& edge : h.edges()) {
    for (std::size_t i = 0; i < edge.size(); ++i) {
      if (i > 0) out += ' ';
      out += h.label(edge[i]);
    }
    out += '\n';
  }
  return out;
}

std::string format_multigraph(const Multigraph& g, const Hypergraph& source) {
  std::string out;
  for (const auto& [u, v] : g.edges) {
    out += source.label(u);
    if (u != v) out += ' ' + source.label(v);
    out += '\n';
  }
  return out;
}

}  // namespace hyperres
