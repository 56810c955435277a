#pragma once

#include <string>
#include <string_view>

#include "hyperres/hypergraph.hpp"
#include "hyperres/transforms.hpp"

namespace hyperres {

/// `.hg` text: one edge per line as whitespace-separated labels. `#` starts a
/// comment; lines empty after stripping are skipped. Vertex ids follow first
/// appearance. Throws kEmptyFile when no edge line remains, plus every
/// build error of Hypergraph::from_labels.
Hypergraph parse_hypergraph_text(std::string_view text,
                                 BuildOptions options = {});

// Inverse of the parser: one line per edge, labels in vertex-id order.
std::string format_hypergraph(const Hypergraph& h);

// A loop prints as a single label, parallel edges as repeated lines.
std::string format_multigraph(const Multigraph& g, const Hypergraph& source);

}  // namespace hyperres
