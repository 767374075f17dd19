#pragma once

#include "mvis/chromatic.hpp"
#include "mvis/constructive.hpp"
#include "mvis/graph.hpp"
#include "mvis/ramsey.hpp"

#include "json.hpp"

#include <string>

namespace mvis::io
{

using Json = nlohmann::ordered_json;

/// Sorted member list.
Json to_json(const VertexSet & s);
/// {"k": k, "classes": [...]}, classes sorted by their smallest member.
Json to_json(const Coloring & c);
/// {"host": "complete:n", "classes": q, "edges": [[u, v, class], ...]}.
Json to_json(const EdgePartition & p);
Json to_json(const ConstructedColoring & c);

/// Accepts {"classes": [[...], ...]}, {"colors": [...]} or a bare list of
/// classes. Throws InputError if the classes do not partition 0..n-1.
Coloring coloring_from_json(const Json & j, std::size_t n);
/// Accepts a JSON list, {"set": [...]} or whitespace-separated integers.
VertexSet set_from_text(const std::string & text, std::size_t n);

Coloring read_coloring_file(const std::string & path, std::size_t n);
VertexSet read_set_file(const std::string & path, std::size_t n);
std::string read_text_file(const std::string & path);

/// Graphviz rendering. With a colouring, every node gets a `color` attribute
/// and a matching fill.
std::string to_dot(const Graph & g, const Coloring * c = nullptr);

/// Replaces `path` with `content` through a temporary file and a rename.
void write_file_atomic(const std::string & path, const std::string & content);

}
