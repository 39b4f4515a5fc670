#pragma once

#include <string>

#include <json.hpp>

#include "regcl/closure_space.hpp"
#include "regcl/convex.hpp"
#include "regcl/graph.hpp"
#include "regcl/lattice.hpp"
#include "regcl/semilattice.hpp"

namespace regcl::io {

using Json = nlohmann::json;

// Throws ParseError with line and column.
Json parse(const std::string& text);
Json read_file(const std::string& path);
// "line L, column C" for a byte offset.
std::string position(const std::string& text, std::size_t byte);

ClosureSpace space_from_json(const Json& j);
Json space_to_json(const ClosureSpace& s);

FiniteLattice lattice_from_json(const Json& j);
Json lattice_to_json(const FiniteLattice& L);

Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g);

JoinSemilattice semilattice_from_json(const Json& j);
Json semilattice_to_json(const JoinSemilattice& s);

PointConfiguration points_from_json(const Json& j);
Json points_to_json(const PointConfiguration& E);

CentralArrangement arrangement_from_json(const Json& j);
Json arrangement_to_json(const CentralArrangement& A);

}  // namespace regcl::io
