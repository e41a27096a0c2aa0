#ifndef KDIAM_IO_HPP
#define KDIAM_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "kdiam/geometry.hpp"
#include "kdiam/graph.hpp"

namespace kdiam {

/**
 * Edge-list text format: a header line `n m` followed by exactly m lines
 * `u v` with 0-based ids. Self-loops, duplicate edges, trailing garbage and
 * disconnected graphs are rejected with InputError / DisconnectedGraphError.
 */
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

/// One `x,y` line per point; blank lines are ignored.
std::vector<Point> read_points(std::istream& in);
void write_points(std::ostream& out, const std::vector<Point>& points);

/// First line `s`, then s lines `x,y` listing the vertices counter-clockwise.
ConvexPolygon read_polygon(std::istream& in);
void write_polygon(std::ostream& out, const ConvexPolygon& polygon);

Graph read_edge_list_file(const std::string& path);
std::vector<Point> read_points_file(const std::string& path);
ConvexPolygon read_polygon_file(const std::string& path);

}  // namespace kdiam

#endif  // KDIAM_IO_HPP
