#ifndef KDIAM_GENERATORS_HPP
#define KDIAM_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "kdiam/geometry.hpp"
#include "kdiam/graph.hpp"
#include "kdiam/hypergraph_order.hpp"

namespace kdiam {

/// Connected simple graph: random spanning tree plus uniform extra edges. Needs n-1 <= m <= n(n-1)/2.
Graph random_connected_graph(std::size_t n, std::size_t m, Rng& rng);

/// n distinct points uniform in [0, box]^2.
std::vector<Point> random_points(std::size_t n, double box, Rng& rng);

/// Convex polygon with vertices at sorted random angles on a circle.
ConvexPolygon random_convex_polygon(int sides, double radius, Rng& rng);

/**
 * Redraws random_points until the intersection graph under `f` is connected.
 * Throws InputError after `max_tries` failures.
 */
std::vector<Point> random_connected_points(std::size_t n, double box, const ConvexPolygon& f,
                                           Rng& rng, int max_tries = 1000);

}  // namespace kdiam

#endif  // KDIAM_GENERATORS_HPP
