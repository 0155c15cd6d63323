#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "eventgraph/rational.hpp"

namespace eventgraph::dd {

using IntegerMatrix = std::vector<std::vector<Integer>>;

struct Progress {
  std::size_t step = 0;   // constraints inserted so far
  std::size_t total = 0;  // constraints overall
  std::size_t rays = 0;   // extreme rays of the current cone
  std::size_t positive = 0;    // rays strictly inside the inserted half-space
  std::size_t negative = 0;    // rays cut off by it
  std::size_t candidates = 0;  // pairs passing the tight-count filter
  std::size_t adjacent = 0;    // pairs found adjacent (new rays)
};

struct Options {
  /// Called after every constraint insertion.
  std::function<void(const Progress&)> on_step;
};

/// Extreme rays of the pointed cone {y : row . y >= 0 for every row}.
///
/// Incremental double description: the cone spanned by the first linearly
/// independent rows is simplicial, and each remaining row cuts it, combining
/// every adjacent (positive, negative) ray pair into a new ray on the cutting
/// hyperplane. Adjacency is decided by the exact rank of the constraints tight
/// on both rays. Rows are inserted in the order given.
///
/// Arithmetic is exact: 64-bit with overflow detection, rerun in
/// arbitrary precision if any intermediate value overflows. Each ray is
/// returned with the gcd of its entries equal to 1; rays are sorted
/// lexicographically. Throws InvalidArgument if the rows do not have full
/// column rank (the cone is not pointed).
IntegerMatrix extreme_rays(const IntegerMatrix& rows, const Options& options = {});

/// Rank over the rationals.
std::size_t rank(const IntegerMatrix& rows);

/// Integer basis of the rational null space {x : rows . x = 0}, each vector
/// primitive, in reduced-echelon order.
IntegerMatrix null_space(const IntegerMatrix& rows, std::size_t columns);

/// Indices of a maximal linearly independent subset of rows, chosen greedily
/// in the order given.
std::vector<std::size_t> independent_rows(const IntegerMatrix& rows);

}  // namespace eventgraph::dd
