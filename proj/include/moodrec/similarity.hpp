#ifndef MOODREC_SIMILARITY_HPP
#define MOODREC_SIMILARITY_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "moodrec/error.hpp"

namespace moodrec {

using MovieId = std::int64_t;
using UserId = std::int64_t;

struct ScoredItem {
  MovieId item_id = 0;
  double score = 0.0;

  friend bool operator==(const ScoredItem&, const ScoredItem&) = default;
};

// Inner(x, y) = sum_i x_i * y_i. Plain left-to-right 64-bit accumulation.
// Throws DimensionError on length mismatch.
double inner(std::span<const double> x, std::span<const double> y);

// <x,y> / (|x| |y|); returns 0 when either norm is zero so that empty
// feature blocks rank last instead of crashing the pipeline.
double cosine(std::span<const double> x, std::span<const double> y);

// The k highest-scoring items (all of them if fewer), descending score,
// ties broken by ascending item id.
std::vector<ScoredItem> top_k(std::vector<ScoredItem> candidates,
                              std::size_t k);

}  // namespace moodrec

#endif  // MOODREC_SIMILARITY_HPP
