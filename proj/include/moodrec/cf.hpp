#ifndef MOODREC_CF_HPP
#define MOODREC_CF_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "moodrec/kernels.hpp"
#include "moodrec/records.hpp"
#include "moodrec/similarity.hpp"

namespace moodrec {

enum class Orientation {
  UsersAsRows,  // UBCF layout
  ItemsAsRows,  // IBCF layout
};

/// Sparse explicit-rating matrix. Immutable after build; row and column ids
/// are sorted ascending and unrated cells are zero.
class RatingMatrix {
 public:
  // Duplicate (user, movie) pairs keep the rating with the latest
  // timestamp (last occurrence wins on equal timestamps).
  static RatingMatrix build(std::span<const RatingRecord> ratings,
                            Orientation orientation);

  // Same, with extra ids that must appear even when nothing references
  // them (catalog movies nobody rated get an all-zero row).
  static RatingMatrix build(std::span<const RatingRecord> ratings,
                            Orientation orientation,
                            std::span<const std::int64_t> extra_row_ids,
                            std::span<const std::int64_t> extra_col_ids);

  Orientation orientation() const { return orientation_; }
  const std::vector<std::int64_t>& row_ids() const { return row_ids_; }
  const std::vector<std::int64_t>& col_ids() const { return col_ids_; }
  std::size_t entry_count() const { return csr_.vals.size(); }

  std::optional<std::size_t> row_pos(std::int64_t row_id) const;
  SparseVec row(std::size_t pos) const {
    return {csr_.row_cols(pos), csr_.row_vals(pos)};
  }
  const CsrMatrix& csr() const { return csr_; }

 private:
  Orientation orientation_ = Orientation::UsersAsRows;
  std::vector<std::int64_t> row_ids_;
  std::vector<std::int64_t> col_ids_;
  CsrMatrix csr_;
};

/// Ranked neighbor list of one anchor row; the anchor itself is excluded.
struct Neighbor {
  std::int64_t id = 0;
  double similarity = 0.0;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

struct Neighborhood {
  std::int64_t anchor_id = 0;
  std::vector<Neighbor> neighbors;  // similarity non-increasing
};

// The k most similar rows to anchor (ties by ascending id).
Neighborhood nearest_neighbors(const RatingMatrix& m, std::int64_t anchor_id,
                               std::size_t k, Exec exec = Exec::Auto);

// Cosine of two items' full rating rows; requires ItemsAsRows.
double item_similarity(const RatingMatrix& m, MovieId a, MovieId b);

// Cosine of two users' full rating rows; requires UsersAsRows.
double user_similarity(const RatingMatrix& m, UserId a, UserId b);

// Rank every other item by similarity to the seed. Never returns the seed.
std::vector<ScoredItem> ibcf_recommend(const RatingMatrix& m, MovieId seed,
                                       std::size_t n, Exec exec = Exec::Auto);

// Take the k_neighbors most similar users; candidates are their watched
// movies minus the active user's watched set; each candidate scores the sum
// over neighbors of similarity x neighbor rating (accumulated in
// neighborhood rank order). Never returns a movie the active user rated.
std::vector<ScoredItem> ubcf_recommend(const RatingMatrix& m, UserId active,
                                       std::size_t n,
                                       std::size_t k_neighbors = 1,
                                       Exec exec = Exec::Auto);

}  // namespace moodrec

#endif  // MOODREC_CF_HPP
