#ifndef MOODREC_RECORDS_HPP
#define MOODREC_RECORDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "moodrec/emotion.hpp"
#include "moodrec/similarity.hpp"

namespace moodrec {

struct MovieRecord {
  MovieId movie_id = 0;
  std::string title;
  // Sorted, duplicate-free. Empty when the source row said
  // "(no genres listed)".
  std::vector<std::string> genres;

  friend bool operator==(const MovieRecord&, const MovieRecord&) = default;
};

struct RatingRecord {
  UserId user_id = 0;
  MovieId movie_id = 0;
  double rating = 0.0;  // [0.5, 5.0] on the 0.5 grid
  std::int64_t timestamp = 0;

  friend bool operator==(const RatingRecord&, const RatingRecord&) = default;
};

struct LinksRecord {
  MovieId movie_id = 0;
  std::optional<std::string> imdb_id;  // kept as text: leading zeros matter
  std::optional<std::int64_t> tmdb_id;

  friend bool operator==(const LinksRecord&, const LinksRecord&) = default;
};

/// One row of the emotion label dataset. The tid/mid/iid triple is carried
/// through unchanged from the source file.
struct EmotionLabelRecord {
  std::int64_t tmdb_id = 0;  // tid
  MovieId movie_id = 0;      // mid
  std::string imdb_id;       // iid
  EmotionLabel mood = EmotionLabel::Neutral;
  EmotionVector vector = EmotionVector::from_components(
      {1, 0, 0, 0, 0, 0, 0}, EmotionVector::kComputeTolerance);

  friend bool operator==(const EmotionLabelRecord&,
                         const EmotionLabelRecord&) = default;
};

}  // namespace moodrec

#endif  // MOODREC_RECORDS_HPP
