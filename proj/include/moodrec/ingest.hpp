#ifndef MOODREC_INGEST_HPP
#define MOODREC_INGEST_HPP

#include <cstddef>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "moodrec/records.hpp"

namespace moodrec {

struct MergeReport {
  std::size_t raw_count = 0;     // movies in the source catalog
  std::size_t merged_count = 0;  // movies that received an emotion profile
  double loss_fraction = 0.0;    // (raw - merged) / raw

  friend bool operator==(const MergeReport&, const MergeReport&) = default;
};

/// Merged movie store. Frozen after merge_catalog returns; thereafter
/// shared read-only.
struct Catalog {
  std::map<MovieId, MovieRecord> movies;
  std::map<MovieId, EmotionLabelRecord> emotion;  // keys are a subset of movies
  std::map<MovieId, std::string> overviews;
  std::map<MovieId, LinksRecord> links;
  MergeReport merge_report;

  bool has_emotion(MovieId id) const { return emotion.count(id) != 0; }
  const EmotionVector* emotion_of(MovieId id) const;

  // Sorted distinct genres across all movies.
  std::vector<std::string> genre_vocabulary() const;

  friend bool operator==(const Catalog&, const Catalog&) = default;
};

struct TrainTestSplit {
  std::vector<RatingRecord> train;
  std::vector<RatingRecord> test;  // the active user's unseen set
};

// movies.csv: movieId,title,genres. Genres split on '|';
// "(no genres listed)" maps to the empty set.
std::vector<MovieRecord> load_movies(const std::filesystem::path& path);

// ratings.csv: userId,movieId,rating,timestamp. Off-grid ratings rejected.
std::vector<RatingRecord> load_ratings(const std::filesystem::path& path);

// links.csv: movieId,imdbId,tmdbId. Empty id fields parse as absent.
std::vector<LinksRecord> load_links(const std::filesystem::path& path);

// Emotion label CSV: tid,mid,iid,mood,neutral,joy,sadness,hate,anger,
// disgust,surprise ("appy"/"sad" accepted for joy/sadness). Every row must
// pass simplex validation at the parse tolerance. Keyed by the mid column.
std::map<MovieId, EmotionLabelRecord> load_emotion_labels(
    const std::filesystem::path& path);

// Attach emotion profiles to movies via the links file's tmdb id: a movie
// gets a profile only when its links row carries a tmdb id matching an
// emotion row's tid. Movies without a profile stay in the catalog but are
// absent from the emotion map; the difference is what merge_report counts.
Catalog merge_catalog(std::vector<MovieRecord> movies,
                      std::vector<LinksRecord> links,
                      const std::map<MovieId, EmotionLabelRecord>& emotion_labels);

// test = extra rows belonging to user, minus (user, movie) pairs already in
// train, minus internal duplicates (first occurrence kept). Train is passed
// through unchanged. Throws DomainError if the user has no train rows.
TrainTestSplit build_test_split(std::vector<RatingRecord> train,
                                std::span<const RatingRecord> extra,
                                UserId user);

// CSV writers used for round-tripping a catalog back to disk.
void save_movies_csv(const Catalog& catalog, const std::filesystem::path& path);
void save_emotion_csv(const Catalog& catalog, const std::filesystem::path& path);

// Whole-catalog JSON document (schema described in the README).
void save_catalog_json(const Catalog& catalog,
                       const std::filesystem::path& path);
Catalog load_catalog_json(const std::filesystem::path& path);

}  // namespace moodrec

#endif  // MOODREC_INGEST_HPP
