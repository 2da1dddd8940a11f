#ifndef MOODREC_TMDB_HPP
#define MOODREC_TMDB_HPP

#include <chrono>
#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

#include "moodrec/error.hpp"

namespace moodrec {

struct TmdbNotFoundError : Error {
  using Error::Error;
};
struct TmdbAuthError : Error {
  using Error::Error;
};

/// Single-record client for GET /3/movie/{tmdb_id}. Requests are serialized
/// and spaced by a minimum interval. Bulk crawling is out of scope.
class TmdbClient {
 public:
  struct Options {
    std::string base_url = "https://api.themoviedb.org";
    std::chrono::milliseconds min_request_interval{250};
    std::chrono::seconds timeout{10};
  };

  struct MovieDetails {
    std::string title;
    std::string overview;
    std::vector<std::string> genres;
  };

  // Throws ConfigError on an empty api key, before any network activity.
  explicit TmdbClient(std::string api_key, Options options = {});

  // 404 -> TmdbNotFoundError (id gaps are expected), 401 -> TmdbAuthError,
  // transport failure -> IoError (retryable).
  MovieDetails fetch_movie(std::int64_t tmdb_id);

 private:
  std::string api_key_;
  Options options_;
  std::mutex mutex_;
  std::chrono::steady_clock::time_point last_request_{};
  bool any_request_ = false;
};

}  // namespace moodrec

#endif  // MOODREC_TMDB_HPP
