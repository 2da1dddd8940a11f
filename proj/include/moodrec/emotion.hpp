#ifndef MOODREC_EMOTION_HPP
#define MOODREC_EMOTION_HPP

#include <array>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>

#include "moodrec/error.hpp"

namespace moodrec {

inline constexpr std::size_t kEmotionCount = 7;

// Canonical label order. It is total and fixed: serialization column order
// and every tie-break follow it.
enum class EmotionLabel : std::uint8_t {
  Neutral = 0,
  Joy,
  Sadness,
  Hate,
  Anger,
  Disgust,
  Surprise,
};

inline constexpr std::array<EmotionLabel, kEmotionCount> kEmotionLabels = {
    EmotionLabel::Neutral, EmotionLabel::Joy,     EmotionLabel::Sadness,
    EmotionLabel::Hate,    EmotionLabel::Anger,   EmotionLabel::Disgust,
    EmotionLabel::Surprise,
};

std::string_view to_string(EmotionLabel label);

// Accepts the canonical names plus the legacy spellings "appy" (joy)
// and "sad" (sadness) found in older label dumps.
std::optional<EmotionLabel> parse_emotion_label(std::string_view name);

/// A movie's mood profile: 7 nonnegative reals over the canonical labels,
/// summing to 1 within a tolerance chosen by provenance.
class EmotionVector {
 public:
  static constexpr double kParseTolerance = 0.005;   // 3-decimal data files
  static constexpr double kComputeTolerance = 1e-9;  // internally computed

  // Validates the simplex invariant; throws ValidationError otherwise.
  static EmotionVector from_components(
      const std::array<double, kEmotionCount>& values, double tolerance);

  double operator[](EmotionLabel label) const {
    return values_[static_cast<std::size_t>(label)];
  }
  std::span<const double, kEmotionCount> values() const { return values_; }
  double sum() const;

  friend bool operator==(const EmotionVector&, const EmotionVector&) = default;

 private:
  explicit EmotionVector(const std::array<double, kEmotionCount>& values)
      : values_(values) {}

  std::array<double, kEmotionCount> values_{};
};

/// One-hot / multi-hot encoding of an EmotionVector.
struct OneHotEmotion {
  std::bitset<kEmotionCount> bits;

  bool test(EmotionLabel label) const {
    return bits.test(static_cast<std::size_t>(label));
  }
  std::size_t count() const { return bits.count(); }

  friend bool operator==(const OneHotEmotion&, const OneHotEmotion&) = default;
};

// Label of the maximal component; ties go to the first label in canonical
// order.
EmotionLabel dominant_mood(const EmotionVector& v);

// Exactly one bit: the dominant mood.
OneHotEmotion to_onehot_argmax(const EmotionVector& v);

// Bit set for every component >= tau; tau must lie in (0,1).
OneHotEmotion to_onehot_threshold(const EmotionVector& v, double tau);

// Componentwise arithmetic mean. Throws DomainError on an empty list.
EmotionVector mean_vectors(std::span<const EmotionVector> vs);

/// Word -> per-label weight table backing the deterministic text scorer.
class EmotionLexicon {
 public:
  EmotionLexicon() = default;

  // weight must be nonnegative; words are stored lowercase.
  void add(std::string_view word, EmotionLabel label, double weight);

  // One "word,label,weight" triple per line, UTF-8, '#' comments allowed.
  static EmotionLexicon load(const std::filesystem::path& path);

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::array<double, kEmotionCount>* find(const std::string& word) const;

 private:
  std::unordered_map<std::string, std::array<double, kEmotionCount>> entries_;
};

// Deterministic text scorer: tokenize on non-letter boundaries, lowercase,
// accumulate matching lexicon weights, add a smoothing mass of 1.0 to
// neutral, normalize to sum 1.
EmotionVector lexicon_score(std::string_view text, const EmotionLexicon& lex);

}  // namespace moodrec

#endif  // MOODREC_EMOTION_HPP
