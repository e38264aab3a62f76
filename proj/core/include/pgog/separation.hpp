#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pgog/check.hpp"
#include "pgog/models.hpp"
#include "pgog/word.hpp"

namespace pgog {

/// A word in the discrete group P * H_omega: letters G{i}.g (generators of
/// the tower vertex G_i) and lamplighter letters L.h{j} (j >= 0) and L.t.
struct JWord {
  std::vector<std::string> names;  // generator id -> letter name
  Word word;
  std::string text;
};

JWord parse_j_word(std::string_view text);

struct LevelAttempt {
  std::uint32_t level = 0;
  bool letters_fit = false;        // every G{i} has i <= level
  bool lamplighter_ok = false;     // no t-syllable folds into H_level
  Status normal_form = Status::skip;  // pass: nonempty, fail: empty, unknown: too large
  std::size_t syllables = 0;
  bool image_nontrivial = false;
  std::string note;
};

struct SeparationCertificate {
  enum class Outcome { separated, trivial, inconclusive };

  Outcome outcome = Outcome::inconclusive;
  std::string word;
  std::uint32_t p = 0;
  std::uint32_t level = 0;
  std::string witness;  // target model name
  std::vector<std::uint32_t> image;  // coordinates of the image
  std::vector<LevelAttempt> attempts;
};

std::string_view to_string(SeparationCertificate::Outcome o) noexcept;

/// Searches levels start_level..max_level for the least level at which the
/// word's letters exist, its t-syllables stay outside H_level, and its image
/// in the witness quotient of the J-level graph is nontrivial. A freely
/// trivial word is reported as trivial; exhausting the range is
/// inconclusive, not a proof of triviality.
SeparationCertificate separate(std::string_view word, std::uint32_t p, std::uint32_t start_level,
                               std::uint32_t max_level);

/// Re-evaluates the certificate's word through a freshly built witness and
/// compares with the stored image. Returns the problem, if any.
std::optional<std::string> verify_certificate(SeparationCertificate const& cert);

/// Witness quotient for the J-level graph: E_l for l <= 2, otherwise the
/// cyclic chain witness.
ModelPtr separation_witness(std::uint32_t p, std::uint32_t level);

}  // namespace pgog
