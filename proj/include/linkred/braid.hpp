#pragma once

#include <string>
#include <vector>

#include "linkred/linking.hpp"

namespace linkred {

/// Word in the braid generators on `strands` strands. Letter +i is sigma_i,
/// -i is its inverse, with 1 <= i <= strands-1.
///
/// Crossing convention (fixed across the library): letters are read in word
/// order while the strands flow in the same direction, and sigma_i is the
/// positive crossing in which the strand occupying position i just before
/// the letter passes over the strand at position i+1. sigma_i^-1 is the
/// mirror image, so the strand at position i+1 passes over.
class BraidWord {
 public:
  BraidWord() = default;
  /// Throws GeneratorOutOfRange on a zero letter or |letter| > strands-1.
  BraidWord(int strands, std::vector<int> letters);

  int strands() const noexcept { return strands_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  /// Letter-reversed, sign-flipped word.
  BraidWord inverse() const;

  /// e.g. "s1 s2^-1" ; "1" for the empty word.
  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<int> letters_;
};

/// Identifier recorded in every exported instance so readers know which
/// mirror image the over/under data refers to.
inline constexpr const char* kConventionId = "sigma-i-left-over-positive/word-order-flow";

BraidWord parse_braid(int strands, const std::vector<int>& letters);

/// Position map of a braid: `at(p)` is the final position (1-based) of the
/// strand that starts at position p.
class StrandPermutation {
 public:
  explicit StrandPermutation(std::vector<int> image);
  static StrandPermutation identity(int n);

  int size() const noexcept { return static_cast<int>(image_.size()); }
  int at(int p) const { return image_.at(p - 1); }
  const std::vector<int>& image() const noexcept { return image_; }
  bool is_identity() const;
  /// Cycles, each listed from its smallest element, ordered by that element.
  std::vector<std::vector<int>> cycles() const;

  /// Apply `*this` first, then `next`.
  StrandPermutation then(const StrandPermutation& next) const;

  friend bool operator==(const StrandPermutation&, const StrandPermutation&) = default;

 private:
  std::vector<int> image_;
};

StrandPermutation permutation_of(const BraidWord& w);
bool is_pure(const BraidWord& w);

/// One letter seen from the strands' point of view. Strands are named by
/// their starting position.
struct StrandCrossing {
  std::size_t position = 0;  // 0-based index of the letter in the word
  int strand_a = 0;          // strand at the letter's left position before the letter
  int strand_b = 0;          // strand at the right position
  int sign = 0;              // +1 for sigma_i, -1 for its inverse
  int over_strand = 0;

  int under_strand() const { return over_strand == strand_a ? strand_b : strand_a; }
  friend bool operator==(const StrandCrossing&, const StrandCrossing&) = default;
};

std::vector<StrandCrossing> strand_crossings(const BraidWord& w);

/// Linking matrix of the trace closure of a pure word, read off the word:
/// entry (i,j) is half the signed count of letters where strands i and j
/// meet. Throws NotPure.
LinkingMatrix closure_linking_matrix(const BraidWord& w);

/// Throws StrandCountMismatch.
BraidWord concat(const BraidWord& first, const BraidWord& second);

}  // namespace linkred
