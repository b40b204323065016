#include "linkred/braid.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "linkred/error.hpp"

namespace linkred {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) {
    throw Error(ErrorCode::GeneratorOutOfRange, "a braid needs at least one strand");
  }
  for (std::size_t t = 0; t < letters_.size(); ++t) {
    const int g = std::abs(letters_[t]);
    if (g == 0 || g > strands_ - 1) {
      throw Error(ErrorCode::GeneratorOutOfRange,
                  "letter " + std::to_string(letters_[t]) + " at position " +
                      std::to_string(t + 1) + " on " + std::to_string(strands_) + " strands");
    }
  }
}

BraidWord BraidWord::inverse() const {
  std::vector<int> inv(letters_.rbegin(), letters_.rend());
  for (int& l : inv) l = -l;
  return BraidWord(strands_, std::move(inv));
}

std::string BraidWord::to_string() const {
  if (letters_.empty()) return "1";
  std::ostringstream out;
  for (std::size_t t = 0; t < letters_.size(); ++t) {
    if (t) out << ' ';
    out << 's' << std::abs(letters_[t]);
    if (letters_[t] < 0) out << "^-1";
  }
  return out.str();
}

BraidWord parse_braid(int strands, const std::vector<int>& letters) {
  return BraidWord(strands, letters);
}

StrandPermutation::StrandPermutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 1 || v > static_cast<int>(image_.size()) || seen[v - 1]) {
      throw Error(ErrorCode::MalformedInput, "position map is not a bijection");
    }
    seen[v - 1] = true;
  }
}

StrandPermutation StrandPermutation::identity(int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 1);
  return StrandPermutation(std::move(image));
}

bool StrandPermutation::is_identity() const {
  for (int p = 1; p <= size(); ++p) {
    if (at(p) != p) return false;
  }
  return true;
}

std::vector<std::vector<int>> StrandPermutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(image_.size(), false);
  for (int start = 1; start <= size(); ++start) {
    if (seen[start - 1]) continue;
    std::vector<int> cycle;
    for (int p = start; !seen[p - 1]; p = at(p)) {
      seen[p - 1] = true;
      cycle.push_back(p);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

StrandPermutation StrandPermutation::then(const StrandPermutation& next) const {
  if (next.size() != size()) {
    throw Error(ErrorCode::StrandCountMismatch, "composing permutations of different sizes");
  }
  std::vector<int> image(image_.size());
  for (int p = 1; p <= size(); ++p) image[p - 1] = next.at(at(p));
  return StrandPermutation(std::move(image));
}

namespace {

// occupant[p-1] = starting strand currently at position p.
template <typename Visit>
std::vector<int> simulate(const BraidWord& w, Visit&& visit) {
  std::vector<int> occupant(w.strands());
  std::iota(occupant.begin(), occupant.end(), 1);
  for (std::size_t t = 0; t < w.length(); ++t) {
    const int letter = w.letters()[t];
    const int p = std::abs(letter);
    visit(t, letter, occupant[p - 1], occupant[p]);
    std::swap(occupant[p - 1], occupant[p]);
  }
  return occupant;
}

}  // namespace

StrandPermutation permutation_of(const BraidWord& w) {
  const auto occupant = simulate(w, [](auto&&...) {});
  std::vector<int> image(w.strands());
  for (int p = 1; p <= w.strands(); ++p) image[occupant[p - 1] - 1] = p;
  return StrandPermutation(std::move(image));
}

bool is_pure(const BraidWord& w) { return permutation_of(w).is_identity(); }

std::vector<StrandCrossing> strand_crossings(const BraidWord& w) {
  std::vector<StrandCrossing> out;
  out.reserve(w.length());
  simulate(w, [&](std::size_t t, int letter, int left, int right) {
    const int sign = letter > 0 ? 1 : -1;
    out.push_back({t, left, right, sign, sign > 0 ? left : right});
  });
  return out;
}

LinkingMatrix closure_linking_matrix(const BraidWord& w) {
  if (!is_pure(w)) {
    throw Error(ErrorCode::NotPure, "word " + w.to_string() + " does not fix every strand");
  }
  const int n = w.strands();
  std::vector<int> sums(static_cast<std::size_t>(n) * n, 0);
  for (const auto& x : strand_crossings(w)) {
    sums[static_cast<std::size_t>(x.strand_a - 1) * n + (x.strand_b - 1)] += x.sign;
    sums[static_cast<std::size_t>(x.strand_b - 1) * n + (x.strand_a - 1)] += x.sign;
  }
  LinkingMatrix lk(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      // Pure words meet each pair an even number of times.
      lk.set(i, j, sums[static_cast<std::size_t>(i - 1) * n + (j - 1)] / 2);
    }
  }
  return lk;
}

BraidWord concat(const BraidWord& first, const BraidWord& second) {
  if (first.strands() != second.strands()) {
    throw Error(ErrorCode::StrandCountMismatch,
                std::to_string(first.strands()) + " vs " + std::to_string(second.strands()) +
                    " strands");
  }
  std::vector<int> letters = first.letters();
  letters.insert(letters.end(), second.letters().begin(), second.letters().end());
  return BraidWord(first.strands(), std::move(letters));
}

}  // namespace linkred
