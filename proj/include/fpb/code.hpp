#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fpb {

/// Raised when a flat basket code is malformed.
class CodeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A flat basket code: a cyclic word of length 2n in which every label
/// 1..n occurs exactly twice. Label order is page order, so labels are
/// never permuted; the word is only meaningful up to rotation.
class FlatBasketCode {
 public:
  /// Validates `word`; throws CodeError naming the offending label.
  explicit FlatBasketCode(std::vector<int> word);

  int bands() const { return n_; }
  std::size_t size() const { return word_.size(); }
  const std::vector<int>& word() const { return word_; }
  int operator[](std::size_t i) const { return word_[i]; }

  /// Positions (first, second) of `label` in the word, first < second.
  std::pair<int, int> positions(int label) const {
    return pos_[static_cast<std::size_t>(label - 1)];
  }
  /// Position of the other occurrence of the label at `position`.
  int partner(int position) const;

  std::string to_string() const;  // "1,2,1,2"
  std::string to_json() const;    // {"n":2,"word":[1,2,1,2]}

  friend bool operator==(const FlatBasketCode& a, const FlatBasketCode& b) {
    return a.word_ == b.word_;
  }
  friend auto operator<=>(const FlatBasketCode& a, const FlatBasketCode& b) {
    return a.word_ <=> b.word_;
  }

 private:
  std::vector<int> word_;
  int n_ = 0;
  std::vector<std::pair<int, int>> pos_;
};

struct LegendrianData {
  int tb = 0;
  int rot = 0;
  int sl = 0;
  friend bool operator==(const LegendrianData&, const LegendrianData&) = default;
};

using LabelPair = std::pair<int, int>;

FlatBasketCode parse_code(std::string_view text);
FlatBasketCode canonical_form(const FlatBasketCode& code);
bool is_canonical(std::span<const int> word);

/// Complements labels (i -> n+1-i) and canonicalizes. The boundary of the
/// result is the mirror image of the input's boundary.
FlatBasketCode mirror_code(const FlatBasketCode& code);

/// Reverses the word and complements labels, then canonicalizes. This is a
/// rotation of the whole picture by pi and leaves the boundary link type
/// unchanged (up to reversing every component).
FlatBasketCode reverse_complement_code(const FlatBasketCode& code);

/// Cyclically shifts labels (i -> i+shift mod n). Moving the top band past
/// the page at infinity to the bottom is an isotopy, so this also fixes the
/// boundary link.
FlatBasketCode shift_labels(const FlatBasketCode& code, int shift);

/// Canonical images of the code under label shifts and reverse-complement
/// (which keep the boundary link), plus complement and reversal when
/// `include_mirror` (which mirror it). Sorted, without duplicates.
std::vector<FlatBasketCode> symmetry_images(const FlatBasketCode& code, bool include_mirror);
/// True when the canonical form of `code` is the least of its images.
bool is_symmetry_minimal(const FlatBasketCode& code, bool include_mirror);

bool interleaved(const FlatBasketCode& code, int a, int b);
std::set<LabelPair> interleaving_pairs(const FlatBasketCode& code);
int count_components(const FlatBasketCode& code);
int count_shortcuts(const FlatBasketCode& code);
bool has_adjacent_equal(const FlatBasketCode& code);
LegendrianData legendrian_invariants(const FlatBasketCode& code);
LegendrianData legendrian_invariants(int bands);
FlatBasketCode torus2_code(int m);

inline constexpr int kDefaultMaxBands = 8;

struct EnumerateOptions {
  bool quotient_mirror = false;
  bool forbid_adjacent_equal = false;
  std::optional<int> components;
  int max_bands = kDefaultMaxBands;
  /// Shard `index` of `count`: a canonical word belongs to the shard given
  /// by the rank of its length-`prefix` prefix modulo `count`.
  int shard_index = 0;
  int shard_count = 1;
};

/// Visits every rotation class of codes with `n` bands exactly once, in
/// lexicographic order of canonical forms. Return false from the visitor to
/// stop early.
void enumerate_codes(int n, const EnumerateOptions& options,
                     const std::function<bool(const FlatBasketCode&)>& visit);

std::vector<FlatBasketCode> enumerate_codes(int n, const EnumerateOptions& options = {});

}  // namespace fpb
