#include "fpb/code.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace fpb {

namespace {

std::vector<int> rotated(const std::vector<int>& w, std::size_t start) {
  std::vector<int> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[(start + i) % w.size()];
  return out;
}

}  // namespace

FlatBasketCode::FlatBasketCode(std::vector<int> word) : word_(std::move(word)) {
  if (word_.empty()) throw CodeError("empty flat basket code");
  int max_label = 0;
  for (int x : word_) {
    if (x < 1) throw CodeError("label " + std::to_string(x) + " is not a positive integer");
    max_label = std::max(max_label, x);
  }
  std::vector<int> count(static_cast<std::size_t>(max_label) + 1, 0);
  for (int x : word_) ++count[static_cast<std::size_t>(x)];
  for (int label = 1; label <= max_label; ++label) {
    const int c = count[static_cast<std::size_t>(label)];
    if (c == 0) {
      throw CodeError("label " + std::to_string(label) + " is missing; labels must be 1.." +
                      std::to_string(max_label));
    }
    if (c != 2) {
      throw CodeError("label " + std::to_string(label) + " occurs " + std::to_string(c) +
                      " times; every label must occur exactly twice");
    }
  }
  n_ = max_label;
  pos_.assign(static_cast<std::size_t>(n_), {-1, -1});
  for (int i = 0; i < static_cast<int>(word_.size()); ++i) {
    auto& p = pos_[static_cast<std::size_t>(word_[static_cast<std::size_t>(i)] - 1)];
    (p.first < 0 ? p.first : p.second) = i;
  }
}

int FlatBasketCode::partner(int position) const {
  const auto [a, b] = positions(word_[static_cast<std::size_t>(position)]);
  return position == a ? b : a;
}

std::string FlatBasketCode::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(word_[i]);
  }
  return s;
}

std::string FlatBasketCode::to_json() const {
  return "{\"n\":" + std::to_string(n_) + ",\"word\":[" + to_string() + "]}";
}

FlatBasketCode parse_code(std::string_view text) {
  std::vector<int> word;
  std::size_t i = 0;
  auto is_sep = [](char c) {
    return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '(' ||
           c == ')' || c == '[' || c == ']';
  };
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    const std::string_view token = text.substr(i, j - i);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw CodeError("token '" + std::string(token) + "' is not an integer label");
    }
    word.push_back(value);
    i = j;
  }
  return FlatBasketCode(std::move(word));
}

bool is_canonical(std::span<const int> word) {
  const std::size_t len = word.size();
  for (std::size_t s = 1; s < len; ++s) {
    for (std::size_t k = 0; k < len; ++k) {
      const int a = word[(s + k) % len];
      const int b = word[k];
      if (a < b) return false;
      if (a > b) break;
    }
  }
  return true;
}

FlatBasketCode canonical_form(const FlatBasketCode& code) {
  const auto& w = code.word();
  std::size_t best = 0;
  for (std::size_t s = 1; s < w.size(); ++s) {
    for (std::size_t k = 0; k < w.size(); ++k) {
      const int a = w[(s + k) % w.size()];
      const int b = w[(best + k) % w.size()];
      if (a < b) {
        best = s;
        break;
      }
      if (a > b) break;
    }
  }
  return FlatBasketCode(rotated(w, best));
}

FlatBasketCode mirror_code(const FlatBasketCode& code) {
  std::vector<int> w = code.word();
  for (int& x : w) x = code.bands() + 1 - x;
  return canonical_form(FlatBasketCode(std::move(w)));
}

FlatBasketCode reverse_complement_code(const FlatBasketCode& code) {
  std::vector<int> w(code.word().rbegin(), code.word().rend());
  for (int& x : w) x = code.bands() + 1 - x;
  return canonical_form(FlatBasketCode(std::move(w)));
}

FlatBasketCode shift_labels(const FlatBasketCode& code, int shift) {
  const int n = code.bands();
  std::vector<int> w = code.word();
  for (int& x : w) x = ((x - 1 + shift) % n + n) % n + 1;
  return canonical_form(FlatBasketCode(std::move(w)));
}

std::vector<FlatBasketCode> symmetry_images(const FlatBasketCode& code, bool include_mirror) {
  const int n = code.bands();
  std::vector<FlatBasketCode> out;
  for (int reverse = 0; reverse < 2; ++reverse) {
    for (int complement = 0; complement < 2; ++complement) {
      // reversal alone and complement alone both mirror the boundary
      if (!include_mirror && reverse != complement) continue;
      for (int shift = 0; shift < n; ++shift) {
        std::vector<int> w = code.word();
        if (reverse) std::reverse(w.begin(), w.end());
        for (int& x : w) {
          if (complement) x = n + 1 - x;
          x = (x - 1 + shift) % n + 1;
        }
        out.push_back(canonical_form(FlatBasketCode(std::move(w))));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_symmetry_minimal(const FlatBasketCode& code, bool include_mirror) {
  const FlatBasketCode c = canonical_form(code);
  return symmetry_images(c, include_mirror).front() == c;
}

bool interleaved(const FlatBasketCode& code, int a, int b) {
  if (a == b) return false;
  const auto [a0, a1] = code.positions(a);
  const auto [b0, b1] = code.positions(b);
  const bool first_inside = a0 < b0 && b0 < a1;
  const bool second_inside = a0 < b1 && b1 < a1;
  return first_inside != second_inside;
}

std::set<LabelPair> interleaving_pairs(const FlatBasketCode& code) {
  std::set<LabelPair> out;
  for (int a = 1; a <= code.bands(); ++a)
    for (int b = a + 1; b <= code.bands(); ++b)
      if (interleaved(code, a, b)) out.emplace(a, b);
  return out;
}

// Boundary traversal. Each foot has a left and right endpoint in the
// direction of the binding; leaving the left endpoint of the foot at
// position p along the band lands on the right endpoint of its partner,
// and the binding then carries us to the left endpoint of the next foot.
int count_components(const FlatBasketCode& code) {
  const int len = static_cast<int>(code.size());
  std::vector<char> seen(static_cast<std::size_t>(len), 0);
  int components = 0;
  for (int start = 0; start < len; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++components;
    int p = start;
    while (!seen[static_cast<std::size_t>(p)]) {
      seen[static_cast<std::size_t>(p)] = 1;
      p = (code.partner(p) + 1) % len;
    }
  }
  return components;
}

int count_shortcuts(const FlatBasketCode& code) {
  const auto& w = code.word();
  int descents = 0;
  for (std::size_t k = 0; k < w.size(); ++k)
    if (w[k] > w[(k + 1) % w.size()]) ++descents;
  return descents;
}

bool has_adjacent_equal(const FlatBasketCode& code) {
  const auto& w = code.word();
  for (std::size_t k = 0; k < w.size(); ++k)
    if (w[k] == w[(k + 1) % w.size()]) return true;
  return false;
}

LegendrianData legendrian_invariants(int bands) {
  if (bands < 1) throw CodeError("Legendrian invariants need at least one band");
  LegendrianData d;
  d.tb = -2 * bands;
  d.rot = -bands + 1;
  d.sl = d.tb + std::abs(d.rot);
  return d;
}

LegendrianData legendrian_invariants(const FlatBasketCode& code) {
  return legendrian_invariants(code.bands());
}

FlatBasketCode torus2_code(int m) {
  if (m < 2) throw CodeError("torus2_code needs m >= 2, got " + std::to_string(m));
  std::vector<int> w;
  for (int rep = 0; rep < 2; ++rep)
    for (int i = 1; i <= m; ++i) w.push_back(i);
  return FlatBasketCode(std::move(w));
}

namespace {

// Depth-first generation of canonical words. A canonical word starts with
// label 1; the only competing rotation starts at the second 1, which is
// compared incrementally so dominated branches die early.
class CanonicalEnumerator {
 public:
  CanonicalEnumerator(int n, const EnumerateOptions& opt,
                      const std::function<bool(const FlatBasketCode&)>& visit)
      : n_(n), len_(2 * n), opt_(opt), visit_(visit), word_(static_cast<std::size_t>(2 * n)),
        used_(static_cast<std::size_t>(n) + 1, 0) {
    shard_depth_ = std::min(len_, 4);
  }

  void run() {
    word_[0] = 1;
    used_[1] = 1;
    extend(1, -1, 0);
  }

 private:
  // `second_one` is the position of the second 1 (or -1); `cmp` is the state
  // of comparing the rotation at second_one against the word: 0 undecided,
  // 1 rotation already larger.
  bool extend(int depth, int second_one, int cmp) {
    if (depth == shard_depth_ && opt_.shard_count > 1) {
      const long rank = prefix_rank_++;
      if (rank % opt_.shard_count != opt_.shard_index) return true;
    }
    if (depth == len_) return finish(second_one, cmp);
    for (int label = 1; label <= n_; ++label) {
      if (used_[static_cast<std::size_t>(label)] >= 2) continue;
      if (opt_.forbid_adjacent_equal && word_[static_cast<std::size_t>(depth - 1)] == label)
        continue;
      if (label == 1 && used_[1] == 1) {
        // placing the second 1 at position depth
      }
      word_[static_cast<std::size_t>(depth)] = label;
      ++used_[static_cast<std::size_t>(label)];
      int s1 = second_one;
      int c = cmp;
      if (label == 1 && s1 < 0) s1 = depth;
      bool ok = true;
      if (s1 >= 0 && c == 0) {
        const int k = depth - s1;  // compare word[s1 + k] with word[k]
        const int a = word_[static_cast<std::size_t>(depth)];
        const int b = word_[static_cast<std::size_t>(k)];
        if (a < b) ok = false;
        else if (a > b) c = 1;
      }
      bool keep_going = true;
      if (ok) keep_going = extend(depth + 1, s1, c);
      --used_[static_cast<std::size_t>(label)];
      if (!keep_going) return false;
    }
    return true;
  }

  bool finish(int second_one, int cmp) {
    if (cmp == 0) {
      // Rotation at the second 1 agrees with the prefix of length len-s; the
      // comparison wraps around into the word itself.
      const int s = second_one;
      for (int k = len_ - s; k < len_; ++k) {
        const int a = word_[static_cast<std::size_t>((s + k) % len_)];
        const int b = word_[static_cast<std::size_t>(k)];
        if (a < b) return true;
        if (a > b) break;
      }
    }
    if (opt_.forbid_adjacent_equal && word_.back() == word_.front()) return true;
    FlatBasketCode code(word_);
    if (opt_.components && count_components(code) != *opt_.components) return true;
    if (opt_.quotient_mirror && mirror_code(code) < code) return true;
    return visit_(code);
  }

  int n_;
  int len_;
  const EnumerateOptions& opt_;
  const std::function<bool(const FlatBasketCode&)>& visit_;
  std::vector<int> word_;
  std::vector<int> used_;
  int shard_depth_ = 0;
  long prefix_rank_ = 0;
};

}  // namespace

void enumerate_codes(int n, const EnumerateOptions& options,
                     const std::function<bool(const FlatBasketCode&)>& visit) {
  if (n < 1 || n > options.max_bands) {
    throw CodeError("band count " + std::to_string(n) + " outside 1.." +
                    std::to_string(options.max_bands));
  }
  if (options.shard_count < 1 || options.shard_index < 0 ||
      options.shard_index >= options.shard_count) {
    throw CodeError("invalid shard " + std::to_string(options.shard_index) + "/" +
                    std::to_string(options.shard_count));
  }
  CanonicalEnumerator e(n, options, visit);
  e.run();
}

std::vector<FlatBasketCode> enumerate_codes(int n, const EnumerateOptions& options) {
  std::vector<FlatBasketCode> out;
  enumerate_codes(n, options, [&](const FlatBasketCode& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

}  // namespace fpb
