#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fpb/atlas.hpp"
#include "fpb/code.hpp"
#include "fpb/diagram.hpp"
#include "fpb/homfly.hpp"
#include "fpb/surface.hpp"

namespace fpb {

struct SearchOptions {
  std::optional<std::string> target;
  int shard_index = 0;
  int shard_count = 1;
  std::uint64_t skein_budget = kDefaultSkeinBudget;
  /// First attempt uses min(this, skein_budget); escalates on failure.
  std::uint64_t initial_budget = 20'000;
  /// Only boundaries with this many components (knots by default).
  std::optional<int> components = 1;
  /// Skip codes that are not least in their symmetry class (label shifts,
  /// reverse-complement, and mirror). Knots are then found up to mirror.
  bool symmetry_filter = true;
  bool forbid_adjacent_equal = true;
};

struct Finding {
  std::string name;
  FlatBasketCode code;
  int bands = 0;
  Chirality chirality = Chirality::kUnknown;
};

struct Fingerprint {
  int components = 0;
  LaurentPoly1 alexander;
  std::int64_t determinant = 0;
  FlatBasketCode first_code;
  std::uint64_t count = 0;
};

struct SearchReport {
  int n = 0;
  std::uint64_t codes_scanned = 0;   // canonical codes passing the filters
  std::uint64_t alexander_hits = 0;  // codes whose Alexander is in the atlas
  std::uint64_t homfly_runs = 0;
  std::uint64_t budget_failures = 0;
  std::uint64_t ambiguous = 0;
  std::map<std::string, Finding> findings;  // first (least) code per knot
  std::map<std::string, Fingerprint> unidentified;  // keyed by fingerprint text
  /// Findings with fewer bands than the atlas lower bound; must stay empty.
  std::vector<std::string> contradictions;

  std::string to_json() const;
};

/// Scans every canonical code with n bands in lexicographic order.
SearchReport run_search(int n, const Atlas& atlas, const SearchOptions& options = {});

/// Deterministic merge of shard reports for the same n.
SearchReport merge_reports(const std::vector<SearchReport>& shards);

/// Boundary invariants of a single code, as used by the search.
struct CodeAnalysis {
  int components = 0;
  AlexanderData alexander;
  SignatureDet signature;
  std::optional<LaurentPoly2> homfly;
  std::optional<std::uint64_t> budget_exhausted;  // nodes used when it failed
  Identification identification;
};

CodeAnalysis analyze_code(const FlatBasketCode& code, const Atlas& atlas,
                          std::uint64_t skein_budget = kDefaultSkeinBudget);

struct TableRow {
  std::string name;
  int lower = 0;
  std::optional<int> upper;
  std::string upper_source;
  int table_lo = 0;
  int table_hi = 0;
  std::string status;
};

struct TableOptions {
  int max_crossings = 9;
  int max_bands = 0;  // 0: no search, use closed forms and known codes only
  std::uint64_t skein_budget = kDefaultSkeinBudget;
};

/// Bounds-side lower bound from the atlas columns (no presentation) against
/// an upper bound from closed forms, known codes and a search up to
/// max_bands, compared to the tabulated values.
std::vector<TableRow> reproduce_table(const Atlas& atlas, const TableOptions& options);

/// Codes with a known basket presentation communicated in the literature.
struct KnownCode {
  std::string claimed_name;
  FlatBasketCode code;
};
const std::vector<KnownCode>& known_codes();

struct PropertyReport {
  std::string suite;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> failure_examples;
  std::vector<std::string> notes;
  double seconds = 0;

  bool ok() const { return failures == 0; }
  std::string to_json() const;
};

struct PropertyOptions {
  std::uint64_t sample_size = 500;
  std::uint64_t seed = 1;
  int exhaustive_max = 0;  // 0: suite default
};

std::vector<std::string> property_suites();
/// Throws std::invalid_argument for an unknown suite.
PropertyReport verify_properties(const std::string& suite, const PropertyOptions& options = {});

/// Uniformly random word with n bands, canonicalized.
FlatBasketCode random_code(int n, std::mt19937_64& rng);

}  // namespace fpb
