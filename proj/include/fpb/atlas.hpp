#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "fpb/bounds.hpp"
#include "fpb/poly.hpp"

namespace fpb {

class AtlasError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct KnotFlags {
  bool alternating = false;
  bool sqp = false;
  std::optional<bool> torus;  // nullopt when unknown
  std::optional<std::pair<int, int>> torus_params;
  std::optional<int> twist;
  std::int64_t determinant = 0;
  /// Informational marks carried over from the source table.
  std::vector<std::string> marks;
};

struct KnotRecord {
  std::string name;
  int components = 1;
  int crossings = 0;
  LaurentPoly1 alexander;  // normalized
  LaurentPoly2 homfly;
  int genus = 0;
  int neg_tb_max = 0;
  int neg_sl_max = 0;
  int fpbk_lo = 0;
  int fpbk_hi = 0;
  KnotFlags flags;

  /// Bound input built from the table columns only (no HOMFLYPT/sqp), with
  /// fpbk_hi as the presentation upper bound.
  BoundInput table_bound_input() const;
  /// As table_bound_input() plus HOMFLYPT and sqp data.
  BoundInput full_bound_input() const;
};

enum class Chirality { kDirect, kMirror, kAmphichiral, kUnknown };
std::string to_string(Chirality c);

struct Candidate {
  std::string name;
  Chirality chirality = Chirality::kUnknown;
  friend bool operator==(const Candidate&, const Candidate&) = default;
};

struct Identification {
  std::vector<Candidate> candidates;
  bool ambiguous = false;
  bool unknot = false;
};

struct Invariants {
  int components = 1;
  LaurentPoly1 alexander;
  std::optional<LaurentPoly2> homfly;
  std::optional<std::int64_t> determinant;
};

inline constexpr const char* kUnknotName = "0_1";

class Atlas {
 public:
  Atlas() = default;
  explicit Atlas(std::vector<KnotRecord> records);

  const std::vector<KnotRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  const KnotRecord* find(const std::string& name) const;

  /// Records sharing components, determinant and normalized Alexander.
  std::vector<const KnotRecord*> by_alexander(int components, const LaurentPoly1& alexander) const;

  Identification identify(const Invariants& inv) const;

  /// Column header comment plus one canonical line per record.
  std::string serialize() const;

 private:
  using Key = std::tuple<int, std::int64_t, std::string>;
  std::vector<KnotRecord> records_;
  std::map<std::string, std::size_t> by_name_;
  std::map<Key, std::vector<std::size_t>> index_;
};

Atlas parse_atlas(const std::string& text);
Atlas load_atlas(const std::string& path);
std::string default_atlas_path();

}  // namespace fpb
