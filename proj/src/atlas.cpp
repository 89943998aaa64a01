#include "fpb/atlas.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "fpb/homfly.hpp"

#ifndef FPB_DATA_DIR
#define FPB_DATA_DIR "data"
#endif

namespace fpb {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

int to_int(const std::string& s, const char* what) {
  int v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw AtlasError(std::string("bad ") + what + " '" + s + "'");
  return v;
}

std::string homfly_column(const LaurentPoly2& p) {
  std::string j = p.to_json();  // [[a,b,c],...]
  return j.size() >= 2 ? j.substr(1, j.size() - 2) : j;
}

std::string flags_column(const KnotFlags& f) {
  std::vector<std::string> parts;
  if (f.alternating) parts.emplace_back("alternating");
  if (f.sqp) parts.emplace_back("sqp");
  if (f.torus_params)
    parts.push_back("torus=" + std::to_string(f.torus_params->first) + "," +
                    std::to_string(f.torus_params->second));
  else if (f.torus && !*f.torus)
    parts.emplace_back("nontorus");
  if (f.twist) parts.push_back("twist=" + std::to_string(*f.twist));
  for (const auto& m : f.marks) parts.push_back(m);
  parts.push_back("det=" + std::to_string(f.determinant));
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ";") + p;
  return out;
}

KnotFlags parse_flags(const std::string& text) {
  KnotFlags f;
  bool have_det = false;
  for (const auto& item : split(text, ';')) {
    if (item == "alternating") {
      f.alternating = true;
    } else if (item == "sqp") {
      f.sqp = true;
    } else if (item == "nontorus") {
      f.torus = false;
    } else if (item.starts_with("torus=")) {
      const auto pq = split(item.substr(6), ',');
      if (pq.size() != 2) throw AtlasError("bad torus flag '" + item + "'");
      f.torus = true;
      f.torus_params = std::make_pair(to_int(pq[0], "torus p"), to_int(pq[1], "torus q"));
    } else if (item.starts_with("twist=")) {
      f.twist = to_int(item.substr(6), "twist index");
    } else if (item.starts_with("det=")) {
      f.determinant = to_int(item.substr(4), "determinant");
      have_det = true;
    } else if (item == "tb_detects" || item == "sl_detects" || item == "improved" || item == "from_code") {
      f.marks.push_back(item);
    } else {
      throw AtlasError("unknown flag '" + item + "'");
    }
  }
  if (!have_det) throw AtlasError("missing det= flag");
  return f;
}

void validate(const KnotRecord& r) {
  if (r.components < 1) throw AtlasError("components must be positive");
  if (r.fpbk_lo > r.fpbk_hi) throw AtlasError("fpbk_lo exceeds fpbk_hi");
  if (parity_round(r.fpbk_lo, r.components) != r.fpbk_lo || parity_round(r.fpbk_hi, r.components) != r.fpbk_hi)
    throw AtlasError("fpbk parity violates components - 1");
  if (r.components == 1 && r.name != kUnknotName && (r.neg_tb_max < 0 || r.neg_sl_max < 0))
    throw AtlasError("negative -tb or -sl for a nontrivial knot");
  if (!(r.alexander == r.alexander.normalized())) throw AtlasError("Alexander column is not normalized");
  const std::int64_t at_minus_one = r.alexander.evaluate(-1);
  if ((at_minus_one < 0 ? -at_minus_one : at_minus_one) != r.flags.determinant)
    throw AtlasError("determinant flag disagrees with |Delta(-1)|");
  if (r.components == 1) {
    const std::int64_t at_one = r.alexander.evaluate(1);
    if (at_one != 1 && at_one != -1) throw AtlasError("knot Alexander polynomial has Delta(1) != +-1");
    if (r.alexander.span() > 2 * r.genus) throw AtlasError("Alexander span exceeds twice the genus");
  }
}

}  // namespace

BoundInput KnotRecord::table_bound_input() const {
  BoundInput in;
  in.components = components;
  in.alexander = alexander_data(alexander);
  in.genus = genus;
  in.neg_tb_max = neg_tb_max;
  in.neg_sl_max = neg_sl_max;
  if (flags.torus_params) in.torus = flags.torus_params;
  if (flags.twist) in.twist = flags.twist;
  if (flags.torus.has_value()) {
    // only T(2,k) knots are alternating torus knots
    in.alternating_torus = *flags.torus && flags.alternating;
  }
  in.presentation_bands = fpbk_hi;
  return in;
}

BoundInput KnotRecord::full_bound_input() const {
  BoundInput in = table_bound_input();
  in.homfly = homfly;
  in.sqp = flags.sqp;
  in.euler_char = 2 - components - 2 * genus;
  return in;
}

std::string to_string(Chirality c) {
  switch (c) {
    case Chirality::kDirect: return "direct";
    case Chirality::kMirror: return "mirror";
    case Chirality::kAmphichiral: return "amphichiral";
    case Chirality::kUnknown: break;
  }
  return "unknown";
}

Atlas::Atlas(std::vector<KnotRecord> records) : records_(std::move(records)) {
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const auto& r = records_[i];
    if (!by_name_.emplace(r.name, i).second) throw AtlasError("duplicate name " + r.name);
    index_[{r.components, r.flags.determinant, r.alexander.to_compact()}].push_back(i);
  }
}

const KnotRecord* Atlas::find(const std::string& name) const {
  const auto it = by_name_.find(name);
  return it == by_name_.end() ? nullptr : &records_[it->second];
}

std::vector<const KnotRecord*> Atlas::by_alexander(int components, const LaurentPoly1& alexander) const {
  const LaurentPoly1 a = alexander.normalized();
  const std::int64_t det = a.is_zero() ? 0 : std::abs(a.evaluate(-1));
  std::vector<const KnotRecord*> out;
  if (const auto it = index_.find({components, det, a.to_compact()}); it != index_.end())
    for (std::size_t i : it->second) out.push_back(&records_[i]);
  return out;
}

Identification Atlas::identify(const Invariants& inv) const {
  Identification id;
  const LaurentPoly1 a = inv.alexander.normalized();
  if (inv.components == 1 && a == LaurentPoly1::monomial(1, 0) &&
      (!inv.homfly || *inv.homfly == LaurentPoly2::constant(1))) {
    id.unknot = true;
    id.candidates.push_back({kUnknotName, Chirality::kAmphichiral});
    // Alexander-trivial knots beyond the unknot are not tabulated here, so
    // without HOMFLYPT the answer is only "probably the unknot".
    id.ambiguous = !inv.homfly.has_value();
    return id;
  }
  for (const KnotRecord* r : by_alexander(inv.components, a)) {
    if (inv.determinant && *inv.determinant != r->flags.determinant) continue;
    if (!inv.homfly) {
      id.candidates.push_back({r->name, Chirality::kUnknown});
      continue;
    }
    const bool direct = *inv.homfly == r->homfly;
    const bool mirror = *inv.homfly == mirror_poly(r->homfly);
    if (direct && mirror)
      id.candidates.push_back({r->name, Chirality::kAmphichiral});
    else if (direct)
      id.candidates.push_back({r->name, Chirality::kDirect});
    else if (mirror)
      id.candidates.push_back({r->name, Chirality::kMirror});
  }
  id.ambiguous = id.candidates.size() > 1;
  return id;
}

std::string Atlas::serialize() const {
  std::string out =
      "# name\tcomponents\tcrossings\talexander\thomfly\tgenus\tneg_tb_max\tneg_sl_max\tfpbk_lo\tfpbk_hi\tflags\n";
  for (const auto& r : records_) {
    out += r.name + '\t' + std::to_string(r.components) + '\t' + std::to_string(r.crossings) + '\t' +
           r.alexander.to_compact() + '\t' + homfly_column(r.homfly) + '\t' + std::to_string(r.genus) + '\t' +
           std::to_string(r.neg_tb_max) + '\t' + std::to_string(r.neg_sl_max) + '\t' +
           std::to_string(r.fpbk_lo) + '\t' + std::to_string(r.fpbk_hi) + '\t' + flags_column(r.flags) + '\n';
  }
  return out;
}

Atlas parse_atlas(const std::string& text) {
  std::vector<KnotRecord> records;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::map<std::string, int> seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    try {
      const auto f = split(line, '\t');
      if (f.size() != 11) throw AtlasError("expected 11 columns, found " + std::to_string(f.size()));
      KnotRecord r;
      r.name = f[0];
      if (r.name.empty()) throw AtlasError("empty name");
      r.components = to_int(f[1], "components");
      r.crossings = to_int(f[2], "crossings");
      r.alexander = LaurentPoly1::from_compact(f[3]);
      r.homfly = LaurentPoly2::from_json("[" + f[4] + "]");
      r.genus = to_int(f[5], "genus");
      r.neg_tb_max = to_int(f[6], "neg_tb_max");
      r.neg_sl_max = to_int(f[7], "neg_sl_max");
      r.fpbk_lo = to_int(f[8], "fpbk_lo");
      r.fpbk_hi = to_int(f[9], "fpbk_hi");
      r.flags = parse_flags(f[10]);
      validate(r);
      if (!seen.emplace(r.name, lineno).second)
        throw AtlasError("duplicate name " + r.name + " (first on line " + std::to_string(seen[r.name]) + ")");
      records.push_back(std::move(r));
    } catch (const AtlasError& e) {
      throw AtlasError("atlas line " + std::to_string(lineno) + ": " + e.what());
    } catch (const std::exception& e) {
      throw AtlasError("atlas line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return Atlas(std::move(records));
}

Atlas load_atlas(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw AtlasError("cannot read atlas " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_atlas(ss.str());
}

std::string default_atlas_path() { return std::string(FPB_DATA_DIR) + "/knots.tsv"; }

}  // namespace fpb
