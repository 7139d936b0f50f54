#include "cherednik/symspaces.hpp"

#include "cherednik/errors.hpp"
#include "cherednik/hecke.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace cherednik {

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

long parse_long(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("bad " + what + " '" + s + "'");
  return std::stol(s);
}

constexpr long kMinSweepRank = 2;
constexpr long kMaxSweepRank = 8;

}  // namespace

RankExpr RankExpr::parse(std::string_view text) {
  const std::string t = trim(text);
  RankExpr r;
  if (!t.empty() && std::isdigit(static_cast<unsigned char>(t[0]))) {
    r.fixed = parse_long(t, "rank");
    return r;
  }
  std::size_t i = 0;
  while (i < t.size() && std::isalpha(static_cast<unsigned char>(t[i]))) ++i;
  if (i == 0) throw ParseError("bad rank expression '" + t + "'");
  r.variable = t.substr(0, i);
  if (i < t.size()) {
    const char sign = t[i];
    if (sign != '+' && sign != '-') throw ParseError("bad rank expression '" + t + "'");
    r.offset = parse_long(t.substr(i + 1), "rank offset");
    if (sign == '-') r.offset = -r.offset;
  }
  return r;
}

std::string RankExpr::str() const {
  if (fixed) return std::to_string(*fixed);
  if (offset == 0) return variable;
  return variable + (offset < 0 ? "-" : "+") + std::to_string(offset < 0 ? -offset : offset);
}

WeylType WeylType::parse(std::string_view text) {
  const std::string t = trim(text);
  if (t.size() < 3 || t[1] != '_' || std::string("ABCDEFG").find(t[0]) == std::string::npos)
    throw ParseError("bad Weyl type '" + t + "'");
  std::string rank = t.substr(2);
  if (rank.size() >= 2 && rank.front() == '{' && rank.back() == '}') rank = rank.substr(1, rank.size() - 2);
  return WeylType{t[0], RankExpr::parse(rank)};
}

std::string WeylType::str() const { return std::string(1, family) + "_{" + rank.str() + "}"; }

std::string to_string(VerdictSource s) { return s == VerdictSource::Computed ? "computed" : "table"; }

std::vector<Rational> SymPairRecord::k_values() const {
  std::vector<Rational> out;
  for (const auto& m : multiplicities) out.push_back(m.k());
  return out;
}

std::vector<CyclotomicUnit> xy_from_k(const SymPairRecord& rec) {
  std::vector<CyclotomicUnit> out;
  for (const auto& k : rec.k_values()) out.push_back(CyclotomicUnit::from_angle(k));
  return out;
}

namespace {

void check_integrity(const SymPairRecord& r) {
  const auto xy = xy_from_k(r);
  if (xy.empty()) throw DataIntegrity(r.label + ": no multiplicities");
  if (xy.size() > 2) throw DataIntegrity(r.label + ": more than two root classes");
  if (xy[0] != r.table_x)
    throw DataIntegrity(r.label + ": e(k) = " + xy[0].str() + " but x = " + r.table_x.str());
  if (xy.size() == 2) {
    if (!r.table_y) throw DataIntegrity(r.label + ": two root classes but no y");
    if (xy[1] != *r.table_y) throw DataIntegrity(r.label + ": e(k) = " + xy[1].str() + " but y = " + r.table_y->str());
  } else if (r.table_y) {
    throw DataIntegrity(r.label + ": y given for a single root class");
  }
  const bool computable = r.weyl_type.family == 'A' || r.weyl_type.family == 'B' || r.weyl_type.family == 'C';
  if (computable != (r.verdict_source == VerdictSource::Computed))
    throw DataIntegrity(r.label + ": verdict source does not match Weyl type " + r.weyl_type.str());
}

SymPairRecord parse_record(const std::string& line) {
  const auto f = split(line, '|');
  if (f.size() != 8) throw ParseError("expected 8 fields, got " + std::to_string(f.size()) + ": " + line);
  SymPairRecord r;
  r.label = f[0];
  if (r.label.empty()) throw ParseError("empty label: " + line);
  r.weyl_type = WeylType::parse(f[1]);
  for (const auto& cls : split(f[2], ';')) {
    const auto colon = cls.find(':');
    if (colon == std::string::npos) throw ParseError("bad multiplicity '" + cls + "'");
    const auto dims = split(cls.substr(colon + 1), ',');
    if (dims.size() != 2) throw ParseError("bad multiplicity '" + cls + "'");
    r.multiplicities.push_back({trim(cls.substr(0, colon)), parse_long(dims[0], "multiplicity"),
                                parse_long(dims[1], "multiplicity")});
  }
  r.table_x = CyclotomicUnit::parse(f[3]);
  if (f[4] != "-") r.table_y = CyclotomicUnit::parse(f[4]);
  if (f[5] != "Y" && f[5] != "N") throw ParseError("verdict must be Y or N: " + f[5]);
  r.table_verdict = f[5] == "Y";
  if (f[6] == "computed")
    r.verdict_source = VerdictSource::Computed;
  else if (f[6] == "table")
    r.verdict_source = VerdictSource::Table;
  else
    throw ParseError("unknown verdict source '" + f[6] + "'");
  r.pair_description = f[7];
  return r;
}

}  // namespace

std::vector<SymPairRecord> parse_table(std::string_view text) {
  std::vector<SymPairRecord> out;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    out.push_back(parse_record(t));
    check_integrity(out.back());
  }
  return out;
}

std::vector<SymPairRecord> load_table() { return parse_table(embedded_symspace_table()); }

std::vector<SymPairRecord> load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open table file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_table(ss.str());
}

std::string dump_table(const std::vector<SymPairRecord>& records) {
  std::ostringstream os;
  os << "# label | weyl_type | multiplicities | x | y | verdict | verdict_source | description\n";
  for (const auto& r : records) {
    os << r.label << " | " << r.weyl_type.str() << " | ";
    for (std::size_t i = 0; i < r.multiplicities.size(); ++i) {
      const auto& m = r.multiplicities[i];
      os << (i ? ";" : "") << m.root_class << ":" << m.dim_alpha << "," << m.dim_2alpha;
    }
    os << " | " << r.table_x.str() << " | " << (r.table_y ? r.table_y->str() : "-") << " | "
       << (r.table_verdict ? "Y" : "N") << " | " << to_string(r.verdict_source) << " | " << r.pair_description
       << "\n";
  }
  return os.str();
}

SymPairRecord diagonal_record() {
  SymPairRecord r;
  r.label = "diagonal";
  r.pair_description = "(sl(n)+sl(n), sl(n))";
  r.weyl_type = WeylType::parse("A_{n-1}");
  r.multiplicities = {{"all", 2, 0}};
  r.table_x = CyclotomicUnit::one();
  r.table_verdict = true;
  r.verdict_source = VerdictSource::Computed;
  return r;
}

RobustnessClass classify(const SymPairRecord& rec) {
  RobustnessClass c;
  c.nice = true;
  c.integral = true;
  for (const auto& k : rec.k_values()) {
    c.nice = c.nice && k <= Rational(1);
    c.integral = c.integral && k.is_integer();
  }
  c.robust = c.nice || c.integral;
  return c;
}

SymVerdict verdict(const SymPairRecord& rec) {
  SymVerdict out;
  const char fam = rec.weyl_type.family;
  if (fam != 'A' && fam != 'B' && fam != 'C') {
    out.source = VerdictSource::Table;
    out.semisimple = rec.table_verdict;
    return out;
  }
  out.source = VerdictSource::Computed;
  std::vector<long> ranks;
  if (rec.weyl_type.rank.fixed)
    ranks.push_back(*rec.weyl_type.rank.fixed);
  else
    for (long r = kMinSweepRank; r <= kMaxSweepRank; ++r) ranks.push_back(r);

  const CyclotomicUnit x = rec.table_x;
  std::optional<bool> agreed;
  for (long rank : ranks) {
    ArikiKoikePresentation p;
    if (fam == 'A') {
      p = ArikiKoikePresentation::normalized(rank + 1, {CyclotomicUnit::one()}, x);
    } else {
      if (!rec.table_y) throw DataIntegrity(rec.label + ": type " + rec.weyl_type.str() + " needs y");
      p = ArikiKoikePresentation::normalized(rank, {*rec.table_y, CyclotomicUnit::minus_one()}, x);
    }
    const bool ss = is_semisimple(p).semisimple;
    if (agreed && *agreed != ss)
      throw DataIntegrity(rec.label + ": verdict changes with rank at rank " + std::to_string(rank));
    agreed = ss;
    out.ranks_checked.push_back(rank);
  }
  out.semisimple = *agreed;
  return out;
}

std::vector<std::string> hc_semisimple_list(const std::vector<SymPairRecord>& records) {
  std::vector<std::string> out;
  if (verdict(diagonal_record()).semisimple) out.push_back(diagonal_record().label);
  for (const auto& r : records)
    if (verdict(r).semisimple) out.push_back(r.label);
  return out;
}

std::vector<std::string> hc_semisimple_list() { return hc_semisimple_list(load_table()); }

}  // namespace cherednik
