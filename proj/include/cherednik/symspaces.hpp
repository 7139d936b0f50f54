#pragma once

#include "cherednik/cyclotomic.hpp"
#include "cherednik/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cherednik {

// Rank written as an integer or as "n", "n-1", "p+1", ...
struct RankExpr {
  std::optional<long> fixed;
  std::string variable;
  long offset = 0;

  static RankExpr parse(std::string_view text);
  long at(long value) const { return fixed ? *fixed : value + offset; }
  std::string str() const;
  friend bool operator==(const RankExpr&, const RankExpr&) = default;
};

struct WeylType {
  char family = 'A';
  RankExpr rank;

  static WeylType parse(std::string_view text);
  std::string str() const;  // "A_{n-1}"
  friend bool operator==(const WeylType&, const WeylType&) = default;
};

struct RootClassMultiplicity {
  std::string root_class;  // "all", "long", "short"
  long dim_alpha = 0;
  long dim_2alpha = 0;

  Rational k() const { return Rational(dim_alpha + dim_2alpha, 2); }
  friend bool operator==(const RootClassMultiplicity&, const RootClassMultiplicity&) = default;
};

enum class VerdictSource { Computed, Table };

std::string to_string(VerdictSource s);

struct SymPairRecord {
  std::string label;
  std::string pair_description;
  WeylType weyl_type;
  std::vector<RootClassMultiplicity> multiplicities;
  CyclotomicUnit table_x;
  std::optional<CyclotomicUnit> table_y;
  bool table_verdict = false;
  VerdictSource verdict_source = VerdictSource::Table;

  std::vector<Rational> k_values() const;
  friend bool operator==(const SymPairRecord&, const SymPairRecord&) = default;
};

const char* embedded_symspace_table();

// Throws ParseError on malformed text and DataIntegrity when e(k) disagrees with x or y.
std::vector<SymPairRecord> parse_table(std::string_view text);
std::vector<SymPairRecord> load_table();
std::vector<SymPairRecord> load_table_file(const std::string& path);
std::string dump_table(const std::vector<SymPairRecord>& records);

// (sl(n)+sl(n), sl(n)) with every multiplicity 2.
SymPairRecord diagonal_record();

struct RobustnessClass {
  bool nice = false;
  bool integral = false;
  bool robust = false;
};

RobustnessClass classify(const SymPairRecord& rec);

// e(k) per root class, in multiplicity order.
std::vector<CyclotomicUnit> xy_from_k(const SymPairRecord& rec);

struct SymVerdict {
  bool semisimple = false;
  VerdictSource source = VerdictSource::Table;
  std::vector<long> ranks_checked;
};

// Types A: l = 1, q = x. Types B, C: l = 2, u = (y, -1), q = x. Other types echo the table.
SymVerdict verdict(const SymPairRecord& rec);

std::vector<std::string> hc_semisimple_list(const std::vector<SymPairRecord>& records);
std::vector<std::string> hc_semisimple_list();

}  // namespace cherednik
