#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cherednik::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  const auto r = run(args);
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

// Walks "a.b[2].c" through the envelope.
const json& at_path(const json& root, const std::string& path) {
  const json* cur = &root;
  std::size_t i = 0;
  while (i < path.size()) {
    if (path[i] == '.') ++i;
    if (path[i] == '[') {
      const auto close = path.find(']', i);
      cur = &(*cur)[std::stoul(path.substr(i + 1, close - i - 1))];
      i = close + 1;
    } else {
      const auto end = path.find_first_of(".[", i);
      cur = &(*cur)[path.substr(i, end - i)];
      i = end == std::string::npos ? path.size() : end;
    }
  }
  return *cur;
}

// Every single-line "path: value" of the human output must match the JSON envelope.
void check_human_matches_json(const std::vector<std::string>& args) {
  const json j = run_json(args);
  const auto human = run(args);
  REQUIRE(human.code == 0);
  std::istringstream is(human.out);
  std::string line;
  int checked = 0;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == ' ') continue;
    const auto colon = line.find(": ");
    if (colon == std::string::npos) continue;
    const std::string path = line.substr(0, colon), value = line.substr(colon + 2);
    const json& v = at_path(j, path);
    if (value == "[]" || value == "{}") continue;
    CHECK_MESSAGE((v.is_string() ? v.get<std::string>() : v.dump()) == value, path);
    ++checked;
  }
  CHECK(checked > 0);
}

}  // namespace

TEST_CASE("simple at varsigma = 0") {
  const json j = run_json({"simple", "--varsigma", "0,0,0"});
  CHECK(j["command"] == "simple");
  CHECK(j["result"]["a_simple"]["simple"] == true);
  CHECK(j["result"]["a_simple_varsigma"]["simple"] == true);
  CHECK(j["result"]["kappa"] == json::array({"0", "2/3", "1/3"}));
}

TEST_CASE("hc series at ell = 2") {
  const json j = run_json({"hc", "series", "--ell", "2"});
  CHECK(j["result"]["total_length"] == 4);
  std::map<std::string, int> m;
  for (const auto& f : j["result"]["factors"]) m[f["subset"]] = f["multiplicity"];
  CHECK(m == std::map<std::string, int>{{"{}", 2}, {"{0}", 1}, {"{1}", 1}});
  CHECK(j["warnings"].empty());
  const json k = run_json({"hc", "series", "--ell", "3"});
  CHECK(k["result"]["torsion_count"] == 9);
  CHECK(k["result"]["torsion_count_alternative"] == 8);
  CHECK(k["warnings"].size() == 1);
}

TEST_CASE("weyl casimir") {
  const json j = run_json({"weyl", "casimir"});
  CHECK(j["result"]["ok"] == true);
  CHECK(j["result"]["omega_plus_one"]["verdict"] == "Member");
  CHECK(j["result"]["omega_alone"]["verdict"] == "Inconclusive");
}

TEST_CASE("membership exit codes") {
  CHECK(run({"weyl", "member", "--target", "d0*d1", "--gens", "d0"}).code == 0);
  CHECK(run({"--bound", "3", "weyl", "member", "--target", "1", "--gens", "d0;d1"}).code == 3);
  CHECK(run({"--bound", "1", "weyl", "member", "--target", "d0*d1", "--gens", "d0"}).code == 2);
  CHECK(run({"weyl", "member", "--target", "x0 +", "--gens", "d0"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"kappa", "--varsigma", "1.5"}).code == 2);
  CHECK(run({"kappa", "--varsigma", "1/0"}).code == 2);
  CHECK(run({"hc", "localized", "--ell", "2", "--subset", "0,1"}).code == 2);
  CHECK(run({"hc", "series", "--ell", "21"}).code == 2);
  CHECK(run({"symspace", "check", "NOPE"}).code == 2);
  CHECK(run({"hecke", "--ell", "3", "--n", "2", "--varsigma", "0,0"}).code == 2);
  CHECK(run({"invariants", "semiinv", "--ell", "1", "--n", "2", "--c", "1", "--sign", "1"}).code == 2);
  const auto h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("Usage") != std::string::npos);
}

TEST_CASE("symspace commands") {
  const json l = run_json({"symspace", "semisimple-list"});
  CHECK(l["result"]["labels"] == json::array({"diagonal", "AII_n", "DII_p", "EIV"}));
  const json c = run_json({"symspace", "check", "AII_n"});
  CHECK(c["result"]["verdict"] == "Y");
  CHECK(c["result"]["verdict_source"] == "computed");
  const json all = run_json({"symspace", "list"});
  CHECK(all["result"]["rows"].size() == 16);
  const auto d = run({"symspace", "dump"});
  CHECK(d.code == 0);
  CHECK(d.out.find("EVIII | E_{8}") != std::string::npos);
}

TEST_CASE("parameter commands") {
  const json k = run_json({"kappa", "--varsigma", "0,0", "--n", "2"});
  CHECK(k["result"]["kappa00"] == "1/2");
  const json h = run_json({"hecke", "--n", "2", "--varsigma", "0,0"});
  CHECK(h["result"]["normalized_q"] == "1");
  const json r = run_json({"regular", "--n", "1", "--varsigma", "0,1/4"});
  CHECK(r["result"]["regular"] == true);
  const json f = run_json({"hc", "framed", "--ell", "2", "--n", "1", "--example"});
  CHECK(f["result"]["semisimple"] == false);
  CHECK(f["result"]["regular_hecke"] == true);
  CHECK(f["result"]["chi_dot_delta"] == "0");
}

TEST_CASE("weyl radial and invariants") {
  const json r = run_json({"weyl", "radial", "--varsigma", "1/2,0,-1/2", "--j", "2"});
  CHECK(r["result"]["expected_coefficient"] == "15/2");
  CHECK(r["result"]["ok"] == true);
  const json d = run_json({"invariants", "delta", "--ell", "3", "--n", "1"});
  CHECK(d["result"]["delta"] == "x1^3");
  const json s = run_json({"invariants", "semiinv", "--ell", "2", "--n", "2", "--c", "1", "--sign", "1"});
  CHECK(s["result"]["h_chi"] == "x1*x2");
  CHECK(s["result"]["degree"] == 2);
}

TEST_CASE("human output carries the same values as JSON") {
  check_human_matches_json({"simple", "--kappa", "0,1/2", "--oracle"});
  check_human_matches_json({"hc", "series", "--ell", "3"});
  check_human_matches_json({"hc", "decompose", "--ell", "2", "--n", "3"});
  check_human_matches_json({"weyl", "casimir"});
  check_human_matches_json({"symspace", "list"});
  check_human_matches_json({"invariants", "semiinv", "--ell", "2", "--n", "2", "--c", "1", "--sign", "-1"});
}
