#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "hgterm/errors.hpp"
#include "hgterm/json_io.hpp"

using namespace hgterm;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "hgterm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(HGTERM_TEST_DATA) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("hgterm_cli_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

}  // namespace

TEST_CASE("check") {
  auto r = run({"check", data("binomial.json")});
  CHECK(r.status == cli::kSuccess);
  CHECK(r.out == "compatible\n");

  const auto bad = temp_file("bad.json", R"({"k":2,"generators":[{"num":"z2","den":"1"},{"num":"1","den":"1"}]})");
  r = run({"check", bad});
  CHECK(r.status == cli::kMathFailure);
  CHECK(r.out == "incompatible\n");

  r = run({"decompose", bad});
  CHECK(r.status == cli::kMathFailure);
  CHECK(r.err.find("incompatible") != std::string::npos);
}

TEST_CASE("eval") {
  auto r = run({"eval", data("odd_product.json"), "--at", "-2"});
  CHECK(r.status == cli::kSuccess);
  CHECK(r.out == "1/3\n");

  r = run({"eval", data("binomial.json"), "--at", "6,2", "--text"});
  CHECK(r.status == cli::kSuccess);
  CHECK(r.out == "15\n");

  r = run({"eval", data("odd_product.json"), "--at", "4", "--seed", "0=2"});
  CHECK(r.out == "210\n");

  r = run({"eval", data("binomial.json"), "--at", "1"});
  CHECK(r.status == cli::kUsage);
}

TEST_CASE("compare") {
  auto r = run({"compare", data("binomial.json"), "--window", "-6:6,-6:6"});
  CHECK(r.status == cli::kSuccess);
  const auto report = report_from_json(Json::parse(r.out));
  CHECK(report.checked == 169);
  CHECK(report.mismatches.empty());

  r = run({"compare", data("odd_product.json"), "--text"});
  CHECK(r.status == cli::kSuccess);
  CHECK(r.out.find("checked 17") != std::string::npos);
  CHECK(r.out.find("mismatches 0") != std::string::npos);

  CHECK(run({"compare", data("binomial.json"), "--window", "3:1,0:2"}).status == cli::kUsage);
  CHECK(run({"compare", data("binomial.json"), "--window", "0:2"}).status == cli::kUsage);
}

TEST_CASE("emitters produce parseable JSON") {
  for (const char* action : {"decompose", "structure", "factorial", "pochhammer"}) {
    for (const char* spec : {"constant.json", "odd_product.json", "binomial.json"}) {
      const auto r = run({action, data(spec)});
      CHECK_MESSAGE(r.status == cli::kSuccess, action << " " << spec);
      CHECK_FALSE(Json::parse(r.out).is_null());
    }
  }
  const auto ps = structure_from_json(Json::parse(run({"structure", data("binomial.json")}).out));
  CHECK(ps == build_structure(fixtures::binomial()));
}

TEST_CASE("output is byte-for-byte deterministic") {
  for (const char* action : {"decompose", "structure", "factorial", "pochhammer", "compare"}) {
    CHECK(run({action, data("binomial.json")}).out == run({action, data("binomial.json")}).out);
  }
}

TEST_CASE("output file") {
  const auto path = (std::filesystem::temp_directory_path() / "hgterm_cli_out.json").string();
  std::filesystem::remove(path);
  const auto r = run({"decompose", data("odd_product.json"), "-o", path});
  CHECK(r.status == cli::kSuccess);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(form_from_json(Json::parse(ss.str())) == decompose(fixtures::odd_product()));
}

TEST_CASE("usage and input errors") {
  CHECK(run({}).status == cli::kUsage);
  CHECK(run({"frobnicate"}).status == cli::kUsage);
  CHECK(run({"check"}).status == cli::kUsage);
  CHECK(run({"eval", data("odd_product.json")}).status == cli::kUsage);
  CHECK(run({"check", data("missing.json")}).status == cli::kUsage);
  CHECK(run({"check", temp_file("syntax.json", "{\"k\": 1,")}).status == cli::kUsage);
  CHECK(run({"check", temp_file("zero.json", R"({"k":1,"generators":[{"num":"0","den":"1"}]})")}).status ==
        cli::kUsage);
  CHECK(run({"--help"}).status == cli::kSuccess);
}

TEST_CASE("window and point parsing") {
  CHECK(cli::parse_window("-6:6,0:2", 2) == Window{{-6, 0}, {6, 2}});
  CHECK_THROWS_AS(cli::parse_window("1:0", 1), PreconditionError);
  CHECK_THROWS_AS(cli::parse_window("a:b", 1), PreconditionError);
  CHECK(cli::parse_point("3,-4", 2) == IntVec{3, -4});
  CHECK_THROWS_AS(cli::parse_point("3", 2), PreconditionError);
}
