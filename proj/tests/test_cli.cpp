#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "pell3/poly.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = pell3::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Restores PELL3_SEED on scope exit.
class SeedEnv {
 public:
  explicit SeedEnv(const char* value) {
    if (const char* old = std::getenv("PELL3_SEED")) saved_ = old;
    if (value) {
      ::setenv("PELL3_SEED", value, 1);
    } else {
      ::unsetenv("PELL3_SEED");
    }
  }
  ~SeedEnv() {
    if (saved_) {
      ::setenv("PELL3_SEED", saved_->c_str(), 1);
    } else {
      ::unsetenv("PELL3_SEED");
    }
  }

 private:
  std::optional<std::string> saved_;
};

}  // namespace

TEST_CASE("eval") {
  auto r = run({"eval", "--family", "r", "--n", "18", "--format", "plain"});
  CHECK(r.code == 0);
  CHECK(r.out == "131072x^17+245760x^14+159744x^11+42240x^8+4032x^5+84x^2\n");

  r = run({"eval", "--family", "sigma", "--n", "0", "--format", "plain"});
  CHECK(r.out == "3\n");

  r = run({"eval", "--family", "sigma", "--n", "0"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["terms"][0]["coeff"] == "3");
  CHECK(j["terms"][0]["exp"] == 0);

  r = run({"eval", "--family", "r", "--n", "4", "--format", "csv"});
  CHECK(r.out == "exp,coeff\n3,8\n0,1\n");
}

TEST_CASE("eval output round-trips through the JSON parser") {
  for (const char* fam : {"r", "s", "sigma"}) {
    const auto r = run({"eval", "--family", fam, "--n", "77"});
    REQUIRE(r.code == 0);
    std::string line = r.out;
    line.pop_back();
    CHECK(pell3::render_json(pell3::parse_json(line)) == line);
  }
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"eval", "--family", "r", "--n", "-1"}).code == 2);
  CHECK(run({"eval", "--family", "q", "--n", "1"}).code == 2);
  CHECK(run({"eval", "--family", "r"}).code == 2);
  CHECK(run({"eval", "--family", "r", "--n", "3", "--format", "xml"}).code == 2);
  CHECK(run({"series", "--order", "0"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"verify", "--suite", "bogus"}).code == 2);
  CHECK(run({"binet", "--family", "r", "--n", "3", "--t", "-1/3"}).code == 2);
  CHECK(run({"binet", "--family", "r", "--n", "3", "--t", "x"}).code == 2);
  CHECK(run({"plot-data", "--from", "2", "--to", "0"}).code == 2);
  CHECK(run({"plot-data", "--steps", "1"}).code == 2);
  CHECK(run({"numeric-demo", "--n-max", "5", "--x", "0"}).code == 2);
  CHECK(run({"coeffs", "--family", "s", "--n", "1", "--method", "closed-form"}).code == 2);
  CHECK(run({"bench", "--family", "s", "--n", "1"}).code == 2);
}

TEST_CASE("help exits 0") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("coeffs") {
  auto r = run({"coeffs", "--family", "r", "--n", "18", "--method", "closed-form", "--format", "plain"});
  CHECK(r.code == 0);
  CHECK(r.out == "131072 245760 159744 42240 4032 84\n");
  r = run({"coeffs", "--family", "s", "--n", "4"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["coeffs"] == nlohmann::json::array({"8", "2"}));
  CHECK(j["delta"] == 1);
}

TEST_CASE("triangle") {
  auto r = run({"triangle", "--family", "r", "--max-n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,l,coeff\n1,0,1\n2,0,2\n3,0,4\n4,0,8\n4,1,1\n");
  r = run({"triangle", "--family", "sigma", "--max-n", "1", "--format", "json"});
  CHECK(nlohmann::json::parse(r.out)["rows"].size() == 2);
}

TEST_CASE("series") {
  auto r = run({"series", "--order", "3"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out) == nlohmann::json::array({"1/4", "1/16", "7/256"}));
  r = run({"series", "--order", "1"});
  CHECK(nlohmann::json::parse(r.out) == nlohmann::json::array({"1/4"}));
  r = run({"series", "--order", "2", "--format", "csv"});
  CHECK(r.out == "n,coeff\n1,1/4\n2,1/16\n");
}

TEST_CASE("verify examples") {
  CHECK(run({"verify", "--suite", "closed-form", "--max-n", "300"}).code == 0);
  CHECK(run({"verify", "--suite", "binet", "--max-n", "80", "--t-samples", "25", "--seed", "42"}).code == 0);
  CHECK(run({"verify", "--suite", "lagrange", "--max-n", "64"}).code == 0);
}

TEST_CASE("PELL3_SEED selects the sampling seed") {
  const std::vector<std::string> base{"verify", "--suite", "roots", "--t-samples", "3"};
  {
    SeedEnv env(nullptr);
    CHECK(nlohmann::json::parse(run(base).out)["seed"] == 42);
  }
  {
    SeedEnv env("1234");
    const auto r = run(base);
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["seed"] == 1234);
    auto with_flag = base;
    with_flag.insert(with_flag.end(), {"--seed", "9"});
    CHECK(nlohmann::json::parse(run(with_flag).out)["seed"] == 9);
  }
  {
    SeedEnv env("12ab");
    CHECK(run(base).code == 2);
  }
}

TEST_CASE("binet") {
  const auto r = run({"binet", "--family", "s", "--n", "5", "--t", "1/2"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["recurrence"] == "55/4");
  CHECK(j["binet"]["a"] == "55/4");
  CHECK(j["binet"]["b"] == "0/1");
  CHECK(j["A"]["a"] == "4/5");
  CHECK(j["match"] == true);
}

TEST_CASE("plot-data") {
  const auto r = run({"plot-data", "--curve", "z-of-u", "--from", "0", "--to", "2", "--steps", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("u,z,u_exact,z_exact\n", 0) == 0);
  CHECK(r.out.find("0.000000000000,0.000000000000,0/1,0/1\n") != std::string::npos);
  CHECK(r.out.find(",2/3,32/27\n") != std::string::npos);
  CHECK(r.out.find(",2/1,0/1\n") != std::string::npos);
  CHECK(run({"plot-data", "--curve", "other"}).code == 2);
}

TEST_CASE("numeric-demo") {
  auto r = run({"numeric-demo", "--family", "r", "--n-max", "40", "--x", "1", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["rows"].size() == 41);
  CHECK(j["rows"][6]["exact"] == "44/1");
  CHECK(j["max_error"].get<double>() <= 1e-8);
  r = run({"numeric-demo", "--family", "r", "--n-max", "40", "--x", "1", "--tolerance", "0"});
  CHECK(r.code == 1);
}

TEST_CASE("bench") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"bench", "--family", "r", "--n", "1000"},
        std::vector<std::string>{"bench", "--family", "sigma", "--n", "1"},
        std::vector<std::string>{"bench", "--family", "s", "--n", "2"}}) {
    const auto r = run(args);
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["equal"] == true);
    CHECK(j["recurrence_seconds"].is_number());
  }
}
