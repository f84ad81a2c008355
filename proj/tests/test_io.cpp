#include <doctest.h>

#include <cstdlib>
#include <random>
#include <string>

#include <nlohmann/json.hpp>

#include "spinchain/io.hpp"

using namespace spinchain;

TEST_CASE("format_double round-trips exactly") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> dist(-1e6, 1e6);
  for (int i = 0; i < 200; ++i) {
    const double x = dist(rng) * (i % 3 == 0 ? 3.141592653589793 : 1.0);
    CHECK(std::strtod(io::format_double(x).c_str(), nullptr) == x);
  }
  CHECK(io::format_double(0.5) == "0.5");
  CHECK(io::format_double(1.0) == "1");
}

TEST_CASE("profile_csv: golden output for N=1, alpha=beta=1") {
  const ChainSpec spec(1, Rational(1), Rational(1));
  CHECK(io::profile_csv(coupling_profile(spec)) ==
        "n,j1,j2,b\n"
        "0,,,0.25\n"
        "1,0.5,,0.25\n");
}

TEST_CASE("scan_csv: fixed header and t = 0 row") {
  const FidelityScan fs = scan(ChainSpec{1, Rational(0), Rational(1)}, 1.0, 2);
  const std::string csv = io::scan_csv(fs);
  CHECK(csv.rfind("t,mu_sq,nu_sq,leakage\n0,1,0,0\n", 0) == 0);
}

TEST_CASE("state_csv: golden output") {
  StateVector psi(2);
  psi << std::complex<double>(1.0, 0.0), std::complex<double>(0.0, -0.5);
  CHECK(io::state_csv(psi) ==
        "n,re,im,prob\n"
        "0,1,0,1\n"
        "1,0,-0.5,0.25\n");
}

TEST_CASE("json documents carry the spec block and parse back") {
  const ChainSpec spec(2, Rational(1, 2), Rational(1));
  const auto profile = coupling_profile(spec);
  const auto doc = io::profile_json(spec, profile);
  CHECK(doc["spec"]["N"] == 2);
  CHECK(doc["spec"]["alpha"] == "1/2");
  CHECK(doc["spec"]["beta"] == "1");
  CHECK(doc["result"]["j1"].size() == 2);
  CHECK(doc["result"]["j2"].size() == 1);
  CHECK(doc["result"]["b"].size() == 3);

  const auto reparsed = nlohmann::ordered_json::parse(doc.dump(2));
  CHECK(reparsed == doc);
}

TEST_CASE("prediction and report json") {
  const ChainSpec spec(3, Rational(1), Rational(1));
  const RevivalPrediction pred = predict_pst(spec);
  const auto pj = io::prediction_json(spec, pred);
  CHECK(pj["result"]["kind"] == "PST");
  CHECK(pj["result"]["time_multiple_of_pi_over_beta"] == "1");
  CHECK(pj["result"]["certificate"]["q_odd"] == true);

  const VerificationReport report = verify_prediction(spec, pred, 1e-7);
  const auto rj = io::report_json(spec, pred, report);
  CHECK(rj["result"]["verification"]["pass"] == true);
  CHECK(rj["result"]["prediction"]["kind"] == "PST");

  const std::string csv = io::report_csv(report);
  CHECK(csv.rfind("predicted_time,mu_sq,nu_sq,leakage,phase_re,achieved_fidelity,pass\n", 0) == 0);
  CHECK(csv.find(",true\n") != std::string::npos);

  const RevivalPrediction none = predict_pst(ChainSpec{2, Rational(1), Rational(1)});
  const auto nj = io::prediction_json(ChainSpec{2, Rational(1), Rational(1)}, none);
  CHECK(nj["result"]["kind"] == "None");
  CHECK(nj["result"]["time"].is_null());
}
