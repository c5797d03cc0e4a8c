#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "cassini/serialize.hpp"
#include "cassini/verify.hpp"

using namespace cassini;
using doctest::Approx;

namespace {

bool same_report(const InequalityReport& a, const InequalityReport& b) {
  return to_json(a).dump() == to_json(b).dump();
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("registry") {
    const auto& all = registered_inequalities();
    CHECK(all.size() == 12);
    CHECK(find_inequality("2s_le_c") != nullptr);
    CHECK(find_inequality("nope") == nullptr);
    CHECK(default_tolerance(PairRegion::UnitBall) == 1e-9);
    CHECK(default_tolerance(PairRegion::Subdomain) == 1e-6);
    VerifyOptions opt;
    opt.samples = 10;
    CHECK_THROWS_AS(verify_inequality("nope", opt), std::invalid_argument);
    opt.dim = 1;
    CHECK_THROWS_AS(verify_inequality("2s_le_c", opt), std::invalid_argument);
  }

  TEST_CASE("sampling is counter-based and uniform") {
    auto a = sample_engine(9, 1234);
    auto b = sample_engine(9, 1234);
    CHECK(a() == b());
    auto c = sample_engine(9, 1235);
    auto d = sample_engine(10, 1234);
    const auto va = a();
    CHECK(va != c());
    CHECK(va != d());

    // E|x|^2 = n/(n+2) for the uniform distribution on B^n.
    for (std::size_t dim : {2u, 3u}) {
      double sum = 0.0;
      const int n = 40000;
      for (int i = 0; i < n; ++i) {
        auto rng = sample_engine(1, i);
        const Point p = uniform_in_ball(dim, rng);
        CHECK(p.norm() < 1.0);
        sum += p.norm2();
      }
      CHECK(sum / n == Approx(double(dim) / (dim + 2.0)).epsilon(0.01));
    }
    auto rng = sample_engine(3, 0);
    for (int i = 0; i < 1000; ++i) {
      const double u = uniform01(rng);
      CHECK(u >= 0.0);
      CHECK(u < 1.0);
    }
  }

  TEST_CASE("subdomain pairs lie in the subdomain") {
    for (std::size_t dim : {2u, 3u}) {
      const DomainSpec& d = verification_subdomain(dim);
      for (int i = 0; i < 100; ++i) {
        const auto [x, y] = sample_pair(PairRegion::Subdomain, dim, 4, i);
        CHECK(d.contains(x));
        CHECK(d.contains(y));
        const auto [u, v] = sample_pair(PairRegion::SymmetricSubdomain, dim, 4, i);
        CHECK(v == -u);
        CHECK(d.contains(u));
        CHECK(d.contains(v));
      }
    }
  }

  TEST_CASE("reports are reproducible across worker counts") {
    VerifyOptions opt;
    opt.samples = 3000;
    opt.seed = 17;
    opt.workers = 1;
    const auto one = verify_inequality("s_le_c_over_sqrt", opt);
    opt.workers = 4;
    const auto four = verify_inequality("s_le_c_over_sqrt", opt);
    CHECK(same_report(one, four));
    CHECK(one.violations == 0);
    CHECK(one.samples == 3000);
    CHECK(one.seed == 17);
    CHECK(one.tolerance == 1e-9);
    REQUIRE(one.extremal_pair);
    REQUIRE(one.oracle_max_diff);
    CHECK(*one.oracle_max_diff < 1e-8);
  }

  TEST_CASE("suite reports match individual runs") {
    VerifyOptions opt;
    opt.samples = 500;
    opt.seed = 2;
    opt.dim = 3;
    std::vector<std::string> names;
    for (const auto& info : registered_inequalities()) names.push_back(info.name);
    const auto suite = verify_suite(names, opt);
    REQUIRE(suite.size() == names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
      CHECK(suite[i].name == names[i]);
      CHECK(suite[i].violations == 0);
      CHECK(suite[i].dim == 3);
      CHECK(same_report(suite[i], verify_inequality(names[i], opt)));
    }
  }

  TEST_CASE("the constant 2 is approached but not exceeded") {
    VerifyOptions opt;
    opt.samples = 20000;
    const auto r = verify_inequality("2s_le_c", opt);
    CHECK(r.violations == 0);
    CHECK(r.max_ratio <= 1.0 + 1e-12);
    CHECK(r.max_ratio > 0.9);
    CHECK(r.worst_margin >= -1e-9);
  }

  TEST_CASE("a zero tolerance still reports no violations for exact sides") {
    VerifyOptions opt;
    opt.samples = 2000;
    opt.tolerance = 0.0;
    CHECK(verify_inequality("j_le_rho_le_2j", opt).violations == 0);
  }

  TEST_CASE("report serialization has the documented field order") {
    VerifyOptions opt;
    opt.samples = 50;
    const Json j = to_json(verify_inequality("sh_rho2_le_c", opt));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    const std::vector<std::string> expected{"name",        "n",          "samples",   "seed",
                                            "tolerance",   "violations", "worst_margin", "max_ratio",
                                            "extremal_pair", "oracle_max_diff"};
    CHECK(keys == expected);
    CHECK(j["extremal_pair"].size() == 2);
  }

  TEST_CASE("number formatting") {
    CHECK(format_number(1.0 / 3.0) == "0.333333333333333");
    CHECK(json_number(NAN).is_null());
    CHECK(json_number(0.1).get<double>() == 0.1);
  }
}
