#include <doctest.h>

#include "cmono/errors.hpp"
#include "cmono/generate.hpp"
#include "cmono/report.hpp"
#include "test_util.hpp"

using namespace cmono;

namespace {

int error_code_of(const InputDocument& doc) {
  try {
    ReportOptions options;
    AnalysisReport report = run_report(doc, options);
    return report.exit_code;
  } catch (const AnalysisError& e) {
    return e.exit_code();
  }
}

}  // namespace

TEST_CASE("document round trip") {
  InputDocument doc = testutil::example_a();
  const auto text = doc.to_json().dump();
  InputDocument back = InputDocument::from_text(text);
  CHECK(back.to_json() == doc.to_json());
  CHECK(back.roots.size() == doc.roots.size());
  for (std::size_t k = 0; k < doc.roots.size(); ++k) CHECK(back.roots[k] == doc.roots[k]);

  InputDocument mdoc = generate_instance(2, 2, Rational(1), 5);
  InputDocument mback = InputDocument::from_text(mdoc.to_json().dump());
  CHECK(mback.to_json() == mdoc.to_json());
}

TEST_CASE("document validation failures") {
  // beta_0 must be inf.
  CHECK_THROWS_AS(InputDocument::from_text(R"({"p":2,"mode":"laurent",
    "branch":[{"alpha":"1","beta":"0","m":1},{"alpha":"t","beta":"t^2","m":1}]})"),
                  AnalysisError);
  // vp must be zero in Laurent mode.
  CHECK_THROWS_AS(InputDocument::from_text(R"({"p":2,"vp":"1","mode":"laurent",
    "branch":[{"alpha":"1","beta":"inf","m":1},{"alpha":"t","beta":"t^2","m":1}]})"),
                  AnalysisError);
  // Malformed JSON.
  CHECK_THROWS_AS(InputDocument::from_text("{"), AnalysisError);
}

TEST_CASE("report on example A") {
  ReportOptions options;
  AnalysisReport report = run_report(testutil::example_a(), options);
  CHECK(report.exit_code == 0);
  CHECK(report.json["verdict"] == "pass");
  CHECK(report.json["gram"]["formula"][0][0] == "6");
  CHECK(report.json["gram"]["formula"][0][1] == "2");
  CHECK(report.json["gram"]["formula"][1][1] == "4");
  CHECK(report.json["gram"]["oracle"] == report.json["gram"]["formula"]);
  CHECK(report.json["monodromy"]["factored_route_checked"] == true);
  CHECK(report.json["torsion"]["identities_ok"] == true);
  // Determinism.
  AnalysisReport again = run_report(testutil::example_a(), options);
  CHECK(again.json == report.json);
}

TEST_CASE("report reduction display") {
  ReportOptions options;
  options.ell = 2;
  options.power = 3;
  AnalysisReport report = run_report(testutil::example_a(), options);
  CHECK(report.json["monodromy"]["reduction"]["matrix"][0][2] == "6");
  CHECK(report.json["monodromy"]["reduction"]["matrix"][1][3] == "4");
}

TEST_CASE("error codes") {
  // Ultrametric violation -> 3.
  InputDocument bad;
  bad.mode = InputDocument::Mode::Matrix;
  bad.config.p = 2;
  bad.config.h = 1;
  bad.config.vp = 0;
  bad.config.exponents = {1, 1};
  bad.matrix = ValMatrix::zeros(3);
  bad.matrix.at(0, 1) = bad.matrix.at(1, 0) = ExtendedValue(1);
  bad.matrix.at(1, 2) = bad.matrix.at(2, 1) = ExtendedValue(2);
  bad.matrix.at(0, 2) = bad.matrix.at(2, 0) = ExtendedValue(3);
  CHECK(error_code_of(bad) == 3);

  // Sub-margin instance -> 4 (p=2, vp=1, pair depth 3 <= 4).
  InputDocument shallow;
  shallow.mode = InputDocument::Mode::Matrix;
  shallow.config.p = 2;
  shallow.config.h = 1;
  shallow.config.vp = 1;
  shallow.config.exponents = {1, 1};
  shallow.matrix = ValMatrix::zeros(3);
  shallow.matrix.at(1, 2) = shallow.matrix.at(2, 1) = ExtendedValue(3);
  CHECK(error_code_of(shallow) == 4);

  // Duplicate roots -> 2.
  InputDocument dup = testutil::laurent_doc(2, {"1", "t", "t"});
  CHECK(error_code_of(dup) == 2);
}

TEST_CASE("generator determinism and validity") {
  for (long long p : {2LL, 3LL, 5LL})
    for (long long h : {1LL, 3LL}) {
      InputDocument d1 = generate_instance(p, h, Rational(0), 42);
      InputDocument d2 = generate_instance(p, h, Rational(0), 42);
      CHECK(d1.to_json() == d2.to_json());
      InputDocument d3 = generate_instance(p, h, Rational(0), 43);
      CHECK(d1.to_json() != d3.to_json());
      CHECK(validate_ultrametric(d1.valuation_matrix()).ok);
      // Full pipeline passes.
      ReportOptions options;
      AnalysisReport report = run_report(d1, options);
      CHECK(report.exit_code == 0);

      InputDocument m1 = generate_instance(p, h, Rational(3, 2), 42);
      CHECK(m1.mode == InputDocument::Mode::Matrix);
      CHECK(validate_ultrametric(m1.valuation_matrix()).ok);
      AnalysisReport mreport = run_report(m1, options);
      CHECK(mreport.exit_code == 0);
    }
}

TEST_CASE("dot emission") {
  ReportOptions options;
  AnalysisReport ra = run_report(testutil::example_a(), options);
  const std::string dot_a = ra.to_dot();
  CHECK(dot_a.find("digraph clusters") != std::string::npos);
  CHECK(dot_a.find("i0 -> i1;") != std::string::npos);
  CHECK(dot_a.find("i0 -> i2;") != std::string::npos);

  AnalysisReport rb = run_report(testutil::example_b(), options);
  const std::string dot_b = rb.to_dot();
  CHECK(dot_b.find("i0 -> i2;") != std::string::npos);
  CHECK(dot_b.find("i2 -> i1;") != std::string::npos);

  AnalysisReport rc = run_report(testutil::example_p3(), options);
  CHECK(rc.to_dot().find("i0 -> i1;") != std::string::npos);
}

TEST_CASE("text emission") {
  ReportOptions options;
  AnalysisReport report = run_report(testutil::example_b(), options);
  const std::string text = report.to_text();
  CHECK(text.find("verdict: pass") != std::string::npos);
  CHECK(text.find("gram (formula)") != std::string::npos);
}
