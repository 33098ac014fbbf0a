#include <doctest.h>

#include "cayleyqc/errors.hpp"
#include "cayleyqc/report.hpp"

using namespace cayleyqc;

TEST_CASE("set family json") {
  CHECK(to_json(SetFamily::from_lists(3, {{2, 3}, {}, {1}})).dump() == "[[],[1],[2,3]]");
}

TEST_CASE("bound report json") {
  const auto j = to_json(corollary_bound(8, 7));
  CHECK(j["formula_id"] == "corollary");
  CHECK(j["M"] == 2);
  CHECK(j["value_numerator"] == "5");
  CHECK(j["value_denominator_or_precision"] == "1");
  CHECK(j["decimal"] == "5.000000000000");

  const auto irr = to_json(theorem_bound(6, 3));
  CHECK(irr["value_numerator"] == "2732050807568");
  CHECK(irr["exact"] == "1 + 1*sqrt(3)");
}

TEST_CASE("quantum params json") {
  const auto spec = GeneratorSpec::identity(2);
  const auto q = quantum_params(spec);
  const auto deg = degeneracy_report(spec, q);
  const auto j = to_json(q, &deg);
  CHECK(j["K"] == 0);
  CHECK(j["D_status"] == "undefined-K-zero");
  CHECK(j["D"].is_null());
}

TEST_CASE("csv and table are projections of the json") {
  const Json j = {{"a", 1}, {"b", "x,y"}, {"c", Json::array({1, 2})}, {"d", nullptr}};
  CHECK(render(j, OutputFormat::csv) == "a,b,c,d\n1,\"x,y\",\"[1,2]\",\n");
  CHECK(render(j, OutputFormat::table) == "a  1\nb  x,y\nc  [1,2]\nd  \n");
  CHECK(render(j, OutputFormat::json).back() == '\n');

  const Json rows = Json::array({{{"k", "a"}, {"v", 1}}, {{"k", "bbb"}, {"v", 22}}});
  CHECK(render_rows(rows, OutputFormat::csv) == "k,v\na,1\nbbb,22\n");
  CHECK(render_rows(rows, OutputFormat::table) == "k    v\na    1\nbbb  22\n");
}

TEST_CASE("format names") {
  CHECK(parse_output_format("csv") == OutputFormat::csv);
  CHECK_THROWS_AS((void)parse_output_format("xml"), ValidationError);
}
