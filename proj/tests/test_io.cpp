#include <gtest/gtest.h>

#include "floer/catalog.hpp"
#include "floer/io.hpp"
#include "floer/random.hpp"

using floer::FloerComplex;
using floer::io::parse_complex;

TEST(IoTest, RoundTrip) {
  floer::Rng rng(61);
  for (int t = 0; t < 100; ++t) {
    const int n = rng.between(0, 6);
    const int N = rng.between(2, n + 2);
    const auto c = floer::random_complex(rng, n, N);
    EXPECT_EQ(parse_complex(floer::io::to_json(c).dump()), c);
  }
}

TEST(IoTest, FixtureIsTheModel) {
  EXPECT_EQ(floer::io::load_complex(std::string(FLOER_FIXTURES) + "/theorem_a_model.json"),
            floer::theorem_a_model());
}

TEST(IoTest, CorruptedFixtureParsesButFailsValidation) {
  const auto c = floer::io::load_complex(std::string(FLOER_FIXTURES) + "/corrupted.json");
  const auto vs = floer::validate(c);
  ASSERT_FALSE(vs.empty());
  EXPECT_EQ(vs[0].m, 0);
}

TEST(IoTest, MissingOpsAreZero) {
  const auto c = parse_complex(R"({"n": 2, "N": 2, "dims": [1, 0, 1]})");
  EXPECT_EQ(c, FloerComplex(2, 2, {1, 0, 1}));
}

TEST(IoTest, EmptyRowsForZeroColumns) {
  const auto c = parse_complex(R"({"n": 1, "N": 3, "dims": [0, 2], "ops": {"0": [["", ""], []]}})");
  EXPECT_EQ(c.op(0, 0).rows(), 2u);
  EXPECT_EQ(c.op(0, 0).cols(), 0u);
}

TEST(IoTest, ParseErrors) {
  const std::vector<std::string> bad = {
      "{",
      "[1, 2]",
      R"({"N": 2, "dims": [1]})",
      R"({"n": 1, "N": 1, "dims": [1, 1]})",
      R"({"n": 1, "N": 2, "dims": [1]})",
      R"({"n": 1, "N": 2, "dims": [1, -1]})",
      R"({"n": 1, "N": 2, "dims": [1, 1], "ops": {"x": [["1"], []]}})",
      R"({"n": 1, "N": 2, "dims": [1, 1], "ops": {"5": [["1"], []]}})",
      R"({"n": 1, "N": 2, "dims": [1, 1], "ops": {"0": [["1"]]}})",
      R"({"n": 1, "N": 2, "dims": [1, 1], "ops": {"0": [["1", "0"], []]}})",
      R"({"n": 1, "N": 2, "dims": [1, 1], "ops": {"0": [["11"], []]}})",
      R"({"n": 1, "N": 2, "dims": [1, 1], "ops": {"0": [["2"], []]}})",
      R"({"n": 1, "N": 2, "dims": [1, 1], "ops": {"0": [[1], []]}})",
  };
  for (const auto& text : bad) {
    EXPECT_THROW(parse_complex(text), floer::ParseError) << text;
  }
  EXPECT_THROW(floer::io::load_complex("/nonexistent/file.json"), floer::ParseError);
}

TEST(IoTest, PageOutput) {
  const auto c = floer::theorem_a_model();
  const auto lc = floer::build_laurent(c, -2, 8);
  const auto pg = floer::page(std::make_shared<const floer::LaurentComplex>(lc), 1,
                              floer::Window{0, 0, 0, 4});
  const auto j = floer::io::page_json(pg);
  EXPECT_EQ(j["r"], 1);
  EXPECT_EQ(j["cells"], floer::Json::parse("[[0,0,1],[0,1,1],[0,2,0],[0,3,1],[0,4,1]]"));
  EXPECT_EQ(floer::io::page_grid(pg),
            "E_1\n"
            " q\\p   0\n"
            "   4   1\n"
            "   3   1\n"
            "   2   0\n"
            "   1   1\n"
            "   0   1\n");
}
