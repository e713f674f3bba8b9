#include <gtest/gtest.h>

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "spva/errors.hpp"
#include "spva/pipeline.hpp"

using namespace spva;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(PipelineConfig c) {
  std::ostringstream out, err;
  int code = run_pipeline(c, out, err);
  return {code, out.str(), err.str()};
}

PipelineConfig osp22(Stage stage, OutputFormat format = OutputFormat::Text) {
  PipelineConfig c;
  c.builtin = "osp22";
  c.stage = stage;
  c.format = format;
  return c;
}

}  // namespace

TEST(Pipeline, ParsesNames) {
  EXPECT_EQ(parse_stage("walgebra"), Stage::WAlgebra);
  EXPECT_EQ(parse_format("latex"), OutputFormat::Latex);
  EXPECT_THROW(parse_stage("everything"), InvalidData);
  EXPECT_STREQ(stage_name(Stage::Hierarchy), "hierarchy");
}

TEST(Pipeline, WAlgebraListsGenerators) {
  Outcome r = run(osp22(Stage::WAlgebra));
  ASSERT_EQ(r.code, kExitOk) << r.err;
  for (const char* w : {"w1", "w2", "w3", "w4"}) EXPECT_NE(r.out.find(w), std::string::npos) << w;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Pipeline, HierarchyPrintsHamiltonians) {
  Outcome r = run(osp22(Stage::Hierarchy));
  ASSERT_EQ(r.code, kExitOk) << r.err;
  for (const char* rho : {"rho0", "rho1", "rho2"}) EXPECT_NE(r.out.find(rho), std::string::npos) << rho;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Pipeline, OutputIsDeterministic) {
  Outcome a = run(osp22(Stage::All)), b = run(osp22(Stage::All));
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
}

TEST(Pipeline, JsonIsValid) {
  Outcome r = run(osp22(Stage::All, OutputFormat::Json));
  ASSERT_EQ(r.code, kExitOk) << r.err;
  nlohmann::json doc;
  EXPECT_NO_THROW(doc = nlohmann::json::parse(r.out));
  EXPECT_TRUE(doc["stages"].contains("hierarchy"));
}

TEST(Pipeline, LatexHasDisplays) {
  Outcome r = run(osp22(Stage::Brackets, OutputFormat::Latex));
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("\\begin{align*}"), std::string::npos);
}

TEST(Pipeline, MalformedInputIsAnInputError) {
  const std::string path = testing::TempDir() + "malformed.json";
  std::ofstream(path) << "{\n  \"name\": \"x\",\n  \"basis\": [ }\n";
  PipelineConfig c;
  c.input = path;
  Outcome r = run(c);
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find(":3:"), std::string::npos) << r.err;
}

TEST(Pipeline, MissingFileIsAnInputError) {
  PipelineConfig c;
  c.input = "/nonexistent/algebra.json";
  EXPECT_EQ(run(c).code, kExitInput);
}

TEST(Pipeline, SmallWindowIsRejected) {
  PipelineConfig c = osp22(Stage::Hierarchy);
  c.window = 1;
  EXPECT_EQ(run(c).code, kExitInput);
}

TEST(Pipeline, BrokenReductionIsAnInvariantFailure) {
  PipelineConfig c;
  c.builtin = "sl(n|n)/I";
  c.stage = Stage::Validate;
  Outcome r = run(c);
  EXPECT_EQ(r.code, kExitInvariant);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}
