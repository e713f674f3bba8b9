#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "spva/dsred.hpp"
#include "spva/reduction.hpp"

namespace spva {

enum class Stage { Validate, Axioms, WAlgebra, Brackets, Hierarchy, All };
enum class OutputFormat { Text, Json, Latex };

enum ExitStatus : int { kExitOk = 0, kExitInvariant = 1, kExitInput = 2, kExitOverflow = 3 };

Stage parse_stage(std::string_view s);  // throws InvalidData
OutputFormat parse_format(std::string_view s);
const char* stage_name(Stage s);

struct PipelineConfig {
  std::string builtin;  // exactly one of builtin and input
  std::string input;    // path of an algebra JSON document
  int depth = 2;
  std::optional<int> window;  // z-window [-window, window], default depth + 2
  Stage stage = Stage::All;
  OutputFormat format = OutputFormat::Text;
};

// Algebra, reduction, loop algebra and the affine brackets; the canonical
// form and the reduced brackets are computed on first use.  Holds pointers
// into itself, hence neither copyable nor movable.
class Session {
 public:
  Session(const LieSuperAlgebra& g, const ReductionInput& in, int zmin, int zmax);
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  const LieSuperAlgebraPtr& algebra() const { return g_; }
  const std::shared_ptr<const ReductionData>& reduction() const { return rd_; }
  const VariableSetPtr& vars() const { return vars_; }
  const LoopAlgebra& loop() const { return *la_; }
  const BracketSpec& affine1() const { return affine1_; }
  const BracketSpec& affine2() const { return affine2_; }

  const WPresentation& w() const;
  const BracketSpec& w1() const;
  const BracketSpec& w2() const;

  // First basis vector of the centre of ker ad Lambda^2 in grade 0.
  LoopElem default_C() const;

 private:
  LieSuperAlgebraPtr g_;
  std::shared_ptr<const ReductionData> rd_;
  VariableSetPtr vars_;
  std::unique_ptr<LoopAlgebra> la_;
  BracketSpec affine1_;
  BracketSpec affine2_;
  mutable std::unique_ptr<WPresentation> wp_;
  mutable std::optional<BracketSpec> w1_;
  mutable std::optional<BracketSpec> w2_;
};

// Loads the algebra named by the config; file, parse and schema errors are
// thrown (std::runtime_error, ParseError, InvalidData).
std::pair<LieSuperAlgebra, ReductionInput> load_algebra(const PipelineConfig& config);

// Runs the validation stage and then the requested stage (every stage for
// All), writing the report to out and diagnostics to err.  Returns an
// ExitStatus.
int run_pipeline(const PipelineConfig& config, std::ostream& out, std::ostream& err);

}  // namespace spva
