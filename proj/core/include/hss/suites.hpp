#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hss/check.hpp"
#include "hss/reference_tables.hpp"
#include "hss/report.hpp"
#include "hss/space_spec.hpp"

namespace hss {

/// Bad command-line input (exit code 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommandOptions {
  std::optional<double> tolerance;
  std::string suite = "*";
  std::optional<int> max_rank;
  bool constants = false;
  unsigned jobs = 0;  // 0 picks std::thread::hardware_concurrency
};

inline constexpr const char* kSuites[] = {"chevalley", "hermitian", "curvature", "tubes"};

/// Radii used by `verify` for the tube suite.
inline constexpr double kTubeRadii[] = {0.3, 0.7, 1.1};

VerifyOptions verify_options(const CommandOptions& opts);
bool suite_selected(std::string_view glob, std::string_view suite);

/// Folds `more` into `into` by check id: instance counts add up and the worst status wins,
/// keeping its first witness prefixed by `context`.
void merge_checks(std::vector<CheckResult>& into, std::vector<CheckResult> more, std::string_view context = {});

/// Spaces of the acceptance desk set.
std::vector<SpaceSpec> desk_spaces();

Report run_list(const CommandOptions& opts);
Report run_inspect(const SpaceSpec& spec, const CommandOptions& opts);
Report run_verify(const SpaceSpec& spec, const CommandOptions& opts);

struct TubeRequest {
  std::optional<reference::TubeCase> case_id;  // defaults to the case realized on the space
  double radius = 0;
  int sub_k = 0;  // dimension of CP^k in case (i)
};

/// Throws UsageError when the space carries no tube, the case does not apply or the radius is out of range.
Report run_tube(const SpaceSpec& spec, const TubeRequest& req, const CommandOptions& opts);

/// `verify` over every desk space, run on worker threads; reports come back in desk order.
std::vector<Report> run_report_all(const CommandOptions& opts);

}  // namespace hss
