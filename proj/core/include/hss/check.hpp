#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hss {

enum class CheckStatus { Pass, Fail, Flagged, Skipped };

std::string_view to_string(CheckStatus s);

/// Outcome of one mechanized identity or property check.
struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::Pass;
  std::size_t instances = 0;  // how many cases were evaluated
  std::string witness;        // first counterexample (fail) or explanation (flagged/skipped)

  bool passed() const { return status == CheckStatus::Pass; }
};

/// Accumulates a check over many instances, keeping the first witness.
class CheckAccumulator {
 public:
  explicit CheckAccumulator(std::string id) { result_.id = std::move(id); }

  void record(bool ok, std::string_view witness_if_bad = {}) {
    ++result_.instances;
    if (!ok && result_.status == CheckStatus::Pass) {
      result_.status = CheckStatus::Fail;
      result_.witness = std::string(witness_if_bad);
    }
  }
  /// Marks a known deviation that must be reported but does not count as failure.
  void flag(std::string_view why) {
    if (result_.status == CheckStatus::Pass) {
      result_.status = CheckStatus::Flagged;
      result_.witness = std::string(why);
    }
  }
  bool failed() const { return result_.status == CheckStatus::Fail; }
  CheckResult finish() && { return std::move(result_); }
  const CheckResult& peek() const { return result_; }

 private:
  CheckResult result_;
};

/// Knobs shared by all verification suites.
struct VerifyOptions {
  /// Exhaustive triple loops run up to this rank; above it, `samples` seeded random triples are used.
  int max_exhaustive_rank = 4;
  std::size_t samples = 10000;
  std::uint64_t seed = 0x5eed;
  /// Absolute bound for single floating-point identities.
  double tol_algebraic = 1e-12;
  /// Absolute bound for composed floating-point expressions.
  double tol_composed = 1e-10;
  /// Absolute bound against the numerically integrated Jacobi equation.
  double tol_ode = 1e-8;

  /// Sets the algebraic bound and scales the other two by the default ratios.
  void set_tolerance(double tol) {
    tol_algebraic = tol;
    tol_composed = tol * 1e2;
    tol_ode = tol * 1e4;
  }
};

inline bool all_passed(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) return false;
  return true;
}

}  // namespace hss
