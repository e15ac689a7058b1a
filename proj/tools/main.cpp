#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "hss/json_schema.hpp"
#include "hss/suites.hpp"

namespace {

int emit(const hss::Report& r, const std::string& format) {
  if (format == "json")
    std::cout << hss::to_json(r).dump(2) << '\n';
  else
    std::cout << hss::to_text(r);
  return hss::exit_code(r);
}

int emit(const std::vector<hss::Report>& rs, const std::string& format) {
  if (format == "json")
    std::cout << hss::to_json(rs).dump(2) << '\n';
  else
    std::cout << hss::to_text(rs);
  return hss::exit_code(rs);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Lie-theoretic models of compact Hermitian symmetric spaces and their Reeb-isometric tubes"};
  app.require_subcommand(1);

  std::string format = "text";
  hss::CommandOptions opts;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--tolerance", opts.tolerance, "Bound for floating-point identities (the composed and ODE bounds scale with it)");
    sub->add_option("--suite", opts.suite, "Glob over suite names: chevalley, hermitian, curvature, tubes");
    sub->add_option("--max-rank", opts.max_rank, "Largest rank with exhaustive Jacobi-identity loops");
  };

  auto* list = app.add_subcommand("list", "Enumerate the supported Hermitian symmetric spaces");
  common(list);

  std::string spec_text;
  auto* inspect = app.add_subcommand("inspect", "Print the model summary of a space");
  inspect->add_option("spec", spec_text, "Space, e.g. A:r=5:k=2")->required();
  inspect->add_flag("--constants", opts.constants, "Include the structure-constant table");
  common(inspect);

  auto* verify = app.add_subcommand("verify", "Run the verification suites on a space");
  verify->add_option("spec", spec_text, "Space, e.g. E:r=7")->required();
  common(verify);

  std::string case_text;
  hss::TubeRequest req;
  auto* tube = app.add_subcommand("tube", "Tabulate the tube of a given radius around the focal submanifold");
  tube->add_option("spec", spec_text, "Space, e.g. D:r=4:k=1")->required();
  tube->add_option("--case", case_text, "Case i, ii, iii or iv (default: the case of the space)");
  tube->add_option("--radius", req.radius, "Tube radius 0 < t < pi/sqrt(2)")->required();
  tube->add_option("--sub-k", req.sub_k, "Dimension k of CP^k in case i");
  common(tube);

  bool all = false;
  auto* report = app.add_subcommand("report", "Verify the whole desk set");
  report->add_flag("--all", all, "Every desk-scale space")->required();
  report->add_option("--jobs", opts.jobs, "Worker threads (0: one per core)");
  common(report);

  auto* validate = app.add_subcommand("validate", "Validate a JSON report read from stdin against the shipped schema");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*list) return emit(hss::run_list(opts), format);
    if (*report) return emit(hss::run_report_all(opts), format);
    if (*validate) {
      const auto doc = nlohmann::json::parse(std::cin);
      const auto bad = hss::validate_json(hss::report_schema(), doc);
      for (const auto& v : bad) std::cerr << (v.path.empty() ? "/" : v.path) << ": " << v.message << '\n';
      return bad.empty() ? 0 : 1;
    }
    const hss::SpaceSpec spec = hss::parse_space_spec(spec_text);
    if (*inspect) return emit(hss::run_inspect(spec, opts), format);
    if (*verify) return emit(hss::run_verify(spec, opts), format);
    if (*tube) {
      if (!case_text.empty()) {
        req.case_id = hss::reference::parse_case(case_text);
        if (!req.case_id) throw hss::UsageError("unknown tube case '" + case_text + "'");
      }
      return emit(hss::run_tube(spec, req, opts), format);
    }
  } catch (const hss::SpecError& e) {
    std::cerr << "hss: invalid space '" << spec_text << "': " << e.what() << '\n';
    return 2;
  } catch (const hss::UsageError& e) {
    std::cerr << "hss: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "hss: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
