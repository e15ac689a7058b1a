#include "hss/suites.hpp"

#include <fnmatch.h>

#include <atomic>
#include <chrono>
#include <cmath>
#include <memory>
#include <numbers>
#include <sstream>
#include <thread>

#include "hss/chevalley.hpp"
#include "hss/curvature.hpp"
#include "hss/hermitian.hpp"
#include "hss/tubes.hpp"

namespace hss {
namespace {

using json = nlohmann::ordered_json;

int severity(CheckStatus s) {
  switch (s) {
    case CheckStatus::Skipped: return 0;
    case CheckStatus::Pass: return 1;
    case CheckStatus::Flagged: return 2;
    case CheckStatus::Fail: return 3;
  }
  return 3;
}

json root_json(const RootVector& v) {
  json a = json::array();
  for (const auto& c : v.coords()) a.push_back(c.get_str());
  return a;
}

json roots_json(const RootSystem& rs, const std::vector<RootIndex>& idx) {
  json a = json::array();
  for (RootIndex i : idx) a.push_back(root_json(rs.root(i)));
  return a;
}

template <class F>
auto timed(std::vector<Timing>& timings, std::string suite, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  auto out = f();
  timings.push_back({std::move(suite), std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()});
  return out;
}

std::shared_ptr<const HermitianSpace> build_space(const SpaceSpec& spec) {
  auto sc = std::make_shared<const StructureConstants>(StructureConstants::build(RootSystem::build(spec.family, spec.rank)));
  return std::make_shared<const HermitianSpace>(HermitianSpace::build(sc, spec.node));
}

std::string no_tube_message(const SpaceSpec& spec) {
  const std::string label = reference::space_label(spec.family, spec.rank, spec.node);
  std::string msg = to_string(spec) + " (" + label + ") ";
  switch (spec.family) {
    case Family::A:
      return msg + "is isometric to A:r=" + std::to_string(spec.rank) + ":k=" +
             std::to_string(spec.rank + 1 - spec.node) + "; run the tube command there";
    case Family::D:
      return msg + "is isometric to D:r=4:k=1 by triality; tubes are tabulated there (case iii)";
    default:
      return msg + "carries no real hypersurface with isometric Reeb flow [cor:noexist]";
  }
}

std::vector<int> sub_ks(const SpaceSpec& spec, reference::TubeCase c) {
  if (c != reference::TubeCase::CPk_in_CPr) return {0};
  std::vector<int> ks;
  for (int k = 0; k <= spec.rank - 1; ++k) ks.push_back(k);
  return ks;
}

std::string case_context(reference::TubeCase c, int sub_k) {
  return c == reference::TubeCase::CPk_in_CPr ? "k = " + std::to_string(sub_k) + ": " : std::string();
}

}  // namespace

VerifyOptions verify_options(const CommandOptions& opts) {
  VerifyOptions v;
  if (opts.tolerance) {
    if (!(*opts.tolerance > 0) || !std::isfinite(*opts.tolerance))
      throw UsageError("--tolerance must be a positive number");
    v.set_tolerance(*opts.tolerance);
  }
  if (opts.max_rank) {
    if (*opts.max_rank < 0) throw UsageError("--max-rank must be non-negative");
    v.max_exhaustive_rank = *opts.max_rank;
  }
  return v;
}

bool suite_selected(std::string_view glob, std::string_view suite) {
  return fnmatch(std::string(glob).c_str(), std::string(suite).c_str(), 0) == 0;
}

void merge_checks(std::vector<CheckResult>& into, std::vector<CheckResult> more, std::string_view context) {
  for (auto& c : more) {
    if (c.status == CheckStatus::Fail || c.status == CheckStatus::Flagged) c.witness = std::string(context) + c.witness;
    auto it = std::find_if(into.begin(), into.end(), [&](const CheckResult& x) { return x.id == c.id; });
    if (it == into.end()) {
      into.push_back(std::move(c));
      continue;
    }
    it->instances += c.instances;
    if (severity(c.status) > severity(it->status)) {
      it->status = c.status;
      it->witness = std::move(c.witness);
    }
  }
}

std::vector<SpaceSpec> desk_spaces() {
  std::vector<SpaceSpec> out;
  for (int r = 1; r <= 6; ++r)
    for (int k = 1; 2 * k <= r + 1; ++k) out.push_back(make_space_spec(Family::A, r, k));
  for (int r = 2; r <= 5; ++r) out.push_back(make_space_spec(Family::B, r, 1));
  for (int r = 3; r <= 5; ++r) out.push_back(make_space_spec(Family::C, r, r));
  for (int r = 4; r <= 6; ++r) {
    out.push_back(make_space_spec(Family::D, r, 1));
    out.push_back(make_space_spec(Family::D, r, r));
  }
  out.push_back(make_space_spec(Family::E6, 6, 6));
  out.push_back(make_space_spec(Family::E7, 7, 7));
  return out;
}

Report run_list(const CommandOptions& opts) {
  const int max_rank = opts.max_rank.value_or(7);
  if (max_rank < 1 || max_rank > kMaxSpecRank) throw UsageError("--max-rank for list must lie in 1.." + std::to_string(kMaxSpecRank));
  Report rep;
  rep.command = "list";
  json rows = json::array();
  auto add = [&](Family f, int r, int node) {
    const SpaceSpec s = make_space_spec(f, r, node);
    const auto tc = reference::tube_case_for(f, r, node);
    std::string marked;
    for (int m : reference::marked_nodes(f, r)) marked += (marked.empty() ? "" : ",") + std::to_string(m);
    std::string tube = tc ? std::string(reference::case_numeral(*tc)) : "no-tube";
    if (!tc && (f == Family::B || f == Family::C || f == Family::E6 || f == Family::E7)) tube += " [cor:noexist]";
    if (!tc && f == Family::D) tube += " (isometric to D:r=4:k=1)";
    rows.push_back({{"spec", to_string(s)},
                    {"space", reference::space_label(f, r, node)},
                    {"dim_C", reference::delta_M_count(f, r, node)},
                    {"rank", reference::complex_rank(f, r, node)},
                    {"marked_nodes", marked},
                    {"tube", tube}});
  };
  for (int r = 1; r <= max_rank; ++r)
    for (int k = 1; 2 * k <= r + 1; ++k) add(Family::A, r, k);
  for (int r = 2; r <= max_rank; ++r) add(Family::B, r, 1);
  for (int r = 3; r <= max_rank; ++r) add(Family::C, r, r);
  for (int r = 4; r <= max_rank; ++r) {
    add(Family::D, r, 1);
    add(Family::D, r, r);
  }
  if (max_rank >= 6) add(Family::E6, 6, 6);
  if (max_rank >= 7) add(Family::E7, 7, 7);
  rep.details["spaces"] = rows;
  return rep;
}

Report run_inspect(const SpaceSpec& spec, const CommandOptions& opts) {
  Report rep;
  rep.command = "inspect";
  rep.space = spec;
  if (auto n = isometry_note(spec); !n.empty()) rep.notes.push_back(n);
  const auto hs = timed(rep.timings, "build", [&] { return build_space(spec); });
  const RootSystem& rs = hs->roots();
  json& d = rep.details;
  d["dim_C"] = hs->delta_M_pos().size();
  d["dim_g"] = hs->dim_g();
  d["complex_rank"] = hs->complex_rank();
  std::string marked;
  for (int m : marked_nodes(rs)) marked += (marked.empty() ? "" : ",") + std::to_string(m);
  d["marked_nodes"] = marked;
  d["highest_root"] = root_json(rs.highest_root());
  d["delta_M_pos"] = roots_json(rs, hs->delta_M_pos());
  d["omega"] = roots_json(rs, hs->omega());
  {
    const NoncompactSplit split = split_noncompact(*hs);
    d["delta_M0"] = roots_json(rs, split.zero_set);
    d["delta_M1"] = roots_json(rs, split.one_set);
    const JacobiSpectrum spec_u = jacobi_spectrum_u_delta(*hs);
    json spectrum = json::array();
    for (const auto& e : spec_u.spaces) spectrum.push_back({{"eigenvalue", e.eigenvalue.get_str()}, {"dim", e.basis.size()}});
    d["jacobi_spectrum"] = spectrum;
    const K0Decomposition k0 = timed(rep.timings, "k0", [&] { return k0_decomposition(*hs); });
    d["k0"] = {{"k0_dim", k0.k0_dim},
               {"g0_dim", k0.g0_dim},
               {"p0_dim", k0.p0_dim},
               {"p1_dim", k0.p1_dim},
               {"commutant_dim", k0.commutant_dim},
               {"commutative", k0.commutative}};
  }
  const auto tc = reference::tube_case_for(spec.family, spec.rank, spec.node);
  d["tube_case"] = tc ? std::string(reference::case_numeral(*tc)) : "none";
  if (opts.constants) {
    json table = json::array();
    for (RootIndex a = 0; a < rs.size(); ++a)
      for (RootIndex b = 0; b < rs.size(); ++b)
        if (int n = hs->sc().N(a, b); n != 0) table.push_back({{"alpha", a}, {"beta", b}, {"N", n}});
    json roots = json::array();
    for (RootIndex a = 0; a < rs.size(); ++a) roots.push_back({{"index", a}, {"root", rs.root(a).to_string()}});
    d["roots"] = roots;
    d["structure_constants"] = table;
  }
  return rep;
}

Report run_verify(const SpaceSpec& spec, const CommandOptions& opts) {
  const VerifyOptions vo = verify_options(opts);
  Report rep;
  rep.command = "verify";
  rep.space = spec;
  if (auto n = isometry_note(spec); !n.empty()) rep.notes.push_back(n);
  auto sc = timed(rep.timings, "build", [&] {
    return std::make_shared<const StructureConstants>(StructureConstants::build(RootSystem::build(spec.family, spec.rank)));
  });
  if (suite_selected(opts.suite, "chevalley"))
    merge_checks(rep.checks, timed(rep.timings, "chevalley", [&] { return verify_basis_properties(*sc, vo); }));
  const bool degenerate = spec.family == Family::A && spec.rank == 1;
  if (degenerate) {
    rep.notes.push_back("A1 is the degenerate minimal case; only the chevalley suite runs");
    return rep;
  }
  const bool want_h = suite_selected(opts.suite, "hermitian");
  const bool want_c = suite_selected(opts.suite, "curvature");
  const auto tc = reference::tube_case_for(spec.family, spec.rank, spec.node);
  const bool want_t = tc && suite_selected(opts.suite, "tubes");
  if (!want_h && !want_c && !want_t) return rep;
  auto hs = std::make_shared<const HermitianSpace>(HermitianSpace::build(sc, spec.node));
  if (want_h) merge_checks(rep.checks, timed(rep.timings, "hermitian", [&] { return verify_hermitian(*hs, vo); }));
  if (want_c) merge_checks(rep.checks, timed(rep.timings, "curvature", [&] { return verify_curvature(*hs, vo); }));
  if (want_t) {
    auto checks = timed(rep.timings, "tubes", [&] {
      std::vector<CheckResult> all;
      for (int k : sub_ks(spec, *tc)) {
        const FocalModel focal = focal_data(hs, *tc, k);
        const std::string ctx = case_context(*tc, k);
        merge_checks(all, verify_focal(focal), ctx);
        for (double t : kTubeRadii) merge_checks(all, verify_tube(focal, t, vo), ctx);
      }
      return all;
    });
    merge_checks(rep.checks, std::move(checks));
    rep.notes.push_back("tube case " + std::string(reference::case_numeral(*tc)) + " checked at t = 0.3, 0.7, 1.1");
  } else if (!tc && suite_selected(opts.suite, "tubes")) {
    rep.notes.push_back("no tube suite: " + no_tube_message(spec));
  }
  return rep;
}

Report run_tube(const SpaceSpec& spec, const TubeRequest& req, const CommandOptions& opts) {
  const VerifyOptions vo = verify_options(opts);
  const auto realized = reference::tube_case_for(spec.family, spec.rank, spec.node);
  if (!realized) throw UsageError(no_tube_message(spec));
  const reference::TubeCase c = req.case_id.value_or(*realized);
  if (!reference::case_in_range(c, spec.family, spec.rank, spec.node, req.sub_k)) {
    std::ostringstream os;
    os << "tube case " << reference::case_numeral(c) << " does not apply to " << to_string(spec);
    if (c == reference::TubeCase::CPk_in_CPr) os << " with --sub-k " << req.sub_k << " (need 0 <= k <= r-1)";
    os << "; the space realizes case " << reference::case_numeral(*realized);
    throw UsageError(os.str());
  }
  const double tmax = std::numbers::pi / std::numbers::sqrt2;
  if (!(req.radius > 0 && req.radius < tmax))
    throw UsageError("--radius must satisfy 0 < t < pi/sqrt(2) = " + std::to_string(tmax));

  Report rep;
  rep.command = "tube";
  rep.space = spec;
  if (auto n = isometry_note(spec); !n.empty()) rep.notes.push_back(n);
  const auto hs = timed(rep.timings, "build", [&] { return build_space(spec); });
  const FocalModel focal = focal_data(hs, c, req.sub_k);
  const TubeModel tube = tube_shape_operator(focal, req.radius);
  rep.checks = timed(rep.timings, "tubes", [&] {
    std::vector<CheckResult> all;
    merge_checks(all, verify_focal(focal));
    merge_checks(all, verify_tube(focal, req.radius, vo));
    return all;
  });

  json& d = rep.details;
  d["case"] = std::string(reference::case_numeral(c));
  d["case_name"] = std::string(reference::case_name(c));
  if (c == reference::TubeCase::CPk_in_CPr) d["sub_k"] = req.sub_k;
  d["radius"] = req.radius;
  const char* slots[4] = {"b", "d", "c", "a"};
  const char* forms[4] = {"0", "-tan(t/√2)/√2", "cot(t/√2)/√2", "√2·cot(√2·t)"};
  json rows = json::array();
  for (std::size_t s = 0; s < 4; ++s)
    rows.push_back({{"slot", slots[s]},
                    {"value", tube.curvatures[s]},
                    {"closed_form", forms[s]},
                    {"multiplicity", tube.multiplicities[s]}});
  d["curvatures"] = rows;
  const ReebCheck rc = reeb_isometry_check(tube);
  d["reeb_structural"] = rc.structural;
  d["reeb_residual"] = rc.residual;
  const FocalSetReport fr = focal_set_reconstruction(tube);
  const auto want = reference::focal_dims(c, spec.rank, spec.node, req.sub_k);
  d["focal_dims"] = json::array({{{"set", "P"}, {"dim_C", fr.dim_P}, {"expected", want[0]}, {"lie_triple", fr.P_lie_triple}},
                                 {{"set", "Q"}, {"dim_C", fr.dim_Q}, {"expected", want[1]}, {"lie_triple", fr.Q_lie_triple}}});
  return rep;
}

std::vector<Report> run_report_all(const CommandOptions& opts) {
  verify_options(opts);
  const std::vector<SpaceSpec> spaces = desk_spaces();
  std::vector<Report> out(spaces.size());
  std::vector<std::exception_ptr> errors(spaces.size());
  unsigned workers = opts.jobs ? opts.jobs : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(spaces.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < spaces.size();) {
      try {
        out[i] = run_verify(spaces[i], opts);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace hss
