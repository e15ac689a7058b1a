#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fixtures.hpp"
#include "hss/curvature.hpp"
#include "hss/hermitian.hpp"
#include "hss/reference_tables.hpp"
#include "hss/suites.hpp"
#include "hss/tubes.hpp"
#include "jacobi_ode.hpp"

using namespace hss;
using reference::TubeCase;

namespace {

constexpr double kTolAlgebraic = 1e-12;
constexpr double kTolComposed = 1e-10;
constexpr double kTolOde = 1e-8;
constexpr int kOdeSteps = 2000;
constexpr double kCriterion1Budget = 300.0;  // seconds
constexpr std::size_t kSampledTriples = 10000;
constexpr std::uint32_t kSeed = 20240611;
constexpr int kAccoeffTrials = 4;

struct Outcome {
  bool pass = true;
  std::string detail;
  int instances = 0;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::string space_name(const SpaceSpec& s) { return to_string(s); }

class Cache {
 public:
  std::shared_ptr<const StructureConstants> algebra(Family f, int r) {
    auto& slot = algebras_[{static_cast<int>(f), r}];
    if (!slot) slot = testing::algebra(f, r);
    return slot;
  }
  std::shared_ptr<const HermitianSpace> space(const SpaceSpec& s) {
    auto& slot = spaces_[{static_cast<int>(s.family), s.rank, s.node}];
    if (!slot) slot = std::make_shared<const HermitianSpace>(HermitianSpace::build(algebra(s.family, s.rank), s.node));
    return slot;
  }

 private:
  std::map<std::pair<int, int>, std::shared_ptr<const StructureConstants>> algebras_;
  std::map<std::tuple<int, int, int>, std::shared_ptr<const HermitianSpace>> spaces_;
};

std::set<RootVector> root_set(const RootSystem& rs, const std::vector<RootIndex>& idx) {
  std::set<RootVector> out;
  for (RootIndex i : idx) out.insert(rs.root(i));
  return out;
}

std::set<RootVector> as_set(const std::vector<RootVector>& v) { return {v.begin(), v.end()}; }

// Rank of the compact Hermitian symmetric space, from the classification.
int textbook_rank(const SpaceSpec& s) {
  switch (s.family) {
    case Family::A: return std::min(s.node, s.rank + 1 - s.node);
    case Family::B: return 2;
    case Family::C: return s.rank;
    case Family::D: return s.node == 1 ? 2 : s.rank / 2;
    case Family::E6: return 2;
    case Family::E7: return 3;
  }
  return 0;
}

struct TubeInstance {
  SpaceSpec space;
  TubeCase c;
  int sub_k;
};

std::vector<TubeInstance> tube_instances() {
  std::vector<TubeInstance> out;
  for (const SpaceSpec& s : desk_spaces()) {
    const auto c = reference::tube_case_for(s.family, s.rank, s.node);
    if (!c) continue;
    if (*c == TubeCase::CPk_in_CPr) {
      for (int k = 0; k < s.rank; ++k)
        if (reference::case_in_range(*c, s.family, s.rank, s.node, k)) out.push_back({s, *c, k});
    } else {
      out.push_back({s, *c, 0});
    }
  }
  return out;
}

std::string instance_name(const TubeInstance& in) {
  std::string n = space_name(in.space) + " case " + std::string(reference::case_numeral(in.c));
  if (in.c == TubeCase::CPk_in_CPr) n += " k=" + std::to_string(in.sub_k);
  return n;
}

// Multiplicities of (0, -tan(t/sqrt2)/sqrt2, cot(t/sqrt2)/sqrt2, sqrt2 cot(sqrt2 t)).
std::array<int, 4> target_multiplicities(const TubeInstance& in) {
  const int r = in.space.rank;
  switch (in.c) {
    case TubeCase::CPk_in_CPr: {
      const int k = in.sub_k;
      return {0, 2 * k, 2 * (r - k - 1), 1};
    }
    case TubeCase::Gk_in_Gk: {
      const int k = in.space.node;
      return {2 * (k - 1) * (r - k), 2 * (r - k), 2 * (k - 1), 1};
    }
    case TubeCase::CPr1_in_G2R2r: return {2, 2 * (r - 2), 2 * (r - 2), 1};
    case TubeCase::SO_in_SO: return {(r - 3) * (r - 2), 2 * (r - 2), 2 * (r - 2), 1};
  }
  return {};
}

std::array<int, 2> target_focal_dims(const TubeInstance& in) {
  const int r = in.space.rank;
  switch (in.c) {
    case TubeCase::CPk_in_CPr: return {in.sub_k, r - in.sub_k - 1};
    case TubeCase::Gk_in_Gk: {
      const int k = in.space.node;
      return {k * (r - k), (k - 1) * (r - k + 1)};
    }
    case TubeCase::CPr1_in_G2R2r: return {r - 1, r - 1};
    case TubeCase::SO_in_SO: return {(r - 1) * (r - 2) / 2, (r - 1) * (r - 2) / 2};
  }
  return {};
}

std::array<double, 4> target_curvatures(double t) {
  const double s2 = std::sqrt(2.0);
  return {0.0, -std::tan(t / s2) / s2, 1.0 / (std::tan(t / s2) * s2), s2 / std::tan(s2 * t)};
}

std::vector<SpaceSpec> distinct_algebras() {
  std::vector<SpaceSpec> out;
  std::set<std::pair<int, int>> seen;
  for (const SpaceSpec& s : desk_spaces())
    if (seen.insert({static_cast<int>(s.family), s.rank}).second) out.push_back(s);
  return out;
}

Outcome criterion1(Cache& cache) {
  Outcome o;
  VerifyOptions opts;
  opts.samples = kSampledTriples;
  opts.seed = kSeed;
  std::map<std::string, std::set<std::string>> failing;
  std::string first_witness;
  const auto start = std::chrono::steady_clock::now();
  for (const SpaceSpec& s : distinct_algebras()) {
    const auto sc = cache.algebra(s.family, s.rank);
    const std::string name = sc->roots().name();
    for (const CheckResult& c : verify_basis_properties(*sc, opts)) {
      if (c.status == CheckStatus::Fail) {
        failing[c.id].insert(name);
        if (first_witness.empty()) first_witness = name + " " + c.witness;
        o.pass = false;
      }
      if (c.id == "chevalley.jacobi") {
        const std::size_t d = sc->dim();
        const std::size_t expected = d * (d - 1) * (d - 2) / 6;
        if (s.rank <= opts.max_exhaustive_rank ? c.instances != expected : c.instances < kSampledTriples)
          o.fail(name + " jacobi instance count " + std::to_string(c.instances));
      }
    }
    ++o.instances;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > kCriterion1Budget) o.fail("took " + fmt(secs) + " s");
  if (o.pass) {
    o.detail = std::to_string(o.instances) + " root systems in " + fmt(secs) + " s";
  } else if (!failing.empty()) {
    std::string d;
    for (const auto& [id, names] : failing) {
      d += (d.empty() ? "" : "; ") + id + " on";
      for (const auto& n : names) d += " " + n;
    }
    o.detail = d + "; first witness " + first_witness;
  }
  return o;
}

Outcome criterion2(Cache& cache) {
  Outcome o;
  for (const SpaceSpec& s : desk_spaces()) {
    const auto hs = cache.space(s);
    const JacobiSpectrum js = jacobi_spectrum_u_delta(*hs);
    const auto n0 = reference::delta_M0(s.family, s.rank, s.node).size();
    const auto nm = reference::delta_M_count(s.family, s.rank, s.node);
    const std::size_t expected[3] = {1 + 2 * n0, 2 * (nm - 1 - n0), 1};
    const Rational values[3] = {Rational(0), Rational(1, 2), Rational(2)};
    if (!js.complete()) o.fail(space_name(s) + ": eigenspaces do not exhaust p");
    if (js.spaces.size() != 3) {
      o.fail(space_name(s) + ": " + std::to_string(js.spaces.size()) + " eigenspaces");
      continue;
    }
    for (int i = 0; i < 3; ++i) {
      if (js.spaces[i].eigenvalue != values[i]) o.fail(space_name(s) + ": eigenvalue " + to_string(js.spaces[i].eigenvalue));
      if (js.spaces[i].basis.size() != expected[i])
        o.fail(space_name(s) + ": eigenvalue " + to_string(values[i]) + " has multiplicity " +
               std::to_string(js.spaces[i].basis.size()) + ", expected " + std::to_string(expected[i]));
    }
    ++o.instances;
  }
  if (o.pass) o.detail = std::to_string(o.instances) + " spaces, spectrum {0, 1/2, 2}";
  return o;
}

Outcome criterion3(Cache& cache) {
  Outcome o;
  for (const SpaceSpec& s : desk_spaces()) {
    const auto hs = cache.space(s);
    const RootSystem& rs = hs->roots();
    if (root_set(rs, hs->delta_M_pos()) != as_set(reference::delta_M_pos(s.family, s.rank, s.node)))
      o.fail(space_name(s) + ": Delta_M^+ differs from the closed-form list");
    if (root_set(rs, split_noncompact(*hs).zero_set) != as_set(reference::delta_M0(s.family, s.rank, s.node)))
      o.fail(space_name(s) + ": Delta_M^+(0) differs from the closed-form list");
    if (s.family == Family::E6 && hs->delta_M_pos().size() != 16) o.fail("E6: |Delta_M^+| != 16");
    if (s.family == Family::E7 && hs->delta_M_pos().size() != 27) o.fail("E7: |Delta_M^+| != 27");
    ++o.instances;
  }
  if (o.pass) o.detail = std::to_string(o.instances) + " spaces, E6 16 and E7 27 noncompact roots";
  return o;
}

Outcome criterion4(Cache& cache) {
  Outcome o;
  for (const SpaceSpec& s : desk_spaces()) {
    const auto hs = cache.space(s);
    for (const CheckResult& c : verify_hermitian(*hs))
      if (c.id.starts_with("hermitian.omega.") && c.status == CheckStatus::Fail)
        o.fail(space_name(s) + " " + c.id + ": " + c.witness);
    if (root_set(hs->roots(), hs->omega()) != as_set(reference::omega(s.family, s.rank, s.node)))
      o.fail(space_name(s) + ": Omega differs from the closed-form list");
    if (hs->complex_rank() != textbook_rank(s))
      o.fail(space_name(s) + ": |Omega| = " + std::to_string(hs->complex_rank()) + ", rank " +
             std::to_string(textbook_rank(s)));
    ++o.instances;
  }
  if (o.pass) o.detail = std::to_string(o.instances) + " spaces";
  return o;
}

Outcome criterion5(Cache& cache) {
  Outcome o;
  std::vector<std::string> failures;
  for (const SpaceSpec& s : desk_spaces()) {
    int expected = 0;
    if ((s.family == Family::C && s.node == s.rank) || s.family == Family::E6 || s.family == Family::E7) expected = 1;
    if (s.family == Family::A && s.node >= 2 && 2 * s.node <= s.rank + 1) expected = 2;
    if (s.family == Family::D && s.rank >= 5 && s.node == s.rank) expected = 2;
    if (expected == 0) continue;
    const K0Decomposition k0 = k0_decomposition(*cache.space(s));
    ++o.instances;
    if (k0.commutant_dim != expected || !k0.commutative) {
      failures.push_back(space_name(s) + " commutant " + std::to_string(k0.commutant_dim) +
                         (k0.commutative ? "" : " non-commutative") + " (expected " + std::to_string(expected) + ")");
      o.pass = false;
    }
  }
  if (o.pass) {
    o.detail = std::to_string(o.instances) + " spaces";
  } else {
    std::ostringstream os;
    for (std::size_t i = 0; i < failures.size(); ++i) os << (i ? "; " : "") << failures[i];
    o.detail = os.str();
  }
  return o;
}

Outcome for_each_tube(Cache& cache, const std::function<void(const TubeInstance&, const FocalModel&, double, Outcome&)>& body) {
  Outcome o;
  for (const TubeInstance& in : tube_instances()) {
    const FocalModel focal = focal_data(cache.space(in.space), in.c, in.sub_k);
    for (double t : kTubeRadii) {
      body(in, focal, t, o);
      ++o.instances;
    }
  }
  if (o.pass) o.detail = std::to_string(o.instances) + " (instance, radius) pairs";
  return o;
}

Outcome criterion6(Cache& cache) {
  VerifyOptions opts;
  opts.tol_algebraic = kTolAlgebraic;
  opts.tol_composed = kTolComposed;
  return for_each_tube(cache, [&](const TubeInstance& in, const FocalModel& focal, double t, Outcome& o) {
    const std::string at = instance_name(in) + " t=" + fmt(t);
    const TubeModel tube = tube_shape_operator(focal, t);
    const auto target = target_curvatures(t);
    const Eigen::MatrixXd& S = tube.shape_op;
    const Eigen::MatrixXd off = S - Eigen::MatrixXd(S.diagonal().asDiagonal());
    if (off.size() > 0 && off.cwiseAbs().maxCoeff() > kTolAlgebraic) o.fail(at + ": S(t) not diagonal");
    std::array<int, 4> counts{};
    for (Eigen::Index i = 0; i < S.rows(); ++i) {
      int best = 0;
      for (int s = 1; s < 4; ++s)
        if (std::abs(S(i, i) - target[s]) < std::abs(S(i, i) - target[best])) best = s;
      if (std::abs(S(i, i) - target[best]) > kTolAlgebraic) o.fail(at + ": eigenvalue " + fmt(S(i, i)) + " off every closed form");
      ++counts[best];
    }
    if (counts != target_multiplicities(in)) o.fail(at + ": multiplicities differ");
    const double a = target[3], b = target[0], c = target[2], d = target[1];
    if (std::abs(c + d - a) > kTolAlgebraic || std::abs(c * d + 0.5) > kTolAlgebraic) o.fail(at + ": c + d = a, cd = -1/2");
    for (double x : {c, d})
      if (std::abs(2 * x * x - 2 * a * x - 1) > kTolComposed) o.fail(at + ": 2x^2 - 2ax - 1 = 0");
    if (std::abs(b * (b - a)) > kTolComposed) o.fail(at + ": b(b - a) = 0");
    for (const CheckResult& r : principal_curvature_identities(tube, opts))
      if (r.status == CheckStatus::Fail) o.fail(at + " " + r.id + ": " + r.witness);
    const ReebCheck rc = reeb_isometry_check(tube);
    if (!rc.structural) o.fail(at + ": S phi = phi S fails on the slot structure");
    if (!(rc.residual < kTolAlgebraic)) o.fail(at + ": |S phi - phi S| = " + fmt(rc.residual));
  });
}

Outcome criterion7(Cache& cache) {
  return for_each_tube(cache, [&](const TubeInstance& in, const FocalModel& focal, double t, Outcome& o) {
    const std::string at = instance_name(in) + " t=" + fmt(t);
    const FocalShapeReport fs = focal_shape_operator(focal, t);
    for (double e : fs.eigenvalues)
      if (!(std::abs(e) < kTolComposed)) o.fail(at + ": S^P eigenvalue " + fmt(e));
    for (double z : fs.vanishing_norms)
      if (!(z < kTolComposed)) o.fail(at + ": normal Jacobi field " + fmt(z) + " at P");
    const FocalSetReport fr = focal_set_reconstruction(tube_shape_operator(focal, t));
    if (!fr.P_lie_triple || !fr.Q_lie_triple) o.fail(at + ": focal tangent space is not a Lie triple system");
    if (!fr.P_j_invariant || !fr.Q_j_invariant) o.fail(at + ": focal tangent space is not complex");
    const auto dims = target_focal_dims(in);
    if (fr.dim_P != dims[0] || fr.dim_Q != dims[1])
      o.fail(at + ": focal dims (" + std::to_string(fr.dim_P) + ", " + std::to_string(fr.dim_Q) + "), expected (" +
             std::to_string(dims[0]) + ", " + std::to_string(dims[1]) + ")");
  });
}

Outcome criterion8(Cache& cache) {
  double worst = 0;
  Outcome o = for_each_tube(cache, [&](const TubeInstance& in, const FocalModel& focal, double t, Outcome& out) {
    const TubeModel tube = tube_shape_operator(focal, t);
    const Eigen::MatrixXd ode = oracle::ode_shape_operator(tube, kOdeSteps);
    const double e = (ode - tube.shape_op).cwiseAbs().maxCoeff();
    worst = std::max(worst, e);
    if (!(e < kTolOde)) out.fail(instance_name(in) + " t=" + fmt(t) + ": ODE differs by " + fmt(e));
  });
  if (o.pass) o.detail += ", max deviation " + fmt(worst);
  return o;
}

Outcome criterion9(Cache& cache) {
  Outcome o;
  std::mt19937 rng(kSeed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  const auto random_rational = [&] {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
  };
  for (const SpaceSpec& s : desk_spaces()) {
    const auto hs = cache.space(s);
    const auto& om = hs->omega();
    if (om.empty()) continue;
    const Rational kappa = measure_accoeff_constant(*hs, om.front());
    for (RootIndex b : om)
      if (measure_accoeff_constant(*hs, b) != kappa) o.fail(space_name(s) + ": constant varies across Omega");
    for (int trial = 0; trial < kAccoeffTrials; ++trial) {
      std::map<RootIndex, Rational> a, c;
      for (RootIndex b : om) {
        a[b] = random_rational();
        c[b] = random_rational();
      }
      Vector expected(hs->dim_p(), Rational(0));
      for (RootIndex b : om) expected = expected + (kappa * c[b] * a[b] * a[b]) * hs->u(b);
      if (verify_accoeff(*hs, a, c) != expected) o.fail(space_name(s) + ": overlapping supports differ from the formula");
      if (om.size() >= 2) {
        std::map<RootIndex, Rational> a1, c1;
        const std::size_t cut = 1 + static_cast<std::size_t>(trial) % (om.size() - 1);
        for (std::size_t i = 0; i < om.size(); ++i) (i < cut ? a1 : c1)[om[i]] = a[om[i]];
        if (!is_zero(verify_accoeff(*hs, a1, c1))) o.fail(space_name(s) + ": disjoint supports give nonzero curvature");
      }
    }
    ++o.instances;
  }
  if (o.pass) o.detail = std::to_string(o.instances) + " spaces";
  return o;
}

}  // namespace

int main() {
  Cache cache;
  const std::function<Outcome(Cache&)> criteria[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                     criterion6, criterion7, criterion8, criterion9};
  int failed = 0;
  for (int i = 0; i < 9; ++i) {
    Outcome o;
    try {
      o = criteria[i](cache);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failed;
    std::printf("criterion %d %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of 9 criteria passed\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
