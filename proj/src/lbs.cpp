// SPDX-License-Identifier: Apache-2.0
#include "mobb/lbs.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>

#include "mobb/errors.hpp"
#include "mobb/tolerances.hpp"

namespace mobb {

namespace {

std::vector<double> image_of(const MoilpInstance& instance, const std::vector<double>& x) {
  std::vector<double> y(instance.num_objectives, 0.0);
  for (int k = 0; k < instance.num_objectives; ++k) {
    for (int j = 0; j < instance.num_variables; ++j)
      y[k] += static_cast<double>(instance.objective[k][j]) * x[j];
  }
  return y;
}

void set_objective(LpProblem& lp, const MoilpInstance& instance, const std::vector<double>& weights) {
  for (int j = 0; j < instance.num_variables; ++j) {
    double c = 0.0;
    for (int k = 0; k < instance.num_objectives; ++k)
      c += weights[k] * static_cast<double>(instance.objective[k][j]);
    lp.objective[j] = c;
  }
}

Facet make_facet(std::vector<double> normal, double offset) {
  double s = 0.0;
  for (double v : normal) s += v;
  if (s <= 0.0) throw NumericalError("bound set: facet normal does not point upward");
  for (double& v : normal) v = std::max(0.0, v / s);
  return Facet{std::move(normal), offset / s};
}

bool close_points(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Keep only the mutually nondominated extreme points, deduplicated, sorted
// lexicographically by image.
void finish_extremes(LowerBoundSet& lbs) {
  std::vector<ExtremePoint> kept;
  for (const auto& e : lbs.extreme_points) {
    bool dominated = false;
    for (const auto& other : lbs.extreme_points) {
      if (&other == &e) continue;
      bool weak = true;
      bool strict = false;
      for (std::size_t k = 0; k < e.y.size(); ++k) {
        if (other.y[k] > e.y[k] + kVertexDedupTol) weak = false;
        if (other.y[k] < e.y[k] - kVertexDedupTol) strict = true;
      }
      if (weak && strict) {
        dominated = true;
        break;
      }
    }
    if (dominated) continue;
    bool duplicate = false;
    for (const auto& k : kept) duplicate = duplicate || close_points(k.y, e.y, kVertexDedupTol);
    if (!duplicate) kept.push_back(e);
  }
  std::sort(kept.begin(), kept.end(),
            [](const ExtremePoint& a, const ExtremePoint& b) { return a.y < b.y; });
  lbs.extreme_points = std::move(kept);
  // The ideal point is the componentwise minimum over the extreme points;
  // the per-objective LP minima stay as a fallback when none were kept.
  if (!lbs.extreme_points.empty()) {
    for (std::size_t k = 0; k < lbs.ideal.size(); ++k) {
      double best = lbs.extreme_points.front().y[k];
      for (const auto& e : lbs.extreme_points) best = std::min(best, e.y[k]);
      lbs.ideal[k] = best;
    }
  }
}

// Lexicographically minimize objective `first`, then `second` subject to the
// first staying at its minimum.
std::optional<ExtremePoint> lexmin(SimplexSolver& solver, const MoilpInstance& instance, const Subproblem& sub,
                                   int first, int second, double& first_min) {
  LpProblem lp = lp_relaxation(instance, sub);
  std::vector<double> w(instance.num_objectives, 0.0);
  w[first] = 1.0;
  set_objective(lp, instance, w);
  LpResult stage1 = solver.solve(lp);
  if (stage1.status == LpStatus::Infeasible) return std::nullopt;
  if (stage1.status != LpStatus::Optimal) throw NumericalError("lexmin: relaxation must be bounded");
  first_min = stage1.objective_value;

  std::vector<double> pin_row(instance.num_variables);
  for (int j = 0; j < instance.num_variables; ++j)
    pin_row[j] = static_cast<double>(instance.objective[first][j]);
  lp.rows.push_back(std::move(pin_row));
  // Pin at the exact stage-one value: any slack here gets amplified by the
  // slope of the adjacent frontier edge and shifts the endpoint. The stage-one
  // vertex itself satisfies the row to a rounding error, which the solver's
  // feasibility tolerance absorbs.
  lp.rhs.push_back(first_min);
  lp.senses.push_back(RowSense::LessEqual);
  std::fill(w.begin(), w.end(), 0.0);
  w[second] = 1.0;
  set_objective(lp, instance, w);
  LpResult stage2 = solver.solve(lp);
  const LpResult& use = stage2.status == LpStatus::Optimal ? stage2 : stage1;
  return ExtremePoint{image_of(instance, use.x), use.x};
}

}  // namespace

std::vector<std::vector<double>> facet_vertices(const std::vector<Facet>& facets, int p) {
  std::vector<std::vector<double>> vertices;
  const int f = static_cast<int>(facets.size());
  std::vector<int> idx(p);
  // Enumerate p-subsets with a simple odometer over indices.
  for (int i = 0; i < p; ++i) idx[i] = i;
  if (f < p) return vertices;
  while (true) {
    std::vector<const Facet*> sel(p);
    for (int i = 0; i < p; ++i) sel[i] = &facets[idx[i]];
    // Solve the p x p equality system with partial pivoting.
    std::vector<std::vector<double>> m(p, std::vector<double>(p + 1));
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < p; ++j) m[i][j] = sel[i]->normal[j];
      m[i][p] = sel[i]->offset;
    }
    bool singular = false;
    for (int c = 0; c < p && !singular; ++c) {
      int pivot = c;
      for (int r = c + 1; r < p; ++r) {
        if (std::abs(m[r][c]) > std::abs(m[pivot][c])) pivot = r;
      }
      if (std::abs(m[pivot][c]) < 1e-9) {
        singular = true;
        break;
      }
      std::swap(m[c], m[pivot]);
      for (int r = 0; r < p; ++r) {
        if (r == c) continue;
        const double factor = m[r][c] / m[c][c];
        for (int j = c; j <= p; ++j) m[r][j] -= factor * m[c][j];
      }
    }
    if (!singular) {
      std::vector<double> y(p);
      for (int i = 0; i < p; ++i) y[i] = m[i][p] / m[i][i];
      bool inside = true;
      for (const auto& facet : facets) {
        if (dot(facet.normal, y) < facet.offset - kFacetEqualityTol * (1.0 + std::abs(facet.offset))) {
          inside = false;
          break;
        }
      }
      if (inside) {
        bool duplicate = false;
        for (const auto& v : vertices) duplicate = duplicate || close_points(v, y, kVertexDedupTol);
        if (!duplicate) vertices.push_back(std::move(y));
      }
    }
    // Next subset.
    int i = p - 1;
    while (i >= 0 && idx[i] == f - p + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < p; ++j) idx[j] = idx[j - 1] + 1;
  }
  return vertices;
}

LowerBoundSet dichotomic_bound_set(SimplexSolver& solver, const MoilpInstance& instance, const Subproblem& sub) {
  if (instance.num_objectives != 2)
    throw std::invalid_argument("dichotomic search handles exactly two objectives");
  LowerBoundSet out;
  out.ideal.assign(2, 0.0);

  double min0 = 0.0;
  double min1 = 0.0;
  auto left = lexmin(solver, instance, sub, 0, 1, min0);
  if (!left) {
    out.infeasible = true;
    return out;
  }
  auto right = lexmin(solver, instance, sub, 1, 0, min1);
  if (!right) throw NumericalError("dichotomic search: inconsistent feasibility");
  out.ideal = {min0, min1};
  out.facets.push_back(make_facet({1.0, 0.0}, min0));
  out.facets.push_back(make_facet({0.0, 1.0}, min1));
  out.extreme_points.push_back(*left);
  out.extreme_points.push_back(*right);

  LpProblem lp = lp_relaxation(instance, sub);
  std::vector<std::pair<ExtremePoint, ExtremePoint>> stack;
  stack.emplace_back(*left, *right);
  int budget = 8 * instance.num_variables + 64;
  while (!stack.empty()) {
    if (budget-- <= 0) {
      out.truncated = true;
      break;
    }
    auto [seg_left, seg_right] = std::move(stack.back());
    stack.pop_back();
    const std::vector<double> lam = {seg_left.y[1] - seg_right.y[1], seg_right.y[0] - seg_left.y[0]};
    if (lam[0] <= kVertexDedupTol || lam[1] <= kVertexDedupTol) continue;
    set_objective(lp, instance, lam);
    LpResult r = solver.solve(lp);
    if (r.status != LpStatus::Optimal) throw NumericalError("dichotomic search: weighted stage failed");
    const double base = std::min(dot(lam, seg_left.y), dot(lam, seg_right.y));
    if (r.objective_value < base - 1e-7 * (1.0 + std::abs(base))) {
      ExtremePoint mid{image_of(instance, r.x), r.x};
      out.extreme_points.push_back(mid);
      stack.emplace_back(seg_left, mid);
      stack.emplace_back(std::move(mid), std::move(seg_right));
    } else {
      out.facets.push_back(make_facet(lam, r.objective_value));
    }
  }
  finish_extremes(out);
  return out;
}

namespace {

struct CandidateVertex {
  std::vector<double> y;
  enum State { Unverified, Attainable, Stalled } state = Unverified;
  std::vector<double> x;    // preimage when attainable
  std::vector<double> img;  // exact image of that preimage
};

void add_vertex_candidate(std::vector<CandidateVertex>& vertices, std::vector<double> y) {
  for (const auto& v : vertices) {
    if (close_points(v.y, y, kVertexDedupTol)) return;
  }
  vertices.push_back(CandidateVertex{std::move(y), CandidateVertex::Unverified, {}, {}});
}

}  // namespace

LowerBoundSet outer_approximation_bound_set(SimplexSolver& solver, const MoilpInstance& instance,
                                            const Subproblem& sub) {
  const int p = instance.num_objectives;
  if (p != 2 && p != 3) throw std::invalid_argument("outer approximation handles two or three objectives");
  LowerBoundSet out;
  out.ideal.assign(p, 0.0);

  LpProblem weighted = lp_relaxation(instance, sub);
  for (int k = 0; k < p; ++k) {
    std::vector<double> w(p, 0.0);
    w[k] = 1.0;
    set_objective(weighted, instance, w);
    LpResult r = solver.solve(weighted);
    if (r.status == LpStatus::Infeasible) {
      out.infeasible = true;
      return out;
    }
    if (r.status != LpStatus::Optimal) throw NumericalError("outer approximation: unbounded relaxation");
    out.ideal[k] = r.objective_value;
    std::vector<double> normal(p, 0.0);
    normal[k] = 1.0;
    out.facets.push_back(Facet{std::move(normal), r.objective_value});
  }
  {
    std::vector<double> w(p, 1.0 / p);
    set_objective(weighted, instance, w);
    LpResult r = solver.solve(weighted);
    if (r.status != LpStatus::Optimal) throw NumericalError("outer approximation: equal-weight stage failed");
    out.facets.push_back(Facet{std::move(w), r.objective_value});
  }

  std::vector<CandidateVertex> vertices;
  for (auto& y : facet_vertices(out.facets, p)) add_vertex_candidate(vertices, std::move(y));

  // The attainability check: minimize t with Cx - t <= v. At the optimum the
  // duals of those p rows are the weights of a supporting facet through the
  // attainable point closest to v along the diagonal.
  LpProblem tlp = lp_relaxation(instance, sub);
  const int n = instance.num_variables;
  double reach = 1.0;
  for (int k = 0; k < p; ++k) {
    double row_reach = 0.0;
    for (int j = 0; j < n; ++j) {
      const double c = static_cast<double>(instance.objective[k][j]);
      row_reach += std::max(std::abs(c * static_cast<double>(sub.lower[j])),
                            std::abs(c * static_cast<double>(sub.upper[j])));
    }
    reach = std::max(reach, row_reach);
  }
  for (auto& row : tlp.rows) row.push_back(0.0);
  tlp.objective.assign(n + 1, 0.0);
  tlp.objective[n] = 1.0;
  tlp.lower.push_back(0.0);  // reset per vertex
  tlp.upper.push_back(0.0);
  const int base_rows = tlp.num_rows();
  for (int k = 0; k < p; ++k) {
    std::vector<double> row(n + 1, 0.0);
    for (int j = 0; j < n; ++j) row[j] = static_cast<double>(instance.objective[k][j]);
    row[n] = -1.0;
    tlp.rows.push_back(std::move(row));
    tlp.rhs.push_back(0.0);
    tlp.senses.push_back(RowSense::LessEqual);
  }

  const int facet_budget = 10 * (1 << p) * n;
  int checks = 0;
  while (true) {
    CandidateVertex* target = nullptr;
    for (auto& v : vertices) {
      if (v.state == CandidateVertex::Unverified) {
        target = &v;
        break;
      }
    }
    if (target == nullptr) break;
    if (static_cast<int>(out.facets.size()) > facet_budget || ++checks > 4 * facet_budget) {
      out.truncated = true;
      break;
    }

    double vinf = 0.0;
    for (int k = 0; k < p; ++k) {
      tlp.rhs[base_rows + k] = target->y[k];
      vinf = std::max(vinf, std::abs(target->y[k]));
    }
    tlp.lower[n] = -(reach + vinf + 1.0);
    tlp.upper[n] = reach + vinf + 1.0;
    LpResult r = solver.solve(tlp);
    if (r.status != LpStatus::Optimal) throw NumericalError("outer approximation: attainability check failed");

    if (r.objective_value <= 1e-6 * (1.0 + vinf)) {
      target->state = CandidateVertex::Attainable;
      target->x.assign(r.x.begin(), r.x.begin() + n);
      target->img = image_of(instance, target->x);
      continue;
    }

    std::vector<double> lambda(p, 0.0);
    double sum = 0.0;
    for (int k = 0; k < p; ++k) {
      lambda[k] = std::max(0.0, -r.row_duals[base_rows + k]);
      sum += lambda[k];
    }
    if (sum < 1e-9) {
      target->state = CandidateVertex::Stalled;
      continue;
    }
    for (double& l : lambda) l /= sum;
    set_objective(weighted, instance, lambda);
    LpResult support = solver.solve(weighted);
    if (support.status != LpStatus::Optimal)
      throw NumericalError("outer approximation: support stage failed");
    const double offset = support.objective_value;
    if (dot(lambda, target->y) >= offset - 1e-9 * (1.0 + std::abs(offset))) {
      // The new support does not actually cut this vertex off; accept the
      // current description rather than loop on arithmetic noise.
      target->state = CandidateVertex::Stalled;
      continue;
    }

    Facet cut{lambda, offset};
    // Drop vertices outside the new halfspace, then extend with the vertices
    // spawned by the cut: every vertex of the tightened polyhedron either
    // survived or lies on the new facet.
    std::vector<CandidateVertex> kept;
    for (auto& v : vertices) {
      if (dot(cut.normal, v.y) >= cut.offset - kFacetEqualityTol * (1.0 + std::abs(cut.offset)))
        kept.push_back(std::move(v));
    }
    vertices = std::move(kept);
    const int f = static_cast<int>(out.facets.size());
    std::vector<Facet> with_cut = out.facets;
    with_cut.push_back(cut);
    if (p == 2) {
      for (int a = 0; a < f; ++a) {
        std::vector<Facet> pair = {out.facets[a], cut};
        for (auto& y : facet_vertices(pair, p)) {
          bool inside = true;
          for (const auto& facet : with_cut) {
            if (dot(facet.normal, y) < facet.offset - kFacetEqualityTol * (1.0 + std::abs(facet.offset))) {
              inside = false;
              break;
            }
          }
          if (inside) add_vertex_candidate(vertices, std::move(y));
        }
      }
    } else {
      for (int a = 0; a < f; ++a) {
        for (int b = a + 1; b < f; ++b) {
          std::vector<Facet> triple = {out.facets[a], out.facets[b], cut};
          for (auto& y : facet_vertices(triple, p)) {
            bool inside = true;
            for (const auto& facet : with_cut) {
              if (dot(facet.normal, y) <
                  facet.offset - kFacetEqualityTol * (1.0 + std::abs(facet.offset))) {
                inside = false;
                break;
              }
            }
            if (inside) add_vertex_candidate(vertices, std::move(y));
          }
        }
      }
    }
    out.facets.push_back(std::move(cut));
  }

  for (auto& v : vertices) {
    if (v.state == CandidateVertex::Attainable)
      out.extreme_points.push_back(ExtremePoint{std::move(v.img), std::move(v.x)});
    else if (v.state == CandidateVertex::Stalled)
      out.truncated = true;  // description may be incomplete; stay conservative
  }
  finish_extremes(out);
  return out;
}

LowerBoundSet compute_lower_bound_set(SimplexSolver& solver, const MoilpInstance& instance,
                                      const Subproblem& sub) {
  if (instance.num_objectives == 2) return dichotomic_bound_set(solver, instance, sub);
  return outer_approximation_bound_set(solver, instance, sub);
}

std::vector<SolutionPoint> integer_feasible_extremes(const MoilpInstance& instance, const LowerBoundSet& lbs) {
  std::vector<SolutionPoint> found;
  for (const auto& e : lbs.extreme_points) {
    if (e.x.empty()) continue;
    std::vector<std::int64_t> xi(e.x.size());
    bool integral = true;
    for (std::size_t j = 0; j < e.x.size(); ++j) {
      xi[j] = std::llround(e.x[j]);
      if (std::abs(e.x[j] - static_cast<double>(xi[j])) > kIntegralityTol) {
        integral = false;
        break;
      }
    }
    if (!integral || !instance.is_feasible(xi)) continue;
    std::vector<std::int64_t> y = instance.image(xi);
    std::vector<std::int64_t> display = instance.display_image(xi);
    bool seen = false;
    for (const auto& s : found) seen = seen || s.y == y;
    if (!seen) found.push_back(SolutionPoint{std::move(xi), std::move(y), std::move(display)});
  }
  return found;
}

}  // namespace mobb
