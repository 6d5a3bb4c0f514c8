// SPDX-License-Identifier: Apache-2.0
#include "mobb/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "mobb/errors.hpp"

namespace mobb {

namespace {

constexpr std::uint64_t kEnumerationBudget = std::uint64_t{1} << 25;

bool weakly_dominates(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

std::uint64_t checked_enumeration_size(const Subproblem& sub) {
  const std::uint64_t total = enumeration_size(sub);
  if (total > kEnumerationBudget)
    throw BudgetExceededError("enumeration: " + std::to_string(total) + " points exceed the 2^25 budget");
  return total;
}

// Walks the integer points of the bound box in odometer order (last variable
// fastest), keeping the constraint left-hand sides and the image incrementally
// up to date so each step costs only the digits that changed.
class BoxWalker {
 public:
  BoxWalker(const MoilpInstance& instance, const Subproblem& sub)
      : instance_(instance), sub_(sub), x_(instance.num_variables), lhs_(instance.num_constraints()),
        y_(instance.num_objectives) {}

  void seek(std::uint64_t index) {
    const int n = instance_.num_variables;
    for (int i = n - 1; i >= 0; --i) {
      const std::uint64_t radix =
          static_cast<std::uint64_t>(sub_.upper[i] - sub_.lower[i]) + 1;
      x_[i] = sub_.lower[i] + static_cast<std::int64_t>(index % radix);
      index /= radix;
    }
    for (int r = 0; r < instance_.num_constraints(); ++r) {
      lhs_[r] = Rational(0);
      for (int i = 0; i < n; ++i) lhs_[r] += instance_.constraint[r][i] * Rational(x_[i]);
    }
    for (int k = 0; k < instance_.num_objectives; ++k) {
      y_[k] = 0;
      for (int i = 0; i < n; ++i) y_[k] += instance_.objective[k][i] * x_[i];
    }
  }

  void advance() {
    int pos = instance_.num_variables - 1;
    while (pos >= 0) {
      if (x_[pos] < sub_.upper[pos]) {
        shift(pos, 1);
        return;
      }
      shift(pos, sub_.lower[pos] - x_[pos]);
      --pos;
    }
  }

  [[nodiscard]] bool feasible() const {
    for (int r = 0; r < instance_.num_constraints(); ++r) {
      if (instance_.senses[r] == RowSense::LessEqual ? lhs_[r] > instance_.rhs[r]
                                                     : lhs_[r] != instance_.rhs[r])
        return false;
    }
    return true;
  }

  [[nodiscard]] const std::vector<std::int64_t>& image() const { return y_; }

 private:
  void shift(int pos, std::int64_t delta) {
    if (delta == 0) return;
    x_[pos] += delta;
    for (int r = 0; r < instance_.num_constraints(); ++r)
      lhs_[r] += instance_.constraint[r][pos] * Rational(delta);
    for (int k = 0; k < instance_.num_objectives; ++k) y_[k] += instance_.objective[k][pos] * delta;
  }

  const MoilpInstance& instance_;
  const Subproblem& sub_;
  std::vector<std::int64_t> x_;
  std::vector<Rational> lhs_;
  std::vector<std::int64_t> y_;
};

std::vector<std::vector<std::int64_t>> front_of_range(const MoilpInstance& instance, const Subproblem& sub,
                                                      std::uint64_t begin, std::uint64_t end) {
  std::vector<std::vector<std::int64_t>> archive;
  BoxWalker walker(instance, sub);
  walker.seek(begin);
  for (std::uint64_t t = begin; t < end; ++t) {
    if (walker.feasible()) archive_insert(archive, walker.image());
    walker.advance();
  }
  return archive;
}

ParetoFront finish_front(std::vector<std::vector<std::int64_t>> archive) {
  std::sort(archive.begin(), archive.end());
  ParetoFront front;
  front.images = std::move(archive);
  return front;
}

}  // namespace

std::uint64_t enumeration_size(const Subproblem& sub) {
  __int128 total = 1;
  for (std::size_t i = 0; i < sub.lower.size(); ++i) {
    if (sub.upper[i] < sub.lower[i]) return 0;
    total *= static_cast<__int128>(sub.upper[i] - sub.lower[i]) + 1;
    if (total > static_cast<__int128>(UINT64_MAX)) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(total);
}

void archive_insert(std::vector<std::vector<std::int64_t>>& archive, const std::vector<std::int64_t>& y) {
  for (const auto& a : archive) {
    if (weakly_dominates(a, y)) return;
  }
  std::erase_if(archive, [&](const std::vector<std::int64_t>& a) { return weakly_dominates(y, a); });
  archive.push_back(y);
}

ParetoFront brute_force_front_serial(const MoilpInstance& instance, const Subproblem& sub) {
  const std::uint64_t total = checked_enumeration_size(sub);
  return finish_front(front_of_range(instance, sub, 0, total));
}

ParetoFront brute_force_front_serial(const MoilpInstance& instance) {
  return brute_force_front_serial(instance, root_subproblem(instance));
}

ParetoFront brute_force_front(const MoilpInstance& instance, const Subproblem& sub) {
  const std::uint64_t total = checked_enumeration_size(sub);
  if (total == 0) return ParetoFront{};
  const int chunks = static_cast<int>(std::min<std::uint64_t>(total, 64));
  const std::uint64_t chunk_size = (total + chunks - 1) / chunks;
  std::vector<std::vector<std::vector<std::int64_t>>> partial(chunks);
#pragma omp parallel for schedule(dynamic)
  for (int c = 0; c < chunks; ++c) {
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * chunk_size;
    const std::uint64_t end = std::min(total, begin + chunk_size);
    if (begin < end) partial[c] = front_of_range(instance, sub, begin, end);
  }
  std::vector<std::vector<std::int64_t>> archive;
  for (const auto& part : partial) {
    for (const auto& y : part) archive_insert(archive, y);
  }
  return finish_front(std::move(archive));
}

ParetoFront brute_force_front(const MoilpInstance& instance) {
  return brute_force_front(instance, root_subproblem(instance));
}

std::vector<std::vector<std::int64_t>> enumerate_feasible_images(const MoilpInstance& instance,
                                                                 const Subproblem& sub) {
  const std::uint64_t total = checked_enumeration_size(sub);
  std::vector<std::vector<std::int64_t>> images;
  BoxWalker walker(instance, sub);
  walker.seek(0);
  for (std::uint64_t t = 0; t < total; ++t) {
    if (walker.feasible()) images.push_back(walker.image());
    walker.advance();
  }
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images;
}

namespace {

// Sweep area of the 2D region dominated by `points` inside the box below
// (ra, rb). Points are filtered to the nondominated subset first.
double dominated_area(std::vector<std::vector<std::int64_t>> points, double ra, double rb) {
  std::vector<std::vector<std::int64_t>> front;
  for (const auto& y : points) {
    if (static_cast<double>(y[0]) <= ra && static_cast<double>(y[1]) <= rb) archive_insert(front, y);
  }
  std::sort(front.begin(), front.end());
  double area = 0.0;
  double prev_b = rb;
  for (const auto& y : front) {
    area += (ra - static_cast<double>(y[0])) * (prev_b - static_cast<double>(y[1]));
    prev_b = static_cast<double>(y[1]);
  }
  return area;
}

}  // namespace

double hypervolume(const std::vector<std::vector<std::int64_t>>& points,
                   const std::vector<std::int64_t>& reference) {
  const std::size_t p = reference.size();
  if (p != 2 && p != 3) throw std::invalid_argument("hypervolume: only 2 or 3 dimensions");
  std::vector<std::vector<std::int64_t>> inside;
  for (const auto& y : points) {
    if (y.size() != p) throw std::invalid_argument("hypervolume: point dimension mismatch");
    if (!weakly_dominates(y, reference))
      throw std::invalid_argument("hypervolume: point exceeds the reference");
    inside.push_back(y);
  }
  if (inside.empty()) return 0.0;
  if (p == 2)
    return dominated_area(inside, static_cast<double>(reference[0]), static_cast<double>(reference[1]));

  // Slice along the third coordinate: between consecutive distinct levels the
  // dominated cross-section is constant.
  std::vector<std::int64_t> levels;
  for (const auto& y : inside) levels.push_back(y[2]);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  double volume = 0.0;
  for (std::size_t t = 0; t < levels.size(); ++t) {
    const double height = (t + 1 < levels.size() ? static_cast<double>(levels[t + 1])
                                                 : static_cast<double>(reference[2])) -
                          static_cast<double>(levels[t]);
    if (height <= 0.0) continue;
    std::vector<std::vector<std::int64_t>> active;
    for (const auto& y : inside) {
      if (y[2] <= levels[t]) active.push_back({y[0], y[1]});
    }
    volume += dominated_area(std::move(active), static_cast<double>(reference[0]),
                             static_cast<double>(reference[1])) *
              height;
  }
  return volume;
}

}  // namespace mobb
