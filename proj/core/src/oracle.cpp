// Copyright 2026 The expentropy Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "expentropy/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

#include "checks.hpp"

namespace expentropy::oracle {

namespace {

// Neumaier-compensated sum; 2^20 identical terms otherwise drift by ~1e-10.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace

DoublingResult simulate_doubling(int n) {
  if (n < 0) {
    throw DomainError("number of doublings must be >= 0, got " +
                      std::to_string(n));
  }
  if (n > kMaxDoublings) {
    throw ResourceError("enumeration is bounded at n <= " +
                        std::to_string(kMaxDoublings) + " (2^" +
                        std::to_string(kMaxDoublings) + " partitions), got n = " +
                        std::to_string(n));
  }

  std::vector<double> partitions{1.0};
  for (int step = 0; step < n; ++step) {
    std::vector<double> next;
    next.reserve(partitions.size() * 2);
    for (double p : partitions) {
      next.push_back(p / 2.0);
      next.push_back(p / 2.0);
    }
    partitions = std::move(next);
  }

  const double first = partitions.front();
  if (!std::all_of(partitions.begin(), partitions.end(),
                   [first](double p) { return p == first; })) {
    throw NumericalError("partitions do not carry equal probability");
  }

  CompensatedSum entropy;
  for (double p : partitions) entropy.add(-p * std::log(p));

  DoublingResult out;
  out.state.n = n;
  out.state.partition_count = partitions.size();
  out.state.cumulative_probability = first;
  out.entropy = entropy.value();
  return out;
}

double simulate_halving(std::uint64_t s0, int n) {
  if (n < 0) {
    throw DomainError("number of halvings must be >= 0, got " +
                      std::to_string(n));
  }
  if (n >= 64 || (std::uint64_t{1} << n) > s0) {
    throw DomainError("2^" + std::to_string(n) + " exceeds s0 = " +
                      std::to_string(s0) + "; p(x0|s_n) <= 1 would be violated");
  }
  const std::uint64_t factor = std::uint64_t{1} << n;
  if (s0 % factor != 0) {
    return std::ldexp(1.0, n) / static_cast<double>(s0);
  }
  if (s0 > kMaxEnumeratedOutcomes) {
    throw ResourceError("enumeration is bounded at s0 <= " +
                        std::to_string(kMaxEnumeratedOutcomes) + ", got " +
                        std::to_string(s0));
  }

  // Outcomes 1..s0; each halving keeps one of the two equal halves. Which
  // half does not matter by symmetry.
  std::vector<std::uint32_t> outcomes(s0);
  std::iota(outcomes.begin(), outcomes.end(), std::uint32_t{1});
  for (int step = 0; step < n; ++step) {
    outcomes.resize(outcomes.size() / 2);
  }
  return 1.0 / static_cast<double>(outcomes.size());
}

void QuadratureSpec::validate() const {
  if (!(relative_tolerance > 0.0 && relative_tolerance <= 1e-2)) {
    throw ValidationError("relative_tolerance must be in (0, 1e-2], got " +
                          detail::describe(relative_tolerance));
  }
  if (!(truncation_threshold > 0.0 && truncation_threshold <= 1e-6)) {
    throw ValidationError("truncation_threshold must be in (0, 1e-6], got " +
                          detail::describe(truncation_threshold));
  }
}

SimpsonResult adaptive_simpson(const std::function<double(double)>& f,
                               double a, double b, double abs_tolerance,
                               std::size_t max_subintervals) {
  struct Segment {
    double a, b, fa, fm, fb, whole, tolerance;
    int depth;
  };
  constexpr int kMaxDepth = 60;
  const auto simpson = [](double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  };

  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  std::vector<Segment> stack{
      {a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), abs_tolerance, 0}};

  SimpsonResult out;
  CompensatedSum total;
  while (!stack.empty()) {
    const Segment s = stack.back();
    stack.pop_back();
    if (++out.subintervals > max_subintervals) {
      std::ostringstream os;
      os << "adaptive Simpson exceeded " << max_subintervals
         << " subintervals on [" << a << ", " << b << "] (tolerance "
         << abs_tolerance << ", stuck near [" << s.a << ", " << s.b << "])";
      throw NumericalError(os.str());
    }
    const double m = 0.5 * (s.a + s.b);
    const double flm = f(0.5 * (s.a + m));
    const double frm = f(0.5 * (m + s.b));
    const double left = simpson(s.a, m, s.fa, flm, s.fm);
    const double right = simpson(m, s.b, s.fm, frm, s.fb);
    const double delta = left + right - s.whole;
    if (s.depth >= kMaxDepth || std::abs(delta) <= 15.0 * s.tolerance) {
      total.add(left + right + delta / 15.0);
      continue;
    }
    const double half_tol = 0.5 * s.tolerance;
    stack.push_back({s.a, m, s.fa, flm, s.fm, left, half_tol, s.depth + 1});
    stack.push_back({m, s.b, s.fm, frm, s.fb, right, half_tol, s.depth + 1});
  }
  out.value = total.value();
  return out;
}

namespace {

// Smallest T at which both tails of A exp(-c T) drop below threshold.
double component_cutoff(double a, double c, double threshold) {
  double t = std::max(0.0, std::log(a / (c * threshold)) / c);
  while (a * std::exp(-c * t) * (t / c + 1.0 / (c * c)) > threshold) {
    t += 1.0 / c;
  }
  return t;
}

}  // namespace

MrtQuadrature mrt_quadrature(const MultiExpModel& model,
                             const QuadratureSpec& spec) {
  spec.validate();
  const auto comps = model.components();

  const auto density = [comps](double t) {
    double p = 0.0;
    for (const auto& [a, c] : comps) p += a * std::exp(-c * t);
    return p;
  };
  const auto weighted = [&density](double t) { return t * density(t); };

  MrtQuadrature out;
  for (const auto& [a, c] : comps) {
    out.cutoff = std::max(out.cutoff,
                          component_cutoff(a, c, spec.truncation_threshold));
  }

  // Panels [0, 1/c_max], then doubling out to the cutoff, so every decay
  // scale gets its own starting resolution.
  std::vector<double> edges{0.0};
  for (double edge = 1.0 / comps.front().rate; edge < out.cutoff; edge *= 2.0) {
    edges.push_back(edge);
  }
  edges.push_back(out.cutoff);

  // Coarse Simpson estimates set the absolute tolerance scale.
  double coarse0 = 0.0;
  double coarse1 = 0.0;
  for (std::size_t i = 1; i < edges.size(); ++i) {
    const double lo = edges[i - 1];
    const double hi = edges[i];
    const double mid = 0.5 * (lo + hi);
    coarse0 += (hi - lo) / 6.0 * (density(lo) + 4.0 * density(mid) + density(hi));
    coarse1 += (hi - lo) / 6.0 * (weighted(lo) + 4.0 * weighted(mid) + weighted(hi));
  }
  const double panels = static_cast<double>(edges.size() - 1);
  const double tol0 = spec.relative_tolerance * 0.1 * coarse0 / panels;
  const double tol1 = spec.relative_tolerance * 0.1 * coarse1 / panels;

  CompensatedSum zeroth;
  CompensatedSum first;
  for (std::size_t i = 1; i < edges.size(); ++i) {
    const std::size_t left = kMaxSubintervals - std::min(kMaxSubintervals, out.subintervals);
    const auto r0 = adaptive_simpson(density, edges[i - 1], edges[i], tol0, left);
    out.subintervals += r0.subintervals;
    const auto r1 = adaptive_simpson(weighted, edges[i - 1], edges[i], tol1,
                                     kMaxSubintervals - std::min(kMaxSubintervals, out.subintervals));
    out.subintervals += r1.subintervals;
    zeroth.add(r0.value);
    first.add(r1.value);
  }

  const double cut = out.cutoff;
  for (const auto& [a, c] : comps) {
    const double tail = a * std::exp(-c * cut);
    zeroth.add(tail / c);
    first.add(tail * (cut / c + 1.0 / (c * c)));
  }

  out.zeroth_moment = zeroth.value();
  out.first_moment = first.value();
  out.mrt = out.first_moment / out.zeroth_moment;
  return out;
}

}  // namespace expentropy::oracle
