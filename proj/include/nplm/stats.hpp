#ifndef NPLM_STATS_HPP
#define NPLM_STATS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <utility>
#include <stdexcept>
#include <string>
#include <vector>

#include "nplm/rng.hpp"

namespace nplm {

struct MetricSample {
  std::string subject_id;
  double value = 0.0;
};

// Mann-Whitney AUC; ties contribute 1/2. O(n log n) via rank sums.
inline double auc(const std::vector<double>& scores, const std::vector<int>& labels) {
  if (scores.size() != labels.size())
    throw std::invalid_argument("auc: size mismatch");
  std::size_t n_pos = 0, n_neg = 0;
  for (int l : labels) (l != 0 ? n_pos : n_neg)++;
  if (n_pos == 0 || n_neg == 0)
    throw std::invalid_argument("auc: both classes required");

  std::vector<std::size_t> order(scores.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

  // Rank-sum with midranks for ties.
  double pos_rank_sum = 0.0;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j < order.size() && scores[order[j]] == scores[order[i]]) ++j;
    const double midrank = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j));
    for (std::size_t k = i; k < j; ++k)
      if (labels[order[k]] != 0) pos_rank_sum += midrank;
    i = j;
  }
  const double np = static_cast<double>(n_pos), nn = static_cast<double>(n_neg);
  return (pos_rank_sum - np * (np + 1.0) / 2.0) / (np * nn);
}

namespace detail {

// Regularized incomplete beta via continued fraction (Lentz).
inline double betacf(double a, double b, double x) {
  const double fpmin = 1e-300;
  const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0, d = 1.0 - qab * x / qap;
  if (std::fabs(d) < fpmin) d = fpmin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 300; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < fpmin) d = fpmin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < fpmin) d = fpmin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-14) break;
  }
  return h;
}

inline double betai(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double lnb = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                     a * std::log(x) + b * std::log(1.0 - x);
  const double bt = std::exp(lnb);
  if (x < (a + 1.0) / (a + b + 2.0)) return bt * betacf(a, b, x) / a;
  return 1.0 - bt * betacf(b, a, 1.0 - x) / b;
}

}  // namespace detail

// Two-sided p-value for a Student t statistic with dof degrees of freedom.
inline double t_two_sided_p(double t, double dof) {
  const double x = dof / (dof + t * t);
  return detail::betai(dof / 2.0, 0.5, x);
}

struct PairedTResult {
  double t = 0.0;
  double p = 1.0;
};

// Paired t-test on per-subject values. Zero-variance differences use the
// documented convention: p = 0 when the mean difference is nonzero, 1 otherwise.
inline PairedTResult paired_t_test(const std::vector<double>& a,
                                   const std::vector<double>& b) {
  if (a.size() != b.size() || a.size() < 3)
    throw std::invalid_argument("paired_t_test: need equal lengths >= 3");
  const std::size_t n = a.size();
  double mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) mean += a[i] - b[i];
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i] - mean;
    ss += d * d;
  }
  const double var = ss / static_cast<double>(n - 1);
  if (var == 0.0) {
    if (mean == 0.0) return {0.0, 1.0};
    return {mean > 0.0 ? std::numeric_limits<double>::infinity()
                       : -std::numeric_limits<double>::infinity(),
            0.0};
  }
  const double t = mean / std::sqrt(var / static_cast<double>(n));
  return {t, t_two_sided_p(t, static_cast<double>(n - 1))};
}

// Percentile bootstrap CI resampling subjects (clusters) with replacement.
// `statistic` maps a resampled set of per-subject values to the metric.
inline std::pair<double, double> bootstrap_ci(
    const std::vector<MetricSample>& samples,
    const std::function<double(const std::vector<double>&)>& statistic,
    int iterations = 1000, std::uint64_t seed = 0) {
  std::map<std::string, std::vector<double>> by_subject;
  for (const auto& s : samples) by_subject[s.subject_id].push_back(s.value);
  if (by_subject.size() < 2)
    throw std::invalid_argument("bootstrap_ci: need >= 2 distinct subjects");

  std::vector<const std::vector<double>*> subjects;
  subjects.reserve(by_subject.size());
  for (const auto& [id, vals] : by_subject) subjects.push_back(&vals);

  std::vector<double> reps;
  reps.reserve(iterations);
  Rng root(Rng::mix(seed) ^ 0x626f6f74ULL);
  for (int it = 0; it < iterations; ++it) {
    Rng r = root.child(static_cast<std::uint64_t>(it));
    std::vector<double> pooled;
    for (std::size_t k = 0; k < subjects.size(); ++k) {
      const auto* subj = subjects[r.below(subjects.size())];
      pooled.insert(pooled.end(), subj->begin(), subj->end());
    }
    reps.push_back(statistic(pooled));
  }
  std::sort(reps.begin(), reps.end());
  auto pct = [&](double q) {
    const double pos = q * (reps.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, reps.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return reps[lo] * (1.0 - frac) + reps[hi] * frac;
  };
  return {pct(0.025), pct(0.975)};
}

// Convenience: CI of the mean of per-subject means (the equal-participant
// weighting used throughout the reports).
inline std::pair<double, double> bootstrap_ci_subject_mean(
    const std::vector<MetricSample>& samples, int iterations = 1000,
    std::uint64_t seed = 0) {
  std::map<std::string, std::pair<double, std::size_t>> agg;
  for (const auto& s : samples) {
    auto& a = agg[s.subject_id];
    a.first += s.value;
    a.second += 1;
  }
  std::vector<double> means;
  for (const auto& [id, a] : agg) means.push_back(a.first / a.second);
  if (means.size() < 2)
    throw std::invalid_argument("bootstrap_ci: need >= 2 distinct subjects");

  std::vector<double> reps;
  reps.reserve(iterations);
  Rng root(Rng::mix(seed) ^ 0x626f6f74ULL);
  for (int it = 0; it < iterations; ++it) {
    Rng r = root.child(static_cast<std::uint64_t>(it));
    double sum = 0.0;
    for (std::size_t k = 0; k < means.size(); ++k) sum += means[r.below(means.size())];
    reps.push_back(sum / static_cast<double>(means.size()));
  }
  std::sort(reps.begin(), reps.end());
  auto pct = [&](double q) {
    const double pos = q * (reps.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, reps.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return reps[lo] * (1.0 - frac) + reps[hi] * frac;
  };
  return {pct(0.025), pct(0.975)};
}

inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("pearson: need equal lengths >= 2");
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace nplm

#endif  // NPLM_STATS_HPP
