#pragma once

#include <vector>

namespace drx {

// Mann-Whitney AUC with midrank tie handling (a tied positive/negative pair
// contributes 1/2). Throws if either class is missing.
double auc(const std::vector<double>& scores, const std::vector<int>& labels);

// Area under the precision-recall curve: descending-score sweep, step
// interpolation, tied scores grouped at one threshold. Throws without
// positives.
double aupr(const std::vector<double>& scores, const std::vector<int>& labels);

struct ThresholdMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double specificity = 0.0;
  long tp = 0, fp = 0, tn = 0, fn = 0;
};

// Confusion metrics predicting positive at score >= tau. Every 0/0 resolves
// to 0.
ThresholdMetrics threshold_metrics(const std::vector<double>& scores,
                                   const std::vector<int>& labels,
                                   double tau = 0.5);

}  // namespace drx
