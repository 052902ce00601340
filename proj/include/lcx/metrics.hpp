#pragma once

#include <span>
#include <vector>

namespace lcx {

// Rank-based ROC AUC (Mann-Whitney U with midranks for ties).
// Throws DegenerateDataError when only one class is present and
// ShapeError when lengths differ.
double auc(std::span<const double> scores, std::span<const int> labels);

// Midranks (1-based) of the values.
std::vector<double> midranks(std::span<const double> values);

// Spearman rank correlation with midranks; 0 when either side is constant.
double spearman(std::span<const double> a, std::span<const double> b);

// Median of a non-empty sample (mean of the middle pair for even sizes).
double median(std::vector<double> values);

}  // namespace lcx
