#pragma once

#include <span>

namespace nils {

struct Quartiles {
    double q1 = 0;
    double median = 0;
    double q3 = 0;
};

/// Linear-interpolation quantile (position p*(n-1) in sorted order).
/// Throws std::invalid_argument for empty input or p outside [0, 1].
double quantile(std::span<const double> values, double p);

/// First quartile, median and third quartile with linear interpolation;
/// an even-length median is the mean of the two middle values.
Quartiles median_and_quartiles(std::span<const double> values);

double mean(std::span<const double> values);

/// Sample standard deviation (n - 1 denominator); 0 for a single value.
double sample_stddev(std::span<const double> values);

struct MannWhitney {
    /// U for sample a: pairs with a > b, plus one half per tie.
    double u = 0;
    /// Two-sided p-value.
    double p_value = 1;
    bool exact = false;
};

/// Mann-Whitney U test with midranks for ties. The p-value is exact (full
/// enumeration of rank assignments) when both samples have fewer than 8
/// values, otherwise the tie-corrected normal approximation with continuity
/// correction. Throws std::invalid_argument on an empty sample.
MannWhitney mann_whitney_u(std::span<const double> a, std::span<const double> b);

} // namespace nils
