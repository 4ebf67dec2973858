#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "swarmclust/types.hpp"

namespace swarmclust {

struct AnovaTable {
    Scalar ss_columns = 0.0;
    Scalar ss_error = 0.0;
    Scalar ss_total = 0.0;
    std::int64_t df_columns = 0;
    std::int64_t df_error = 0;
    std::int64_t df_total = 0;
    Scalar ms_columns = 0.0;
    Scalar ms_error = 0.0;
    Scalar f = 0.0;          // +inf when ms_error is 0 with nonzero ms_columns
    Scalar prob_gt_f = 1.0;
    bool zero_within_variance = false; // flags the degenerate F = inf case
};

// One-way variance decomposition across groups (unequal sizes allowed):
// between-group and within-group sums of squares, their mean squares, the
// F statistic, and the upper tail probability. Needs >= 2 groups, every
// group nonempty, and more samples than groups.
AnovaTable anova_oneway(const std::vector<std::vector<Scalar>>& groups);

// Same table from precomputed sums of squares and degrees of freedom.
AnovaTable anova_from_sums(Scalar ss_columns, std::int64_t df_columns,
                           Scalar ss_error, std::int64_t df_error);

// CDF of the F(d1, d2) distribution via the regularized incomplete beta
// function; absolute error below 1e-10. Throws on negative x.
Scalar f_cdf(Scalar x, std::int64_t d1, std::int64_t d2);

// I_x(a, b), evaluated with the symmetric continued-fraction expansion.
// https://en.wikipedia.org/wiki/Beta_function#Incomplete_beta_function
Scalar regularized_incomplete_beta(Scalar x, Scalar a, Scalar b);

struct BoxplotStats {
    Scalar min = 0.0; // whisker ends: extreme values within 1.5 IQR of the box
    Scalar q1 = 0.0;
    Scalar median = 0.0;
    Scalar q3 = 0.0;
    Scalar max = 0.0;
    std::vector<Scalar> outliers; // ascending
};

// Quartiles by linear interpolation between order statistics; outliers are
// the values beyond 1.5 IQR whiskers.
BoxplotStats boxplot_stats(std::vector<Scalar> samples);

// Six-column layout: Source, SS, df, MS, F, Prob>F over rows
// Columns / Error / Total.
void write_anova_csv(const AnovaTable& t, std::ostream& out);

} // namespace swarmclust
