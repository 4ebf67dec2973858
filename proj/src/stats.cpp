#include "swarmclust/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace swarmclust {

namespace {

Scalar log_beta(Scalar a, Scalar b) { return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b); }

// Continued fraction for the incomplete beta function, modified Lentz scheme.
Scalar beta_continued_fraction(Scalar x, Scalar a, Scalar b) {
    constexpr Scalar tiny = 1e-300;
    constexpr Scalar eps = 1e-16;
    constexpr int max_terms = 500;

    const Scalar qab = a + b;
    const Scalar qap = a + 1.0;
    const Scalar qam = a - 1.0;
    Scalar c = 1.0;
    Scalar d = 1.0 - qab * x / qap;
    if (std::abs(d) < tiny) d = tiny;
    d = 1.0 / d;
    Scalar h = d;
    for (int m = 1; m <= max_terms; ++m) {
        const Scalar m2 = 2.0 * m;
        Scalar aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const Scalar delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < eps) break;
    }
    return h;
}

} // namespace

Scalar regularized_incomplete_beta(Scalar x, Scalar a, Scalar b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("regularized_incomplete_beta: a, b must be positive");
    if (!(x >= 0.0 && x <= 1.0))
        throw std::invalid_argument("regularized_incomplete_beta: x must lie in [0, 1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;

    const Scalar front = std::exp(a * std::log(x) + b * std::log1p(-x) - log_beta(a, b));
    if (x < (a + 1.0) / (a + b + 2.0))
        return front * beta_continued_fraction(x, a, b) / a;
    return 1.0 - front * beta_continued_fraction(1.0 - x, b, a) / b;
}

Scalar f_cdf(Scalar x, std::int64_t d1, std::int64_t d2) {
    if (d1 < 1 || d2 < 1) throw std::invalid_argument("f_cdf: degrees of freedom must be >= 1");
    if (x < 0.0) throw std::invalid_argument("f_cdf: x must be >= 0");
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    const Scalar n1 = static_cast<Scalar>(d1);
    const Scalar n2 = static_cast<Scalar>(d2);
    const Scalar z = n1 * x / (n1 * x + n2);
    return regularized_incomplete_beta(z, n1 / 2.0, n2 / 2.0);
}

AnovaTable anova_from_sums(Scalar ss_columns, std::int64_t df_columns,
                           Scalar ss_error, std::int64_t df_error) {
    if (ss_columns < 0.0 || ss_error < 0.0)
        throw std::invalid_argument("anova_from_sums: sums of squares must be >= 0");
    if (df_columns < 1 || df_error < 1)
        throw std::invalid_argument("anova_from_sums: degrees of freedom must be >= 1");

    AnovaTable t;
    t.ss_columns = ss_columns;
    t.ss_error = ss_error;
    t.ss_total = ss_columns + ss_error;
    t.df_columns = df_columns;
    t.df_error = df_error;
    t.df_total = df_columns + df_error;
    t.ms_columns = ss_columns / static_cast<Scalar>(df_columns);
    t.ms_error = ss_error / static_cast<Scalar>(df_error);

    if (t.ms_error == 0.0) {
        if (t.ms_columns == 0.0) {
            t.f = 0.0;
            t.prob_gt_f = 1.0;
        } else {
            t.f = std::numeric_limits<Scalar>::infinity();
            t.prob_gt_f = 0.0;
            t.zero_within_variance = true;
        }
        return t;
    }
    t.f = t.ms_columns / t.ms_error;
    // complement form of the F cdf; no cancellation for far tails
    const Scalar n1 = static_cast<Scalar>(t.df_columns);
    const Scalar n2 = static_cast<Scalar>(t.df_error);
    t.prob_gt_f = regularized_incomplete_beta(n2 / (n2 + n1 * t.f), n2 / 2.0, n1 / 2.0);
    return t;
}

AnovaTable anova_oneway(const std::vector<std::vector<Scalar>>& groups) {
    if (groups.size() < 2) throw std::invalid_argument("anova_oneway: needs at least 2 groups");
    std::int64_t total_n = 0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        if (groups[g].empty())
            throw std::invalid_argument("anova_oneway: group " + std::to_string(g) + " is empty");
        total_n += static_cast<std::int64_t>(groups[g].size());
    }
    if (total_n <= static_cast<std::int64_t>(groups.size()))
        throw std::invalid_argument("anova_oneway: needs more samples than groups");

    Scalar grand_sum = 0.0;
    for (const auto& g : groups)
        for (Scalar v : g) grand_sum += v;
    const Scalar grand_mean = grand_sum / static_cast<Scalar>(total_n);

    Scalar ss_columns = 0.0;
    Scalar ss_error = 0.0;
    Scalar ss_total = 0.0;
    for (const auto& g : groups) {
        Scalar sum = 0.0;
        for (Scalar v : g) sum += v;
        const Scalar mean = sum / static_cast<Scalar>(g.size());
        ss_columns += static_cast<Scalar>(g.size()) * (mean - grand_mean) * (mean - grand_mean);
        for (Scalar v : g) {
            ss_error += (v - mean) * (v - mean);
            ss_total += (v - grand_mean) * (v - grand_mean);
        }
    }

    AnovaTable t = anova_from_sums(std::max(ss_columns, Scalar{0}), static_cast<std::int64_t>(groups.size()) - 1,
                                   std::max(ss_error, Scalar{0}), total_n - static_cast<std::int64_t>(groups.size()));
    t.ss_total = ss_total; // direct two-pass value, keeps the decomposition checkable
    return t;
}

BoxplotStats boxplot_stats(std::vector<Scalar> samples) {
    if (samples.empty()) throw std::invalid_argument("boxplot_stats: no samples");
    std::sort(samples.begin(), samples.end());

    const auto quantile = [&samples](Scalar q) {
        const Scalar pos = q * static_cast<Scalar>(samples.size() - 1);
        const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
        const std::size_t hi = static_cast<std::size_t>(std::ceil(pos));
        const Scalar frac = pos - static_cast<Scalar>(lo);
        return samples[lo] + frac * (samples[hi] - samples[lo]);
    };

    BoxplotStats b;
    b.q1 = quantile(0.25);
    b.median = quantile(0.5);
    b.q3 = quantile(0.75);
    const Scalar iqr = b.q3 - b.q1;
    const Scalar lo_fence = b.q1 - 1.5 * iqr;
    const Scalar hi_fence = b.q3 + 1.5 * iqr;

    b.min = std::numeric_limits<Scalar>::infinity();
    b.max = -std::numeric_limits<Scalar>::infinity();
    for (Scalar v : samples) {
        if (v < lo_fence || v > hi_fence) {
            b.outliers.push_back(v);
        } else {
            b.min = std::min(b.min, v);
            b.max = std::max(b.max, v);
        }
    }
    return b;
}

void write_anova_csv(const AnovaTable& t, std::ostream& out) {
    char buf[64];
    const auto num = [&buf](Scalar v) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return std::string(buf);
    };
    out << "Source,SS,df,MS,F,Prob>F\n";
    out << "Columns," << num(t.ss_columns) << ',' << t.df_columns << ',' << num(t.ms_columns)
        << ',' << num(t.f) << ',' << num(t.prob_gt_f) << '\n';
    out << "Error," << num(t.ss_error) << ',' << t.df_error << ',' << num(t.ms_error) << ",,\n";
    out << "Total," << num(t.ss_total) << ',' << t.df_total << ",,,\n";
}

} // namespace swarmclust
