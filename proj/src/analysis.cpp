#include "rio/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "rio/errors.hpp"

namespace rio {

namespace {

constexpr double kBisectTolerance = 1e-12;
constexpr int kBisectMaxIterations = 200;
constexpr int kMaxWritesCap = 1 << 20;
// Rates sitting exactly on the feasibility boundary (e.g. the t=2 optimum
// 1 - p1) would otherwise flip on rounding noise in the last step.
constexpr double kEdgeTolerance = 1e-9;

// Root of an increasing function on [lo, hi] with f(lo) <= 0 <= f(hi).
template <typename Fn>
double bisect_increasing(Fn&& f, double lo, double hi) {
    for (int i = 0; i < kBisectMaxIterations && hi - lo > kBisectTolerance; ++i) {
        double mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Appends the recursion steps to `fractions`. Returns false as soon as an
// inverse-entropy argument exceeds 1.
bool run_fraction_recursion(double rate, int writes, std::vector<double>* fractions) {
    double erased = 1.0; // prod_{i<j} (1 - p_i)
    for (int j = 1; j <= writes; ++j) {
        double argument = rate / erased;
        if (argument > 1.0 + kEdgeTolerance)
            return false;
        double p = inverse_binary_entropy(std::min(argument, 1.0));
        if (fractions)
            fractions->push_back(p);
        erased *= 1.0 - p;
    }
    return true;
}

std::string fixed4(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.4f", value);
    return buffer;
}

} // namespace

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw DomainError("binary entropy is defined on [0, 1]");
    if (p == 0.0 || p == 1.0)
        return 0.0;
    return p * std::log2(1.0 / p) + (1.0 - p) * std::log2(1.0 / (1.0 - p));
}

double inverse_binary_entropy(double y) {
    if (!(y >= 0.0 && y <= 1.0))
        throw DomainError("inverse binary entropy is defined on [0, 1]");
    if (y == 0.0)
        return 0.0;
    if (y == 1.0)
        return 0.5;
    return bisect_increasing([y](double p) { return binary_entropy(p) - y; }, 0.0, 0.5);
}

ProgrammingProfile programming_fractions(double rate, int writes) {
    if (!(rate > 0.0 && rate <= 1.0))
        throw DomainError("rate must lie in (0, 1]");
    if (writes < 1)
        throw DomainError("write count must be at least 1");

    ProgrammingProfile profile;
    profile.rate = rate;
    if (!run_fraction_recursion(rate, writes, &profile.fractions))
        throw Infeasible("rate " + std::to_string(rate) + " cannot support " +
                         std::to_string(writes) + " writes");
    double erased = 1.0;
    for (double p : profile.fractions) {
        profile.expected_weights.push_back(p * erased);
        erased *= 1.0 - p;
    }
    return profile;
}

bool rate_feasible(double rate, int writes) noexcept {
    if (!(rate > 0.0 && rate <= 1.0) || writes < 1)
        return false;
    return run_fraction_recursion(rate, writes, nullptr);
}

int max_writes(double rate) {
    if (!(rate > 0.0 && rate <= 1.0))
        throw DomainError("rate must lie in (0, 1]");
    int count = 0;
    double erased = 1.0;
    while (rate / erased <= 1.0) {
        if (count >= kMaxWritesCap)
            throw DomainError("write count exceeds " + std::to_string(kMaxWritesCap) +
                              "; rate is too small to evaluate step by step");
        double p = inverse_binary_entropy(rate / erased);
        ++count;
        erased *= 1.0 - p;
    }
    return count;
}

OverheadOptimum minimal_overhead_t2() {
    // Hb(p) - (1 - p) rises from -1 to 1/2 on (0, 1/2); its root equalizes
    // the entropy and cell-budget constraints.
    double p1 = bisect_increasing([](double p) { return binary_entropy(p) - (1.0 - p); },
                                  0.0, 0.5);
    return OverheadOptimum{1.0 / (1.0 - p1), p1};
}

double rs_overhead_bound(int writes) {
    if (writes < 1)
        throw DomainError("write count must be at least 1");
    if (writes == 1)
        return 1.0;
    return static_cast<double>(writes) / std::log2(static_cast<double>(writes));
}

LevelDistribution level_distribution(const ProgrammingProfile& profile) {
    const int t = profile.writes();
    LevelDistribution distribution;
    distribution.probs.assign(static_cast<std::size_t>(t) + 1, 0.0);
    double erased = 1.0;
    for (int j = 1; j <= t; ++j) {
        double p = profile.fractions[static_cast<std::size_t>(j - 1)];
        distribution.probs[static_cast<std::size_t>(t + 1 - j)] = p * erased;
        erased *= 1.0 - p;
    }
    distribution.probs[0] = erased;
    return distribution;
}

double distribution_entropy(const LevelDistribution& distribution) {
    double total = 0.0;
    double entropy = 0.0;
    for (double p : distribution.probs) {
        if (p < 0.0)
            throw DomainError("level probabilities must be nonnegative");
        total += p;
        if (p > 0.0)
            entropy += p * std::log2(1.0 / p);
    }
    // Loose enough to accept distributions written with rounded constants.
    if (std::abs(total - 1.0) > 1e-3)
        throw DomainError("level probabilities must sum to 1");
    return entropy;
}

double rio_capacity(int writes) {
    if (writes < 1)
        throw DomainError("write count must be at least 1");
    if (rate_feasible(1.0, writes))
        return static_cast<double>(writes);
    // Feasibility is monotone in the rate, so the supremum is the boundary.
    double lo = 0.5;
    while (!rate_feasible(lo, writes))
        lo *= 0.5; // small enough rates support any fixed write count
    double hi = 1.0;
    for (int i = 0; i < kBisectMaxIterations && hi - lo > kBisectTolerance; ++i) {
        double mid = 0.5 * (lo + hi);
        if (rate_feasible(mid, writes))
            lo = mid;
        else
            hi = mid;
    }
    return writes * lo;
}

AnalysisRow analyze_writes(int writes) {
    AnalysisRow row;
    row.writes = writes;
    row.capacity_bits_per_cell = rio_capacity(writes);
    row.optimal_rate = row.capacity_bits_per_cell / writes;
    row.overhead = 1.0 / row.optimal_rate;
    row.fractions = programming_fractions(row.optimal_rate, writes).fractions;
    row.uniform_entropy = std::log2(static_cast<double>(writes) + 1.0);
    row.shaping_loss = row.uniform_entropy - row.capacity_bits_per_cell;
    return row;
}

std::string analysis_csv(const AnalysisRow& row) {
    std::string header = "t,optimal_rate,overhead";
    std::string line = std::to_string(row.writes) + "," + fixed4(row.optimal_rate) + "," +
                       fixed4(row.overhead);
    for (int j = 1; j <= row.writes; ++j) {
        header += ",p_" + std::to_string(j);
        line += "," + fixed4(row.fractions[static_cast<std::size_t>(j - 1)]);
    }
    header += ",capacity_bits_per_cell,uniform_entropy,shaping_loss";
    line += "," + fixed4(row.capacity_bits_per_cell) + "," + fixed4(row.uniform_entropy) + "," +
            fixed4(row.shaping_loss);
    return header + "\n" + line + "\n";
}

} // namespace rio
