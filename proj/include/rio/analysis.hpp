#pragma once

#include <string>
#include <vector>

namespace rio {

// H_b(p) = p*log2(1/p) + (1-p)*log2(1/(1-p)); 0 at both endpoints.
double binary_entropy(double p);

// The unique p in [0, 1/2] with H_b(p) = y, by bisection to 1e-12.
double inverse_binary_entropy(double y);

// Minimal fractions of still-erased cells programmed per write for a code
// of rate k/n, taken with equality in the recursion
//   p_j = Hb^-1( rate / ((1-p_1)...(1-p_{j-1})) ).
struct ProgrammingProfile {
    double rate = 0.0;
    std::vector<double> fractions;        // p_1..p_t, nondecreasing, in (0, 1/2]
    std::vector<double> expected_weights; // w_j = p_j * prod_{i<j}(1-p_i), per cell

    int writes() const { return static_cast<int>(fractions.size()); }
};

ProgrammingProfile programming_fractions(double rate, int writes);

// True when the recursion completes for all `writes` steps.
bool rate_feasible(double rate, int writes) noexcept;

// Largest number of writes the recursion supports at this rate, i.e. the
// last step whose inverse-entropy argument is still at most 1.
int max_writes(double rate);

// The t=2 optimum: the two constraints k <= n*Hb(p1) and k <= (1-p1)*n bind
// together where Hb(p1) = 1 - p1; overhead n/k = 1/(1-p1).
struct OverheadOptimum {
    double overhead = 0.0;
    double p1 = 0.0;
};

OverheadOptimum minimal_overhead_t2();

// Rivest-Shamir sufficient overhead t/log2(t); returns 1 for t = 1, where
// the expression degenerates and a single write needs no overhead.
double rs_overhead_bound(int writes);

// Probability of each programming level 0..M-1 under a profile: level M-j
// gets w_j, level 0 keeps the never-programmed mass.
struct LevelDistribution {
    std::vector<double> probs;

    int level_count() const { return static_cast<int>(probs.size()); }
};

LevelDistribution level_distribution(const ProgrammingProfile& profile);

// Shannon entropy in bits; zero-probability levels contribute nothing.
double distribution_entropy(const LevelDistribution& distribution);

// Asymptotic bits per cell of the best rate the recursion supports for t
// writes: t * sup{ rate feasible for t }.
double rio_capacity(int writes);

// One row of the efficiency report for a write count.
struct AnalysisRow {
    int writes = 0;
    double optimal_rate = 0.0;
    double overhead = 0.0;
    std::vector<double> fractions;
    double capacity_bits_per_cell = 0.0;
    double uniform_entropy = 0.0;
    double shaping_loss = 0.0;
};

AnalysisRow analyze_writes(int writes);

// CSV: t,optimal_rate,overhead,p_1..p_t,capacity_bits_per_cell,
// uniform_entropy,shaping_loss (values with 4 decimals).
std::string analysis_csv(const AnalysisRow& row);

} // namespace rio
