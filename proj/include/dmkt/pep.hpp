#pragma once

// Probability efficient points of the joint VRE generation distribution,
// computed from historical samples. The MILP selects a sample subset with
// probability mass at least gamma and minimizes the elementwise-max total;
// a subset-enumeration oracle covers small instances.

#include "dmkt/common.hpp"
#include "dmkt/solver.hpp"

#include <string>
#include <vector>

namespace dmkt {

struct SampleSet {
    std::vector<std::string> sites;  // |R| site ids
    Mat samples;                     // |S| x |R|, MW
    Vec probabilities;               // |S|, strictly positive, sums to one

    int num_sites() const { return static_cast<int>(sites.size()); }
    int num_samples() const { return static_cast<int>(samples.rows()); }
    void validate() const;
    // Uniform probabilities when the data source has none.
    static SampleSet with_uniform(std::vector<std::string> sites, Mat samples);
};

struct PepResult {
    double gamma = 0.0;
    Vec efficient_point;         // v per site, MW
    std::vector<char> selected;  // selection flag per sample
    double total = 0.0;          // sum over sites
    double selected_probability = 0.0;
};

// Exact MILP solve with a deterministic tie-break: among equal-total optima
// the lexicographically smallest selection vector wins.
PepResult solve_pep(const SampleSet& set, double gamma, const SolveOptions& opt = {});

// 2^|S| enumeration oracle; refuses |S| > 20.
PepResult brute_force_pep(const SampleSet& set, double gamma);

// Independent solve per timeslot. All slots must share the site list.
std::vector<PepResult> pep_schedule(const std::vector<SampleSet>& slots, double gamma,
                                    const SolveOptions& opt = {});

}  // namespace dmkt
