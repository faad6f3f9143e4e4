#include "dmkt/pep.hpp"

#include <algorithm>
#include <cmath>

namespace dmkt {

void SampleSet::validate() const {
    if (sites.empty()) throw InputError("pep: no sites");
    if (samples.rows() < 1) throw InputError("pep: no samples");
    if (samples.cols() != num_sites())
        throw InputError("pep: sample width does not match site list");
    if (probabilities.size() != samples.rows())
        throw InputError("pep: probability count does not match samples");
    if (probabilities.minCoeff() <= 0.0)
        throw InputError("pep: probabilities must be strictly positive");
    if (std::abs(probabilities.sum() - 1.0) > 1e-9)
        throw InputError("pep: probabilities must sum to one");
    if (samples.minCoeff() < 0.0) throw InputError("pep: negative generation sample");
}

SampleSet SampleSet::with_uniform(std::vector<std::string> sites, Mat samples) {
    SampleSet set;
    set.sites = std::move(sites);
    const auto s = samples.rows();
    set.samples = std::move(samples);
    set.probabilities = Vec::Constant(s, 1.0 / static_cast<double>(s));
    set.validate();
    return set;
}

namespace {

void check_gamma(double gamma) {
    if (!(gamma > 0.0 && gamma < 1.0))
        throw InputError("pep: gamma must lie strictly inside (0, 1)");
}

// Minimal dominating vector and total for a fixed selection.
void finish_result(const SampleSet& set, PepResult& res) {
    const int r = set.num_sites();
    res.efficient_point = Vec::Zero(r);
    res.selected_probability = 0.0;
    for (int s = 0; s < set.num_samples(); ++s) {
        if (!res.selected[static_cast<size_t>(s)]) continue;
        res.selected_probability += set.probabilities(s);
        for (int m = 0; m < r; ++m)
            res.efficient_point(m) = std::max(res.efficient_point(m), set.samples(s, m));
    }
    res.total = res.efficient_point.sum();
}

struct PepModel {
    LinearModel model;
    std::vector<VarId> v;
    std::vector<VarId> z;
};

PepModel build_pep_model(const SampleSet& set, double gamma) {
    PepModel pm;
    const int r = set.num_sites();
    const int ns = set.num_samples();
    for (int m = 0; m < r; ++m)
        pm.v.push_back(pm.model.add_var(0.0, kInf, 1.0, false, "v" + std::to_string(m)));
    for (int s = 0; s < ns; ++s)
        pm.z.push_back(pm.model.add_var(0.0, 1.0, 0.0, true, "z" + std::to_string(s)));
    std::vector<std::pair<VarId, double>> mass;
    for (int s = 0; s < ns; ++s)
        mass.emplace_back(pm.z[static_cast<size_t>(s)], set.probabilities(s));
    pm.model.add_ge(mass, gamma, "mass");
    // v_m >= p^s_m z_s; rows with a zero sample are implied by v >= 0.
    for (int s = 0; s < ns; ++s)
        for (int m = 0; m < r; ++m)
            if (set.samples(s, m) > 0.0)
                pm.model.add_ge({{pm.v[static_cast<size_t>(m)], 1.0},
                                 {pm.z[static_cast<size_t>(s)], -set.samples(s, m)}},
                                0.0);
    return pm;
}

}  // namespace

PepResult solve_pep(const SampleSet& set, double gamma, const SolveOptions& opt) {
    set.validate();
    check_gamma(gamma);
    const int ns = set.num_samples();

    PepModel pm = build_pep_model(set, gamma);
    Solution sol = solve_milp(pm.model, opt);
    if (sol.status == SolveStatus::limit)
        throw SolverError("pep: solver limit reached before proving optimality");
    if (!sol.optimal()) throw InternalError("pep: selection MILP reported infeasible");
    const double best_total = sol.objective;

    // Deterministic tie-break: drop each sample in index order whenever the
    // optimum survives without it, which lands on the lexicographically
    // smallest selection vector among the optima.
    PepResult res;
    res.gamma = gamma;
    res.selected.assign(static_cast<size_t>(ns), 1);
    const double tol = 1e-9 * std::max(1.0, std::abs(best_total));
    for (int s = 0; s < ns; ++s) {
        pm.model.set_bounds(pm.z[static_cast<size_t>(s)], 0.0, 0.0);
        Solution trial = solve_milp(pm.model, opt);
        if (trial.optimal() && trial.objective <= best_total + tol) {
            res.selected[static_cast<size_t>(s)] = 0;
        } else {
            pm.model.set_bounds(pm.z[static_cast<size_t>(s)], 1.0, 1.0);
        }
    }
    finish_result(set, res);
    if (res.selected_probability < gamma - 1e-9)
        throw InternalError("pep: tie-break lost probability mass");
    if (res.total > best_total + 1e-7 * std::max(1.0, std::abs(best_total)))
        throw InternalError("pep: tie-break degraded the optimum");
    return res;
}

PepResult brute_force_pep(const SampleSet& set, double gamma) {
    set.validate();
    check_gamma(gamma);
    const int ns = set.num_samples();
    if (ns > 20)
        throw InputError("brute_force_pep: refusing " + std::to_string(ns) +
                         " samples (2^S enumeration)");
    const int r = set.num_sites();

    double best_total = kInf;
    unsigned best_mask = 0;
    bool found = false;
    auto lex_less = [&](unsigned a, unsigned b) {
        for (int s = 0; s < ns; ++s) {
            const unsigned ba = (a >> s) & 1u, bb = (b >> s) & 1u;
            if (ba != bb) return ba < bb;
        }
        return false;
    };
    for (unsigned mask = 1; mask < (1u << ns); ++mask) {
        double prob = 0.0;
        for (int s = 0; s < ns; ++s)
            if ((mask >> s) & 1u) prob += set.probabilities(s);
        if (prob < gamma - 1e-12) continue;
        double total = 0.0;
        for (int m = 0; m < r; ++m) {
            double vmax = 0.0;
            for (int s = 0; s < ns; ++s)
                if ((mask >> s) & 1u) vmax = std::max(vmax, set.samples(s, m));
            total += vmax;
        }
        const bool better = !found || total < best_total - 1e-12;
        const bool tie = found && total <= best_total + 1e-12 && lex_less(mask, best_mask);
        if (better || tie) {
            if (better) best_total = total;
            best_mask = mask;
            found = true;
        }
    }
    if (!found) throw InternalError("brute_force_pep: no feasible subset");

    PepResult res;
    res.gamma = gamma;
    res.selected.assign(static_cast<size_t>(ns), 0);
    for (int s = 0; s < ns; ++s)
        res.selected[static_cast<size_t>(s)] = static_cast<char>((best_mask >> s) & 1u);
    finish_result(set, res);
    return res;
}

std::vector<PepResult> pep_schedule(const std::vector<SampleSet>& slots, double gamma,
                                    const SolveOptions& opt) {
    if (slots.empty()) throw InputError("pep_schedule: no timeslots");
    for (const auto& s : slots)
        if (s.sites != slots.front().sites)
            throw InputError("pep_schedule: slots disagree on the site list");
    std::vector<PepResult> out;
    out.reserve(slots.size());
    for (const auto& s : slots) out.push_back(solve_pep(s, gamma, opt));
    return out;
}

}  // namespace dmkt
