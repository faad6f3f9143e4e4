#pragma once

// Exact radial power flow (backward/forward sweep), the linearized voltage
// equation, and the first-order loss model with its sensitivity machinery.
// Injections follow the consumption-positive convention: p = demand - generation.

#include "dmkt/network.hpp"

namespace dmkt {

struct PFState {
    Vec v;               // node voltage magnitudes, length N
    Vec delta;           // per-line angle differences u(i) -> i, rad (diagnostic)
    Vec p_flow, q_flow;  // receiving-end line flows, length N
    Vec loss_p, loss_q;  // per-line losses, length N
    Vec p_inj, q_inj;    // injections the state was solved at
    double substation_p = 0.0;  // net import at the root
    double substation_q = 0.0;
    int iterations = 0;
    double residual = 0.0;
};

struct SweepOptions {
    double tolerance = 1e-8;
    int max_iterations = 100;
    double v_min_sane = 0.5;  // sanity band for converged voltages
    double v_max_sane = 1.5;
};

PFState sweep_power_flow(const Network& net, const Vec& p, const Vec& q,
                         const SweepOptions& opt = {});

// V = V0 - Mp (p + Lp) - Mq (q + Lq). The second sign follows from the
// matrix derivation; see the loss-model notes in the tests.
Vec linearized_voltages(const Network& net, const Vec& p, const Vec& q,
                        const Vec& loss_p, const Vec& loss_q);

struct SensOptions {
    // Voltage used in the 1/V^2 loss denominators.
    enum class Voltage { center, unity };
    Voltage voltage = Voltage::center;
    // Keep the voltage-magnitude feedback terms when differentiating the
    // sweep equations. Off reproduces the constant-voltage recursion only.
    bool voltage_feedback = true;
};

// Total derivatives of line flows and losses with respect to nodal
// injections, from one direct solve of the differentiated sweep equations.
// Matrices are N x N with (line j, node i) entries.
struct FlowLossSens {
    Mat dp_dp, dp_dq;    // dP_j / d(p_i, q_i)
    Mat dq_dp, dq_dq;    // dQ_j / d(p_i, q_i)
    Mat dlp_dp, dlp_dq;  // dL^P_j / d(p_i, q_i)
    Mat dlq_dp, dlq_dq;  // dL^Q_j / d(p_i, q_i)
};

FlowLossSens flow_loss_sensitivities(const Network& net, const PFState& state,
                                     const SensOptions& opt = {});

struct LossModel {
    Vec base_p, base_q;      // per-line losses at the center point
    Vec p_center, q_center;  // center injections
    Mat dlp_dp, dlp_dq, dlq_dp, dlq_dq;

    Vec eval_p(const Vec& p, const Vec& q) const;
    Vec eval_q(const Vec& p, const Vec& q) const;
};

LossModel linearize_losses(const Network& net, const PFState& center,
                           const SensOptions& opt = {});

}  // namespace dmkt
