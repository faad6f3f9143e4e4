#include "dmkt/powerflow.hpp"

#include <cmath>
#include <complex>
#include <vector>

namespace dmkt {

using cplx = std::complex<double>;

PFState sweep_power_flow(const Network& net, const Vec& p, const Vec& q,
                         const SweepOptions& opt) {
    const int n = net.node_count();
    if (p.size() != n || q.size() != n)
        throw InputError("sweep: injection vectors must have length N");
    if (!p.allFinite() || !q.allFinite())
        throw InputError("sweep: injections must be finite");

    std::vector<cplx> volt(static_cast<size_t>(n) + 1, cplx(net.v0(), 0.0));
    std::vector<cplx> curr(static_cast<size_t>(n) + 1, cplx(0.0, 0.0));
    const auto& order = net.bfs_order();

    double residual = 0.0;
    int iter = 0;
    for (; iter < opt.max_iterations; ++iter) {
        // Backward: accumulate branch currents from the leaves.
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const int i = *it;
            const cplx s(p(i - 1), q(i - 1));
            cplx inode = std::conj(s / volt[static_cast<size_t>(i)]);
            for (int k : net.children(i)) inode += curr[static_cast<size_t>(k)];
            curr[static_cast<size_t>(i)] = inode;
        }
        // Forward: propagate voltage drops from the root.
        residual = 0.0;
        for (int i : order) {
            const auto& ln = net.line(i);
            const cplx z(ln.r, ln.x);
            const cplx vnew = volt[static_cast<size_t>(ln.upstream_node)] -
                              z * curr[static_cast<size_t>(i)];
            residual = std::max(residual, std::abs(vnew - volt[static_cast<size_t>(i)]));
            volt[static_cast<size_t>(i)] = vnew;
        }
        if (!std::isfinite(residual))
            throw ConvergenceError("sweep: diverged (non-finite voltages)", residual);
        if (residual < opt.tolerance) break;
    }
    if (residual >= opt.tolerance)
        throw ConvergenceError("sweep: no convergence after " +
                                   std::to_string(opt.max_iterations) +
                                   " iterations, residual " + std::to_string(residual),
                               residual);

    PFState st;
    st.v = Vec(n);
    st.delta = Vec(n);
    st.p_flow = Vec(n);
    st.q_flow = Vec(n);
    st.loss_p = Vec(n);
    st.loss_q = Vec(n);
    st.p_inj = p;
    st.q_inj = q;
    st.iterations = iter + 1;
    st.residual = residual;
    for (int i = 1; i <= n; ++i) {
        const auto& ln = net.line(i);
        const cplx vi = volt[static_cast<size_t>(i)];
        const cplx ii = curr[static_cast<size_t>(i)];
        const cplx s_recv = vi * std::conj(ii);
        const double isq = std::norm(ii);
        st.v(i - 1) = std::abs(vi);
        st.delta(i - 1) = std::arg(volt[static_cast<size_t>(ln.upstream_node)]) - std::arg(vi);
        st.p_flow(i - 1) = s_recv.real();
        st.q_flow(i - 1) = s_recv.imag();
        st.loss_p(i - 1) = ln.r * isq;
        st.loss_q(i - 1) = ln.x * isq;
        if (st.v(i - 1) <= opt.v_min_sane || st.v(i - 1) >= opt.v_max_sane)
            throw ConvergenceError("sweep: voltage " + std::to_string(st.v(i - 1)) +
                                       " at node " + std::to_string(i) +
                                       " outside sanity band",
                                   residual);
    }
    for (int k : net.children(0)) {
        st.substation_p += st.p_flow(k - 1) + st.loss_p(k - 1);
        st.substation_q += st.q_flow(k - 1) + st.loss_q(k - 1);
    }
    return st;
}

Vec linearized_voltages(const Network& net, const Vec& p, const Vec& q,
                        const Vec& loss_p, const Vec& loss_q) {
    const int n = net.node_count();
    if (p.size() != n || q.size() != n || loss_p.size() != n || loss_q.size() != n)
        throw InputError("linearized_voltages: vectors must have length N");
    return Vec::Constant(n, net.v0()) - net.mp() * (p + loss_p) - net.mq() * (q + loss_q);
}

FlowLossSens flow_loss_sensitivities(const Network& net, const PFState& state,
                                     const SensOptions& opt) {
    const int n = net.node_count();
    const Mat& d = net.downstream_incidence();
    const Mat dmi = d - Mat::Identity(n, n);
    // Feedback differentiates the 1/V^2 factors; meaningless with unity
    // denominators, so it only applies in center mode.
    const bool vf = opt.voltage_feedback && opt.voltage == SensOptions::Voltage::center;

    // Unknowns stacked [g; h; w]: per-line loss derivatives dL^P, dL^Q and
    // the squared-voltage derivative dW, one column per perturbed injection.
    Mat m = Mat::Zero(3 * n, 3 * n);
    Mat rhs = Mat::Zero(3 * n, 2 * n);

    for (int j = 0; j < n; ++j) {
        const auto& ln = net.line(j + 1);
        const double w_true = state.v(j) * state.v(j);
        const double w_den = opt.voltage == SensOptions::Voltage::unity ? 1.0 : w_true;
        const double cp = 2.0 * state.p_flow(j) / w_den;
        const double cq = 2.0 * state.q_flow(j) / w_den;

        // Loss rows: g_j = r_j (cp a_j + cq b_j) - fb_j w_j with
        // a = D e + (D - I) g, b likewise in h.
        m(j, j) += 1.0;
        m.row(j).segment(0, n) -= ln.r * cp * dmi.row(j);
        m.row(j).segment(n, n) -= ln.r * cq * dmi.row(j);
        rhs.row(j).segment(0, n) += ln.r * cp * d.row(j);
        rhs.row(j).segment(n, n) += ln.r * cq * d.row(j);

        m(n + j, n + j) += 1.0;
        m.row(n + j).segment(0, n) -= ln.x * cp * dmi.row(j);
        m.row(n + j).segment(n, n) -= ln.x * cq * dmi.row(j);
        rhs.row(n + j).segment(0, n) += ln.x * cp * d.row(j);
        rhs.row(n + j).segment(n, n) += ln.x * cq * d.row(j);

        if (vf) {
            // dL/dW feedback at the state point.
            const double flow_sq = state.p_flow(j) * state.p_flow(j) +
                                   state.q_flow(j) * state.q_flow(j);
            m(j, 2 * n + j) += ln.r * flow_sq / (w_den * w_true);
            m(n + j, 2 * n + j) += ln.x * flow_sq / (w_den * w_true);

            // Exact squared-voltage recursion
            //   W_j = W_u - 2 r (P + L^P) - 2 x (Q + L^Q) + (r^2 + x^2) l,
            // with l = (P^2 + Q^2) / W_j, differentiated in place.
            const double s2 = ln.r * ln.r + ln.x * ln.x;
            const double ell = flow_sq / w_true;
            const double cpw = 2.0 * state.p_flow(j) / w_true;
            const double cqw = 2.0 * state.q_flow(j) / w_true;
            const int wrow = 2 * n + j;
            m(wrow, 2 * n + j) += 1.0 + s2 * ell / w_true;
            if (ln.upstream_node != 0) m(wrow, 2 * n + ln.upstream_node - 1) -= 1.0;
            const double ca = 2.0 * ln.r - s2 * cpw;  // coefficient on a_j
            const double cb = 2.0 * ln.x - s2 * cqw;  // coefficient on b_j
            m.row(wrow).segment(0, n) += ca * dmi.row(j);
            m.row(wrow).segment(n, n) += cb * dmi.row(j);
            m(wrow, j) += 2.0 * ln.r;
            m(wrow, n + j) += 2.0 * ln.x;
            rhs.row(wrow).segment(0, n) -= ca * d.row(j);
            rhs.row(wrow).segment(n, n) -= cb * d.row(j);
        } else {
            m(2 * n + j, 2 * n + j) = 1.0;
        }
    }

    const Mat sol = m.partialPivLu().solve(rhs);
    if (!sol.allFinite())
        throw InternalError("flow_loss_sensitivities: singular derivative system");

    FlowLossSens out;
    out.dlp_dp = sol.block(0, 0, n, n);
    out.dlp_dq = sol.block(0, n, n, n);
    out.dlq_dp = sol.block(n, 0, n, n);
    out.dlq_dq = sol.block(n, n, n, n);
    out.dp_dp = d + dmi * out.dlp_dp;
    out.dp_dq = dmi * out.dlp_dq;
    out.dq_dp = dmi * out.dlq_dp;
    out.dq_dq = d + dmi * out.dlq_dq;
    return out;
}

Vec LossModel::eval_p(const Vec& p, const Vec& q) const {
    return base_p + dlp_dp * (p - p_center) + dlp_dq * (q - q_center);
}

Vec LossModel::eval_q(const Vec& p, const Vec& q) const {
    return base_q + dlq_dp * (p - p_center) + dlq_dq * (q - q_center);
}

LossModel linearize_losses(const Network& net, const PFState& center,
                           const SensOptions& opt) {
    const FlowLossSens sens = flow_loss_sensitivities(net, center, opt);
    LossModel model;
    model.base_p = center.loss_p;
    model.base_q = center.loss_q;
    model.p_center = center.p_inj;
    model.q_center = center.q_inj;
    model.dlp_dp = sens.dlp_dp;
    model.dlp_dq = sens.dlp_dq;
    model.dlq_dp = sens.dlq_dp;
    model.dlq_dq = sens.dlq_dq;
    return model;
}

}  // namespace dmkt
