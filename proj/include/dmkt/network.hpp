#pragma once

// Radial feeder model. Lines and non-root nodes share the index 1..N, with
// line i serving node i from its upstream node u(i). Node 0 is the substation
// (slack) and is excluded from all matrices.

#include "dmkt/common.hpp"

#include <vector>

namespace dmkt {

struct LineParams {
    int index = 0;          // line id = downstream node id, 1..N
    int upstream_node = 0;  // node id 0..N
    double r = 0.0;         // p.u.
    double x = 0.0;         // p.u.
    double capacity = 0.0;  // apparent power rating S_bar, p.u.
};

class Network {
public:
    // Validates the line list, re-indexes internally if parents do not
    // precede children, and builds every constant matrix.
    static Network build(std::vector<LineParams> lines, double v0 = 1.0);

    int node_count() const { return n_; }
    double v0() const { return v0_; }

    // Tree accessors; node/line ids are internal ids 1..N (0 = root).
    int upstream(int node) const { return up_.at(static_cast<size_t>(node)); }
    const std::vector<int>& children(int node) const { return kids_.at(static_cast<size_t>(node)); }
    const std::vector<int>& bfs_order() const { return order_; }  // parents first, ids 1..N
    int depth(int node) const { return depth_.at(static_cast<size_t>(node)); }
    const LineParams& line(int id) const { return lines_.at(static_cast<size_t>(id - 1)); }

    // External (case file) id <-> internal id. Identity when the input was
    // already parent-before-child ordered.
    int to_internal(int external_node) const;
    int to_external(int internal_node) const;
    bool reindexed() const { return reindexed_; }

    // Constant matrices, all N x N unless noted. Row/col k corresponds to
    // node/line k+1.
    const Mat& upstream_incidence() const { return u_mat_; }    // U
    const Mat& downstream_incidence() const { return d_mat_; }  // D, unit diagonal
    const Mat& impedance_block() const { return z_mat_; }       // Z, 2N x 2N
    const Mat& impedance_inverse() const { return z_inv_; }     // Z^-1
    const Mat& voltage_block() const { return z_v_; }           // top N rows of Z^-1
    const Mat& mp() const { return mp_; }                       // voltage sensitivity to p+L^P
    const Mat& mq() const { return mq_; }

    Vec line_r() const;  // per-line resistance, length N
    Vec line_x() const;
    Vec line_capacity() const;

private:
    Network() = default;

    int n_ = 0;
    double v0_ = 1.0;
    std::vector<LineParams> lines_;   // internal ids, [k] = line k+1
    std::vector<int> up_;             // [node] -> upstream node, up_[0] = -1
    std::vector<std::vector<int>> kids_;
    std::vector<int> order_;
    std::vector<int> depth_;          // depth_[0] = 0
    std::vector<int> ext_of_int_, int_of_ext_;
    bool reindexed_ = false;
    Mat u_mat_, d_mat_, z_mat_, z_inv_, z_v_, mp_, mq_;
};

// Builds Z = [[Zr, Zx], [Zx, -Zr]] from per-line impedances, its inverse, and
// the voltage block Z_V (rows 1..N of the inverse). Exposed separately so the
// inversion can be checked on synthetic line sets.
void impedance_blocks(const std::vector<LineParams>& lines, Mat& z, Mat& z_inv, Mat& z_v);

}  // namespace dmkt
