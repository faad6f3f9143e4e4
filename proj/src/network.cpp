#include "dmkt/network.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace dmkt {

namespace {

void validate_lines(const std::vector<LineParams>& lines) {
    const int n = static_cast<int>(lines.size());
    if (n == 0) throw InputError("network: empty line list");
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (const auto& ln : lines) {
        if (ln.index < 1 || ln.index > n)
            throw InputError("network: line index " + std::to_string(ln.index) +
                             " outside 1.." + std::to_string(n));
        if (seen[static_cast<size_t>(ln.index)])
            throw InputError("network: duplicate line index " + std::to_string(ln.index));
        seen[static_cast<size_t>(ln.index)] = 1;
        if (ln.upstream_node < 0 || ln.upstream_node > n)
            throw InputError("network: line " + std::to_string(ln.index) + " upstream node " +
                             std::to_string(ln.upstream_node) + " out of range");
        if (ln.upstream_node == ln.index)
            throw TopologyError("network: line " + std::to_string(ln.index) + " is a self-loop");
        if (ln.r < 0 || ln.x < 0 || ln.r + ln.x <= 0)
            throw InputError("network: line " + std::to_string(ln.index) +
                             " needs r >= 0, x >= 0, r + x > 0");
        if (ln.capacity <= 0)
            throw InputError("network: line " + std::to_string(ln.index) + " needs capacity > 0");
    }
}

}  // namespace

void impedance_blocks(const std::vector<LineParams>& lines, Mat& z, Mat& z_inv, Mat& z_v) {
    const int n = static_cast<int>(lines.size());
    z = Mat::Zero(2 * n, 2 * n);
    for (const auto& ln : lines) {
        const int k = ln.index - 1;
        const double denom = ln.r * ln.r + ln.x * ln.x;
        if (denom <= 0)
            throw InputError("network: line " + std::to_string(ln.index) + " has r = x = 0");
        const double zr = ln.r / denom;
        const double zx = ln.x / denom;
        z(k, k) = zr;
        z(k, n + k) = zx;
        z(n + k, k) = zx;
        z(n + k, n + k) = -zr;
    }
    z_inv = z.partialPivLu().solve(Mat::Identity(2 * n, 2 * n));
    const double id_err = (z * z_inv - Mat::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff();
    if (!std::isfinite(id_err) || id_err > 1e-10)
        throw InputError("network: impedance block not invertible to tolerance (residual " +
                         std::to_string(id_err) + ")");
    z_v = z_inv.topRows(n);
}

Network Network::build(std::vector<LineParams> lines, double v0) {
    validate_lines(lines);
    const int n = static_cast<int>(lines.size());

    // parent[i] for external node ids; walk to the root to reject cycles and
    // disconnected components.
    std::vector<int> parent(static_cast<size_t>(n) + 1, -1);
    for (const auto& ln : lines) parent[static_cast<size_t>(ln.index)] = ln.upstream_node;
    for (int i = 1; i <= n; ++i) {
        int steps = 0;
        for (int v = i; v != 0; v = parent[static_cast<size_t>(v)]) {
            if (v < 0 || ++steps > n)
                throw TopologyError("network: cycle or disconnected subtree at node " +
                                    std::to_string(i));
        }
    }

    Network net;
    net.n_ = n;
    net.v0_ = v0;

    // Keep external ids when parents already precede children; otherwise
    // relabel by BFS from the root.
    bool ordered = true;
    for (const auto& ln : lines)
        if (ln.upstream_node > ln.index) ordered = false;

    net.ext_of_int_.assign(static_cast<size_t>(n) + 1, 0);
    net.int_of_ext_.assign(static_cast<size_t>(n) + 1, 0);
    if (ordered) {
        for (int i = 0; i <= n; ++i) {
            net.ext_of_int_[static_cast<size_t>(i)] = i;
            net.int_of_ext_[static_cast<size_t>(i)] = i;
        }
        net.reindexed_ = false;
    } else {
        std::vector<std::vector<int>> ext_kids(static_cast<size_t>(n) + 1);
        for (const auto& ln : lines)
            ext_kids[static_cast<size_t>(ln.upstream_node)].push_back(ln.index);
        for (auto& ks : ext_kids) std::sort(ks.begin(), ks.end());
        std::vector<int> queue{0};
        int next_id = 0;
        for (size_t head = 0; head < queue.size(); ++head) {
            const int ext = queue[head];
            net.ext_of_int_[static_cast<size_t>(next_id)] = ext;
            net.int_of_ext_[static_cast<size_t>(ext)] = next_id;
            ++next_id;
            for (int k : ext_kids[static_cast<size_t>(ext)]) queue.push_back(k);
        }
        if (next_id != n + 1)
            throw TopologyError("network: tree does not reach all nodes from the root");
        net.reindexed_ = true;
    }

    net.lines_.resize(static_cast<size_t>(n));
    net.up_.assign(static_cast<size_t>(n) + 1, -1);
    net.kids_.assign(static_cast<size_t>(n) + 1, {});
    net.depth_.assign(static_cast<size_t>(n) + 1, 0);
    for (const auto& ln : lines) {
        LineParams internal = ln;
        internal.index = net.int_of_ext_[static_cast<size_t>(ln.index)];
        internal.upstream_node = net.int_of_ext_[static_cast<size_t>(ln.upstream_node)];
        net.lines_[static_cast<size_t>(internal.index - 1)] = internal;
        net.up_[static_cast<size_t>(internal.index)] = internal.upstream_node;
        net.kids_[static_cast<size_t>(internal.upstream_node)].push_back(internal.index);
    }
    for (auto& ks : net.kids_) std::sort(ks.begin(), ks.end());

    net.order_.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        net.order_.push_back(i);  // BFS relabeling makes 1..N a valid parents-first order
        net.depth_[static_cast<size_t>(i)] = net.depth_[static_cast<size_t>(net.up_[static_cast<size_t>(i)])] + 1;
    }

    // U(i,j) = 1 iff line j is on the path from node i to the root.
    net.u_mat_ = Mat::Zero(n, n);
    for (int i = 1; i <= n; ++i)
        for (int v = i; v != 0; v = net.up_[static_cast<size_t>(v)])
            net.u_mat_(i - 1, v - 1) = 1.0;

    // D(i,j) = 1 iff j is in the downstream subtree of i, including i itself.
    net.d_mat_ = Mat::Zero(n, n);
    for (int j = 1; j <= n; ++j)
        for (int v = j; v != 0; v = net.up_[static_cast<size_t>(v)])
            net.d_mat_(v - 1, j - 1) = 1.0;

    impedance_blocks(net.lines_, net.z_mat_, net.z_inv_, net.z_v_);
    net.mp_ = net.u_mat_ * net.z_v_.leftCols(n) * net.d_mat_;
    net.mq_ = net.u_mat_ * net.z_v_.rightCols(n) * net.d_mat_;
    return net;
}

int Network::to_internal(int external_node) const {
    if (external_node < 0 || external_node > n_)
        throw InputError("network: node id " + std::to_string(external_node) + " out of range");
    return int_of_ext_[static_cast<size_t>(external_node)];
}

int Network::to_external(int internal_node) const {
    if (internal_node < 0 || internal_node > n_)
        throw InputError("network: node id " + std::to_string(internal_node) + " out of range");
    return ext_of_int_[static_cast<size_t>(internal_node)];
}

Vec Network::line_r() const {
    Vec out(n_);
    for (int k = 0; k < n_; ++k) out(k) = lines_[static_cast<size_t>(k)].r;
    return out;
}

Vec Network::line_x() const {
    Vec out(n_);
    for (int k = 0; k < n_; ++k) out(k) = lines_[static_cast<size_t>(k)].x;
    return out;
}

Vec Network::line_capacity() const {
    Vec out(n_);
    for (int k = 0; k < n_; ++k) out(k) = lines_[static_cast<size_t>(k)].capacity;
    return out;
}

}  // namespace dmkt
