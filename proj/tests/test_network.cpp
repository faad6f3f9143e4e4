#include <doctest.h>

#include "dmkt/network.hpp"

#include <random>

using namespace dmkt;

namespace {

std::vector<LineParams> chain(int n, double r = 0.01, double x = 0.01, double cap = 1.0) {
    std::vector<LineParams> lines;
    for (int i = 1; i <= n; ++i) lines.push_back({i, i - 1, r, x, cap});
    return lines;
}

}  // namespace

TEST_CASE("two-line chain incidence matrices") {
    const Network net = Network::build(chain(2));
    Mat u_expect(2, 2), d_expect(2, 2);
    u_expect << 1, 0, 1, 1;
    d_expect << 1, 1, 0, 1;
    CHECK((net.upstream_incidence() - u_expect).cwiseAbs().maxCoeff() == 0.0);
    CHECK((net.downstream_incidence() - d_expect).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("row i of U has depth(i) ones") {
    // Y-shaped feeder: 0-1-2, with 3 and 4 both hanging off node 2.
    std::vector<LineParams> lines = {
        {1, 0, 0.01, 0.01, 1.0}, {2, 1, 0.01, 0.01, 1.0},
        {3, 2, 0.02, 0.01, 1.0}, {4, 2, 0.01, 0.03, 1.0}};
    const Network net = Network::build(lines);
    for (int i = 1; i <= net.node_count(); ++i)
        CHECK(net.upstream_incidence().row(i - 1).sum() == doctest::Approx(net.depth(i)));
}

TEST_CASE("chain downstream matrix is upper triangular of ones") {
    const Network net = Network::build(chain(5));
    const Mat& d = net.downstream_incidence();
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK(d(i, j) == (j >= i ? 1.0 : 0.0));
}

TEST_CASE("cycle and disconnection rejected") {
    std::vector<LineParams> cyc = {{1, 2, 0.01, 0.01, 1.0}, {2, 1, 0.01, 0.01, 1.0}};
    CHECK_THROWS_AS(Network::build(cyc), TopologyError);
    std::vector<LineParams> dup = {{1, 0, 0.01, 0.01, 1.0}, {1, 0, 0.01, 0.01, 1.0}};
    CHECK_THROWS_AS(Network::build(dup), InputError);
}

TEST_CASE("out-of-order input is reindexed with id maps") {
    // Node 1 hangs off node 2, violating parent-before-child.
    std::vector<LineParams> lines = {{2, 0, 0.01, 0.0, 1.0}, {1, 2, 0.02, 0.0, 1.0}};
    const Network net = Network::build(lines);
    CHECK(net.reindexed());
    CHECK(net.node_count() == 2);
    const int tail = net.to_internal(1);
    CHECK(net.upstream(tail) == net.to_internal(2));
    CHECK(net.to_external(net.to_internal(1)) == 1);
    // Deep node has two lines on its root path.
    CHECK(net.upstream_incidence().row(tail - 1).sum() == doctest::Approx(2.0));
}

TEST_CASE("impedance blocks: diagonal single-line cases") {
    Mat z, z_inv, z_v;
    impedance_blocks({{1, 0, 1.0, 0.0, 1.0}}, z, z_inv, z_v);
    Mat z_expect(2, 2);
    z_expect << 1, 0, 0, -1;
    CHECK((z - z_expect).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
    CHECK((z_inv - z_expect).cwiseAbs().maxCoeff() == doctest::Approx(0.0).epsilon(1e-12));

    impedance_blocks({{1, 0, 3.0, 4.0, 1.0}}, z, z_inv, z_v);
    CHECK(z(0, 0) == doctest::Approx(3.0 / 25.0));
    CHECK(z(0, 1) == doctest::Approx(4.0 / 25.0));
    CHECK(z(1, 1) == doctest::Approx(-3.0 / 25.0));
}

TEST_CASE("impedance inverse against generic inversion on a random chain") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(0.01, 0.5);
    std::vector<LineParams> lines;
    for (int i = 1; i <= 5; ++i) lines.push_back({i, i - 1, dist(rng), dist(rng), 1.0});
    Mat z, z_inv, z_v;
    impedance_blocks(lines, z, z_inv, z_v);
    const Mat id = Mat::Identity(10, 10);
    CHECK((z * z_inv - id).cwiseAbs().maxCoeff() < 1e-10);
    const Mat oracle = z.inverse();
    CHECK((z_inv - oracle).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("sensitivity matrices: single line and hand-computed 2-chain") {
    const Network one = Network::build({{1, 0, 1.0, 0.0, 1.0}});
    CHECK(one.mp()(0, 0) == doctest::Approx(1.0));
    CHECK(one.mq()(0, 0) == doctest::Approx(0.0));

    // Equal-impedance 2-chain: Mp(i,j) = sum of r over common path lines.
    const Network two = Network::build(chain(2, 0.1, 0.0));
    Mat expect(2, 2);
    expect << 0.1, 0.1, 0.1, 0.2;
    CHECK((two.mp() - expect).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(two.mq().cwiseAbs().maxCoeff() == doctest::Approx(0.0));
}

TEST_CASE("M identity: M = U Z_V blockdiag(D, D)") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dist(0.01, 0.3);
    std::uniform_int_distribution<int> pick(1, 1);
    std::vector<LineParams> lines;
    for (int i = 1; i <= 12; ++i) {
        const int parent = i == 1 ? 0 : std::uniform_int_distribution<int>(0, i - 1)(rng);
        lines.push_back({i, parent, dist(rng), dist(rng), 1.0});
    }
    const Network net = Network::build(lines);
    const int n = net.node_count();
    Mat blk = Mat::Zero(2 * n, 2 * n);
    blk.topLeftCorner(n, n) = net.downstream_incidence();
    blk.bottomRightCorner(n, n) = net.downstream_incidence();
    const Mat m = net.upstream_incidence() * net.voltage_block() * blk;
    CHECK((m.leftCols(n) - net.mp()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((m.rightCols(n) - net.mq()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("sensitivities invariant under sibling subtree relabeling") {
    // Two sibling subtrees below node 1: {2,3} and {4,5}; swap their labels.
    std::vector<LineParams> a = {{1, 0, 0.05, 0.02, 1.0}, {2, 1, 0.03, 0.01, 1.0},
                                 {3, 2, 0.02, 0.02, 1.0}, {4, 1, 0.04, 0.03, 1.0},
                                 {5, 4, 0.01, 0.01, 1.0}};
    std::vector<LineParams> b = {{1, 0, 0.05, 0.02, 1.0}, {4, 1, 0.03, 0.01, 1.0},
                                 {5, 4, 0.02, 0.02, 1.0}, {2, 1, 0.04, 0.03, 1.0},
                                 {3, 2, 0.01, 0.01, 1.0}};
    const Network na = Network::build(a);
    const Network nb = Network::build(b);
    // Permutation mapping a's node ids onto b's: 2<->4, 3<->5.
    const int perm[6] = {0, 1, 4, 5, 2, 3};
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) {
            CHECK(na.mp()(i - 1, j - 1) ==
                  doctest::Approx(nb.mp()(perm[i] - 1, perm[j] - 1)).epsilon(1e-12));
            CHECK(na.mq()(i - 1, j - 1) ==
                  doctest::Approx(nb.mq()(perm[i] - 1, perm[j] - 1)).epsilon(1e-12));
        }
}

TEST_CASE("purely resistive network has zero Mq") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> dist(0.01, 0.4);
    std::vector<LineParams> lines;
    for (int i = 1; i <= 8; ++i) {
        const int parent = i == 1 ? 0 : std::uniform_int_distribution<int>(0, i - 1)(rng);
        lines.push_back({i, parent, dist(rng), 0.0, 1.0});
    }
    const Network net = Network::build(lines);
    CHECK(net.mq().cwiseAbs().maxCoeff() == doctest::Approx(0.0));
}
