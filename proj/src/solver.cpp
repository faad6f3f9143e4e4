#include "dmkt/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>
#include <queue>

namespace dmkt {

namespace {
constexpr unsigned char kBasic = 0;
constexpr unsigned char kAtLower = 1;
constexpr unsigned char kAtUpper = 2;
constexpr unsigned char kFreeZero = 3;
constexpr double kPivotTol = 1e-9;
constexpr double kDirTol = 1e-11;
}  // namespace

VarId LinearModel::add_var(double lb, double ub, double obj, bool integer, std::string name) {
    if (lb > ub)
        throw InputError("solver: variable '" + name + "' has lb > ub");
    obj_.push_back(obj);
    lb_.push_back(lb);
    ub_.push_back(ub);
    integer_.push_back(integer ? 1 : 0);
    cols_.emplace_back();
    var_names_.push_back(std::move(name));
    return static_cast<VarId>(obj_.size() - 1);
}

RowId LinearModel::add_row(const std::vector<std::pair<VarId, double>>& terms, double lo,
                           double hi, std::string name) {
    if (lo > hi) throw InputError("solver: row '" + name + "' has lo > hi");
    const int r = num_rows();
    row_lo_.push_back(lo);
    row_hi_.push_back(hi);
    row_names_.push_back(std::move(name));
    // Merge duplicates before pushing into the column lists.
    std::vector<std::pair<VarId, double>> merged(terms);
    std::sort(merged.begin(), merged.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    size_t out = 0;
    for (size_t i = 0; i < merged.size(); ++i) {
        if (out > 0 && merged[out - 1].first == merged[i].first) {
            merged[out - 1].second += merged[i].second;
        } else {
            merged[out++] = merged[i];
        }
    }
    merged.resize(out);
    for (const auto& [v, coef] : merged) {
        if (v < 0 || v >= num_vars())
            throw InputError("solver: row references unknown variable");
        if (coef != 0.0) cols_[static_cast<size_t>(v)].emplace_back(r, coef);
    }
    return r;
}

void LinearModel::set_objective(VarId v, double coef) { obj_[static_cast<size_t>(v)] = coef; }

void LinearModel::set_bounds(VarId v, double lb, double ub) {
    if (lb > ub) throw InputError("solver: set_bounds with lb > ub");
    lb_[static_cast<size_t>(v)] = lb;
    ub_[static_cast<size_t>(v)] = ub;
}

void LinearModel::set_row_bounds(RowId r, double lo, double hi) {
    if (lo > hi) throw InputError("solver: set_row_bounds with lo > hi");
    row_lo_[static_cast<size_t>(r)] = lo;
    row_hi_[static_cast<size_t>(r)] = hi;
}

double LinearModel::row_activity(RowId r, const Vec& x) const {
    double act = 0.0;
    for (int v = 0; v < num_vars(); ++v)
        for (const auto& [row, coef] : cols_[static_cast<size_t>(v)])
            if (row == r) act += coef * x(v);
    return act;
}

double LinearModel::max_violation(const Vec& x) const {
    Vec act = Vec::Zero(num_rows());
    for (int v = 0; v < num_vars(); ++v)
        for (const auto& [row, coef] : cols_[static_cast<size_t>(v)]) act(row) += coef * x(v);
    double viol = 0.0;
    for (int r = 0; r < num_rows(); ++r) {
        viol = std::max(viol, row_lo_[static_cast<size_t>(r)] - act(r));
        viol = std::max(viol, act(r) - row_hi_[static_cast<size_t>(r)]);
    }
    for (int v = 0; v < num_vars(); ++v) {
        viol = std::max(viol, lb_[static_cast<size_t>(v)] - x(v));
        viol = std::max(viol, x(v) - ub_[static_cast<size_t>(v)]);
    }
    return viol;
}

double LinearModel::objective_value(const Vec& x) const {
    double obj = 0.0;
    for (int v = 0; v < num_vars(); ++v) obj += obj_[static_cast<size_t>(v)] * x(v);
    return obj;
}

// ---------------------------------------------------------------------------

class Simplex {
public:
    Simplex(const LinearModel& model, const SolveOptions& opt)
        : model_(model), opt_(opt), n_(model.num_vars()), m_(model.num_rows()),
          total_(n_ + m_) {
        cost_.assign(static_cast<size_t>(total_), 0.0);
        lo_.assign(static_cast<size_t>(total_), 0.0);
        hi_.assign(static_cast<size_t>(total_), 0.0);
        for (int j = 0; j < n_; ++j) {
            cost_[static_cast<size_t>(j)] = model.objective_coef(j);
            lo_[static_cast<size_t>(j)] = model.lb(j);
            hi_[static_cast<size_t>(j)] = model.ub(j);
        }
        for (int r = 0; r < m_; ++r) {
            lo_[static_cast<size_t>(n_ + r)] = model.row_lo(r);
            hi_[static_cast<size_t>(n_ + r)] = model.row_hi(r);
        }
        x_ = Vec::Zero(total_);
    }

    Solution run(const Basis* warm) {
        const auto t0 = std::chrono::steady_clock::now();
        Solution sol;
        if (!load_basis(warm)) set_slack_basis();

        SolveStatus status = phase1();
        if (status == SolveStatus::optimal) status = phase2();

        sol.status = status;
        sol.stats.simplex_iterations = iters_;
        sol.stats.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        sol.x = x_.head(n_);
        sol.objective = model_.objective_value(sol.x);
        sol.basis.basic = basic_;
        sol.basis.stat.assign(vstat_.begin(), vstat_.end());
        if (status == SolveStatus::optimal) {
            const Vec y = btran_cost();
            sol.row_dual = y.size() ? y : Vec::Zero(0);
            sol.reduced_cost = Vec::Zero(n_);
            for (int j = 0; j < n_; ++j)
                sol.reduced_cost(j) = cost_[static_cast<size_t>(j)] - dot_col(j, y);
        }
        return sol;
    }

private:
    const LinearModel& model_;
    const SolveOptions& opt_;
    int n_, m_, total_;
    std::vector<double> cost_, lo_, hi_;
    Vec x_;
    std::vector<int> basic_;              // column per row
    std::vector<int> basic_pos_;          // column -> row position or -1
    std::vector<unsigned char> vstat_;
    Mat binv_;
    long iters_ = 0;
    int degen_run_ = 0;
    bool bland_ = false;
    int pivots_since_refactor_ = 0;

    // Column j of the standardized matrix [A | -I].
    void col_entries(int j, std::vector<std::pair<int, double>>& out) const {
        out.clear();
        if (j < n_) {
            for (const auto& e : model_.col(j)) out.push_back(e);
        } else {
            out.emplace_back(j - n_, -1.0);
        }
    }

    double dot_col(int j, const Vec& y) const {
        if (j >= n_) return -y(j - n_);
        double s = 0.0;
        for (const auto& [r, c] : model_.col(j)) s += c * y(r);
        return s;
    }

    Vec ftran(int j) const {
        Vec w = Vec::Zero(m_);
        if (j < n_) {
            for (const auto& [r, c] : model_.col(j)) w += c * binv_.col(r);
        } else {
            w = -binv_.col(j - n_);
        }
        return w;
    }

    Vec btran_cost() const {
        Vec cb(m_);
        for (int i = 0; i < m_; ++i) cb(i) = cost_[static_cast<size_t>(basic_[static_cast<size_t>(i)])];
        return binv_.transpose() * cb;
    }

    void set_slack_basis() {
        basic_.resize(static_cast<size_t>(m_));
        basic_pos_.assign(static_cast<size_t>(total_), -1);
        vstat_.assign(static_cast<size_t>(total_), kAtLower);
        for (int j = 0; j < total_; ++j) vstat_[static_cast<size_t>(j)] = nonbasic_status(j);
        for (int r = 0; r < m_; ++r) {
            basic_[static_cast<size_t>(r)] = n_ + r;
            basic_pos_[static_cast<size_t>(n_ + r)] = r;
            vstat_[static_cast<size_t>(n_ + r)] = kBasic;
        }
        binv_ = -Mat::Identity(m_, m_);  // basis of slack columns is -I
        set_nonbasic_values();
        recompute_basic_values();
    }

    unsigned char nonbasic_status(int j) const {
        const double l = lo_[static_cast<size_t>(j)], u = hi_[static_cast<size_t>(j)];
        if (std::isfinite(l)) return kAtLower;
        if (std::isfinite(u)) return kAtUpper;
        return kFreeZero;
    }

    void set_nonbasic_values() {
        for (int j = 0; j < total_; ++j) {
            switch (vstat_[static_cast<size_t>(j)]) {
                case kAtLower: x_(j) = lo_[static_cast<size_t>(j)]; break;
                case kAtUpper: x_(j) = hi_[static_cast<size_t>(j)]; break;
                case kFreeZero: x_(j) = 0.0; break;
                default: break;
            }
        }
    }

    bool load_basis(const Basis* warm) {
        if (!warm || warm->empty()) return false;
        if (static_cast<int>(warm->basic.size()) != m_ ||
            static_cast<int>(warm->stat.size()) != total_)
            return false;
        basic_ = warm->basic;
        vstat_.assign(warm->stat.begin(), warm->stat.end());
        basic_pos_.assign(static_cast<size_t>(total_), -1);
        for (int r = 0; r < m_; ++r) {
            const int j = basic_[static_cast<size_t>(r)];
            if (j < 0 || j >= total_ || basic_pos_[static_cast<size_t>(j)] != -1) return false;
            basic_pos_[static_cast<size_t>(j)] = r;
            vstat_[static_cast<size_t>(j)] = kBasic;
        }
        // Bounds may have changed since the basis was stored; repair statuses.
        for (int j = 0; j < total_; ++j) {
            if (vstat_[static_cast<size_t>(j)] == kBasic) continue;
            unsigned char s = vstat_[static_cast<size_t>(j)];
            if (s == kAtLower && !std::isfinite(lo_[static_cast<size_t>(j)])) s = nonbasic_status(j);
            if (s == kAtUpper && !std::isfinite(hi_[static_cast<size_t>(j)])) s = nonbasic_status(j);
            if (s == kFreeZero &&
                (std::isfinite(lo_[static_cast<size_t>(j)]) || std::isfinite(hi_[static_cast<size_t>(j)])))
                s = nonbasic_status(j);
            vstat_[static_cast<size_t>(j)] = s;
        }
        if (!refactor()) return false;
        set_nonbasic_values();
        recompute_basic_values();
        return true;
    }

    bool refactor() {
        if (m_ == 0) {
            binv_.resize(0, 0);
            return true;
        }
        Mat b = Mat::Zero(m_, m_);
        std::vector<std::pair<int, double>> entries;
        for (int r = 0; r < m_; ++r) {
            col_entries(basic_[static_cast<size_t>(r)], entries);
            for (const auto& [row, coef] : entries) b(row, r) = coef;
        }
        Eigen::PartialPivLU<Mat> lu(b);
        const Mat id = Mat::Identity(m_, m_);
        Mat candidate = lu.solve(id);
        if (!candidate.allFinite()) return false;
        if ((b * candidate - id).cwiseAbs().maxCoeff() > 1e-6) return false;
        binv_ = std::move(candidate);
        pivots_since_refactor_ = 0;
        return true;
    }

    void recompute_basic_values() {
        if (m_ == 0) return;
        Vec rhs = Vec::Zero(m_);
        std::vector<std::pair<int, double>> entries;
        for (int j = 0; j < total_; ++j) {
            if (vstat_[static_cast<size_t>(j)] == kBasic || x_(j) == 0.0) continue;
            col_entries(j, entries);
            for (const auto& [row, coef] : entries) rhs(row) -= coef * x_(j);
        }
        const Vec xb = binv_ * rhs;
        for (int r = 0; r < m_; ++r) x_(basic_[static_cast<size_t>(r)]) = xb(r);
    }

    double infeasibility(int j) const {
        const double v = x_(j);
        if (v < lo_[static_cast<size_t>(j)]) return lo_[static_cast<size_t>(j)] - v;
        if (v > hi_[static_cast<size_t>(j)]) return v - hi_[static_cast<size_t>(j)];
        return 0.0;
    }

    double max_primal_infeasibility() const {
        double worst = 0.0;
        for (int r = 0; r < m_; ++r)
            worst = std::max(worst, infeasibility(basic_[static_cast<size_t>(r)]));
        return worst;
    }

    // Entering candidate under given reduced costs; returns (var, direction).
    std::pair<int, int> price(const Vec& y, bool phase1) {
        int best = -1, best_dir = 0;
        double best_score = phase1 ? opt_.feas_tol : opt_.opt_tol;
        for (int j = 0; j < total_; ++j) {
            const unsigned char s = vstat_[static_cast<size_t>(j)];
            if (s == kBasic) continue;
            if (lo_[static_cast<size_t>(j)] == hi_[static_cast<size_t>(j)]) continue;  // fixed
            const double base_cost = phase1 ? 0.0 : cost_[static_cast<size_t>(j)];
            const double d = base_cost - dot_col(j, y);
            double score = 0.0;
            int dir = 0;
            if (s == kAtLower && d < -best_score) {
                score = -d;
                dir = 1;
            } else if (s == kAtUpper && d > best_score) {
                score = d;
                dir = -1;
            } else if (s == kFreeZero && std::abs(d) > best_score) {
                score = std::abs(d);
                dir = d < 0 ? 1 : -1;
            } else {
                continue;
            }
            if (bland_) return {j, dir};  // first eligible by index
            if (score > best_score) {
                best_score = score;
                best = j;
                best_dir = dir;
            }
        }
        return {best, best_dir};
    }

    struct RatioResult {
        double step = kInf;
        int leave_pos = -1;       // basic position, or -1 for bound flip
        unsigned char leave_to = kAtLower;
    };

    RatioResult ratio_test(int q, int dir, const Vec& w, bool phase1) const {
        RatioResult rr;
        // Entering variable's own span.
        const double span = hi_[static_cast<size_t>(q)] - lo_[static_cast<size_t>(q)];
        if (std::isfinite(span)) {
            rr.step = span;
            rr.leave_pos = -1;
            rr.leave_to = dir > 0 ? kAtUpper : kAtLower;
        }
        double best_pivot = 0.0;
        for (int r = 0; r < m_; ++r) {
            const int b = basic_[static_cast<size_t>(r)];
            const double move = -w(r) * dir;  // velocity of basic value
            if (std::abs(move) < kDirTol) continue;
            const double v = x_(b);
            const double l = lo_[static_cast<size_t>(b)], u = hi_[static_cast<size_t>(b)];
            double bound = kInf;
            unsigned char to = kAtLower;
            if (move > 0) {
                if (phase1 && v < l - opt_.feas_tol) {
                    bound = l;  // infeasible from below, rejoining its lower bound
                    to = kAtLower;
                } else if (v <= u + opt_.feas_tol) {
                    bound = u;
                    to = kAtUpper;
                } else {
                    continue;  // already above upper going up: slope is priced in
                }
            } else {
                if (phase1 && v > u + opt_.feas_tol) {
                    bound = u;
                    to = kAtUpper;
                } else if (v >= l - opt_.feas_tol) {
                    bound = l;
                    to = kAtLower;
                } else {
                    continue;
                }
            }
            if (!std::isfinite(bound)) continue;
            double step = (bound - v) / move;
            if (step < 0) step = 0;  // bound already crossed within tolerance
            const double piv = std::abs(w(r));
            bool take = false;
            if (step < rr.step - 1e-12) {
                take = true;
            } else if (step < rr.step + 1e-12 && rr.leave_pos >= 0) {
                // Tie between pivots: stability by |pivot|, or index under Bland.
                take = bland_ ? b < basic_[static_cast<size_t>(rr.leave_pos)]
                              : piv > best_pivot;
            }
            if (take) {
                rr.step = std::min(step, rr.step);
                rr.leave_pos = r;
                rr.leave_to = to;
                best_pivot = piv;
            }
        }
        return rr;
    }

    void apply_step(int q, int dir, const Vec& w, const RatioResult& rr) {
        const double delta = rr.step * dir;
        if (rr.step > 0) {
            x_(q) += delta;
            for (int r = 0; r < m_; ++r) x_(basic_[static_cast<size_t>(r)]) -= w(r) * delta;
        }
        if (rr.leave_pos < 0) {
            vstat_[static_cast<size_t>(q)] = rr.leave_to;  // bound-to-bound flip
            x_(q) = rr.leave_to == kAtUpper ? hi_[static_cast<size_t>(q)] : lo_[static_cast<size_t>(q)];
            return;
        }
        const int leaving = basic_[static_cast<size_t>(rr.leave_pos)];
        x_(leaving) = rr.leave_to == kAtUpper ? hi_[static_cast<size_t>(leaving)]
                                              : lo_[static_cast<size_t>(leaving)];
        vstat_[static_cast<size_t>(leaving)] = rr.leave_to;
        basic_pos_[static_cast<size_t>(leaving)] = -1;
        basic_[static_cast<size_t>(rr.leave_pos)] = q;
        basic_pos_[static_cast<size_t>(q)] = rr.leave_pos;
        vstat_[static_cast<size_t>(q)] = kBasic;
        update_binv(w, rr.leave_pos);
        if (++pivots_since_refactor_ >= 150) {
            if (!refactor()) throw SolverError("simplex: basis refactorization failed");
            recompute_basic_values();
        }
    }

    void update_binv(const Vec& w, int r) {
        const double piv = w(r);
        if (std::abs(piv) < kPivotTol) {
            if (!refactor()) throw SolverError("simplex: singular pivot");
            recompute_basic_values();
            return;
        }
        binv_.row(r) /= piv;
        for (int i = 0; i < m_; ++i) {
            if (i == r) continue;
            const double f = w(i);
            if (f != 0.0) binv_.row(i) -= f * binv_.row(r);
        }
    }

    void note_step(double step) {
        if (step > 1e-10) {
            degen_run_ = 0;
            bland_ = false;
        } else if (++degen_run_ > 80) {
            bland_ = true;
        }
    }

    SolveStatus phase1() {
        while (true) {
            if (iters_ >= opt_.max_iterations) return SolveStatus::limit;
            if (max_primal_infeasibility() <= opt_.feas_tol) return SolveStatus::optimal;
            Vec sigma = Vec::Zero(m_);
            for (int r = 0; r < m_; ++r) {
                const int b = basic_[static_cast<size_t>(r)];
                if (x_(b) > hi_[static_cast<size_t>(b)] + opt_.feas_tol) sigma(r) = 1.0;
                else if (x_(b) < lo_[static_cast<size_t>(b)] - opt_.feas_tol) sigma(r) = -1.0;
            }
            const Vec y = m_ ? Vec(binv_.transpose() * sigma) : Vec();
            const auto [q, dir] = price(y, /*phase1=*/true);
            if (q < 0) return SolveStatus::infeasible;
            const Vec w = ftran(q);
            const RatioResult rr = ratio_test(q, dir, w, /*phase1=*/true);
            if (!std::isfinite(rr.step)) {
                // A strictly improving unbounded ray cannot exist for the
                // infeasibility objective; treat as numerical trouble.
                if (!refactor()) throw SolverError("simplex: phase-1 ray");
                recompute_basic_values();
                continue;
            }
            apply_step(q, dir, w, rr);
            note_step(rr.step);
            ++iters_;
        }
    }

    SolveStatus phase2() {
        while (true) {
            if (iters_ >= opt_.max_iterations) return SolveStatus::limit;
            const Vec y = btran_cost();
            const auto [q, dir] = price(y, /*phase1=*/false);
            if (q < 0) return SolveStatus::optimal;
            const Vec w = ftran(q);
            const RatioResult rr = ratio_test(q, dir, w, /*phase1=*/false);
            if (!std::isfinite(rr.step)) return SolveStatus::unbounded;
            apply_step(q, dir, w, rr);
            note_step(rr.step);
            ++iters_;
            // Bound drift guard: basic values can creep outside bounds after
            // many updates; fall back to phase 1 if that happens.
            if (pivots_since_refactor_ == 0 && max_primal_infeasibility() > 10 * opt_.feas_tol) {
                const SolveStatus st = phase1();
                if (st != SolveStatus::optimal) return st;
            }
        }
    }
};

Solution solve_lp(const LinearModel& model, const SolveOptions& opt, const Basis* warm) {
    Simplex spx(model, opt);
    return spx.run(warm);
}

namespace {

struct BbNode {
    double bound = -kInf;
    long seq = 0;
    std::vector<std::pair<VarId, std::pair<double, double>>> fixes;
    Basis basis;
};

struct BbOrder {
    bool operator()(const std::shared_ptr<BbNode>& a, const std::shared_ptr<BbNode>& b) const {
        if (a->bound != b->bound) return a->bound > b->bound;  // min-heap on bound
        return a->seq > b->seq;
    }
};

}  // namespace

Solution solve_milp(const LinearModel& model, const SolveOptions& opt) {
    std::vector<VarId> ints;
    for (int v = 0; v < model.num_vars(); ++v)
        if (model.is_integer(v)) ints.push_back(v);
    if (ints.empty()) return solve_lp(model, opt);

    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    LinearModel work = model;
    auto solve_node = [&](const BbNode& node, const Basis* warm) {
        for (int v : ints) work.set_bounds(v, model.lb(v), model.ub(v));
        for (const auto& [v, b] : node.fixes) work.set_bounds(v, b.first, b.second);
        return solve_lp(work, opt, warm);
    };

    Solution incumbent;
    incumbent.status = SolveStatus::infeasible;
    double cutoff = kInf;
    long seq = 0;
    SolveStats stats;

    std::priority_queue<std::shared_ptr<BbNode>, std::vector<std::shared_ptr<BbNode>>, BbOrder>
        open;
    auto root = std::make_shared<BbNode>();
    root->seq = seq++;
    open.push(root);

    bool hit_limit = false;
    while (!open.empty()) {
        if (elapsed() > opt.time_limit_sec || stats.nodes >= opt.max_nodes) {
            hit_limit = true;
            break;
        }
        auto node = open.top();
        open.pop();
        if (node->bound > cutoff - 1e-12 &&
            node->bound > cutoff - opt.mip_rel_gap * std::max(1.0, std::abs(cutoff)))
            continue;  // pruned by incumbent
        Solution rel = solve_node(*node, node->basis.empty() ? nullptr : &node->basis);
        ++stats.nodes;
        stats.simplex_iterations += rel.stats.simplex_iterations;
        if (rel.status == SolveStatus::limit) {
            hit_limit = true;
            break;
        }
        if (rel.status != SolveStatus::optimal) continue;  // infeasible branch
        if (rel.objective > cutoff - 1e-12) continue;

        // Most fractional integer variable; ties to the lowest index.
        int branch_var = -1;
        double best_frac = opt.int_tol;
        for (int v : ints) {
            const double val = rel.x(v);
            const double frac = std::abs(val - std::round(val));
            if (frac > best_frac) {
                best_frac = frac;
                branch_var = v;
            }
        }
        if (branch_var < 0) {
            // Snap integers and reprice so the incumbent objective is exact
            // for the rounded assignment.
            for (int v : ints) work.set_bounds(v, std::round(rel.x(v)), std::round(rel.x(v)));
            Solution snapped = solve_lp(work, opt, &rel.basis);
            stats.simplex_iterations += snapped.stats.simplex_iterations;
            if (snapped.status == SolveStatus::optimal && snapped.objective < cutoff - 1e-12) {
                cutoff = snapped.objective;
                incumbent = snapped;
                for (int v : ints) incumbent.x(v) = std::round(incumbent.x(v));
            }
            continue;
        }
        const double val = rel.x(branch_var);
        double node_lb = model.lb(branch_var), node_ub = model.ub(branch_var);
        for (const auto& [v, b] : node->fixes)
            if (v == branch_var) {
                node_lb = b.first;
                node_ub = b.second;
            }
        auto down = std::make_shared<BbNode>();
        down->bound = rel.objective;
        down->seq = seq++;
        down->fixes = node->fixes;
        down->fixes.emplace_back(branch_var, std::make_pair(node_lb, std::floor(val)));
        down->basis = rel.basis;
        auto up = std::make_shared<BbNode>();
        up->bound = rel.objective;
        up->seq = seq++;
        up->fixes = node->fixes;
        up->fixes.emplace_back(branch_var, std::make_pair(std::ceil(val), node_ub));
        up->basis = rel.basis;
        open.push(down);
        open.push(up);
    }

    incumbent.stats = stats;
    incumbent.stats.seconds = elapsed();
    if (incumbent.status != SolveStatus::optimal && hit_limit)
        incumbent.status = SolveStatus::limit;
    incumbent.row_dual = Vec();  // MILPs have no duals; reprice via a fixed LP
    incumbent.reduced_cost = Vec();
    return incumbent;
}

}  // namespace dmkt
