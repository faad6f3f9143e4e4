#pragma once

// Small LP/MILP engine: a bounded-variable primal simplex with an explicit
// basis inverse, plus best-first branch and bound over binary/integer
// variables. Problems here are a few thousand variables with a few hundred
// active rows, so dense basis algebra is the simple and adequate choice.
// Any engine with the same surface (variables, range rows, duals, bound
// fixing) could be swapped in behind this header.

#include "dmkt/common.hpp"

#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace dmkt {

constexpr double kInf = std::numeric_limits<double>::infinity();

using VarId = int;
using RowId = int;

enum class SolveStatus { optimal, infeasible, unbounded, limit };

struct SolveStats {
    long simplex_iterations = 0;
    long nodes = 0;
    double seconds = 0.0;
};

struct Basis {
    std::vector<int> basic;           // column index per row
    std::vector<unsigned char> stat;  // per column: 0 basic, 1 at lower, 2 at upper, 3 free at zero
    bool empty() const { return basic.empty() && stat.empty(); }
};

struct Solution {
    SolveStatus status = SolveStatus::infeasible;
    double objective = 0.0;
    Vec x;             // structural variable values
    Vec row_dual;      // y_r = dObj/d(row bound shift); >= 0 when lo binds, <= 0 when hi binds
    Vec reduced_cost;  // structural reduced costs
    Basis basis;
    SolveStats stats;

    bool optimal() const { return status == SolveStatus::optimal; }
};

struct SolveOptions {
    double feas_tol = 1e-9;
    double opt_tol = 1e-9;
    double int_tol = 1e-7;
    double mip_rel_gap = 1e-6;
    long max_iterations = 5'000'000;
    long max_nodes = 2'000'000;
    double time_limit_sec = 600.0;
};

class LinearModel {
public:
    VarId add_var(double lb, double ub, double obj = 0.0, bool integer = false,
                  std::string name = {});
    // Range row lo <= sum(coef * var) <= hi. Duplicate vars in terms are merged.
    RowId add_row(const std::vector<std::pair<VarId, double>>& terms, double lo, double hi,
                  std::string name = {});
    RowId add_eq(const std::vector<std::pair<VarId, double>>& terms, double rhs,
                 std::string name = {}) {
        return add_row(terms, rhs, rhs, std::move(name));
    }
    RowId add_le(const std::vector<std::pair<VarId, double>>& terms, double hi,
                 std::string name = {}) {
        return add_row(terms, -kInf, hi, std::move(name));
    }
    RowId add_ge(const std::vector<std::pair<VarId, double>>& terms, double lo,
                 std::string name = {}) {
        return add_row(terms, lo, kInf, std::move(name));
    }

    void set_objective(VarId v, double coef);
    void set_bounds(VarId v, double lb, double ub);
    void set_row_bounds(RowId r, double lo, double hi);

    int num_vars() const { return static_cast<int>(obj_.size()); }
    int num_rows() const { return static_cast<int>(row_lo_.size()); }
    double lb(VarId v) const { return lb_[static_cast<size_t>(v)]; }
    double ub(VarId v) const { return ub_[static_cast<size_t>(v)]; }
    double objective_coef(VarId v) const { return obj_[static_cast<size_t>(v)]; }
    bool is_integer(VarId v) const { return integer_[static_cast<size_t>(v)] != 0; }
    const std::string& var_name(VarId v) const { return var_names_[static_cast<size_t>(v)]; }
    const std::string& row_name(RowId r) const { return row_names_[static_cast<size_t>(r)]; }
    double row_lo(RowId r) const { return row_lo_[static_cast<size_t>(r)]; }
    double row_hi(RowId r) const { return row_hi_[static_cast<size_t>(r)]; }
    const std::vector<std::pair<int, double>>& col(VarId v) const {
        return cols_[static_cast<size_t>(v)];
    }

    double row_activity(RowId r, const Vec& x) const;
    // Largest bound violation over rows and variable bounds.
    double max_violation(const Vec& x) const;
    double objective_value(const Vec& x) const;

private:
    friend class Simplex;
    std::vector<double> obj_, lb_, ub_;
    std::vector<unsigned char> integer_;
    std::vector<std::vector<std::pair<int, double>>> cols_;  // (row, coef) per variable
    std::vector<double> row_lo_, row_hi_;
    std::vector<std::string> var_names_, row_names_;
};

// Solves the continuous relaxation (integrality flags ignored).
Solution solve_lp(const LinearModel& model, const SolveOptions& opt = {},
                  const Basis* warm = nullptr);

// Branch and bound; duals are not populated (fix integers and re-solve the
// LP to price). Falls back to solve_lp when no integer variables exist.
Solution solve_milp(const LinearModel& model, const SolveOptions& opt = {});

}  // namespace dmkt
