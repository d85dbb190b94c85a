#pragma once

#include "arccover/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace arccover {

enum class LpStatus { optimal, infeasible, unbounded };

/// A linear program in the form
///     maximize c^T x
///     subject to rows  a^T x (= | <=) b
///     and per-variable bounds lo <= x <= hi (hi may be +infinity).
/// All data is exact rational.
class LinearProgram {
  public:
    int add_var(Rational lo, Rational hi, Rational cost);
    int add_var_unbounded_above(Rational lo, Rational cost);
    void add_le(std::vector<std::pair<int, Rational>> terms, Rational rhs);
    void add_eq(std::vector<std::pair<int, Rational>> terms, Rational rhs);

    int var_count() const { return static_cast<int>(cost_.size()); }
    int row_count() const { return static_cast<int>(rows_.size()); }

    struct Row {
        std::vector<std::pair<int, Rational>> terms;
        Rational rhs;
        bool is_eq;
    };

    const std::vector<Row>& rows() const { return rows_; }
    const std::vector<Rational>& costs() const { return cost_; }
    const Rational& lo(int j) const { return lo_[j]; }
    const Rational& hi(int j) const { return hi_[j]; }
    bool hi_unbounded(int j) const { return hi_inf_[j] != 0; }

  private:
    std::vector<Rational> cost_;
    std::vector<Rational> lo_, hi_;
    std::vector<uint8_t> hi_inf_;
    std::vector<Row> rows_;
};

struct LpResult {
    LpStatus status = LpStatus::optimal;
    Rational objective;
    std::vector<Rational> values; // structural variables only
    long pivots = 0;
};

/// Exact bounded-variable tableau simplex.
///
/// The primal solve runs a textbook two-phase method (artificial columns
/// for initially violated rows).  After bound changes the current basis
/// stays dual feasible, so branch-and-bound re-solves use the dual
/// simplex from wherever the tableau happens to be.  Pricing is Dantzig
/// with an automatic switch to Bland's rule while degenerate, which keeps
/// the method exact, cycle-free and deterministic.
class Simplex {
  public:
    explicit Simplex(const LinearProgram& lp);

    LpStatus solve_primal();
    LpStatus reoptimize_dual();

    /// Changes the bounds of a structural variable between solves.
    /// The variable keeps its current value if that value is still a
    /// bound; otherwise it snaps to the nearer bound and basic values
    /// are updated.
    void change_bounds(int var, const Rational& lo, const Rational& hi);

    Rational objective() const;
    Rational value(int var) const;
    std::vector<Rational> structural_values() const;
    long pivots() const { return pivots_; }

    /// Exact post-check: every row and bound of the original program is
    /// satisfied by the current point.
    bool verify_current_point() const;

    /// (row, sign) of each artificial column, in creation order.
    const std::vector<std::pair<int, int>>& artificials() const { return artificials_; }

  private:
    std::vector<std::pair<int, int>> artificials_;
    enum class VStat : uint8_t { basic, at_lower, at_upper };

    int n_structural_;
    int n_total_; // structural + slack + artificial
    int m_;
    std::vector<std::vector<Rational>> tab_; // m x n_total, equals B^{-1} A
    std::vector<Rational> beta_;             // current values of basic vars
    std::vector<Rational> drow_;             // reduced costs of active objective
    std::vector<int> basis_;                 // var index basic in each row
    std::vector<VStat> stat_;
    std::vector<Rational> lo_, hi_;
    std::vector<uint8_t> hi_inf_;
    std::vector<Rational> cost_;     // real objective (maximize)
    std::vector<Rational> rhs_;      // original row right-hand sides
    const LinearProgram* lp_;
    long pivots_ = 0;

    Rational nonbasic_value(int j) const;
    void compute_beta_from_scratch();
    void compute_drow(const std::vector<Rational>& costs);
    void pivot(int row, int col, const Rational& step, int dir, VStat leaving_stat);
    LpStatus primal_loop(const std::vector<Rational>& costs, bool phase_one);
    bool is_fixed(int j) const { return !hi_inf_[j] && lo_[j] == hi_[j]; }
};

/// Convenience wrapper: build, solve, extract.
LpResult solve_lp(const LinearProgram& lp);

} // namespace arccover
