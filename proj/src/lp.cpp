#include "arccover/lp.hpp"

#include "arccover/errors.hpp"

#include <algorithm>
#include <limits>

namespace arccover {

int LinearProgram::add_var(Rational lo, Rational hi, Rational cost) {
    if (hi < lo) throw validation_error("variable with hi < lo");
    cost_.push_back(std::move(cost));
    lo_.push_back(std::move(lo));
    hi_.push_back(std::move(hi));
    hi_inf_.push_back(0);
    return var_count() - 1;
}

int LinearProgram::add_var_unbounded_above(Rational lo, Rational cost) {
    cost_.push_back(std::move(cost));
    lo_.push_back(std::move(lo));
    hi_.push_back(Rational(0));
    hi_inf_.push_back(1);
    return var_count() - 1;
}

void LinearProgram::add_le(std::vector<std::pair<int, Rational>> terms, Rational rhs) {
    rows_.push_back({std::move(terms), std::move(rhs), false});
}

void LinearProgram::add_eq(std::vector<std::pair<int, Rational>> terms, Rational rhs) {
    rows_.push_back({std::move(terms), std::move(rhs), true});
}

// ---------------------------------------------------------------------------

Simplex::Simplex(const LinearProgram& lp) : lp_(&lp) {
    n_structural_ = lp.var_count();
    m_ = lp.row_count();
    n_total_ = n_structural_ + m_; // slack per row; artificials appended later

    lo_.assign(lp.var_count(), Rational(0));
    hi_.assign(lp.var_count(), Rational(0));
    hi_inf_.assign(lp.var_count(), 0);
    cost_.assign(lp.var_count(), Rational(0));
    for (int j = 0; j < n_structural_; ++j) {
        lo_[j] = lp.lo(j);
        hi_[j] = lp.hi(j);
        hi_inf_[j] = lp.hi_unbounded(j) ? 1 : 0;
        cost_[j] = lp.costs()[j];
    }
    for (int i = 0; i < m_; ++i) {
        const auto& row = lp.rows()[i];
        lo_.push_back(Rational(0));
        if (row.is_eq) {
            hi_.push_back(Rational(0));
            hi_inf_.push_back(0);
        } else {
            hi_.push_back(Rational(0));
            hi_inf_.push_back(1);
        }
        cost_.push_back(Rational(0));
        rhs_.push_back(row.rhs);
    }

    tab_.assign(m_, std::vector<Rational>(n_total_, Rational(0)));
    for (int i = 0; i < m_; ++i) {
        for (const auto& [j, a] : lp.rows()[i].terms) {
            if (j < 0 || j >= n_structural_) throw validation_error("row term out of range");
            tab_[i][j] += a;
        }
        tab_[i][n_structural_ + i] = Rational(1);
    }

    basis_.resize(m_);
    stat_.assign(n_total_, VStat::at_lower);
    for (int i = 0; i < m_; ++i) {
        basis_[i] = n_structural_ + i;
        stat_[n_structural_ + i] = VStat::basic;
    }
    beta_.assign(m_, Rational(0));
    compute_beta_from_scratch();
    drow_.assign(n_total_, Rational(0));
}

Rational Simplex::nonbasic_value(int j) const {
    return stat_[j] == VStat::at_upper ? hi_[j] : lo_[j];
}

void Simplex::compute_beta_from_scratch() {
    for (int i = 0; i < m_; ++i) {
        Rational v = rhs_[i];
        for (int j = 0; j < n_total_; ++j) {
            if (stat_[j] == VStat::basic) continue;
            if (tab_[i][j].is_zero()) continue;
            v -= tab_[i][j] * nonbasic_value(j);
        }
        beta_[i] = v;
    }
}

void Simplex::compute_drow(const std::vector<Rational>& costs) {
    // d = c - c_B^T tab
    drow_.assign(n_total_, Rational(0));
    for (int j = 0; j < n_total_; ++j) drow_[j] = j < (int)costs.size() ? costs[j] : Rational(0);
    for (int i = 0; i < m_; ++i) {
        int b = basis_[i];
        Rational cb = b < (int)costs.size() ? costs[b] : Rational(0);
        if (cb.is_zero()) continue;
        for (int j = 0; j < n_total_; ++j) {
            if (tab_[i][j].is_zero()) continue;
            drow_[j] -= cb * tab_[i][j];
        }
    }
}

void Simplex::pivot(int row, int col, const Rational& step, int dir, VStat leaving_stat) {
    // move entering variable by dir*step, then swap it into the basis
    Rational delta = step;
    if (dir < 0) delta = -delta;
    if (!delta.is_zero()) {
        for (int i = 0; i < m_; ++i) {
            if (tab_[i][col].is_zero()) continue;
            beta_[i] -= tab_[i][col] * delta;
        }
    }
    Rational entering_value = nonbasic_value(col) + delta;

    int leaving = basis_[row];
    stat_[leaving] = leaving_stat;
    basis_[row] = col;
    stat_[col] = VStat::basic;
    beta_[row] = entering_value;

    // row reduce so column `col` becomes a unit vector
    Rational piv = tab_[row][col];
    if (piv.is_zero()) throw integrity_error("simplex pivot on zero element");
    if (!(piv == Rational(1)))
        for (int j = 0; j < n_total_; ++j)
            if (!tab_[row][j].is_zero()) tab_[row][j] /= piv;
    for (int i = 0; i < m_; ++i) {
        if (i == row) continue;
        const Rational f = tab_[i][col];
        if (f.is_zero()) continue;
        for (int j = 0; j < n_total_; ++j) {
            if (tab_[row][j].is_zero()) continue;
            tab_[i][j] -= f * tab_[row][j];
        }
    }
    const Rational fd = drow_[col];
    if (!fd.is_zero())
        for (int j = 0; j < n_total_; ++j) {
            if (tab_[row][j].is_zero()) continue;
            drow_[j] -= fd * tab_[row][j];
        }
    ++pivots_;
}

LpStatus Simplex::primal_loop(const std::vector<Rational>& costs, bool phase_one) {
    compute_drow(costs);
    int stall = 0;
    bool bland = false;
    const int kStallLimit = 30;
    while (true) {
        // entering variable
        int enter = -1, dir = 0;
        Rational best_d(0);
        for (int j = 0; j < n_total_; ++j) {
            if (stat_[j] == VStat::basic || is_fixed(j)) continue;
            const Rational& d = drow_[j];
            if (stat_[j] == VStat::at_lower && d.sign() > 0) {
                if (bland) { enter = j; dir = 1; break; }
                if (enter < 0 || d > best_d) { enter = j; dir = 1; best_d = d; }
            } else if (stat_[j] == VStat::at_upper && d.sign() < 0) {
                Rational nd = -d;
                if (bland) { enter = j; dir = -1; break; }
                if (enter < 0 || nd > best_d) { enter = j; dir = -1; best_d = nd; }
            }
        }
        if (enter < 0) return LpStatus::optimal;

        // ratio test
        bool has_limit = false;
        Rational best_t(0);
        int leave_row = -1;
        VStat leave_stat = VStat::at_lower;
        for (int i = 0; i < m_; ++i) {
            const Rational& a = tab_[i][enter];
            if (a.is_zero()) continue;
            Rational coeff = dir > 0 ? a : -a; // d(basic)/dt = -coeff
            int b = basis_[i];
            if (coeff.sign() > 0) {
                Rational t = (beta_[i] - lo_[b]) / coeff;
                if (!has_limit || t < best_t ||
                    (t == best_t && leave_row >= 0 && b < basis_[leave_row])) {
                    has_limit = true;
                    best_t = t;
                    leave_row = i;
                    leave_stat = VStat::at_lower;
                }
            } else if (!hi_inf_[b]) {
                Rational t = (hi_[b] - beta_[i]) / (-coeff);
                if (!has_limit || t < best_t ||
                    (t == best_t && leave_row >= 0 && b < basis_[leave_row])) {
                    has_limit = true;
                    best_t = t;
                    leave_row = i;
                    leave_stat = VStat::at_upper;
                }
            }
        }
        // bound flip of the entering variable itself
        bool flip = false;
        if (!hi_inf_[enter]) {
            Rational span = hi_[enter] - lo_[enter];
            if (!has_limit || span < best_t) {
                flip = true;
                best_t = span;
                has_limit = true;
            }
        }
        if (!has_limit) return phase_one ? LpStatus::infeasible : LpStatus::unbounded;

        if (best_t.is_zero()) {
            if (++stall > kStallLimit) bland = true;
        } else {
            stall = 0;
            bland = false;
        }

        if (flip) {
            Rational delta = best_t;
            if (dir < 0) delta = -delta;
            for (int i = 0; i < m_; ++i) {
                if (tab_[i][enter].is_zero()) continue;
                beta_[i] -= tab_[i][enter] * delta;
            }
            stat_[enter] = stat_[enter] == VStat::at_lower ? VStat::at_upper : VStat::at_lower;
            ++pivots_;
        } else {
            pivot(leave_row, enter, best_t, dir, leave_stat);
        }
    }
}

LpStatus Simplex::solve_primal() {
    // drop artificial columns from any previous solve
    n_total_ = n_structural_ + m_;
    for (auto& row : tab_) row.resize(n_total_);
    lo_.resize(n_total_);
    hi_.resize(n_total_);
    hi_inf_.resize(n_total_);
    cost_.resize(n_total_);
    stat_.resize(n_total_);
    artificials_.clear();

    // reset to the all-slack basis
    for (int j = 0; j < n_total_; ++j) stat_[j] = VStat::at_lower;
    for (int i = 0; i < m_; ++i) {
        basis_[i] = n_structural_ + i;
        stat_[n_structural_ + i] = VStat::basic;
    }
    // rebuild the tableau rows (previous solves may have transformed them)
    for (auto& row : tab_)
        std::fill(row.begin(), row.end(), Rational(0));
    for (int i = 0; i < m_; ++i) {
        for (const auto& [j, a] : lp_->rows()[i].terms) tab_[i][j] += a;
        tab_[i][n_structural_ + i] = Rational(1);
    }
    compute_beta_from_scratch();

    // rows whose slack value is out of bounds need an artificial column
    std::vector<int> violated;
    for (int i = 0; i < m_; ++i) {
        int b = basis_[i];
        if (beta_[i] < lo_[b] || (!hi_inf_[b] && beta_[i] > hi_[b])) violated.push_back(i);
    }
    if (!violated.empty()) {
        std::vector<Rational> phase1(n_total_, Rational(0));
        for (int r : violated) {
            int b = basis_[r];
            // residual sign decides the artificial's coefficient
            int sgn = beta_[r] < lo_[b] ? -1 : 1;
            for (int i = 0; i < m_; ++i) tab_[i].push_back(Rational(0));
            int art = n_total_;
            tab_[r][art] = Rational(sgn);
            artificials_.emplace_back(r, sgn);
            lo_.push_back(Rational(0));
            hi_.push_back(Rational(0));
            hi_inf_.push_back(1);
            cost_.push_back(Rational(0));
            stat_.push_back(VStat::basic);
            phase1.push_back(Rational(-1));
            // the slack leaves at its nearest bound, the artificial enters
            Rational slack_val = beta_[r] < lo_[b] ? lo_[b] : hi_[b];
            Rational art_val = (beta_[r] - slack_val) * Rational(sgn);
            stat_[b] = beta_[r] < lo_[b] ? VStat::at_lower : VStat::at_upper;
            basis_[r] = art;
            beta_[r] = art_val;
            ++n_total_;
        }
        phase1.resize(n_total_, Rational(0));
        LpStatus st = primal_loop(phase1, true);
        if (st == LpStatus::infeasible) return LpStatus::infeasible;
        // total infeasibility must be driven to zero
        Rational total(0);
        for (int i = 0; i < m_; ++i)
            if (basis_[i] >= n_structural_ + m_) total += beta_[i];
        for (int j = n_structural_ + m_; j < n_total_; ++j) {
            hi_inf_[j] = 0; // artificials become fixed at zero
            if (stat_[j] != VStat::basic && nonbasic_value(j).sign() != 0)
                total += nonbasic_value(j);
        }
        if (!total.is_zero()) return LpStatus::infeasible;
    }
    return primal_loop(cost_, false);
}

LpStatus Simplex::reoptimize_dual() {
    compute_drow(cost_);
    int iter_guard = 0;
    const int kMaxIter = 2000000;
    bool bland = false;
    int stall = 0;
    while (true) {
        if (++iter_guard > kMaxIter) throw integrity_error("dual simplex iteration cap hit");
        // leaving row: most violated basic variable (Bland: smallest basic index)
        int row = -1;
        bool below = false;
        Rational viol(0);
        for (int i = 0; i < m_; ++i) {
            int b = basis_[i];
            Rational v(0);
            bool is_below;
            if (beta_[i] < lo_[b]) {
                v = lo_[b] - beta_[i];
                is_below = true;
            } else if (!hi_inf_[b] && beta_[i] > hi_[b]) {
                v = beta_[i] - hi_[b];
                is_below = false;
            } else {
                continue;
            }
            bool take;
            if (row < 0)
                take = true;
            else if (bland)
                take = b < basis_[row];
            else
                take = v > viol || (v == viol && b < basis_[row]);
            if (take) {
                row = i;
                viol = v;
                below = is_below;
            }
        }
        if (row < 0) return LpStatus::optimal;

        // entering column: smallest |d_j / a_j| keeps reduced costs sign-feasible
        int enter = -1;
        Rational best_ratio(0);
        for (int j = 0; j < n_total_; ++j) {
            if (stat_[j] == VStat::basic || is_fixed(j)) continue;
            const Rational& a = tab_[row][j];
            if (a.is_zero()) continue;
            bool eligible;
            if (below)
                eligible = (stat_[j] == VStat::at_lower && a.sign() < 0) ||
                           (stat_[j] == VStat::at_upper && a.sign() > 0);
            else
                eligible = (stat_[j] == VStat::at_lower && a.sign() > 0) ||
                           (stat_[j] == VStat::at_upper && a.sign() < 0);
            if (!eligible) continue;
            if (bland) { // smallest eligible index (scan order)
                enter = j;
                break;
            }
            Rational ratio = drow_[j] / a;
            if (ratio.sign() < 0) ratio = -ratio;
            if (enter < 0 || ratio < best_ratio) {
                enter = j;
                best_ratio = ratio;
            }
        }
        if (enter < 0) return LpStatus::infeasible;

        Rational theta = drow_[enter] / tab_[row][enter];
        if (theta.is_zero()) {
            if (++stall > 100) bland = true;
        } else {
            stall = 0;
            bland = false;
        }

        int b = basis_[row];
        Rational target = below ? lo_[b] : hi_[b];
        Rational step = (beta_[row] - target) / tab_[row][enter];
        // step is the change of the entering variable's value
        int dir = step.sign() >= 0 ? 1 : -1;
        Rational mag = step.sign() >= 0 ? step : -step;
        pivot(row, enter, mag, dir, below ? VStat::at_lower : VStat::at_upper);
    }
}

void Simplex::change_bounds(int var, const Rational& lo, const Rational& hi) {
    if (var < 0 || var >= n_structural_) throw validation_error("change_bounds: bad variable");
    Rational old_val = stat_[var] == VStat::basic ? Rational(0) : nonbasic_value(var);
    lo_[var] = lo;
    hi_[var] = hi;
    hi_inf_[var] = 0;
    if (stat_[var] == VStat::basic) return; // feasibility handled by the next dual solve
    // snap the nonbasic value to the nearest new bound
    Rational new_val = old_val;
    if (old_val <= lo) {
        new_val = lo;
        stat_[var] = VStat::at_lower;
    } else if (old_val >= hi) {
        new_val = hi;
        stat_[var] = VStat::at_upper;
    } else {
        // interior value cannot stay nonbasic: move to the nearer bound
        new_val = (old_val - lo) <= (hi - old_val) ? lo : hi;
        stat_[var] = new_val == lo ? VStat::at_lower : VStat::at_upper;
    }
    Rational delta = new_val - old_val;
    if (!delta.is_zero())
        for (int i = 0; i < m_; ++i) {
            if (tab_[i][var].is_zero()) continue;
            beta_[i] -= tab_[i][var] * delta;
        }
}

Rational Simplex::objective() const {
    Rational z(0);
    for (int j = 0; j < n_total_; ++j) {
        if (cost_[j].is_zero()) continue;
        z += cost_[j] * value(j);
    }
    return z;
}

Rational Simplex::value(int var) const {
    if (stat_[var] == VStat::basic) {
        for (int i = 0; i < m_; ++i)
            if (basis_[i] == var) return beta_[i];
        throw integrity_error("basic variable missing from basis");
    }
    return nonbasic_value(var);
}

std::vector<Rational> Simplex::structural_values() const {
    std::vector<Rational> vals(n_structural_, Rational(0));
    for (int j = 0; j < n_structural_; ++j) vals[j] = nonbasic_value(j);
    for (int i = 0; i < m_; ++i)
        if (basis_[i] < n_structural_) vals[basis_[i]] = beta_[i];
    return vals;
}

bool Simplex::verify_current_point() const {
    std::vector<Rational> x(n_structural_, Rational(0));
    for (int j = 0; j < n_structural_; ++j) x[j] = value(j);
    for (int j = 0; j < n_structural_; ++j) {
        if (x[j] < lo_[j]) return false;
        if (!hi_inf_[j] && x[j] > hi_[j]) return false;
    }
    for (const auto& row : lp_->rows()) {
        Rational lhs(0);
        for (const auto& [j, a] : row.terms) lhs += a * x[j];
        if (row.is_eq && lhs != row.rhs) return false;
        if (!row.is_eq && lhs > row.rhs) return false;
    }
    return true;
}

LpResult solve_lp(const LinearProgram& lp) {
    Simplex s(lp);
    LpResult res;
    res.status = s.solve_primal();
    res.pivots = s.pivots();
    if (res.status == LpStatus::optimal) {
        res.objective = s.objective();
        res.values = s.structural_values();
    }
    return res;
}

} // namespace arccover
