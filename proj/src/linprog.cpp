#include "minkcx/linprog.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace minkcx {

void LinearProgram::add_constraint(RatVector coeffs, Relation rel, Rational rhs) {
    constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
}

void LinearProgram::set_lower(int var, Rational lo) {
    if (bounds.empty()) bounds.resize(static_cast<std::size_t>(num_vars));
    bounds[static_cast<std::size_t>(var)].lower = std::move(lo);
}

void LinearProgram::set_upper(int var, Rational hi) {
    if (bounds.empty()) bounds.resize(static_cast<std::size_t>(num_vars));
    bounds[static_cast<std::size_t>(var)].upper = std::move(hi);
}

namespace {

void validate(const LinearProgram& lp) {
    if (lp.num_vars < 0) throw std::invalid_argument("lp: negative variable count");
    const auto nv = static_cast<std::size_t>(lp.num_vars);
    for (const auto& c : lp.constraints)
        if (c.coeffs.size() != nv)
            throw std::invalid_argument("lp: constraint coefficient length mismatch");
    if (lp.objective && lp.objective->coeffs.size() != nv)
        throw std::invalid_argument("lp: objective coefficient length mismatch");
    if (!lp.bounds.empty() && lp.bounds.size() != nv)
        throw std::invalid_argument("lp: bounds length mismatch");
}

// How one user variable maps onto nonnegative standard-form columns.
struct VarMap {
    enum Kind { ShiftedLower, NegatedUpper, FreePair } kind;
    Rational offset;  // the finite bound used as origin
    int col_a = -1;   // primary column
    int col_b = -1;   // second column of a free pair
};

// minimize c.z  s.t.  A z = b, z >= 0, via the standard two-phase tableau.
class SimplexTableau {
  public:
    SimplexTableau(int nrows, int ncols_structural)
        : rows_(static_cast<std::size_t>(nrows)), m_(nrows), n_struct_(ncols_structural) {}

    std::vector<RatVector> rows_;  // each length n_total + 1, last entry = rhs
    std::vector<int> basis_;

    int m_;
    int n_struct_;
    int n_total_ = 0;  // structural + artificial

    // Append identity artificials and set them basic. rows_ already hold
    // structural coefficients and rhs (rhs >= 0).
    void add_artificials() {
        n_total_ = n_struct_ + m_;
        basis_.resize(static_cast<std::size_t>(m_));
        for (int i = 0; i < m_; ++i) {
            RatVector& row = rows_[static_cast<std::size_t>(i)];
            const Rational rhs = row.back();
            row.pop_back();
            row.resize(static_cast<std::size_t>(n_total_), Rational(0));
            row[static_cast<std::size_t>(n_struct_ + i)] = 1;
            row.push_back(rhs);
            basis_[static_cast<std::size_t>(i)] = n_struct_ + i;
        }
    }

    // Reduced-cost row for cost vector c (length n_total_), plus negated
    // objective value in the last slot.
    RatVector reduced_costs(const RatVector& cost) const {
        RatVector r(cost);
        r.push_back(Rational(0));
        for (int i = 0; i < m_; ++i) {
            const Rational cb = cost[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])];
            if (cb == 0) continue;
            const RatVector& row = rows_[static_cast<std::size_t>(i)];
            for (std::size_t j = 0; j <= static_cast<std::size_t>(n_total_); ++j)
                r[j] -= cb * row[j];
        }
        return r;
    }

    void pivot(int prow, int pcol, RatVector& costrow) {
        RatVector& prow_ref = rows_[static_cast<std::size_t>(prow)];
        const Rational inv = Rational(1) / prow_ref[static_cast<std::size_t>(pcol)];
        for (auto& v : prow_ref) v *= inv;
        for (int i = 0; i < m_; ++i) {
            if (i == prow) continue;
            RatVector& row = rows_[static_cast<std::size_t>(i)];
            const Rational factor = row[static_cast<std::size_t>(pcol)];
            if (factor == 0) continue;
            for (std::size_t j = 0; j < row.size(); ++j) row[j] -= factor * prow_ref[j];
        }
        const Rational cf = costrow[static_cast<std::size_t>(pcol)];
        if (cf != 0)
            for (std::size_t j = 0; j < costrow.size(); ++j) costrow[j] -= cf * prow_ref[j];
        basis_[static_cast<std::size_t>(prow)] = pcol;
    }

    // Bland's rule; allowed(j) filters candidate columns. Returns false when
    // an unbounded ray is detected.
    template <typename Allowed>
    bool minimize(RatVector& costrow, Allowed allowed) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < n_total_; ++j) {
                if (!allowed(j)) continue;
                if (costrow[static_cast<std::size_t>(j)] < 0) { enter = j; break; }
            }
            if (enter < 0) return true;
            int leave = -1;
            Rational best;
            for (int i = 0; i < m_; ++i) {
                const RatVector& row = rows_[static_cast<std::size_t>(i)];
                const Rational& a = row[static_cast<std::size_t>(enter)];
                if (a <= 0) continue;
                const Rational ratio = row.back() / a;
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[static_cast<std::size_t>(i)] <
                                          basis_[static_cast<std::size_t>(leave)])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter, costrow);
        }
    }

    RatVector basic_solution() const {
        RatVector z(static_cast<std::size_t>(n_total_), Rational(0));
        for (int i = 0; i < m_; ++i)
            z[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])] =
                rows_[static_cast<std::size_t>(i)].back();
        return z;
    }
};

}  // namespace

LPResult lp_solve(const LinearProgram& lp) {
    validate(lp);
    const auto nv = static_cast<std::size_t>(lp.num_vars);

    // Map user variables onto nonnegative columns.
    std::vector<VarMap> vmap(nv);
    int ncols = 0;
    std::vector<std::pair<int, Rational>> upper_rows;  // (column, cap) emitted below
    for (std::size_t j = 0; j < nv; ++j) {
        const VariableBounds b = lp.bounds.empty() ? VariableBounds{} : lp.bounds[j];
        if (b.lower && b.upper && *b.lower > *b.upper) {
            return {LPStatus::Infeasible, std::nullopt, std::nullopt};
        }
        if (b.lower) {
            vmap[j] = {VarMap::ShiftedLower, *b.lower, ncols++, -1};
            if (b.upper) upper_rows.emplace_back(vmap[j].col_a, *b.upper - *b.lower);
        } else if (b.upper) {
            vmap[j] = {VarMap::NegatedUpper, *b.upper, ncols++, -1};
        } else {
            vmap[j] = {VarMap::FreePair, Rational(0), ncols, ncols + 1};
            ncols += 2;
        }
    }

    // Substituted constraint rows; slack columns appended on the fly.
    const int nrows = static_cast<int>(lp.constraints.size() + upper_rows.size());
    std::vector<RatVector> rows;
    rows.reserve(static_cast<std::size_t>(nrows));
    std::vector<int> slack_of_row(static_cast<std::size_t>(nrows), -1);
    int nslack = 0;
    for (const auto& c : lp.constraints)
        if (c.rel != Relation::Equal) ++nslack;
    nslack += static_cast<int>(upper_rows.size());
    const int n_struct = ncols + nslack;

    int next_slack = ncols;
    auto emit_row = [&](const RatVector& user_coeffs, Relation rel, const Rational& user_rhs) {
        RatVector row(static_cast<std::size_t>(n_struct), Rational(0));
        Rational rhs = user_rhs;
        for (std::size_t j = 0; j < nv; ++j) {
            const Rational& a = user_coeffs[j];
            if (a == 0) continue;
            switch (vmap[j].kind) {
                case VarMap::ShiftedLower:  // x = lo + z
                    row[static_cast<std::size_t>(vmap[j].col_a)] += a;
                    rhs -= a * vmap[j].offset;
                    break;
                case VarMap::NegatedUpper:  // x = up - z
                    row[static_cast<std::size_t>(vmap[j].col_a)] -= a;
                    rhs -= a * vmap[j].offset;
                    break;
                case VarMap::FreePair:  // x = z+ - z-
                    row[static_cast<std::size_t>(vmap[j].col_a)] += a;
                    row[static_cast<std::size_t>(vmap[j].col_b)] -= a;
                    break;
            }
        }
        if (rel == Relation::LessEq)
            row[static_cast<std::size_t>(next_slack++)] = 1;
        else if (rel == Relation::GreaterEq)
            row[static_cast<std::size_t>(next_slack++)] = -1;
        if (rhs < 0) {
            for (auto& v : row) v = -v;
            rhs = -rhs;
        }
        row.push_back(rhs);
        rows.push_back(std::move(row));
    };

    for (const auto& c : lp.constraints) emit_row(c.coeffs, c.rel, c.rhs);
    for (const auto& [col, cap] : upper_rows) {
        RatVector unit(static_cast<std::size_t>(n_struct), Rational(0));
        unit[static_cast<std::size_t>(col)] = 1;
        unit[static_cast<std::size_t>(next_slack++)] = 1;
        Rational rhs = cap;
        if (rhs < 0) { for (auto& v : unit) v = -v; rhs = -rhs; }
        unit.push_back(rhs);
        rows.push_back(std::move(unit));
    }

    SimplexTableau tab(nrows, n_struct);
    tab.rows_ = std::move(rows);
    tab.add_artificials();

    // Phase 1: minimize the sum of artificials.
    RatVector phase1_cost(static_cast<std::size_t>(tab.n_total_), Rational(0));
    for (int j = n_struct; j < tab.n_total_; ++j) phase1_cost[static_cast<std::size_t>(j)] = 1;
    RatVector costrow = tab.reduced_costs(phase1_cost);
    tab.minimize(costrow, [](int) { return true; });
    // Objective value of phase 1 is -costrow.back().
    if (-costrow.back() != 0) return {LPStatus::Infeasible, std::nullopt, std::nullopt};

    // Drive surviving artificials out of the basis; rows with no structural
    // pivot are redundant and can be neutralized in place.
    for (int i = 0; i < tab.m_; ++i) {
        if (tab.basis_[static_cast<std::size_t>(i)] < n_struct) continue;
        int pcol = -1;
        for (int j = 0; j < n_struct; ++j)
            if (tab.rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) { pcol = j; break; }
        if (pcol >= 0) tab.pivot(i, pcol, costrow);
    }

    auto extract_point = [&]() {
        const RatVector z = tab.basic_solution();
        RatVector x(nv);
        for (std::size_t j = 0; j < nv; ++j) {
            switch (vmap[j].kind) {
                case VarMap::ShiftedLower:
                    x[j] = vmap[j].offset + z[static_cast<std::size_t>(vmap[j].col_a)];
                    break;
                case VarMap::NegatedUpper:
                    x[j] = vmap[j].offset - z[static_cast<std::size_t>(vmap[j].col_a)];
                    break;
                case VarMap::FreePair:
                    x[j] = z[static_cast<std::size_t>(vmap[j].col_a)] -
                           z[static_cast<std::size_t>(vmap[j].col_b)];
                    break;
            }
        }
        return x;
    };

    if (!lp.objective)
        return {LPStatus::FeasibleNoObjective, extract_point(), std::nullopt};

    // Phase 2: artificials stay banned from the basis.
    RatVector phase2_cost(static_cast<std::size_t>(tab.n_total_), Rational(0));
    const bool maximize = lp.objective->sense == Sense::Maximize;
    for (std::size_t j = 0; j < nv; ++j) {
        Rational a = lp.objective->coeffs[j];
        if (a == 0) continue;
        if (maximize) a = -a;  // minimize internally
        switch (vmap[j].kind) {
            case VarMap::ShiftedLower:
                phase2_cost[static_cast<std::size_t>(vmap[j].col_a)] += a;
                break;
            case VarMap::NegatedUpper:
                phase2_cost[static_cast<std::size_t>(vmap[j].col_a)] -= a;
                break;
            case VarMap::FreePair:
                phase2_cost[static_cast<std::size_t>(vmap[j].col_a)] += a;
                phase2_cost[static_cast<std::size_t>(vmap[j].col_b)] -= a;
                break;
        }
    }
    costrow = tab.reduced_costs(phase2_cost);
    const bool bounded = tab.minimize(costrow, [&](int j) { return j < n_struct; });
    const RatVector point = extract_point();
    if (!bounded) return {LPStatus::Unbounded, point, std::nullopt};

    // Recompute the optimum from the witness; exact by construction.
    Rational value = 0;
    for (std::size_t j = 0; j < nv; ++j) value += lp.objective->coeffs[j] * point[j];
    return {LPStatus::Optimal, point, value};
}

LPResult lp_feasible(const LinearProgram& lp) {
    if (lp.objective) throw std::invalid_argument("lp_feasible: program carries an objective");
    return lp_solve(lp);
}

bool lp_check_witness(const LinearProgram& lp, const RatVector& point) {
    if (point.size() != static_cast<std::size_t>(lp.num_vars)) return false;
    for (const auto& c : lp.constraints) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < point.size(); ++j) lhs += c.coeffs[j] * point[j];
        switch (c.rel) {
            case Relation::LessEq:
                if (!(lhs <= c.rhs)) return false;
                break;
            case Relation::Equal:
                if (!(lhs == c.rhs)) return false;
                break;
            case Relation::GreaterEq:
                if (!(lhs >= c.rhs)) return false;
                break;
        }
    }
    if (!lp.bounds.empty()) {
        for (std::size_t j = 0; j < point.size(); ++j) {
            if (lp.bounds[j].lower && point[j] < *lp.bounds[j].lower) return false;
            if (lp.bounds[j].upper && point[j] > *lp.bounds[j].upper) return false;
        }
    }
    return true;
}

}  // namespace minkcx
