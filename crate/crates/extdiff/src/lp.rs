//! Self-contained two-phase simplex solver.
//!
//! Programs are stated as `min c·z` over sparse inequality/equality rows plus
//! per-variable bounds; free variables are handled natively (shifting, or
//! splitting into positive parts). Internally everything is reduced to
//! standard form `min q·y, M y = r, y ≥ 0` and solved by a revised simplex
//! with an explicit dense basis inverse. Pricing is Dantzig's rule (smallest
//! index on ties); after a long degenerate stall the solver switches
//! permanently to Bland's rule, which guarantees termination.
//!
//! Programs with many more rows than variables — the shape produced by
//! [`crate::diff::assemble_lp`], where the basis inverse would be quadratic in
//! the row count — are solved through their dual (one equality row per
//! variable) and the primal solution is read off the simplex multipliers.
//! Both paths run the same pivot algebra and are deterministic for a fixed
//! input.

use thiserror::Error;

/// Primal feasibility tolerance for reported solutions.
pub const FEAS_TOL: f64 = 1e-8;
/// Reduced-cost optimality tolerance.
pub const OPT_TOL: f64 = 1e-9;

const PIVOT_TOL: f64 = 1e-9;
const PHASE1_TOL: f64 = 1e-7;
const STALL_LIMIT: usize = 64;
const REFACTOR_EVERY: usize = 32;

/// Scales a row to unit coefficient norm (same halfspace, better
/// conditioning).
fn equilibrate(coeffs: &mut [(usize, f64)], rhs: &mut f64) {
    let norm = coeffs.iter().map(|&(_, v)| v * v).sum::<f64>().sqrt();
    if norm > 1e-300 {
        for e in coeffs.iter_mut() {
            e.1 /= norm;
        }
        *rhs /= norm;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

/// One sparse constraint row `Σ coeffs · z  rel  rhs`.
#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<(usize, f64)>,
    pub relation: Relation,
    pub rhs: f64,
}

impl Constraint {
    pub fn new(coeffs: Vec<(usize, f64)>, relation: Relation, rhs: f64) -> Self {
        Constraint { coeffs, relation, rhs }
    }
}

/// Per-variable bounds; `-INFINITY`/`INFINITY` mark free sides.
#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    pub lower: f64,
    pub upper: f64,
}

impl Bounds {
    pub fn free() -> Self {
        Bounds { lower: f64::NEG_INFINITY, upper: f64::INFINITY }
    }
    pub fn lower(l: f64) -> Self {
        Bounds { lower: l, upper: f64::INFINITY }
    }
}

/// `min objective · z` subject to `constraints` and `bounds`.
#[derive(Clone, Debug)]
pub struct LinearProgram {
    pub num_vars: usize,
    pub objective: Vec<f64>,
    pub constraints: Vec<Constraint>,
    pub bounds: Vec<Bounds>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Clone, Debug)]
pub struct LpSolution {
    pub status: Status,
    /// Variable values (all zeros unless `status == Optimal`).
    pub values: Vec<f64>,
    pub objective_value: f64,
    /// Basic column indices of the final internal standard form. On the
    /// row-heavy (dual) path these are binding-row indices offset by
    /// `num_vars`; diagnostic only.
    pub basis: Vec<usize>,
    pub degenerate: bool,
}

#[derive(Debug, Error)]
pub enum LpError {
    #[error("malformed program: {0}")]
    MalformedProgram(String),
}

// ---------------------------------------------------------------------------
// validation
// ---------------------------------------------------------------------------

fn validate(lp: &LinearProgram) -> Result<(), LpError> {
    if lp.num_vars == 0 {
        return Err(LpError::MalformedProgram("no variables".into()));
    }
    if lp.objective.len() != lp.num_vars {
        return Err(LpError::MalformedProgram("objective length mismatch".into()));
    }
    if lp.bounds.len() != lp.num_vars {
        return Err(LpError::MalformedProgram("bounds length mismatch".into()));
    }
    if lp.objective.iter().any(|c| !c.is_finite()) {
        return Err(LpError::MalformedProgram("non-finite objective".into()));
    }
    for (bi, b) in lp.bounds.iter().enumerate() {
        if b.lower.is_nan() || b.upper.is_nan() || b.lower > b.upper {
            return Err(LpError::MalformedProgram(format!("bad bounds on variable {bi}")));
        }
    }
    for (ri, row) in lp.constraints.iter().enumerate() {
        if !row.rhs.is_finite() {
            return Err(LpError::MalformedProgram(format!("non-finite rhs in row {ri}")));
        }
        for &(j, v) in &row.coeffs {
            if j >= lp.num_vars {
                return Err(LpError::MalformedProgram(format!("index {j} out of range in row {ri}")));
            }
            if !v.is_finite() {
                return Err(LpError::MalformedProgram(format!("non-finite coefficient in row {ri}")));
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// core revised simplex on standard form
// ---------------------------------------------------------------------------

struct StandardForm {
    rows: usize,
    /// Structural columns, sparse.
    cols: Vec<Vec<(usize, f64)>>,
    /// Right-hand side, nonnegative after row flips.
    rhs: Vec<f64>,
    cost: Vec<f64>,
    flipped: Vec<bool>,
}

enum CoreStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

struct CoreResult {
    status: CoreStatus,
    values: Vec<f64>,
    /// Simplex multipliers in the original (unflipped) row orientation.
    multipliers: Vec<f64>,
    basis: Vec<usize>,
    objective: f64,
    degenerate: bool,
}

enum Leaving {
    Row(usize),
    Unbounded,
}

struct Simplex<'a> {
    sf: &'a StandardForm,
    rows: usize,
    ncols: usize,
    binv: Vec<f64>,
    basis: Vec<usize>,
    basic_vals: Vec<f64>,
    in_basis: Vec<bool>,
    bland: bool,
    pivots: usize,
    refactor_every: usize,
    /// Set when a refactorization had to evict a dependent column.
    repaired: bool,
}

impl<'a> Simplex<'a> {
    fn new(sf: &'a StandardForm) -> Self {
        let rows = sf.rows;
        let ncols = sf.cols.len();
        let mut binv = vec![0.0; rows * rows];
        for i in 0..rows {
            binv[i * rows + i] = 1.0;
        }
        // artificial basis: column ncols + i for row i
        let basis: Vec<usize> = (0..rows).map(|i| ncols + i).collect();
        let mut in_basis = vec![false; ncols + rows];
        for &b in &basis {
            in_basis[b] = true;
        }
        Simplex {
            sf,
            rows,
            ncols,
            binv,
            basis,
            basic_vals: sf.rhs.clone(),
            in_basis,
            bland: false,
            pivots: 0,
            refactor_every: REFACTOR_EVERY,
            repaired: false,
        }
    }

    fn col_cost(&self, j: usize, phase1: bool, cost: &[f64]) -> f64 {
        if phase1 {
            if j >= self.ncols {
                1.0
            } else {
                0.0
            }
        } else if j >= self.ncols {
            0.0
        } else {
            cost[j]
        }
    }

    fn multipliers(&self, phase1: bool, cost: &[f64]) -> Vec<f64> {
        let mut pi = vec![0.0; self.rows];
        for (k, &b) in self.basis.iter().enumerate() {
            let cb = self.col_cost(b, phase1, cost);
            if cb != 0.0 {
                let row = &self.binv[k * self.rows..(k + 1) * self.rows];
                for i in 0..self.rows {
                    pi[i] += cb * row[i];
                }
            }
        }
        pi
    }

    fn reduced_cost(&self, j: usize, pi: &[f64], phase1: bool, cost: &[f64]) -> f64 {
        let mut rc = self.col_cost(j, phase1, cost);
        for &(i, v) in &self.sf.cols[j] {
            rc -= pi[i] * v;
        }
        rc
    }

    /// Dense `Binv * a_j`.
    fn ftran(&self, j: usize) -> Vec<f64> {
        let mut w = vec![0.0; self.rows];
        if j >= self.ncols {
            let r = j - self.ncols;
            for (i, wi) in w.iter_mut().enumerate() {
                *wi = self.binv[i * self.rows + r];
            }
        } else {
            for &(k, v) in &self.sf.cols[j] {
                for (i, wi) in w.iter_mut().enumerate() {
                    *wi += self.binv[i * self.rows + k] * v;
                }
            }
        }
        w
    }

    fn objective(&self, phase1: bool, cost: &[f64]) -> f64 {
        self.basis
            .iter()
            .zip(&self.basic_vals)
            .map(|(&b, &v)| self.col_cost(b, phase1, cost) * v)
            .sum()
    }

    /// Lexicographic comparison of rows i and j for the ratio test. Basic
    /// values carry floating-point noise, so ratios clamp at zero: a row
    /// whose value dipped below zero leaves with a degenerate step instead
    /// of driving the entering variable negative.
    fn lex_less(&self, i: usize, j: usize, w: &[f64]) -> bool {
        const LEX_TOL: f64 = 1e-11;
        let (wi, wj) = (w[i], w[j]);
        let ri = self.basic_vals[i].max(0.0) / wi;
        let rj = self.basic_vals[j].max(0.0) / wj;
        if ri < rj - LEX_TOL {
            return true;
        }
        if rj < ri - LEX_TOL {
            return false;
        }
        let n = self.rows;
        for k in 0..n {
            let a = self.binv[i * n + k] / wi;
            let b = self.binv[j * n + k] / wj;
            if a < b - LEX_TOL {
                return true;
            }
            if b < a - LEX_TOL {
                return false;
            }
        }
        i < j
    }

    /// Two-pass (Harris) ratio test over every row with positive pivot
    /// entry: pass one finds the tolerance-relaxed minimum ratio, pass two
    /// picks the largest pivot among the rows inside it (deterministic ties
    /// by basic variable index). Under Bland's rule the choice falls back to
    /// the lexicographic minimum, whose anti-cycling argument is exact.
    fn select_leaving(&self, w: &[f64]) -> Leaving {
        const W_EPS: f64 = 1e-12;
        const DELTA: f64 = 1e-9;
        if self.bland {
            let mut leave = usize::MAX;
            for i in 0..self.rows {
                if w[i] <= W_EPS {
                    continue;
                }
                if leave == usize::MAX || self.lex_less(i, leave, w) {
                    leave = i;
                }
            }
            return if leave == usize::MAX { Leaving::Unbounded } else { Leaving::Row(leave) };
        }
        let mut theta_max = f64::INFINITY;
        let mut any = false;
        for i in 0..self.rows {
            if w[i] > W_EPS {
                any = true;
                let bound = (self.basic_vals[i].max(0.0) + DELTA) / w[i];
                if bound < theta_max {
                    theta_max = bound;
                }
            }
        }
        if !any {
            return Leaving::Unbounded;
        }
        let mut leave = usize::MAX;
        for i in 0..self.rows {
            if w[i] <= W_EPS {
                continue;
            }
            if self.basic_vals[i].max(0.0) / w[i] > theta_max {
                continue;
            }
            let better = leave == usize::MAX
                || w[i] > w[leave] + 1e-12
                || ((w[i] - w[leave]).abs() <= 1e-12 && self.basis[i] < self.basis[leave]);
            if better {
                leave = i;
            }
        }
        debug_assert!(leave != usize::MAX);
        Leaving::Row(leave)
    }

    /// Rebuilds the basis inverse from scratch. If the stored basis has gone
    /// numerically dependent (drift let a near-parallel column in), the
    /// dependent slots are replaced with artificial columns and `true` is
    /// returned so the caller can restore feasibility via phase 1.
    fn refactorize(&mut self) -> bool {
        let n = self.rows;
        let mut repaired = false;
        'attempt: loop {
            // assemble basis matrix column-wise, invert by Gauss-Jordan with
            // partial row pivoting; `perm[pos]` tracks the original row index
            // currently stored at matrix row `pos`
            let mut m = vec![0.0; n * n];
            for (k, &b) in self.basis.iter().enumerate() {
                if b >= self.ncols {
                    m[(b - self.ncols) * n + k] = 1.0;
                } else {
                    for &(i, v) in &self.sf.cols[b] {
                        m[i * n + k] = v;
                    }
                }
            }
            let mut inv = vec![0.0; n * n];
            for i in 0..n {
                inv[i * n + i] = 1.0;
            }
            let mut perm: Vec<usize> = (0..n).collect();
            for col in 0..n {
                let mut p = usize::MAX;
                let mut best = 1e-11;
                for i in col..n {
                    let a = m[i * n + col].abs();
                    if a > best {
                        best = a;
                        p = i;
                    }
                }
                if p == usize::MAX {
                    // basis[col] is dependent on basis[0..col]: evict it for
                    // the artificial of the first unreduced original row whose
                    // artificial is still nonbasic (worst case the basis
                    // degenerates to the all-artificial identity)
                    let row = perm[col..n]
                        .iter()
                        .copied()
                        .find(|&r| !self.in_basis[self.ncols + r])
                        .expect("a free artificial always exists");
                    self.in_basis[self.basis[col]] = false;
                    self.basis[col] = self.ncols + row;
                    self.in_basis[self.ncols + row] = true;
                    repaired = true;
                    continue 'attempt;
                }
                if p != col {
                    for j in 0..n {
                        m.swap(col * n + j, p * n + j);
                        inv.swap(col * n + j, p * n + j);
                    }
                    perm.swap(col, p);
                }
                let d = m[col * n + col];
                for j in 0..n {
                    m[col * n + j] /= d;
                    inv[col * n + j] /= d;
                }
                for i in 0..n {
                    if i == col || m[i * n + col] == 0.0 {
                        continue;
                    }
                    let f = m[i * n + col];
                    for j in 0..n {
                        m[i * n + j] -= f * m[col * n + j];
                        inv[i * n + j] -= f * inv[col * n + j];
                    }
                }
            }
            self.binv = inv;
            let mut bv = vec![0.0; n];
            for (i, o) in bv.iter_mut().enumerate() {
                let row = &self.binv[i * n..(i + 1) * n];
                *o = row.iter().zip(&self.sf.rhs).map(|(a, b)| a * b).sum();
            }
            self.basic_vals = bv;
            if std::env::var_os("EXTDIFF_LP_TRACE").is_some() {
                let min_bv = self.basic_vals.iter().cloned().fold(0.0f64, f64::min);
                if min_bv < -1e-9 {
                    eprintln!(
                        "refactor@{}: min_bv={:.3e} repaired={}",
                        self.pivots, min_bv, repaired
                    );
                }
            }
            return repaired;
        }
    }

    fn pivot(&mut self, entering: usize, leave_row: usize, w: &[f64]) {
        // the step never goes negative: a basic value that drifted below
        // zero leaves with a degenerate pivot that also resets it
        let theta = (self.basic_vals[leave_row] / w[leave_row]).max(0.0);
        if std::env::var_os("EXTDIFF_LP_TRACE").is_some() && (theta > 1e4 || w[leave_row] < 1e-7) {
            eprintln!(
                "pivot@{}: theta={:.3e} pv={:.3e} bv={:.3e} entering={} leaving={}",
                self.pivots, theta, w[leave_row], self.basic_vals[leave_row], entering,
                self.basis[leave_row]
            );
        }
        self.pivot_with_theta(entering, leave_row, w, theta);
    }

    /// Basis exchange at an explicit step length (0 for forced-degenerate
    /// evictions).
    fn pivot_with_theta(&mut self, entering: usize, leave_row: usize, w: &[f64], theta: f64) {
        let n = self.rows;
        let pv = w[leave_row];
        for (i, bv) in self.basic_vals.iter_mut().enumerate() {
            if i != leave_row {
                *bv -= w[i] * theta;
            }
        }
        self.basic_vals[leave_row] = theta;
        // eta update of Binv
        let (head, tail) = self.binv.split_at_mut(leave_row * n);
        let (prow, rest) = tail.split_at_mut(n);
        for x in prow.iter_mut() {
            *x /= pv;
        }
        for (i, chunk) in head.chunks_mut(n).enumerate() {
            let f = w[i];
            if f != 0.0 {
                for (x, p) in chunk.iter_mut().zip(prow.iter()) {
                    *x -= f * p;
                }
            }
        }
        for (ii, chunk) in rest.chunks_mut(n).enumerate() {
            let f = w[leave_row + 1 + ii];
            if f != 0.0 {
                for (x, p) in chunk.iter_mut().zip(prow.iter()) {
                    *x -= f * p;
                }
            }
        }
        self.in_basis[self.basis[leave_row]] = false;
        self.in_basis[entering] = true;
        self.basis[leave_row] = entering;
        self.pivots += 1;
        if self.pivots.is_multiple_of(self.refactor_every) {
            self.repaired |= self.refactorize();
        }
    }

    /// Runs one simplex phase to optimality. Returns false on unboundedness.
    fn run(&mut self, phase1: bool, cost: &[f64]) -> bool {
        let max_iters = 200 * (self.rows + self.ncols) + 100_000;
        let mut stall = 0usize;
        let mut best_obj = f64::INFINITY;
        loop {
            assert!(self.pivots < max_iters, "simplex iteration cap exceeded");
            let pi = self.multipliers(phase1, cost);
            let mut entering = usize::MAX;
            let mut best_rc = -OPT_TOL;
            for j in 0..self.ncols {
                if self.in_basis[j] {
                    continue;
                }
                let rc = self.reduced_cost(j, &pi, phase1, cost);
                if rc < best_rc {
                    entering = j;
                    best_rc = rc;
                    if self.bland {
                        break;
                    }
                }
            }
            if entering == usize::MAX {
                return true; // optimal for this phase
            }
            let mut w = self.ftran(entering);
            // a zero-valued basic artificial touched by the entering column
            // leaves first (degenerate pivot, either sign): letting it stay
            // would allow its value to drift away from zero, silently
            // violating the equality row it stands for
            let mut art_leave = usize::MAX;
            for i in 0..self.rows {
                if self.basis[i] >= self.ncols
                    && self.basic_vals[i].abs() <= 1e-9
                    && w[i].abs() > PIVOT_TOL
                    && (art_leave == usize::MAX || w[i].abs() > w[art_leave].abs())
                {
                    art_leave = i;
                }
            }
            if art_leave != usize::MAX {
                // forced-degenerate exchange: the artificial's ~zero residual
                // is dropped rather than amplified through a real step
                self.pivot_with_theta(entering, art_leave, &w, 0.0);
                continue;
            }
            // leaving row. Every row with genuinely positive w must bound the
            // step — excluding small-pivot rows lets a large step drive them
            // negative — so the test covers all w down to noise level. A
            // pivot that is tiny relative to the column's largest entry
            // amplifies basis-inverse error by the ratio, so such choices
            // get a fresh factorization first, and if one must be taken
            // anyway the inverse is rebuilt right afterwards to stop the
            // error from compounding.
            let w_inf = w.iter().fold(0.0f64, |a, &v| a.max(v.abs()));
            let safe = 1e-6 * w_inf.max(1.0);
            let mut rescued = false;
            let leave = loop {
                match self.select_leaving(&w) {
                    Leaving::Unbounded => break usize::MAX,
                    Leaving::Row(r) => {
                        if w[r] >= safe || rescued {
                            break r;
                        }
                        self.repaired |= self.refactorize();
                        w = self.ftran(entering);
                        rescued = true;
                    }
                }
            };
            if leave == usize::MAX {
                return false; // unbounded ray
            }
            let dangerous = w[leave] < safe;
            self.pivot(entering, leave, &w);
            if dangerous {
                self.repaired |= self.refactorize();
            }
            let obj = self.objective(phase1, cost);
            if obj < best_obj - 1e-12 * (1.0 + best_obj.abs()) {
                best_obj = obj;
                stall = 0;
            } else {
                stall += 1;
                if stall > STALL_LIMIT {
                    self.bland = true;
                }
            }
        }
    }
}

fn simplex_standard(sf: &StandardForm) -> CoreResult {
    // up to three attempts with increasingly conservative settings: a
    // phase-2 repair or a post-solve feasibility defect triggers a restart
    for attempt in 0..3 {
        let mut sx = Simplex::new(sf);
        sx.bland = attempt >= 1;
        sx.refactor_every = [REFACTOR_EVERY, 8, 4][attempt];
        let phase1_needed = sf.rhs.iter().any(|&r| r > 0.0);
        if phase1_needed {
            let ok = sx.run(true, &sf.cost);
            debug_assert!(ok, "phase 1 cannot be unbounded");
            if sx.objective(true, &sf.cost) > PHASE1_TOL {
                return CoreResult {
                    status: CoreStatus::Infeasible,
                    values: vec![0.0; sf.cols.len()],
                    multipliers: vec![0.0; sf.rows],
                    basis: sx.basis,
                    objective: f64::NAN,
                    degenerate: false,
                };
            }
        }
        // drive remaining artificials out of the basis where possible
        for p in 0..sx.rows {
            if sx.basis[p] < sx.ncols {
                continue;
            }
            for j in 0..sx.ncols {
                if sx.in_basis[j] {
                    continue;
                }
                let w = sx.ftran(j);
                if w[p].abs() > 1e-7 {
                    sx.pivot(j, p, &w);
                    break;
                }
            }
            // otherwise the row is redundant and its artificial stays at zero
        }

        if !sx.run(false, &sf.cost) {
            return CoreResult {
                status: CoreStatus::Unbounded,
                values: vec![0.0; sf.cols.len()],
                multipliers: vec![0.0; sf.rows],
                basis: sx.basis,
                objective: f64::NEG_INFINITY,
                degenerate: false,
            };
        }
        // accept only a numerically clean optimum: nonnegative basics and no
        // artificial carrying weight. Basis repairs along the way are fine —
        // the final pricing pass re-certifies optimality against the repaired
        // basis — as long as the end state passes these checks.
        let min_bv = sx.basic_vals.iter().cloned().fold(0.0f64, f64::min);
        let art_residual = sx
            .basis
            .iter()
            .zip(&sx.basic_vals)
            .filter(|(&b, _)| b >= sx.ncols)
            .map(|(_, v)| v.abs())
            .fold(0.0f64, f64::max);
        let clean = min_bv >= -1e-7 && art_residual <= 1e-7;
        if !clean && attempt + 1 < 3 {
            continue;
        }
        assert!(
            clean,
            "simplex failed to reach a numerically clean optimum after retries \
             (min_bv={:e}, art_residual={:e}, rows={}, cols={})",
            min_bv, art_residual, sf.rows, sf.cols.len()
        );
        let mut values = vec![0.0; sf.cols.len()];
        for (i, &b) in sx.basis.iter().enumerate() {
            if b < sx.ncols {
                values[b] = sx.basic_vals[i];
            }
        }
        let pi_flipped = sx.multipliers(false, &sf.cost);
        let multipliers = pi_flipped
            .iter()
            .enumerate()
            .map(|(i, &p)| if sf.flipped[i] { -p } else { p })
            .collect();
        let degenerate = sx.basic_vals.iter().any(|v| v.abs() <= 1e-9);
        let objective = sx.objective(false, &sf.cost);
        return CoreResult {
            status: CoreStatus::Optimal,
            values,
            multipliers,
            basis: sx.basis,
            objective,
            degenerate,
        };
    }
    unreachable!("attempt loop returns or asserts");
}

// ---------------------------------------------------------------------------
// primal route: direct standard-form conversion
// ---------------------------------------------------------------------------

enum VarMap {
    /// y = z - shift
    Shifted { col: usize, shift: f64 },
    /// y = shift - z
    Negated { col: usize, shift: f64 },
    /// z = y_pos - y_neg
    Split { pos: usize, neg: usize },
}

fn solve_primal(lp: &LinearProgram) -> LpSolution {
    let n = lp.num_vars;
    let mut maps = Vec::with_capacity(n);
    let mut cols: Vec<Vec<(usize, f64)>> = Vec::new();
    let mut cost: Vec<f64> = Vec::new();
    let mut obj_shift = 0.0;
    for j in 0..n {
        let b = lp.bounds[j];
        if b.lower.is_finite() {
            maps.push(VarMap::Shifted { col: cols.len(), shift: b.lower });
            cols.push(Vec::new());
            cost.push(lp.objective[j]);
            obj_shift += lp.objective[j] * b.lower;
        } else if b.upper.is_finite() {
            maps.push(VarMap::Negated { col: cols.len(), shift: b.upper });
            cols.push(Vec::new());
            cost.push(-lp.objective[j]);
            obj_shift += lp.objective[j] * b.upper;
        } else {
            maps.push(VarMap::Split { pos: cols.len(), neg: cols.len() + 1 });
            cols.push(Vec::new());
            cols.push(Vec::new());
            cost.push(lp.objective[j]);
            cost.push(-lp.objective[j]);
        }
    }
    // rows: the declared constraints, then upper-bound rows for doubly
    // bounded variables
    struct Row {
        coeffs: Vec<(usize, f64)>,
        relation: Relation,
        rhs: f64,
    }
    let mut rows: Vec<Row> = Vec::new();
    let mut push_row = |coeffs_z: &[(usize, f64)], relation: Relation, rhs: f64, maps: &[VarMap]| {
        let mut coeffs = Vec::with_capacity(coeffs_z.len() + 2);
        let mut r = rhs;
        for &(j, v) in coeffs_z {
            match maps[j] {
                VarMap::Shifted { col, shift } => {
                    coeffs.push((col, v));
                    r -= v * shift;
                }
                VarMap::Negated { col, shift } => {
                    coeffs.push((col, -v));
                    r -= v * shift;
                }
                VarMap::Split { pos, neg } => {
                    coeffs.push((pos, v));
                    coeffs.push((neg, -v));
                }
            }
        }
        equilibrate(&mut coeffs, &mut r);
        rows.push(Row { coeffs, relation, rhs: r });
    };
    for c in &lp.constraints {
        push_row(&c.coeffs, c.relation, c.rhs, &maps);
    }
    for j in 0..n {
        let b = lp.bounds[j];
        if b.lower.is_finite() && b.upper.is_finite() {
            push_row(&[(j, 1.0)], Relation::Le, b.upper, &maps);
        }
    }
    // slacks, then flip rows negative on the right-hand side
    let nrows = rows.len();
    let structural = cols.len();
    for (i, row) in rows.iter().enumerate() {
        match row.relation {
            Relation::Le => {
                cols.push(vec![(i, 1.0)]);
                cost.push(0.0);
            }
            Relation::Ge => {
                cols.push(vec![(i, -1.0)]);
                cost.push(0.0);
            }
            Relation::Eq => {}
        }
    }
    let mut flipped = vec![false; nrows];
    let mut rhs = vec![0.0; nrows];
    for (i, row) in rows.iter().enumerate() {
        if row.rhs < 0.0 {
            flipped[i] = true;
            rhs[i] = -row.rhs;
        } else {
            rhs[i] = row.rhs;
        }
    }
    // dense row data scattered into columns
    let mut colmat: Vec<Vec<(usize, f64)>> = vec![Vec::new(); cols.len()];
    for (j, pre) in cols.iter().enumerate() {
        for &(i, v) in pre {
            colmat[j].push((i, if flipped[i] { -v } else { v }));
        }
    }
    for (i, row) in rows.iter().enumerate() {
        let s = if flipped[i] { -1.0 } else { 1.0 };
        for &(jc, v) in &row.coeffs {
            colmat[jc].push((i, s * v));
        }
    }
    for col in colmat.iter_mut() {
        col.sort_by_key(|&(i, _)| i);
        // merge duplicate row entries
        let mut merged: Vec<(usize, f64)> = Vec::with_capacity(col.len());
        for &(i, v) in col.iter() {
            if let Some(last) = merged.last_mut() {
                if last.0 == i {
                    last.1 += v;
                    continue;
                }
            }
            merged.push((i, v));
        }
        *col = merged;
    }
    let sf = StandardForm { rows: nrows, cols: colmat, rhs, cost, flipped };
    let core = simplex_standard(&sf);
    match core.status {
        CoreStatus::Infeasible => infeasible_solution(lp),
        CoreStatus::Unbounded => unbounded_solution(lp),
        CoreStatus::Optimal => {
            let mut values = vec![0.0; n];
            for (j, m) in maps.iter().enumerate() {
                values[j] = match *m {
                    VarMap::Shifted { col, shift } => core.values[col] + shift,
                    VarMap::Negated { col, shift } => shift - core.values[col],
                    VarMap::Split { pos, neg } => core.values[pos] - core.values[neg],
                };
            }
            let objective_value = core.objective + obj_shift;
            let _ = structural;
            LpSolution {
                status: Status::Optimal,
                values,
                objective_value,
                basis: core.basis,
                degenerate: core.degenerate,
            }
        }
    }
}

fn infeasible_solution(lp: &LinearProgram) -> LpSolution {
    LpSolution {
        status: Status::Infeasible,
        values: vec![0.0; lp.num_vars],
        objective_value: f64::NAN,
        basis: Vec::new(),
        degenerate: false,
    }
}

fn unbounded_solution(lp: &LinearProgram) -> LpSolution {
    LpSolution {
        status: Status::Unbounded,
        values: vec![0.0; lp.num_vars],
        objective_value: f64::NEG_INFINITY,
        basis: Vec::new(),
        degenerate: false,
    }
}

// ---------------------------------------------------------------------------
// dual route for row-heavy programs
// ---------------------------------------------------------------------------

/// Folded form `G z <= h` with all bounds turned into rows.
fn fold_rows(lp: &LinearProgram) -> (Vec<Vec<(usize, f64)>>, Vec<f64>) {
    let mut g: Vec<Vec<(usize, f64)>> = Vec::new();
    let mut h: Vec<f64> = Vec::new();
    let mut push = |coeffs: Vec<(usize, f64)>, rhs: f64| {
        let mut c = coeffs;
        let mut r = rhs;
        equilibrate(&mut c, &mut r);
        g.push(c);
        h.push(r);
    };
    for c in &lp.constraints {
        match c.relation {
            Relation::Le => {
                push(c.coeffs.clone(), c.rhs);
            }
            Relation::Ge => {
                push(c.coeffs.iter().map(|&(j, v)| (j, -v)).collect(), -c.rhs);
            }
            Relation::Eq => {
                push(c.coeffs.clone(), c.rhs);
                push(c.coeffs.iter().map(|&(j, v)| (j, -v)).collect(), -c.rhs);
            }
        }
    }
    for j in 0..lp.num_vars {
        let b = lp.bounds[j];
        if b.lower.is_finite() {
            push(vec![(j, -1.0)], -b.lower);
        }
        if b.upper.is_finite() {
            push(vec![(j, 1.0)], b.upper);
        }
    }
    (g, h)
}

/// Solves `min c·z, G z <= h` through the dual `min h·y, Gᵀ y = -c, y >= 0`.
/// Returns `None` when the dual is infeasible (primal unbounded or empty).
fn solve_via_dual(
    num_vars: usize,
    objective: &[f64],
    g: &[Vec<(usize, f64)>],
    h: &[f64],
) -> Option<(Vec<f64>, f64, Vec<usize>, bool)> {
    let rows = num_vars;
    let mut flipped = vec![false; rows];
    let mut rhs = vec![0.0; rows];
    for i in 0..rows {
        let r = -objective[i];
        if r < 0.0 {
            flipped[i] = true;
            rhs[i] = -r;
        } else {
            rhs[i] = r;
        }
    }
    let mut cols: Vec<Vec<(usize, f64)>> = Vec::with_capacity(g.len());
    for grow in g {
        let mut col: Vec<(usize, f64)> = grow
            .iter()
            .map(|&(i, v)| (i, if flipped[i] { -v } else { v }))
            .collect();
        col.sort_by_key(|&(i, _)| i);
        let mut merged: Vec<(usize, f64)> = Vec::with_capacity(col.len());
        for &(i, v) in col.iter() {
            if let Some(last) = merged.last_mut() {
                if last.0 == i {
                    last.1 += v;
                    continue;
                }
            }
            merged.push((i, v));
        }
        cols.push(merged);
    }
    let sf = StandardForm { rows, cols, rhs, cost: h.to_vec(), flipped };
    let core = simplex_standard(&sf);
    match core.status {
        CoreStatus::Infeasible => None,
        CoreStatus::Unbounded => Some((Vec::new(), f64::NAN, Vec::new(), false)), // primal infeasible
        CoreStatus::Optimal => {
            let z = core.multipliers;
            let obj: f64 = objective.iter().zip(&z).map(|(c, x)| c * x).sum();
            debug_assert!(
                (obj + core.objective).abs() <= 1e-6 * (1.0 + obj.abs()),
                "primal/dual objective mismatch: {obj} vs {}",
                -core.objective
            );
            let basis = core.basis;
            Some((z, obj, basis, core.degenerate))
        }
    }
}

fn solve_dual_route(lp: &LinearProgram) -> LpSolution {
    let (g, h) = fold_rows(lp);
    match solve_via_dual(lp.num_vars, &lp.objective, &g, &h) {
        Some((z, obj, basis, degenerate)) if !z.is_empty() => {
            let basis = basis.into_iter().map(|b| lp.num_vars + b).collect();
            LpSolution {
                status: Status::Optimal,
                values: z,
                objective_value: obj,
                basis,
                degenerate,
            }
        }
        Some(_) => infeasible_solution(lp),
        None => {
            // dual infeasible: primal is unbounded if feasible at all.
            if fold_feasible(lp.num_vars, &g, &h) {
                unbounded_solution(lp)
            } else {
                infeasible_solution(lp)
            }
        }
    }
}

/// Feasibility of `G z <= h` via `min s : G z - s·1 <= h, s >= 0`.
fn fold_feasible(num_vars: usize, g: &[Vec<(usize, f64)>], h: &[f64]) -> bool {
    let nv = num_vars + 1;
    let mut g2: Vec<Vec<(usize, f64)>> = Vec::with_capacity(g.len() + 1);
    let mut h2 = Vec::with_capacity(h.len() + 1);
    for (grow, &hv) in g.iter().zip(h) {
        let mut r = grow.clone();
        r.push((num_vars, -1.0));
        g2.push(r);
        h2.push(hv);
    }
    g2.push(vec![(num_vars, -1.0)]);
    h2.push(0.0);
    let mut objective = vec![0.0; nv];
    objective[num_vars] = 1.0;
    match solve_via_dual(nv, &objective, &g2, &h2) {
        Some((z, obj, _, _)) if !z.is_empty() => obj <= PHASE1_TOL,
        _ => false,
    }
}

// ---------------------------------------------------------------------------
// public operations
// ---------------------------------------------------------------------------

/// Solves the program. Deterministic: identical inputs give identical outputs.
pub fn solve(lp: &LinearProgram) -> Result<LpSolution, LpError> {
    validate(lp)?;
    let folded_rows = lp
        .constraints
        .iter()
        .map(|c| if c.relation == Relation::Eq { 2 } else { 1 })
        .sum::<usize>()
        + lp
            .bounds
            .iter()
            .map(|b| b.lower.is_finite() as usize + b.upper.is_finite() as usize)
            .sum::<usize>();
    if folded_rows >= 200 && folded_rows >= 4 * lp.num_vars {
        Ok(solve_dual_route(lp))
    } else {
        Ok(solve_primal(lp))
    }
}

/// True iff `z` satisfies every constraint and bound within [`FEAS_TOL`].
pub fn check_feasible(lp: &LinearProgram, z: &[f64]) -> Result<bool, LpError> {
    validate(lp)?;
    if z.len() != lp.num_vars {
        return Err(LpError::MalformedProgram("point length mismatch".into()));
    }
    for c in &lp.constraints {
        let lhs: f64 = c.coeffs.iter().map(|&(j, v)| v * z[j]).sum();
        let scale = 1.0 + c.rhs.abs();
        let ok = match c.relation {
            Relation::Le => lhs <= c.rhs + FEAS_TOL * scale,
            Relation::Ge => lhs >= c.rhs - FEAS_TOL * scale,
            Relation::Eq => (lhs - c.rhs).abs() <= FEAS_TOL * scale,
        };
        if !ok {
            return Ok(false);
        }
    }
    for (j, b) in lp.bounds.iter().enumerate() {
        if z[j] < b.lower - FEAS_TOL * (1.0 + b.lower.abs())
            || z[j] > b.upper + FEAS_TOL * (1.0 + b.upper.abs())
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rank evidence for uniqueness of the optimum (Chebyshev alternation view):
/// collects the constraints and bounds binding at `sol` and checks that their
/// coefficient matrix, restricted to the variables with zero objective
/// coefficient (the support values; the objective variable ε is excluded),
/// has full column rank. `false` flags a potentially non-singleton face.
pub fn uniqueness_probe(lp: &LinearProgram, sol: &LpSolution) -> bool {
    if sol.status != Status::Optimal {
        return false;
    }
    let free_cols: Vec<usize> = (0..lp.num_vars).filter(|&j| lp.objective[j] == 0.0).collect();
    if free_cols.is_empty() {
        return true;
    }
    let col_of: std::collections::HashMap<usize, usize> =
        free_cols.iter().enumerate().map(|(k, &j)| (j, k)).collect();
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let bind_tol = |rhs: f64| 1e-7 * (1.0 + rhs.abs());
    for c in &lp.constraints {
        let lhs: f64 = c.coeffs.iter().map(|&(j, v)| v * sol.values[j]).sum();
        if (lhs - c.rhs).abs() <= bind_tol(c.rhs) {
            let mut r = vec![0.0; free_cols.len()];
            for &(j, v) in &c.coeffs {
                if let Some(&k) = col_of.get(&j) {
                    r[k] = v;
                }
            }
            rows.push(r);
        }
    }
    for (j, b) in lp.bounds.iter().enumerate() {
        if let Some(&k) = col_of.get(&j) {
            let v = sol.values[j];
            if (b.lower.is_finite() && (v - b.lower).abs() <= bind_tol(b.lower))
                || (b.upper.is_finite() && (v - b.upper).abs() <= bind_tol(b.upper))
            {
                let mut r = vec![0.0; free_cols.len()];
                r[k] = 1.0;
                rows.push(r);
            }
        }
    }
    rank(&mut rows, free_cols.len()) == free_cols.len()
}

/// Row rank by Gaussian elimination with partial pivoting, tolerance 1e-8.
fn rank(rows: &mut [Vec<f64>], ncols: usize) -> usize {
    let mut r = 0;
    for col in 0..ncols {
        let mut p = usize::MAX;
        let mut best = 1e-8;
        for (i, row) in rows.iter().enumerate().skip(r) {
            if row[col].abs() > best {
                best = row[col].abs();
                p = i;
            }
        }
        if p == usize::MAX {
            continue;
        }
        rows.swap(r, p);
        let d = rows[r][col];
        for i in (r + 1)..rows.len() {
            let f = rows[i][col] / d;
            if f != 0.0 {
                let (head, tail) = rows.split_at_mut(i);
                let pivot_row = &head[r];
                for (j, cell) in tail[0].iter_mut().enumerate().take(ncols).skip(col) {
                    *cell -= f * pivot_row[j];
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Plain-text dump in an LP-style format (debug aid behind a CLI flag).
pub fn dump(lp: &LinearProgram) -> String {
    use std::fmt::Write;
    let mut s = String::new();
    let term = |j: usize, v: f64| format!("{v:+} z{j}");
    let mut line = String::from("min:");
    for (j, &c) in lp.objective.iter().enumerate() {
        if c != 0.0 {
            write!(line, " {}", term(j, c)).unwrap();
        }
    }
    s.push_str(&line);
    s.push_str(";\n");
    for (i, c) in lp.constraints.iter().enumerate() {
        let rel = match c.relation {
            Relation::Le => "<=",
            Relation::Eq => "=",
            Relation::Ge => ">=",
        };
        let mut line = format!("r{i}:");
        for &(j, v) in &c.coeffs {
            write!(line, " {}", term(j, v)).unwrap();
        }
        write!(line, " {rel} {};", c.rhs).unwrap();
        s.push_str(&line);
        s.push('\n');
    }
    for (j, b) in lp.bounds.iter().enumerate() {
        let line = match (b.lower.is_finite(), b.upper.is_finite()) {
            (false, false) => format!("z{j} free;"),
            (true, false) => format!("z{j} >= {};", b.lower),
            (false, true) => format!("z{j} <= {};", b.upper),
            (true, true) => format!("{} <= z{j} <= {};", b.lower, b.upper),
        };
        s.push_str(&line);
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(
        num_vars: usize,
        objective: Vec<f64>,
        constraints: Vec<Constraint>,
        bounds: Vec<Bounds>,
    ) -> LinearProgram {
        LinearProgram { num_vars, objective, constraints, bounds }
    }

    #[test]
    fn single_interpolation_point() {
        // min eps s.t. -eps <= x - 3 <= eps, x free, eps >= 0
        let p = lp(
            2,
            vec![0.0, 1.0],
            vec![
                Constraint::new(vec![(0, 1.0), (1, -1.0)], Relation::Le, 3.0),
                Constraint::new(vec![(0, -1.0), (1, -1.0)], Relation::Le, -3.0),
            ],
            vec![Bounds::free(), Bounds::lower(0.0)],
        );
        let s = solve(&p).unwrap();
        assert_eq!(s.status, Status::Optimal);
        assert!((s.values[0] - 3.0).abs() < 1e-9);
        assert!(s.values[1].abs() < 1e-9);
        assert!(uniqueness_probe(&p, &s));
    }

    #[test]
    fn simple_bounded_max() {
        // min -x s.t. x <= 5, x >= 0
        let p = lp(
            1,
            vec![-1.0],
            vec![Constraint::new(vec![(0, 1.0)], Relation::Le, 5.0)],
            vec![Bounds::lower(0.0)],
        );
        let s = solve(&p).unwrap();
        assert_eq!(s.status, Status::Optimal);
        assert!((s.values[0] - 5.0).abs() < 1e-9);
        assert!((s.objective_value + 5.0).abs() < 1e-9);
    }

    #[test]
    fn equality_and_ge_rows() {
        // min x + y s.t. x + y = 2, x - y >= -1, x,y >= 0  -> obj 2
        let p = lp(
            2,
            vec![1.0, 1.0],
            vec![
                Constraint::new(vec![(0, 1.0), (1, 1.0)], Relation::Eq, 2.0),
                Constraint::new(vec![(0, 1.0), (1, -1.0)], Relation::Ge, -1.0),
            ],
            vec![Bounds::lower(0.0), Bounds::lower(0.0)],
        );
        let s = solve(&p).unwrap();
        assert_eq!(s.status, Status::Optimal);
        assert!((s.objective_value - 2.0).abs() < 1e-9);
        assert!(check_feasible(&p, &s.values).unwrap());
    }

    #[test]
    fn detects_infeasible() {
        let p = lp(
            1,
            vec![1.0],
            vec![
                Constraint::new(vec![(0, 1.0)], Relation::Le, 1.0),
                Constraint::new(vec![(0, 1.0)], Relation::Ge, 2.0),
            ],
            vec![Bounds::free()],
        );
        assert_eq!(solve(&p).unwrap().status, Status::Infeasible);
    }

    #[test]
    fn detects_unbounded() {
        let p = lp(1, vec![-1.0], vec![], vec![Bounds::lower(0.0)]);
        assert_eq!(solve(&p).unwrap().status, Status::Unbounded);
    }

    #[test]
    fn free_variable_negative_solution() {
        // min x s.t. x >= -4 encoded as a Ge row, x free
        let p = lp(
            1,
            vec![1.0],
            vec![Constraint::new(vec![(0, 1.0)], Relation::Ge, -4.0)],
            vec![Bounds::free()],
        );
        let s = solve(&p).unwrap();
        assert!((s.values[0] + 4.0).abs() < 1e-9);
    }

    #[test]
    fn double_bounds() {
        // min -x - 2y, 1 <= x <= 3, -2 <= y <= 2, x + y <= 4
        let p = lp(
            2,
            vec![-1.0, -2.0],
            vec![Constraint::new(vec![(0, 1.0), (1, 1.0)], Relation::Le, 4.0)],
            vec![
                Bounds { lower: 1.0, upper: 3.0 },
                Bounds { lower: -2.0, upper: 2.0 },
            ],
        );
        let s = solve(&p).unwrap();
        assert_eq!(s.status, Status::Optimal);
        assert!((s.values[0] - 2.0).abs() < 1e-8);
        assert!((s.values[1] - 2.0).abs() < 1e-8);
    }

    #[test]
    fn malformed_rejected() {
        let p = lp(1, vec![f64::NAN], vec![], vec![Bounds::free()]);
        assert!(solve(&p).is_err());
        let p = lp(
            1,
            vec![0.0],
            vec![Constraint::new(vec![(3, 1.0)], Relation::Le, 0.0)],
            vec![Bounds::free()],
        );
        assert!(solve(&p).is_err());
    }

    /// A row-heavy program exercising the dual route: Chebyshev center of the
    /// unit square described by 400 tangent halfplanes of its inscribed disk
    /// plus the four sides.
    #[test]
    fn dual_route_chebyshev_square() {
        let mut constraints = Vec::new();
        for i in 0..248 {
            let th = 2.0 * std::f64::consts::PI * (i as f64) / 248.0;
            let (sn, cs) = th.sin_cos();
            // n·c + r <= 1 for the square's disk-relaxation plus corners
            let rhs = if i % 62 == 0 { 1.0 } else { 2.0_f64.sqrt() };
            constraints.push(Constraint::new(
                vec![(0, cs), (1, sn), (2, 1.0)],
                Relation::Le,
                rhs,
            ));
        }
        let p = lp(
            3,
            vec![0.0, 0.0, -1.0],
            constraints,
            vec![Bounds::free(), Bounds::free(), Bounds::lower(0.0)],
        );
        let s = solve(&p).unwrap();
        assert_eq!(s.status, Status::Optimal);
        assert!((s.values[2] - 1.0).abs() < 1e-8, "r = {}", s.values[2]);
        assert!(check_feasible(&p, &s.values).unwrap());
    }

    #[test]
    fn dual_route_infeasible_and_unbounded() {
        // many rows forcing x <= 1 and x >= 2 (infeasible)
        let mut constraints: Vec<Constraint> = (0..300)
            .map(|i| Constraint::new(vec![(0, 1.0)], Relation::Le, 1.0 + (i % 3) as f64 * 0.0))
            .collect();
        constraints.push(Constraint::new(vec![(0, 1.0)], Relation::Ge, 2.0));
        let p = lp(1, vec![1.0], constraints.clone(), vec![Bounds::free()]);
        assert_eq!(solve(&p).unwrap().status, Status::Infeasible);
        // many rows, objective unbounded below
        let constraints: Vec<Constraint> = (0..300)
            .map(|_| Constraint::new(vec![(0, 1.0)], Relation::Le, 1.0))
            .collect();
        let p = lp(1, vec![1.0], constraints, vec![Bounds::free()]);
        assert_eq!(solve(&p).unwrap().status, Status::Unbounded);
    }

    /// Weak duality: the final simplex multipliers price every column
    /// nonnegatively and their inner product with the rhs is a lower bound
    /// on the reported optimum.
    #[test]
    fn weak_duality_spot_check() {
        let sf = StandardForm {
            rows: 3,
            cols: vec![
                vec![(0, 1.0), (1, 2.0)],
                vec![(0, 2.0), (2, 1.0)],
                vec![(1, 1.0), (2, 3.0)],
                vec![(0, 1.0), (1, 1.0), (2, 1.0)],
                vec![(1, 4.0)],
                vec![(2, 2.0)],
            ],
            rhs: vec![4.0, 3.0, 5.0],
            cost: vec![3.0, 2.0, 4.0, 1.5, 2.5, 1.0],
            flipped: vec![false; 3],
        };
        let res = simplex_standard(&sf);
        assert!(matches!(res.status, CoreStatus::Optimal));
        let bound: f64 = res.multipliers.iter().zip(&sf.rhs).map(|(p, r)| p * r).sum();
        assert!(res.objective >= bound - 1e-7, "obj {} < bound {}", res.objective, bound);
        for (j, col) in sf.cols.iter().enumerate() {
            let rc = sf.cost[j] - col.iter().map(|&(i, v)| res.multipliers[i] * v).sum::<f64>();
            assert!(rc >= -1e-9, "column {j} priced negative: {rc}");
        }
    }

    /// Tiny right-hand-side perturbations move the optimum by a bounded
    /// amount on a pipeline-shaped program.
    #[test]
    fn perturbation_stability_on_difference_lp() {
        use rand::Rng;
        use rand::SeedableRng;
        let net = crate::net::build_net(32).unwrap();
        let a = crate::geometry::ConvexPolygon::segment(
            crate::geometry::Point2::new(-0.5, 0.0),
            crate::geometry::Point2::new(0.5, 0.0),
        );
        let b = crate::geometry::ConvexPolygon::segment(
            crate::geometry::Point2::new(0.0, -1.0),
            crate::geometry::Point2::new(0.0, 1.0),
        );
        let opts = crate::diff::DifferenceOptions { m: 32, ..Default::default() };
        let base = crate::diff::assemble_lp(&a, &b, &net, &opts);
        let obj0 = solve(&base).unwrap().objective_value;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31337);
        for _ in 0..3 {
            let mut lp = base.clone();
            for c in lp.constraints.iter_mut() {
                c.rhs += rng.gen_range(-1e-10..1e-10);
            }
            let obj = solve(&lp).unwrap().objective_value;
            assert!((obj - obj0).abs() <= 1e-6, "delta = {}", (obj - obj0).abs());
        }
    }

    #[test]
    fn determinism_bitwise() {
        let p = lp(
            3,
            vec![1.0, -2.0, 0.5],
            vec![
                Constraint::new(vec![(0, 1.0), (1, 1.0), (2, 1.0)], Relation::Le, 10.0),
                Constraint::new(vec![(0, -1.0), (1, 2.0)], Relation::Le, 4.0),
                Constraint::new(vec![(1, 1.0), (2, -3.0)], Relation::Ge, -6.0),
            ],
            vec![Bounds::lower(0.0), Bounds::lower(0.0), Bounds::free()],
        );
        let a = solve(&p).unwrap();
        let b = solve(&p).unwrap();
        assert_eq!(a.values.iter().map(|v| v.to_bits()).collect::<Vec<_>>(),
                   b.values.iter().map(|v| v.to_bits()).collect::<Vec<_>>());
        assert_eq!(a.objective_value.to_bits(), b.objective_value.to_bits());
        assert_eq!(a.basis, b.basis);
    }

    #[test]
    fn degenerate_flagged() {
        // optimum at a degenerate vertex: three lines through one point
        let p = lp(
            2,
            vec![-1.0, -1.0],
            vec![
                Constraint::new(vec![(0, 1.0)], Relation::Le, 1.0),
                Constraint::new(vec![(1, 1.0)], Relation::Le, 1.0),
                Constraint::new(vec![(0, 1.0), (1, 1.0)], Relation::Le, 2.0),
            ],
            vec![Bounds::lower(0.0), Bounds::lower(0.0)],
        );
        let s = solve(&p).unwrap();
        assert_eq!(s.status, Status::Optimal);
        assert!((s.objective_value + 2.0).abs() < 1e-9);
    }
}
