//! Truncated p-adic series with explicit precision, the branch series through
//! S- = (1, -3) on y^2 = g(x), the determinant congruence and Strassman bounds.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::descent::c1_32_g;
use crate::error::{Error, Result};
use crate::exactmath::{int, rat, rational::valuation, QPoly, Rational};
use crate::report::{Check, Status};

/// A coefficient known modulo p^precision; `residue` lies in [0, p^precision).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicCoeff {
    pub index: usize,
    pub residue: BigInt,
    pub precision: u32,
}

/// What a coefficient's residue certifies about its valuation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certified {
    Exact(u32),
    AtLeast(u32),
}

impl PadicCoeff {
    pub fn valuation(&self, p: u64) -> Certified {
        if self.residue.is_zero() {
            return Certified::AtLeast(self.precision);
        }
        let mut v = 0;
        let mut r = self.residue.clone();
        let p = BigInt::from(p);
        while (&r % &p).is_zero() {
            r /= &p;
            v += 1;
        }
        Certified::Exact(v)
    }
}

/// sum a_n X^n with the listed a_n known to their precision and every other
/// coefficient of valuation at least `tail_floor`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicSeries {
    pub p: u64,
    pub coeffs: Vec<PadicCoeff>,
    pub tail_floor: u32,
    /// Set when the floor is not stated alongside the congruence.
    pub floor_assumed: bool,
}

impl PadicSeries {
    /// Coefficients 0..values.len() all known modulo p^precision.
    pub fn from_congruence(p: u64, values: &[i64], precision: u32, tail_floor: u32) -> Self {
        let m = BigInt::from(p).pow(precision);
        let coeffs = values
            .iter()
            .enumerate()
            .map(|(index, &v)| PadicCoeff { index, residue: BigInt::from(v).mod_floor(&m), precision })
            .collect();
        PadicSeries { p, coeffs, tail_floor, floor_assumed: false }
    }

    pub fn assumed_floor(mut self) -> Self {
        self.floor_assumed = true;
        self
    }

    pub fn coeff(&self, index: usize) -> Option<&PadicCoeff> {
        self.coeffs.iter().find(|c| c.index == index)
    }

    /// The residues in index order.
    pub fn residues(&self) -> Vec<BigInt> {
        let mut c = self.coeffs.clone();
        c.sort_by_key(|c| c.index);
        c.into_iter().map(|c| c.residue).collect()
    }

    pub fn is_zero_mod_precision(&self) -> bool {
        self.coeffs.iter().all(|c| c.residue.is_zero())
    }
}

impl fmt::Display for PadicSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut c = self.coeffs.clone();
        c.sort_by_key(|c| c.index);
        let terms: Vec<String> = c
            .iter()
            .filter(|c| !c.residue.is_zero())
            .map(|c| match c.index {
                0 => c.residue.to_string(),
                1 => format!("{}n", c.residue),
                k => format!("{}n^{k}", c.residue),
            })
            .collect();
        let body = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
        match c.iter().map(|c| c.precision).min() {
            Some(r) => write!(f, "{body} (mod {}^{r})", self.p),
            None => f.write_str(&body),
        }
    }
}

/// A p-adic number known modulo p^precision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicValue {
    pub residue: BigInt,
    pub precision: u32,
}

impl PadicValue {
    pub fn new(v: i64, p: u64, precision: u32) -> Self {
        PadicValue { residue: BigInt::from(v).mod_floor(&BigInt::from(p).pow(precision)), precision }
    }
}

/// Delta(n) = L1(n) l2 - L2(n) l1, every coefficient reduced modulo the
/// common precision.
pub fn chabauty_determinant(l1s: &PadicSeries, l2s: &PadicSeries, l1: &PadicValue, l2: &PadicValue) -> Result<PadicSeries> {
    if l1s.p != l2s.p {
        return Err(Error::Precision("series over different primes".into()));
    }
    let precisions: Vec<u32> = l1s
        .coeffs
        .iter()
        .chain(&l2s.coeffs)
        .map(|c| c.precision)
        .chain([l1.precision, l2.precision])
        .collect();
    let r = precisions[0];
    if precisions.iter().any(|&q| q != r) {
        return Err(Error::Precision(format!("moduli {precisions:?} differ")));
    }
    let m = BigInt::from(l1s.p).pow(r);
    let zero = BigInt::zero();
    let top = l1s.coeffs.iter().chain(&l2s.coeffs).map(|c| c.index).max().unwrap_or(0);
    let coeffs = (0..=top)
        .map(|index| {
            let a = l1s.coeff(index).map_or(&zero, |c| &c.residue);
            let b = l2s.coeff(index).map_or(&zero, |c| &c.residue);
            let residue = (a * &l2.residue - b * &l1.residue).mod_floor(&m);
            PadicCoeff { index, residue, precision: r }
        })
        .collect();
    Ok(PadicSeries {
        p: l1s.p,
        coeffs,
        tail_floor: l1s.tail_floor.min(l2s.tail_floor),
        floor_assumed: l1s.floor_assumed || l2s.floor_assumed,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrassmanBound {
    AtMost(usize),
    Indeterminate,
}

impl fmt::Display for StrassmanBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StrassmanBound::AtMost(n) => write!(f, "at most {n} zeros"),
            StrassmanBound::Indeterminate => f.write_str("indeterminate"),
        }
    }
}

/// Number of zeros in Z_p is at most the largest index attaining the minimal
/// coefficient valuation, provided precision certifies that index.
pub fn strassman_bound(s: &PadicSeries) -> StrassmanBound {
    let exact: Vec<(usize, u32)> = s
        .coeffs
        .iter()
        .filter_map(|c| match c.valuation(s.p) {
            Certified::Exact(v) => Some((c.index, v)),
            Certified::AtLeast(_) => None,
        })
        .collect();
    let Some(m) = exact.iter().map(|&(_, v)| v).min() else {
        return StrassmanBound::Indeterminate;
    };
    if m >= s.tail_floor {
        return StrassmanBound::Indeterminate;
    }
    let n = exact.iter().filter(|&&(_, v)| v == m).map(|&(i, _)| i).max().expect("nonempty");
    let shadowed = s.coeffs.iter().any(|c| c.index > n && matches!(c.valuation(s.p), Certified::AtLeast(r) if r <= m));
    if shadowed {
        StrassmanBound::Indeterminate
    } else {
        StrassmanBound::AtMost(n)
    }
}

/// Known zeros set against a Strassman bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroAccounting {
    pub bound: usize,
    pub known: Vec<i64>,
    pub exhausted: bool,
}

pub fn known_zero_accounting(bound: usize, known: &[i64]) -> Result<ZeroAccounting> {
    let mut z = known.to_vec();
    z.sort_unstable();
    z.dedup();
    if z.len() > bound {
        return Err(Error::Inconsistent { found: z.len(), bound });
    }
    Ok(ZeroAccounting { bound, exhausted: z.len() == bound, known: z })
}

/// Power series x = xi(t) with xi(0) = x0 and g(xi(t)) = (y0 + t)^2.
#[derive(Debug, Clone, PartialEq)]
pub struct BranchSeries {
    pub coeffs: Vec<Rational>,
    pub order: usize,
}

fn series_mul(a: &[Rational], b: &[Rational], n: usize) -> Vec<Rational> {
    let mut out = vec![int(0); n];
    for (i, x) in a.iter().enumerate().take(n) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn series_eval(g: &QPoly, x: &[Rational], n: usize) -> Vec<Rational> {
    let mut acc = vec![int(0); n];
    for c in g.coeffs().iter().rev() {
        acc = series_mul(&acc, x, n);
        acc[0] += c;
    }
    acc
}

fn series_inv(a: &[Rational], n: usize) -> Vec<Rational> {
    let mut out = vec![int(0); n];
    out[0] = a[0].recip();
    for k in 1..n {
        let s: Rational = (1..=k.min(a.len() - 1)).map(|i| &a[i] * &out[k - i]).sum();
        out[k] = -(s * &out[0]);
    }
    out
}

/// Newton iteration x <- x - (g(x) - (y0 + t)^2)/g'(x), doubling the
/// precision each step, until the series is correct through t^order.
pub fn branch_series(g: &QPoly, x0: &Rational, y0: &Rational, order: usize) -> Result<BranchSeries> {
    if g.eval_q(x0) != y0 * y0 {
        return Err(Error::InvalidPoint(format!("({x0}, {y0})")));
    }
    let dg = g.derivative(&crate::exactmath::Rationals);
    if dg.eval_q(x0).is_zero() {
        return Err(Error::SingularBranch(format!("g'({x0}) = 0")));
    }
    let target = |n: usize| {
        let mut t = vec![int(0); n];
        t[0] = y0 * y0;
        if n > 1 {
            t[1] = y0 * int(2);
        }
        if n > 2 {
            t[2] = int(1);
        }
        t
    };
    let mut x = vec![x0.clone()];
    let mut prec = 1;
    while prec < order + 1 {
        prec = (2 * prec).min(order + 1);
        x.resize(prec, int(0));
        let gx = series_eval(g, &x, prec);
        let resid: Vec<Rational> = gx.iter().zip(target(prec)).map(|(a, b)| a - b).collect();
        let step = series_mul(&resid, &series_inv(&series_eval(&dg, &x, prec), prec), prec);
        for (xi, s) in x.iter_mut().zip(step) {
            *xi -= s;
        }
    }
    Ok(BranchSeries { coeffs: x, order })
}

impl BranchSeries {
    /// Whether g(xi(t)) - (y0 + t)^2 vanishes through t^k.
    pub fn consistent_to(&self, g: &QPoly, y0: &Rational, k: usize) -> bool {
        let n = k + 1;
        if n > self.coeffs.len() {
            return false;
        }
        let gx = series_eval(g, &self.coeffs[..n], n);
        let mut t = vec![y0 * y0, y0 * int(2), int(1)];
        t.resize(n.max(3), int(0));
        gx.iter().zip(&t).all(|(a, b)| a == b)
    }

    pub fn integral_at(&self, p: u64) -> bool {
        self.coeffs.iter().all(|c| valuation(c, p).is_none_or(|v| v >= 0))
    }

    /// sum_{k <= order} c_k t^k modulo p^e, for p-integral coefficients and t.
    pub fn eval_mod(&self, t: i64, p: u64, e: u32) -> Option<BigInt> {
        let m = BigInt::from(p).pow(e);
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            let r = rational_mod(c, &m, p)?;
            acc = (acc * t + r).mod_floor(&m);
        }
        Some(acc)
    }
}

/// q mod m for a p-integral rational, m a power of p.
fn rational_mod(q: &Rational, m: &BigInt, p: u64) -> Option<BigInt> {
    let d = q.denom();
    if (d % BigInt::from(p)).is_zero() {
        return None;
    }
    let inv = d.extended_gcd(m).x.mod_floor(m);
    Some((q.numer() * inv).mod_floor(m))
}

pub fn printed_xi() -> Vec<Rational> {
    vec![int(1), rat(-3, 8), rat(-31, 512), rat(105, 16384), rat(15269, 2097152)]
}

/// s1, s2 through t^4, over the common denominator 4194304.
pub fn printed_s() -> [Vec<Rational>; 2] {
    let d = 4194304;
    [
        vec![int(0), rat(1, 16), rat(9, 1024), rat(-111, 32768), rat(-8979, d)],
        vec![int(0), rat(1, 16), rat(21, 1024), rat(141, 32768), rat(1929, d)],
    ]
}

pub const ELL: [i64; 2] = [3, 75];

/// L1(n), L2(n) modulo 3^4 through n^3.
pub fn printed_l() -> [PadicSeries; 2] {
    [
        PadicSeries::from_congruence(3, &[0, 66, 0, 54], 4, 4).assumed_floor(),
        PadicSeries::from_congruence(3, &[0, 66, 27, 72], 4, 4).assumed_floor(),
    ]
}

pub fn printed_delta() -> PadicSeries {
    PadicSeries::from_congruence(3, &[0, 54, 0, 27], 4, 4).assumed_floor()
}

/// theta(n) for Q+, R+ and inf+, modulo 3^2.
pub fn printed_thetas() -> Vec<(&'static str, PadicSeries)> {
    vec![
        ("Q+", PadicSeries::from_congruence(3, &[0, 3], 2, 2).assumed_floor()),
        ("R+", PadicSeries::from_congruence(3, &[0, 6], 2, 2).assumed_floor()),
        ("inf+", PadicSeries::from_congruence(3, &[0, 6], 2, 2).assumed_floor()),
    ]
}

fn bound_check(id: &str, statement: &str, s: &PadicSeries, expected: usize) -> Check {
    let b = strassman_bound(s);
    let mut c = Check::equal(id, statement, &b, &StrassmanBound::AtMost(expected)).with_value(format!("{s}: {b}"));
    if s.floor_assumed {
        c = c.with_note(format!("tail valuation floor {} taken equal to the stated modulus", s.tail_floor));
    }
    c
}

fn accounting_check(id: &str, statement: &str, bound: StrassmanBound, zeros: &[i64], conclusion: &str) -> Check {
    let StrassmanBound::AtMost(n) = bound else {
        return Check::new(id, statement, Status::Indeterminate);
    };
    match known_zero_accounting(n, zeros) {
        Ok(z) if z.exhausted => Check::new(id, statement, Status::Pass)
            .with_value(format!("zeros {:?} exhaust bound {n}", z.known))
            .with_note(conclusion),
        Ok(z) => Check::new(id, statement, Status::Fail).with_value(format!("zeros {:?} below bound {n}", z.known)),
        Err(e) => Check::new(id, statement, Status::Fail).with_value(e.to_string()),
    }
}

pub const XI_ORDER: usize = 10;

pub fn padic_report() -> Result<Vec<Check>> {
    let g = c1_32_g();
    let y0 = int(-3);
    let xi = branch_series(&g, &int(1), &y0, XI_ORDER)?;
    let printed = printed_xi();
    let anchor = "branch series at S-";
    let mut out = vec![
        Check::equal(
            "padic.xi.coefficients",
            "xi(t) = 1 - 3t/8 - 31t^2/512 + 105t^3/16384 + 15269t^4/2097152 + O(t^5)",
            &format!("{:?}", xi.coeffs[..5].iter().map(|c| c.to_string()).collect::<Vec<_>>()),
            &format!("{:?}", printed.iter().map(|c| c.to_string()).collect::<Vec<_>>()),
        )
        .with_anchor(anchor),
        Check::from_bool(
            "padic.xi.consistent",
            format!("g(xi(t)) = (t - 3)^2 through t^{XI_ORDER}"),
            (1..=XI_ORDER).all(|k| xi.consistent_to(&g, &y0, k)),
        )
        .with_anchor(anchor),
        Check::from_bool(
            "padic.xi.integral",
            format!("xi(t) has 3-integral coefficients through t^{XI_ORDER}"),
            xi.integral_at(3),
        )
        .with_anchor(anchor),
        Check::equal(
            "padic.xi.s_plus",
            format!("xi(6) = 1 (mod 3^{XI_ORDER}), so t = 6 recovers S+ = (1, 3)"),
            &xi.eval_mod(6, 3, XI_ORDER as u32).map_or("undefined".into(), |v| v.to_string()),
            &"1".to_string(),
        ),
        Check::from_bool(
            "padic.s_integral",
            "s1(t), s2(t) have 3-integral coefficients",
            printed_s().iter().flatten().all(|c| valuation(c, 3).is_none_or(|v| v >= 0)),
        ),
    ];

    let [l1s, l2s] = printed_l();
    let delta = chabauty_determinant(&l1s, &l2s, &PadicValue::new(ELL[0], 3, 4), &PadicValue::new(ELL[1], 3, 4))?;
    out.push(
        Check::equal(
            "padic.delta",
            "Delta(n) = 54n + 27n^3 (mod 3^4) from L1, L2, l1 = 3, l2 = 75",
            &format!("{:?}", delta.residues()),
            &format!("{:?}", printed_delta().residues()),
        )
        .with_value(delta.to_string())
        .with_anchor("Delta(n) congruence"),
    );

    for (name, theta) in printed_thetas() {
        let id = format!("padic.theta_{}", name.trim_end_matches('+').to_lowercase());
        out.push(bound_check(&id, &format!("theta(n) for {name}: at most one zero in Z_3"), &theta, 1));
        out.push(accounting_check(
            &format!("{id}.zeros"),
            &format!("the known zero n = 0 exhausts the bound for {name}"),
            strassman_bound(&theta),
            &[0],
            &format!("a rational point with the reduction of {name} equals {name}"),
        ));
    }
    let db = strassman_bound(&delta);
    out.push(bound_check("padic.delta.bound", "Delta(n) has at most three zeros in Z_3", &delta, 3));
    out.push(accounting_check(
        "padic.delta.zeros",
        "the zeros n = 0, 1, 2 exhaust the bound for Delta",
        db,
        &[0, 1, 2],
        "a rational point reducing to (1,0) is one of S-, W, S+, and only S- and S+ are rational",
    ));
    Ok(out)
}

/// Whether the residue of `fine` refines that of `coarse`.
pub fn refines(coarse: &PadicCoeff, fine: &PadicCoeff, p: u64) -> bool {
    fine.index == coarse.index
        && fine.precision >= coarse.precision
        && (&fine.residue - &coarse.residue).mod_floor(&BigInt::from(p).pow(coarse.precision)).is_zero()
}
