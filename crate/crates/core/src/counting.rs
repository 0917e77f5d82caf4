//! Exact counts of valid colorings.
//!
//! [`brute_count`] enumerates colorings directly from the predicates in
//! [`crate::schemes`]; the remaining functions are closed forms and
//! recurrences for paths, stars and (for star rainbow and proper colorings)
//! arbitrary trees. All of them are generic over the count type, so the same
//! code runs on `u64`, `u128` or [`num_bigint::BigUint`] with overflow
//! reported as an error.

use std::fmt::{Debug, Display};

use num_traits::{checked_pow, CheckedAdd, CheckedMul, FromPrimitive, One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::schemes::{two_colored_p4, LocalStats, Scheme};
use crate::treelib::Tree;

/// Exact unsigned counter usable by every counting routine.
pub trait Count:
    Clone + Ord + Debug + Display + Zero + One + CheckedAdd + CheckedMul + FromPrimitive + Send + Sync
{
}

impl<T> Count for T where
    T: Clone + Ord + Debug + Display + Zero + One + CheckedAdd + CheckedMul + FromPrimitive + Send + Sync
{
}

/// Default cap on `q^n` for [`brute_count`].
pub const DEFAULT_BUDGET: u64 = 1 << 36;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("q^n = {q}^{n} exceeds the enumeration budget {budget}")]
    BudgetExceeded { q: u32, n: usize, budget: u64 },
    #[error("count does not fit the counter type")]
    Overflow,
    #[error("q must be at least 1")]
    ZeroColors,
    #[error("n must be at least 1")]
    ZeroVertices,
    #[error("vertex order is not a connected ordering of the tree")]
    BadOrder,
}

pub type Result<T> = std::result::Result<T, CountError>;

fn lift<C: Count>(x: u64) -> Result<C> {
    C::from_u64(x).ok_or(CountError::Overflow)
}

fn mul<C: Count>(a: &C, b: &C) -> Result<C> {
    a.checked_mul(b).ok_or(CountError::Overflow)
}

fn add<C: Count>(a: &C, b: &C) -> Result<C> {
    a.checked_add(b).ok_or(CountError::Overflow)
}

fn pow<C: Count>(base: u64, exp: usize) -> Result<C> {
    checked_pow(lift::<C>(base)?, exp).ok_or(CountError::Overflow)
}

fn check_args(n: usize, q: u32) -> Result<()> {
    if q == 0 {
        return Err(CountError::ZeroColors);
    }
    if n == 0 {
        return Err(CountError::ZeroVertices);
    }
    Ok(())
}

/// `q^n` if it is at most `budget`.
pub fn check_budget(n: usize, q: u32, budget: u64) -> Result<u64> {
    let over = CountError::BudgetExceeded { q, n, budget };
    let exp = u32::try_from(n).map_err(|_| over.clone())?;
    match (q as u64).checked_pow(exp) {
        Some(space) if space <= budget => Ok(space),
        _ => Err(over),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteOptions {
    /// Largest `q^n` the search will attempt.
    pub budget: u64,
    /// Split the first vertex's color choices across the rayon pool.
    pub parallel: bool,
}

impl Default for BruteOptions {
    fn default() -> Self {
        BruteOptions {
            budget: DEFAULT_BUDGET,
            parallel: true,
        }
    }
}

/// Backtracking plan: vertices are colored in BFS order from vertex 0, and
/// each constraint is attached to the position at which its last vertex is
/// colored.
struct SearchPlan<'a> {
    tree: &'a Tree,
    q: u32,
    scheme: Scheme,
    order: Vec<usize>,
    vertex_checks: Vec<Vec<usize>>,
    path_checks: Vec<Vec<[usize; 4]>>,
}

impl<'a> SearchPlan<'a> {
    fn new(tree: &'a Tree, q: u32, scheme: Scheme) -> Self {
        let n = tree.n();
        let order = tree.bfs_order(0);
        let mut position = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let mut vertex_checks = vec![Vec::new(); n];
        for v in 0..n {
            let done = tree
                .neighbors(v)
                .iter()
                .map(|&w| position[w])
                .fold(position[v], usize::max);
            vertex_checks[done].push(v);
        }
        let mut path_checks = vec![Vec::new(); n];
        if scheme == Scheme::StarColoring {
            for p in crate::schemes::four_vertex_paths(tree) {
                let done = p.iter().map(|&v| position[v]).max().unwrap();
                path_checks[done].push(p);
            }
        }
        SearchPlan {
            tree,
            q,
            scheme,
            order,
            vertex_checks,
            path_checks,
        }
    }

    fn consistent(&self, depth: usize, colors: &[u32]) -> bool {
        let vertices_ok = self.vertex_checks[depth].iter().all(|&v| {
            LocalStats::collect(colors[v], self.tree.neighbors(v).iter().map(|&w| colors[w])).satisfies(self.scheme)
        });
        vertices_ok
            && self.path_checks[depth]
                .iter()
                .all(|p| !two_colored_p4(colors[p[0]], colors[p[1]], colors[p[2]], colors[p[3]]))
    }

    fn count_from(&self, depth: usize, colors: &mut [u32]) -> u64 {
        if depth == self.order.len() {
            return 1;
        }
        let v = self.order[depth];
        let mut total = 0;
        for c in 0..self.q {
            colors[v] = c;
            if self.consistent(depth, colors) {
                total += self.count_from(depth + 1, colors);
            }
        }
        total
    }

    fn count_with_first(&self, c: u32) -> u64 {
        let mut colors = vec![0u32; self.tree.n()];
        colors[self.order[0]] = c;
        if self.consistent(0, &colors) {
            self.count_from(1, &mut colors)
        } else {
            0
        }
    }

    fn count(&self, parallel: bool) -> u64 {
        if parallel {
            (0..self.q).into_par_iter().map(|c| self.count_with_first(c)).sum()
        } else {
            (0..self.q).map(|c| self.count_with_first(c)).sum()
        }
    }
}

/// Number of colorings `c` of `t` with `q` colors for which
/// [`crate::schemes::is_valid`] holds, found by pruned exhaustive search.
pub fn brute_count<C: Count>(t: &Tree, q: u32, scheme: Scheme) -> Result<C> {
    brute_count_with(t, q, scheme, &BruteOptions::default())
}

pub fn brute_count_with<C: Count>(t: &Tree, q: u32, scheme: Scheme, opts: &BruteOptions) -> Result<C> {
    check_args(t.n(), q)?;
    check_budget(t.n(), q, opts.budget)?;
    lift(SearchPlan::new(t, q, scheme).count(opts.parallel))
}

/// `q (q-1)^(n-1)`: proper colorings of any tree on `n` vertices.
pub fn proper_count<C: Count>(n: usize, q: u32) -> Result<C> {
    check_args(n, q)?;
    mul(&lift(q as u64)?, &pow(q as u64 - 1, n - 1)?)
}

/// `x_n = a x_{n-1} + b x_{n-2}` from the given `x_{first}`, `x_{first+1}`.
fn linear_recurrence<C: Count>(n: usize, first: usize, bases: [C; 2], a: u64, b: u64) -> Result<C> {
    let (a, b) = (lift::<C>(a)?, lift::<C>(b)?);
    let [mut prev, mut cur] = bases;
    if n == first {
        return Ok(prev);
    }
    for _ in first + 1..n {
        let next = add(&mul(&a, &cur)?, &mul(&b, &prev)?)?;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// Count for the path on `n` vertices.
///
/// Small cases are fixed by evaluating the predicates literally. In
/// particular `n = 1` gives 0 for the non-monochromatic, strong conflict-free
/// (`k >= 2`) and existence-homomorphism schemes, and the odd count at `n = 2`
/// is `q(q-1)` even though `q^(n-2) (q-1)^2` would give `(q-1)^2` there.
pub fn path_count<C: Count>(scheme: Scheme, n: usize, q: u32) -> Result<C> {
    check_args(n, q)?;
    let q64 = q as u64;
    let qq1 = || mul(&lift::<C>(q64)?, &lift(q64 - 1)?);
    match scheme {
        Scheme::Proper => proper_count(n, q),
        Scheme::ConflictFree | Scheme::KStrongConflictFree(1) | Scheme::NonMonochromatic => match n {
            1 if scheme == Scheme::NonMonochromatic => Ok(C::zero()),
            1 => lift(q64),
            2 => qq1(),
            _ => linear_recurrence(n, 2, [qq1()?, proper_count(3, q)?], q64 - 1, q64 - 1),
        },
        Scheme::Odd => match n {
            1 => lift(q64),
            2 => qq1(),
            _ => mul(&pow(q64, n - 2)?, &pow(q64 - 1, 2)?),
        },
        Scheme::StarRainbow | Scheme::KStrongConflictFree(2) => match n {
            1 if scheme == Scheme::StarRainbow => lift(q64),
            1 => Ok(C::zero()),
            _ => mul(&qq1()?, &pow(q64.saturating_sub(2), n - 2)?),
        },
        // At least three singleton colors are needed but the end vertices see
        // only two vertices.
        Scheme::KStrongConflictFree(_) => Ok(C::zero()),
        Scheme::StarColoring => match n {
            1 => lift(q64),
            2 => qq1(),
            _ if q < 2 => Ok(C::zero()),
            _ => linear_recurrence(n, 2, [qq1()?, proper_count(3, q)?], q64 - 2, q64 - 2),
        },
        Scheme::XHomLooped => match n {
            1 => Ok(C::zero()),
            _ => linear_recurrence(n, 2, [lift(q64)?, lift(q64)?], 1, q64 - 1),
        },
    }
}

/// Closed form for the star on `n` vertices, when one exists.
fn star_closed_form<C: Count>(scheme: Scheme, n: usize, q: u32) -> Option<Result<C>> {
    let q64 = q as u64;
    Some(match scheme {
        Scheme::Proper | Scheme::ConflictFree | Scheme::Odd | Scheme::StarColoring | Scheme::KStrongConflictFree(1) => {
            proper_count(n, q)
        }
        Scheme::NonMonochromatic if n == 1 => Ok(C::zero()),
        Scheme::NonMonochromatic => proper_count(n, q),
        Scheme::StarRainbow => (0..n as u64).try_fold(C::one(), |acc, i| {
            if i >= q64 {
                Ok(C::zero())
            } else {
                mul(&acc, &lift(q64 - i)?)
            }
        }),
        Scheme::XHomLooped if n == 1 => Ok(C::zero()),
        // Every leaf copies the center's color.
        Scheme::XHomLooped => lift(q64),
        Scheme::KStrongConflictFree(2) => return None,
        Scheme::KStrongConflictFree(_) => Ok(C::zero()),
    })
}

/// Count for the star on `n` vertices. The 2-strong conflict-free scheme
/// has no closed form here and falls back to [`brute_count`].
pub fn star_count<C: Count>(scheme: Scheme, n: usize, q: u32) -> Result<C> {
    check_args(n, q)?;
    match star_closed_form(scheme, n, q) {
        Some(count) => count,
        None => {
            let star = Tree::star(n).map_err(|_| CountError::BudgetExceeded {
                q,
                n,
                budget: DEFAULT_BUDGET,
            })?;
            brute_count(&star, q, scheme)
        }
    }
}

/// Star rainbow count as a product over a connected vertex ordering.
///
/// The `i`-th vertex must avoid the color of its earlier neighbor `j` and of
/// every earlier vertex adjacent to `j`; a nonpositive factor zeroes the product.
pub fn sr_count_product_ordered<C: Count>(t: &Tree, q: u32, order: &[usize]) -> Result<C> {
    check_args(t.n(), q)?;
    let n = t.n();
    let mut position = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || position[v] != usize::MAX {
            return Err(CountError::BadOrder);
        }
        position[v] = i;
    }
    if order.len() != n {
        return Err(CountError::BadOrder);
    }
    let mut product = lift::<C>(q as u64)?;
    for (i, &v) in order.iter().enumerate().skip(1) {
        let earlier = |w: &usize| position[*w] < i;
        if !t.neighbors(v).iter().any(earlier) {
            return Err(CountError::BadOrder);
        }
        let mut blocked = vec![false; n];
        for &j in t.neighbors(v).iter().filter(|w| earlier(w)) {
            for &k in t.neighbors(j).iter().filter(|w| earlier(w)) {
                blocked[k] = true;
            }
        }
        let forbidden = blocked.iter().filter(|&&b| b).count() as u64 + 1;
        if forbidden >= q as u64 {
            return Ok(C::zero());
        }
        product = mul(&product, &lift(q as u64 - forbidden)?)?;
    }
    Ok(product)
}

/// Star rainbow count via [`sr_count_product_ordered`] using BFS from the
/// lowest-index leaf.
pub fn sr_count_product<C: Count>(t: &Tree, q: u32) -> Result<C> {
    let start = (0..t.n()).find(|&v| t.is_leaf(v)).unwrap_or(0);
    sr_count_product_ordered(t, q, &t.bfs_order(start))
}

fn is_path(t: &Tree) -> bool {
    (0..t.n()).all(|v| t.degree(v) <= 2)
}

fn is_star(t: &Tree) -> bool {
    t.n() <= 2 || (0..t.n()).any(|v| t.degree(v) == t.n() - 1)
}

/// Closed-form count for `(t, scheme)` if one applies: proper and star
/// rainbow colorings on any tree, every scheme on paths, and every scheme but
/// `kscf:2` on stars.
pub fn closed_count<C: Count>(t: &Tree, q: u32, scheme: Scheme) -> Option<Result<C>> {
    if let Err(e) = check_args(t.n(), q) {
        return Some(Err(e));
    }
    match scheme {
        Scheme::Proper => Some(proper_count(t.n(), q)),
        Scheme::StarRainbow => Some(sr_count_product(t, q)),
        _ if is_path(t) => Some(path_count(scheme, t.n(), q)),
        _ if is_star(t) => star_closed_form(scheme, t.n(), q),
        _ => None,
    }
}
