//! Compositions, the eigenvalue order, node statistics and the scalar
//! constants attached to a composition.
//!
//! Rows are indexed from 0; columns `j` run over `1..=eta[i]`.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, rising, Rational};

pub type Composition = Vec<u32>;

pub fn weight(eta: &[u32]) -> u32 {
    eta.iter().sum()
}

/// The partition obtained by sorting `eta` in decreasing order.
pub fn eta_plus(eta: &[u32]) -> Composition {
    let mut p = eta.to_vec();
    p.sort_unstable_by(|a, b| b.cmp(a));
    p
}

pub fn is_partition(eta: &[u32]) -> bool {
    eta.windows(2).all(|w| w[0] >= w[1])
}

/// Dominance `a <= b`: every partial sum of `b - a` is nonnegative.
pub fn dominance_le(a: &[u32], b: &[u32]) -> bool {
    let (mut sa, mut sb) = (0i64, 0i64);
    for (x, y) in a.iter().zip(b) {
        sa += *x as i64;
        sb += *y as i64;
        if sb < sa {
            return false;
        }
    }
    true
}

/// Strict order: `nu < eta` iff `nu+ < eta+` in dominance, or `nu+ = eta+` and `nu < eta`.
pub fn precedes(nu: &[u32], eta: &[u32]) -> Result<bool> {
    let (wn, we) = (weight(nu), weight(eta));
    if wn != we {
        return Err(Error::UnequalWeight(wn, we));
    }
    if nu == eta {
        return Ok(false);
    }
    let (np, ep) = (eta_plus(nu), eta_plus(eta));
    if np != ep {
        return Ok(dominance_le(&np, &ep));
    }
    Ok(dominance_le(nu, eta))
}

/// A total order extending the eigenvalue order, larger meaning higher.
pub fn order_key(eta: &[u32]) -> (u32, Composition, Composition) {
    (weight(eta), eta_plus(eta), eta.to_vec())
}

/// Eigenvalues `alpha eta_i - #{k<i: eta_k >= eta_i} - #{k>i: eta_k > eta_i}`.
pub fn eigenvalues(eta: &[u32], alpha: &Rational) -> Vec<Rational> {
    (0..eta.len())
        .map(|i| {
            let before = eta[..i].iter().filter(|&&x| x >= eta[i]).count();
            let after = eta[i + 1..].iter().filter(|&&x| x > eta[i]).count();
            alpha * int(eta[i] as i64) - int((before + after) as i64)
        })
        .collect()
}

/// `delta_{i,eta} = eta_bar_i - eta_bar_{i+1}`.
pub fn delta(eta: &[u32], i: usize, alpha: &Rational) -> Rational {
    let ev = eigenvalues(eta, alpha);
    &ev[i] - &ev[i + 1]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NodeStats {
    pub arm: u32,
    pub coarm: u32,
    pub leg: u32,
    pub coleg: u32,
}

pub fn node_stats(eta: &[u32], i: usize, j: u32) -> NodeStats {
    assert!(j >= 1 && j <= eta[i], "node ({i},{j}) outside diagram");
    let ei = eta[i];
    let leg = eta[i + 1..].iter().filter(|&&k| j <= k && k <= ei).count()
        + eta[..i].iter().filter(|&&k| j <= k + 1 && k < ei).count();
    let coleg = eta[i + 1..].iter().filter(|&&k| k > ei).count() + eta[..i].iter().filter(|&&k| k >= ei).count();
    NodeStats { arm: ei - j, coarm: j - 1, leg: leg as u32, coleg: coleg as u32 }
}

pub fn nodes(eta: &[u32]) -> impl Iterator<Item = (usize, u32)> + '_ {
    eta.iter().enumerate().flat_map(|(i, &len)| (1..=len).map(move |j| (i, j)))
}

/// Products `d_eta`, `d'_eta`, `e_eta` over the diagram.
#[derive(Debug, Clone, PartialEq)]
pub struct EtaConstants {
    pub d: Rational,
    pub d_prime: Rational,
    pub e: Rational,
}

impl EtaConstants {
    pub fn new(eta: &[u32], alpha: &Rational) -> Self {
        let n = int(eta.len() as i64);
        let (mut d, mut dp, mut e) = (Rational::one(), Rational::one(), Rational::one());
        for (i, j) in nodes(eta) {
            let s = node_stats(eta, i, j);
            let dps = alpha * int(s.arm as i64 + 1) + int(s.leg as i64);
            d *= &dps + Rational::one();
            e *= alpha * int(s.coarm as i64 + 1) + &n - int(s.coleg as i64);
            dp *= dps;
        }
        EtaConstants { d, d_prime: dp, e }
    }

    pub fn f(&self) -> Rational {
        &self.d * &self.d_prime
    }
}

/// `[c]_eta = prod_s (c + a'(s) - l'(s)/alpha)`.
pub fn generalized_factorial(c: &Rational, eta: &[u32], alpha: &Rational) -> Rational {
    nodes(eta).fold(Rational::one(), |acc, (i, j)| {
        let s = node_stats(eta, i, j);
        acc * (c + int(s.coarm as i64) - int(s.coleg as i64) / alpha)
    })
}

/// `[r]_kappa = prod_j (r - (j-1)/alpha)_{kappa_j}` on the sorted parts of `kappa`.
pub fn generalized_pochhammer(r: &Rational, kappa: &[u32], alpha: &Rational) -> Rational {
    eta_plus(kappa)
        .iter()
        .enumerate()
        .fold(Rational::one(), |acc, (j, &k)| acc * rising(&(r - int(j as i64) / alpha), k))
}

/// Partition arm, coarm, leg and coleg of cell `(i, j)` (row `i` from 0, column `j` from 1).
fn partition_hooks(kappa: &[u32], i: usize, j: u32) -> (u32, u32) {
    let arm = kappa[i] - j;
    let leg = kappa[i + 1..].iter().filter(|&&k| k >= j).count() as u32;
    (arm, leg)
}

/// `j_kappa = prod_s (alpha a(s) + l(s) + 1)(alpha a(s) + l(s) + alpha)`.
pub fn hook_norm_j(kappa: &[u32], alpha: &Rational) -> Rational {
    let kappa = eta_plus(kappa);
    nodes(&kappa).fold(Rational::one(), |acc, (i, j)| {
        let (a, l) = partition_hooks(&kappa, i, j);
        let base = alpha * int(a as i64) + int(l as i64);
        acc * (&base + Rational::one()) * (&base + alpha)
    })
}

/// `J_kappa(1^n) = prod_s (n - l'(s) + alpha a'(s))` with partition colegs and coarms.
pub fn jack_j_at_ones(kappa: &[u32], n: usize, alpha: &Rational) -> Rational {
    let kappa = eta_plus(kappa);
    nodes(&kappa).fold(Rational::one(), |acc, (i, j)| acc * (int(n as i64 - i as i64) + alpha * int(j as i64 - 1)))
}

/// Eigenvalue of the second-order operator `D~_2` on `E_eta`:
/// `sum_j kappa_j (kappa_j - 1) + (2/alpha)(n - j) kappa_j` with `kappa = eta+`.
pub fn d2_eigenvalue(eta: &[u32], n: usize, alpha: &Rational) -> Rational {
    eta_plus(eta).iter().enumerate().fold(Rational::zero(), |acc, (j, &k)| {
        let k = int(k as i64);
        acc + &k * (&k - Rational::one()) + int(2) / alpha * int((n - 1 - j) as i64) * &k
    })
}

/// Raising map `(eta_2, ..., eta_n, eta_1 + 1)`.
pub fn phi(eta: &[u32]) -> Composition {
    let mut out: Composition = eta[1..].to_vec();
    out.push(eta[0] + 1);
    out
}

/// Lowering map `(eta_n - 1, eta_1, ..., eta_{n-1})`; `None` when `eta_n = 0`.
pub fn phi_hat(eta: &[u32]) -> Option<Composition> {
    let last = *eta.last()?;
    if last == 0 {
        return None;
    }
    let mut out = vec![last - 1];
    out.extend_from_slice(&eta[..eta.len() - 1]);
    Some(out)
}

pub fn swap(eta: &[u32], i: usize) -> Composition {
    let mut out = eta.to_vec();
    out.swap(i, i + 1);
    out
}

pub fn add_constant(eta: &[u32], p: u32) -> Composition {
    eta.iter().map(|x| x + p).collect()
}

/// All compositions of `weight` into `n` parts, in lexicographically descending order.
pub fn compositions(n: usize, weight: u32) -> Vec<Composition> {
    fn rec(n: usize, w: u32, prefix: &mut Composition, out: &mut Vec<Composition>) {
        if n == 1 {
            prefix.push(w);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=w).rev() {
            prefix.push(first);
            rec(n - 1, w - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if weight == 0 {
            out.push(vec![]);
        }
        return out;
    }
    rec(n, weight, &mut Vec::new(), &mut out);
    out
}

pub fn compositions_up_to(n: usize, max_weight: u32) -> Vec<Composition> {
    (0..=max_weight).flat_map(|w| compositions(n, w)).collect()
}

/// Partitions of `weight` with at most `max_len` nonzero parts, padded to `max_len`.
pub fn partitions(weight: u32, max_len: usize) -> Vec<Composition> {
    compositions(max_len, weight).into_iter().filter(|c| is_partition(c)).collect()
}

/// Compositions sharing the same sorted rearrangement as `kappa`.
pub fn rearrangements(kappa: &[u32]) -> Vec<Composition> {
    let target = eta_plus(kappa);
    compositions(kappa.len(), weight(kappa)).into_iter().filter(|c| eta_plus(c) == target).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn alphas() -> Vec<Rational> {
        vec![int(1), int(2), rat(1, 2), int(3), rat(7, 5)]
    }

    #[test]
    fn eigenvalue_examples() {
        let a = int(2);
        assert_eq!(eigenvalues(&[1, 0], &a), vec![int(2), int(-1)]);
        assert_eq!(eigenvalues(&[0, 1], &a), vec![int(-1), int(2)]);
        assert_eq!(eigenvalues(&[0, 0, 0], &a), vec![int(0), int(-1), int(-2)]);
    }

    #[test]
    fn order_examples() {
        assert!(precedes(&[0, 1], &[1, 0]).unwrap());
        assert!(!precedes(&[1, 0], &[0, 1]).unwrap());
        assert!(precedes(&[1, 1, 0], &[0, 2, 0]).unwrap());
        assert!(precedes(&[1, 1], &[2, 0]).unwrap());
        assert!(precedes(&[1, 0], &[2, 0]).is_err());
    }

    #[test]
    fn order_key_extends_order() {
        for w in 0..=4 {
            let cs = compositions(3, w);
            for a in &cs {
                for b in &cs {
                    if precedes(a, b).unwrap() {
                        assert!(order_key(a) < order_key(b), "{a:?} {b:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn hook_norm_examples() {
        let a = int(3);
        assert_eq!(hook_norm_j(&[1, 1], &a), int(2) * &a * (&a + int(1)));
        assert_eq!(hook_norm_j(&[2], &a), int(2) * &a * &a * (&a + int(1)));
    }

    #[test]
    fn constants_single_box() {
        for a in alphas() {
            let c = EtaConstants::new(&[1, 0], &a);
            assert_eq!(c.d_prime, a.clone());
            assert_eq!(c.d, &a + int(1));
            assert_eq!(c.e, &a + int(2));
            let c = EtaConstants::new(&[0, 1], &a);
            assert_eq!(c.d_prime, &a + int(1));
        }
    }

    #[test]
    fn raising_and_swap_recursions() {
        for a in alphas() {
            for n in 1..=4 {
                for eta in compositions_up_to(n, 4) {
                    let c = EtaConstants::new(&eta, &a);
                    let ev = eigenvalues(&eta, &a);
                    let up = EtaConstants::new(&phi(&eta), &a);
                    let shift = &ev[0] + &a + int(n as i64);
                    assert_eq!(&up.d / &c.d, shift);
                    assert_eq!(&up.e / &c.e, shift);
                    assert_eq!(&up.d_prime / &c.d_prime, &shift - int(1));
                    for i in 0..n.saturating_sub(1) {
                        if eta[i] > eta[i + 1] {
                            let s = EtaConstants::new(&swap(&eta, i), &a);
                            let dl = delta(&eta, i, &a);
                            assert_eq!(s.e, c.e);
                            assert_eq!(&s.d / &c.d, (&dl + int(1)) / &dl);
                            assert_eq!(&s.d_prime / &c.d_prime, &dl / (&dl - int(1)));
                        }
                    }
                    if let Some(low) = phi_hat(&eta) {
                        let l = EtaConstants::new(&low, &a);
                        assert_eq!(&c.d_prime / &l.d_prime, &ev[n - 1] + int(n as i64 - 1));
                    }
                }
            }
        }
    }

    #[test]
    fn generalized_factorial_identities() {
        let c = rat(5, 3);
        for a in alphas() {
            for n in 1..=3 {
                for eta in compositions_up_to(n, 4) {
                    let g = generalized_factorial(&c, &eta, &a);
                    assert_eq!(g, generalized_pochhammer(&c, &eta, &a));
                    let ev = eigenvalues(&eta, &a);
                    let up = generalized_factorial(&c, &phi(&eta), &a);
                    assert_eq!(&up / &g, &c + &ev[0] / &a);
                    for i in 0..n.saturating_sub(1) {
                        assert_eq!(generalized_factorial(&c, &swap(&eta, i), &a), g);
                    }
                    if let Some(low) = phi_hat(&eta) {
                        let gl = generalized_factorial(&c, &low, &a);
                        assert_eq!(&g / &gl, &c - int(1) + &ev[n - 1] / &a);
                    }
                    let e = EtaConstants::new(&eta, &a).e;
                    let nn = int(n as i64);
                    let expected = crate::rational::pow(&a, weight(&eta) as i32)
                        * generalized_factorial(&(&nn / &a + int(1)), &eta, &a);
                    assert_eq!(e, expected);
                }
            }
        }
    }

    #[test]
    fn d2_eigenvalue_example() {
        assert_eq!(d2_eigenvalue(&[1, 0], 2, &int(1)), int(2));
    }

    #[test]
    fn maps() {
        assert_eq!(phi(&[2, 0, 1]), vec![0, 1, 3]);
        assert_eq!(phi_hat(&[0, 1, 3]), Some(vec![2, 0, 1]));
        assert_eq!(phi_hat(&[1, 0]), None);
        assert_eq!(compositions(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(partitions(3, 3), vec![vec![3, 0, 0], vec![2, 1, 0], vec![1, 1, 1]]);
    }
}
