//! Twisted power factors: `(a x)^n = a^n α_n(x)` and `(a^2 x)^n = a^{2n} β_n(x)`.

use crate::group::FiniteGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwistVariant {
    /// `α_n(x) = x^{a^{n-1}} ... x^{a} x`
    Alpha,
    /// `β_n(x) = x^{a^{2(n-1)}} ... x^{a^2} x`
    Beta,
}

/// Evaluates `α_n(x)` or `β_n(x)` for `n ≥ 1`.
pub fn twisted_power_factor(g: &FiniteGroup, a: usize, x: usize, n: u32, variant: TwistVariant) -> usize {
    assert!(n >= 1, "twisted power factor needs n >= 1");
    let step = match variant {
        TwistVariant::Alpha => a,
        TwistVariant::Beta => g.mul(a, a),
    };
    // factors x^{c^k} for k = n-1 down to 0, c the conjugating element
    let mut conj = Vec::with_capacity(n as usize);
    let mut y = x;
    for _ in 0..n {
        conj.push(y);
        y = g.conj(y, step);
    }
    conj.iter().rev().fold(g.identity(), |acc, &f| g.mul(acc, f))
}

/// Checks `(ax)^n = a^n α_n(x)` and `(a^2 x)^n = a^{2n} β_n(x)`.
pub fn power_identities_hold(g: &FiniteGroup, a: usize, x: usize, n: u32) -> bool {
    let ax = g.mul(a, x);
    let lhs_alpha = g.pow(ax, n as i64);
    let rhs_alpha = g.mul(
        g.pow(a, n as i64),
        twisted_power_factor(g, a, x, n, TwistVariant::Alpha),
    );
    let a2 = g.mul(a, a);
    let lhs_beta = g.pow(g.mul(a2, x), n as i64);
    let rhs_beta = g.mul(
        g.pow(a, 2 * n as i64),
        twisted_power_factor(g, a, x, n, TwistVariant::Beta),
    );
    lhs_alpha == rhs_alpha && lhs_beta == rhs_beta
}

/// Checks `β_n(x)^b = α_n(x^b)`; meaningful when `a` has order 3 and `a^b = a^2`.
pub fn beta_alpha_exchange_holds(g: &FiniteGroup, a: usize, b: usize, x: usize, n: u32) -> bool {
    let lhs = g.conj(twisted_power_factor(g, a, x, n, TwistVariant::Beta), b);
    let rhs = twisted_power_factor(g, a, g.conj(x, b), n, TwistVariant::Alpha);
    lhs == rhs
}
