use num_bigint::BigInt;
use num_traits::Zero;

use super::EnumerationError;
use crate::series::{
    poly_residual, rat, solve_fixed_point, PowerSeries, Rational, SeriesError, UpdateRule,
};

/// Which variant of the edge-rooted decomposition was solved.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SystemVariant {
    /// Full planar system, including the 3-connected part `H`.
    Planar,
    /// `H = 0`: no 3-connected components, i.e. series-parallel.
    SeriesParallel,
}

/// Solved generating functions of the edge-rooted families of cubic
/// multigraphs, all exact through the same truncation order.
///
/// `g1` counts connected cubic multigraphs of the class and `g = exp(g1)` all
/// of them. For the series-parallel variant `h` and `u` are zero.
#[derive(Debug, Clone)]
pub struct PlanarSystemSolution {
    pub variant: SystemVariant,
    pub b: PowerSeries,
    pub c: PowerSeries,
    pub d: PowerSeries,
    pub s: PowerSeries,
    pub p: PowerSeries,
    pub h: PowerSeries,
    pub u: PowerSeries,
    pub g1: PowerSeries,
    pub g: PowerSeries,
    pub sweeps: usize,
}

// Unknown slots, in Gauss-Seidel update order: u before H.
const U: usize = 0;
const H: usize = 1;
const S: usize = 2;
const P: usize = 3;
const B: usize = 4;
const D: usize = 5;
const C: usize = 6;

/// Solves the planar system through `z^order`.
pub fn solve_planar_system(order: usize) -> Result<PlanarSystemSolution, EnumerationError> {
    solve(order, SystemVariant::Planar)
}

/// Solves the system with `H = 0` (series-parallel kernels).
pub fn solve_sp_system(order: usize) -> Result<PlanarSystemSolution, EnumerationError> {
    solve(order, SystemVariant::SeriesParallel)
}

fn solve(order: usize, variant: SystemVariant) -> Result<PlanarSystemSolution, EnumerationError> {
    if order < 2 || order % 2 != 0 {
        return Err(EnumerationError::InvalidOrder { order });
    }
    let one = PowerSeries::one(order);
    let z2 = PowerSeries::monomial(rat(1, 1), 2, order);
    let half = rat(1, 2);
    let half_z2 = z2.scale(&half);

    let mut rules = Vec::new();
    if variant == SystemVariant::Planar {
        rules.push(UpdateRule::new("u", U, |v: &[PowerSeries]| {
            // z^2 (C + 1)^3 = u (1 - u)^3
            let c1 = &v[C] + &one;
            let one_minus_u = &one - &v[U];
            (&z2 * &c1.pow(3)).div(&one_minus_u.pow(3))
        }));
        rules.push(UpdateRule::new("H", H, |v: &[PowerSeries]| {
            // 2 (1 + C) H = u (1 - 2u) - u (1 - u)^3
            let u = &v[U];
            let lhs = &(u * &(&one - &u.scale(&rat(2, 1)))) - &(u * &(&one - u).pow(3));
            lhs.div(&(&one + &v[C]).scale(&rat(2, 1)))
        }));
    }
    rules.push(UpdateRule::new("S", S, |v: &[PowerSeries]| {
        // S = C^2 - C S
        (&v[C] * &v[C]).div(&(&one + &v[C]))
    }));
    rules.push(UpdateRule::new("P", P, |v: &[PowerSeries]| {
        let c = &v[C];
        Ok(&(&(&z2 * c) + &(&z2 * &(c * c)).scale(&half)) + &half_z2)
    }));
    rules.push(UpdateRule::new("B", B, |v: &[PowerSeries]| {
        Ok(&(&half_z2 * &(&v[D] + &v[C])) + &half_z2)
    }));
    rules.push(UpdateRule::new("D", D, |v: &[PowerSeries]| {
        square_over_z2(&v[B])
    }));
    rules.push(UpdateRule::new("C", C, |v: &[PowerSeries]| {
        Ok(&(&(&v[S] + &v[P]) + &v[H]) + &v[B])
    }));

    let solved = solve_fixed_point(&rules, order)?;
    let mut values = solved.values.into_iter();
    let mut take = || values.next().expect("seven unknowns");
    let (u, h, s, p, b, d, c) = (take(), take(), take(), take(), take(), take(), take());

    let g1 = integrate_connected(&(&d + &c))?;
    let g = g1.exp()?;
    Ok(PlanarSystemSolution {
        variant,
        b,
        c,
        d,
        s,
        p,
        h,
        u,
        g1,
        g,
        sweeps: solved.sweeps,
    })
}

/// `B^2 / z^2` at the same order as `B`. Coefficients of `B^2` up to
/// `z^(order + 2)` only involve coefficients of `B` up to `z^order` because
/// `B` has valuation at least 2.
fn square_over_z2(b: &PowerSeries) -> Result<PowerSeries, SeriesError> {
    let order = b.order();
    if !b.coeff(0).is_zero() || !b.coeff(1).is_zero() {
        return Err(SeriesError::NotDivisible { shift: 2, degree: 0 });
    }
    let wide = b.extend_exact(order + 2);
    (&wide * &wide).shift_down(2)
}

/// Recovers `G1` from `3 z G1' = D + C` with zero constant term.
fn integrate_connected(rhs: &PowerSeries) -> Result<PowerSeries, EnumerationError> {
    if !rhs.coeff(0).is_zero() {
        return Err(EnumerationError::NotIntegrable);
    }
    let order = rhs.order();
    let coeffs = (0..=order).map(|n| {
        if n == 0 {
            Rational::zero()
        } else {
            rhs.coeff(n) / BigInt::from(3 * n)
        }
    });
    Ok(PowerSeries::from_coeffs(coeffs, order))
}

impl PlanarSystemSolution {
    pub fn order(&self) -> usize {
        self.c.order()
    }

    /// Every defining equation rewritten as `lhs - rhs`, evaluated on the
    /// solved series. All must vanish through the truncation order.
    pub fn residuals(&self) -> Vec<(&'static str, PowerSeries)> {
        let order = self.order();
        let one = PowerSeries::one(order);
        let z2 = PowerSeries::monomial(rat(1, 1), 2, order);
        let half = rat(1, 2);
        let (b, c, d, s, p, h, u) = (&self.b, &self.c, &self.d, &self.s, &self.p, &self.h, &self.u);

        let three_z_g1_prime = PowerSeries::from_coeffs(
            (0..=order).map(|n| self.g1.coeff(n) * BigInt::from(3 * n)),
            order,
        );
        let mut out = vec![
            ("3zG1' = D + C", &three_z_g1_prime - &(d + c)),
            (
                "B = z^2/2 (D + C) + z^2/2",
                b - &(&(&z2 * &(d + c)).scale(&half) + &z2.scale(&half)),
            ),
            ("C = S + P + H + B", c - &(&(&(s + p) + h) + b)),
            ("z^2 D = B^2", &(&z2 * d) - &(b * b)),
            ("S = C^2 - C S", s - &(&(c * c) - &(c * s))),
            (
                "P = z^2 C + z^2 C^2 / 2 + z^2 / 2",
                p - &(&(&(&z2 * c) + &(&z2 * &(c * c)).scale(&half)) + &z2.scale(&half)),
            ),
        ];
        if self.variant == SystemVariant::Planar {
            let one_minus_u_cubed = (&one - u).pow(3);
            out.push((
                "2(1 + C) H = u(1 - 2u) - u(1 - u)^3",
                &(&(&one + c).scale(&rat(2, 1)) * h)
                    - &(&(u * &(&one - &u.scale(&rat(2, 1)))) - &(u * &one_minus_u_cubed)),
            ));
            out.push((
                "z^2 (C + 1)^3 = u (1 - u)^3",
                &(&z2 * &(c + &one).pow(3)) - &(u * &one_minus_u_cubed),
            ));
        } else {
            out.push(("H = 0", h.clone()));
        }
        out
    }

    /// `[z^(2r)] G` for `r = 0..=r_max`.
    pub fn kernel_weights(&self, r_max: usize) -> Result<Vec<Rational>, EnumerationError> {
        if 2 * r_max > self.order() {
            return Err(EnumerationError::RowsExceedTruncation {
                requested: r_max,
                available: self.order() / 2,
            });
        }
        Ok((0..=r_max).map(|r| self.g.coeff(2 * r).clone()).collect())
    }
}

/// Coefficients of the degree-9 polynomial in `C` obtained by eliminating the
/// other unknowns of the planar system. Row `i` holds the coefficients of
/// `z^0, z^2, z^4, z^6` in the polynomial multiplying `C^i`.
pub const NONIC_COEFFS: [[i64; 4]; 10] = [
    [0, -55296, 1034496, 1048576],
    [55296, -1677312, 6731264, 9437184],
    [470016, -7913472, 18925312, 37748736],
    [1622016, -16687104, 30127104, 88080384],
    [2928640, -19138560, 29935360, 132120576],
    [2981888, -12429312, 19314176, 132120576],
    [1720320, -4300800, 8112384, 88080384],
    [524288, -614400, 2097152, 37748736],
    [65536, 0, 262144, 9437184],
    [0, 0, 0, 1048576],
];

/// The nonic's coefficient polynomials as series of the given order.
pub fn nonic_polynomial(order: usize) -> Vec<PowerSeries> {
    NONIC_COEFFS
        .iter()
        .map(|row| {
            PowerSeries::from_coeffs(
                (0..=order).map(|d| {
                    if d % 2 == 0 && d / 2 < row.len() {
                        Rational::from_integer(BigInt::from(row[d / 2]))
                    } else {
                        Rational::zero()
                    }
                }),
                order,
            )
        })
        .collect()
}

/// The nonic evaluated at `c`; zero through the truncation order when `c` is
/// the planar `C(z)`.
pub fn nonic_residual(c: &PowerSeries) -> PowerSeries {
    poly_residual(&nonic_polynomial(c.order()), c)
}
