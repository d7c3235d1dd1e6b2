use crate::series::{rat, solve_fixed_point, PowerSeries, SeriesError, UpdateRule};

/// Exponential generating functions of the acyclic and unicyclic pieces that
/// surround a kernel.
#[derive(Debug, Clone)]
pub struct TreeSeries {
    /// Rooted labelled trees, `T = z exp(T)`.
    pub t: PowerSeries,
    /// Unrooted labelled trees, `T - T^2/2`.
    pub u: PowerSeries,
    /// Connected unicyclic graphs, `(log 1/(1-T) - T - T^2/2) / 2`.
    pub v: PowerSeries,
    /// Graphs all of whose components are unicyclic.
    pub exp_v: PowerSeries,
}

pub fn tree_series(order: usize) -> Result<TreeSeries, SeriesError> {
    let z = PowerSeries::var(order);
    let rules = [UpdateRule::new("T", 0, |v: &[PowerSeries]| {
        Ok(&z * &v[0].exp()?)
    })];
    let t = solve_fixed_point(&rules, order)?.values.remove(0);
    let t_sq_half = (&t * &t).scale(&rat(1, 2));
    let u = &t - &t_sq_half;
    let v = (&(&t.log_inv_one_minus()? - &t) - &t_sq_half).scale(&rat(1, 2));
    let exp_v = v.exp()?;
    Ok(TreeSeries { t, u, v, exp_v })
}
