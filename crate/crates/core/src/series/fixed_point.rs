use super::{PowerSeries, SeriesError};

type UpdateFn<'a> = dyn Fn(&[PowerSeries]) -> Result<PowerSeries, SeriesError> + 'a;

/// One equation of a system `X_target = F(X_0, ..., X_{k-1})`.
pub struct UpdateRule<'a> {
    pub name: &'static str,
    pub target: usize,
    update: Box<UpdateFn<'a>>,
}

impl<'a> UpdateRule<'a> {
    pub fn new<F>(name: &'static str, target: usize, update: F) -> Self
    where
        F: Fn(&[PowerSeries]) -> Result<PowerSeries, SeriesError> + 'a,
    {
        Self {
            name,
            target,
            update: Box::new(update),
        }
    }
}

#[derive(Debug, Clone)]
pub struct FixedPointSolution {
    pub values: Vec<PowerSeries>,
    /// Sweeps that still changed some coefficient; the confirming sweep is
    /// not counted.
    pub sweeps: usize,
}

/// Solves a contractive system of series equations by Gauss-Seidel sweeps.
///
/// All unknowns start at zero. Within a sweep the rules are applied in order,
/// each seeing the values already updated earlier in the same sweep. The
/// coefficient of `z^k` produced by a rule may depend on degrees `< k` of its
/// own target and degrees `<= k` of unknowns updated before it; under that
/// condition every sweep fixes at least one more degree, so a system that is
/// still moving after `order + 1` sweeps is not contractive.
pub fn solve_fixed_point(
    rules: &[UpdateRule<'_>],
    order: usize,
) -> Result<FixedPointSolution, SeriesError> {
    let unknowns = rules.iter().map(|r| r.target + 1).max().unwrap_or(0);
    let mut values = vec![PowerSeries::zero(order); unknowns];
    let max_sweeps = order + 2;
    for sweep in 0..max_sweeps {
        let mut changed = false;
        for rule in rules {
            let next = (rule.update)(&values)?;
            if next.order() < order {
                return Err(SeriesError::OrderMismatch {
                    left: next.order(),
                    right: order,
                });
            }
            let next = next.truncate(order);
            if next != values[rule.target] {
                values[rule.target] = next;
                changed = true;
            }
        }
        if !changed {
            return Ok(FixedPointSolution {
                values,
                sweeps: sweep,
            });
        }
    }
    Err(SeriesError::NoConvergence { sweeps: max_sweeps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    #[test]
    fn identity_rule_settles_in_one_sweep() {
        let rules = [UpdateRule::new("X", 0, |_| Ok(PowerSeries::var(5)))];
        let sol = solve_fixed_point(&rules, 5).unwrap();
        assert_eq!(sol.values[0], PowerSeries::var(5));
        assert_eq!(sol.sweeps, 1);
    }

    #[test]
    fn rooted_trees() {
        let order = 5;
        let rules = [UpdateRule::new("T", 0, |v: &[PowerSeries]| {
            Ok(&PowerSeries::var(order) * &v[0].exp()?)
        })];
        let t = &solve_fixed_point(&rules, order).unwrap().values[0];
        let expected =
            PowerSeries::from_ratios(&[(0, 1), (1, 1), (1, 1), (3, 2), (8, 3), (125, 24)], order);
        assert_eq!(*t, expected);
    }

    #[test]
    fn non_contractive_system_is_reported() {
        // X = 1 + X never settles.
        let rules = [UpdateRule::new("X", 0, |v: &[PowerSeries]| {
            Ok(&PowerSeries::one(3) + &v[0])
        })];
        assert_eq!(
            solve_fixed_point(&rules, 3).unwrap_err(),
            SeriesError::NoConvergence { sweeps: 5 }
        );
    }

    #[test]
    fn later_rules_see_earlier_updates() {
        // Y = z * X, X = 1: Gauss-Seidel gets Y right in the first sweep.
        let order = 3;
        let rules = [
            UpdateRule::new("X", 0, |_| Ok(PowerSeries::one(order))),
            UpdateRule::new("Y", 1, |v: &[PowerSeries]| {
                Ok(v[0].scale(&rat(2, 1)).shift_up(1))
            }),
        ];
        let sol = solve_fixed_point(&rules, order).unwrap();
        assert_eq!(sol.sweeps, 1);
        assert_eq!(sol.values[1], PowerSeries::monomial(rat(2, 1), 1, order));
    }
}
