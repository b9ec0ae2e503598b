//! Numeric checks of the iteration-count recurrences behind the log* bounds.
//!
//! With `x_i = n / n_i`, partitioning with a budget of about `n / i^2`
//! comparisons in round `i` gives `x_1 = 1`, `x_{i+1} = x_i 2^(2 x_i / i^2)`.
//! The iterates outgrow `f64` after a handful of steps, so they are held as
//! power towers: [`Tower`] stores `2^2^...^top` with a given height.

use serde::Serialize;

use crate::meta::ceil_log2;

/// `exp2` applied `height` times to `top`. Normalized so that `height > 0`
/// only when `2^top` would overflow an `f64`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tower {
    pub height: u32,
    pub top: f64,
}

const LIFT: f64 = 1023.0;

impl Tower {
    pub fn from_f64(x: f64) -> Self {
        Tower { height: 0, top: x }
    }

    pub fn exp2(self) -> Self {
        if self.height == 0 && self.top < LIFT {
            Tower::from_f64(self.top.exp2())
        } else {
            Tower {
                height: self.height + 1,
                top: self.top,
            }
        }
    }

    /// Requires a positive value.
    pub fn log2(self) -> Self {
        if self.height == 0 {
            Tower::from_f64(self.top.log2())
        } else {
            Tower {
                height: self.height - 1,
                top: self.top,
            }
        }
    }

    pub fn as_f64(self) -> Option<f64> {
        (self.height == 0).then_some(self.top)
    }

    fn ge(self, other: Tower) -> bool {
        match self.height.cmp(&other.height) {
            std::cmp::Ordering::Equal => self.top >= other.top,
            ord => ord.is_gt(),
        }
    }

    /// `self + delta` for a small finite `delta`. Once the value is beyond
    /// `f64` range the addition is below its precision and is dropped.
    fn add_small(self, delta: f64) -> Self {
        match self.height {
            0 => Tower::from_f64(self.top + delta),
            _ => self,
        }
    }
}

/// One step `x -> x * 2^(c * x)` with `log2 c = log2_coeff`, in the tower domain.
fn grow(x: Tower, log2_coeff: f64) -> Tower {
    // log2 of the new value is log2 x + c x = log2 x + 2^(log2 c + log2 x)
    let log_x = x.log2();
    let exponent = log_x.add_small(log2_coeff);
    let increment = exponent.exp2();
    let log_next = match (log_x.as_f64(), increment.as_f64()) {
        (Some(a), Some(b)) => Tower::from_f64(a + b),
        // the increment is astronomically larger than log2 x
        _ => increment,
    };
    log_next.exp2()
}

/// `x_1 .. x_max_i` of `x_1 = 1`, `x_{i+1} = x_i 2^(2 x_i / i^2)`.
pub fn logstar_iterates(max_i: usize) -> Vec<Tower> {
    let mut xs = vec![Tower::from_f64(1.0)];
    for i in 1..max_i {
        let coeff = 1.0 - 2.0 * (i as f64).log2();
        xs.push(grow(xs[i - 1], coeff));
    }
    xs
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LemmaCheck {
    pub i: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RecurrenceReport {
    pub iterates: Vec<Tower>,
    /// `x_i >= i^2 log2(i + 1)` for `4 <= i <= max_i`.
    pub growth_lemma: Vec<LemmaCheck>,
    /// `x_{i+2} >= 2^(x_i)` for `4 <= i <= max_i - 2`.
    pub tower_lemma: Vec<LemmaCheck>,
    pub strictly_increasing: bool,
}

impl RecurrenceReport {
    pub fn all_hold(&self) -> bool {
        self.strictly_increasing
            && self.growth_lemma.iter().all(|c| c.holds)
            && self.tower_lemma.iter().all(|c| c.holds)
    }
}

/// Iterates the first recurrence up to `max_i` and checks both lemmas.
/// `bound_scale` multiplies the growth lemma's bound; values above one make
/// it a negative control.
pub fn check_recurrence_lemmas(max_i: usize, bound_scale: f64) -> RecurrenceReport {
    assert!((4..=64).contains(&max_i), "max_i must lie in 4..=64");
    let xs = logstar_iterates(max_i);
    let x = |i: usize| xs[i - 1];
    let growth_lemma = (4..=max_i)
        .map(|i| {
            let bound = bound_scale * (i * i) as f64 * ((i + 1) as f64).log2();
            LemmaCheck {
                i,
                holds: x(i).ge(Tower::from_f64(bound)),
            }
        })
        .collect();
    let tower_lemma = (4..=max_i.saturating_sub(2))
        .map(|i| LemmaCheck {
            i,
            holds: x(i + 2).log2().ge(x(i)),
        })
        .collect();
    let strictly_increasing = xs.windows(2).all(|w| w[1].ge(w[0]) && w[1] != w[0]);
    RecurrenceReport {
        iterates: xs,
        growth_lemma,
        tower_lemma,
        strictly_increasing,
    }
}

/// Iterated logarithm: how often `log2` must be applied to reach `<= 1`.
pub fn log_star(x: f64) -> u32 {
    let mut x = x;
    let mut count = 0;
    while x > 1.0 {
        x = x.log2();
        count += 1;
    }
    count
}

/// Iterated logarithm in base `2^rate`.
fn log_star_base(x: f64, rate: f64) -> u32 {
    let mut x = x;
    let mut count = 0;
    while x > 1.0 {
        x = x.log2() / rate;
        count += 1;
    }
    count
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AdaptiveRecurrence {
    pub n: f64,
    pub work: f64,
    /// Rounds until `n_i <= 1` when `x_{i+1} = x_i 2^(x_i m / n)`.
    pub rounds: u32,
    /// `log*` in base `2^(m/n)` of `n`, plus one.
    pub base_bound: u32,
    /// `1 + log* m - log*(m / n)`.
    pub theorem_expression: i64,
    pub holds: bool,
}

/// Iterates the second recurrence for work bound `work >= n` and checks the
/// round count against the iterated logarithm in base `2^(m/n)`.
pub fn check_adaptive_recurrence(n: f64, work: f64) -> AdaptiveRecurrence {
    assert!(n >= 1.0 && work >= n);
    let rate = work / n;
    let mut x = Tower::from_f64(1.0);
    let target = Tower::from_f64(n);
    let mut rounds = 0;
    while !x.ge(target) {
        x = grow(x, rate.log2());
        rounds += 1;
    }
    let base_bound = log_star_base(n, rate) + 1;
    AdaptiveRecurrence {
        n,
        work,
        rounds,
        base_bound,
        theorem_expression: 1 + log_star(work) as i64 - log_star(rate) as i64,
        holds: rounds <= base_bound,
    }
}

/// Upper bound on rounds of the `n / i^2` schedule for `n` comparables:
/// the first `i` with `x_i >= n`.
pub fn logstar_round_bound(n: u64) -> usize {
    let target = Tower::from_f64(n as f64);
    let mut x = Tower::from_f64(1.0);
    let mut i = 1;
    while !x.ge(target) {
        x = grow(x, 1.0 - 2.0 * (i as f64).log2());
        i += 1;
    }
    i
}

/// `2 ceil(log2 log2 n) + 2`, the round bound used for the hybrid schedule.
pub fn hybrid_round_bound(n: u64) -> usize {
    let ll = ceil_log2(ceil_log2(n) as u64) as usize;
    2 * ll + 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_iterates() {
        let xs = logstar_iterates(5);
        assert_eq!(xs[0].as_f64(), Some(1.0));
        assert!((xs[1].as_f64().unwrap() - 4.0).abs() < 1e-12);
        assert!((xs[2].as_f64().unwrap() - 16.0).abs() < 1e-9);
        // 16 * 2^(32/9)
        let x4 = 16.0 * (32.0f64 / 9.0).exp2();
        assert!((xs[3].as_f64().unwrap() - x4).abs() < 1e-6);
        assert!((x4 - 188.1).abs() < 0.05);
    }

    #[test]
    fn lemmas_hold_to_twelve() {
        let r = check_recurrence_lemmas(12, 1.0);
        assert!(r.all_hold(), "{r:?}");
        assert_eq!(r.growth_lemma.len(), 9);
        assert_eq!(r.tower_lemma.len(), 7);
        // x_4 against 16 log2 5
        assert!(188.1 >= 16.0 * 5f64.log2());
    }

    #[test]
    fn corrupted_bound_fails() {
        assert!(!check_recurrence_lemmas(12, 1e6).all_hold());
    }

    #[test]
    fn towers_compare_across_heights() {
        let big = Tower::from_f64(2000.0).exp2();
        assert_eq!(big.height, 1);
        assert!(big.ge(Tower::from_f64(f64::MAX)));
        assert!(!Tower::from_f64(5.0).ge(big));
        assert_eq!(big.log2(), Tower::from_f64(2000.0));
    }

    #[test]
    fn adaptive_rounds_within_base_log_star() {
        for &n in &[2.0, 1e3, 1e6, 1e12] {
            for &ratio in &[1.0, 2.0, 10.0, 40.0] {
                let r = check_adaptive_recurrence(n, n * ratio);
                assert!(r.holds, "{r:?}");
            }
        }
    }

    #[test]
    fn logstar_round_bound_for_a_million() {
        assert!(logstar_round_bound(1_000_000) <= 8);
        assert_eq!(log_star(65536.0), 4);
        assert_eq!(hybrid_round_bound(1_000_000), 12);
    }
}
