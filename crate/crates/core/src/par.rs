//! Trial scheduling. With the `parallel` feature (default) trials run on the
//! rayon pool; without it they run in order on the calling thread. Output
//! order always follows trial number.

use std::time::Instant;

/// Runs `f(0), ..., f(n - 1)` and returns the results in trial order.
pub fn map_trials<T, F>(n: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        map_trials_parallel(n, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_trials_sequential(n, f)
    }
}

pub fn map_trials_sequential<T, F>(n: u64, f: F) -> Vec<T>
where
    F: Fn(u64) -> T,
{
    (0..n).map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_trials_parallel<T, F>(n: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

/// Like [`map_trials`], but trials that have not started by `deadline` are
/// skipped and come back as `None`.
pub fn map_trials_until<T, F>(n: u64, deadline: Option<Instant>, f: F) -> Vec<Option<T>>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    map_trials(n, |i| match deadline {
        Some(d) if Instant::now() >= d => None,
        _ => Some(f(i)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::time::Duration;

    #[test]
    fn order_is_trial_order() {
        let v = map_trials(100, |i| i * i);
        assert_eq!(v, (0..100).map(|i| i * i).collect::<Vec<_>>());
        assert_eq!(map_trials_sequential(5, |i| i), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn past_deadline_skips_everything() {
        let past = Instant::now() - Duration::from_secs(1);
        assert!(map_trials_until(10, Some(past), |i| i).iter().all(Option::is_none));
        assert!(map_trials_until(10, None, |i| i).iter().all(Option::is_some));
    }
}
