//! Execution mode switch.
//!
//! With the `parallel` feature, the helpers below use rayon unless the mode
//! was set to [`Mode::Sequential`]. Without the feature everything runs on the
//! calling thread.

use std::sync::atomic::{AtomicU8, Ordering};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Sequential,
    Parallel,
}

static MODE: AtomicU8 = AtomicU8::new(1);

/// Select the mode for subsequent calls. Returns the previous mode.
pub fn set_mode(m: Mode) -> Mode {
    let old = MODE.swap(matches!(m, Mode::Parallel) as u8, Ordering::SeqCst);
    if old == 1 {
        Mode::Parallel
    } else {
        Mode::Sequential
    }
}

/// Effective mode: always sequential when built without `parallel`.
pub fn mode() -> Mode {
    if cfg!(feature = "parallel") && MODE.load(Ordering::Relaxed) == 1 {
        Mode::Parallel
    } else {
        Mode::Sequential
    }
}

/// Run `f` with the mode temporarily set to `m`.
pub fn with_mode<T>(m: Mode, f: impl FnOnce() -> T) -> T {
    let old = set_mode(m);
    let r = f();
    set_mode(old);
    r
}

/// Map over `0..n`, preserving order.
pub fn map_range<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode() == Mode::Parallel {
        use rayon::prelude::*;
        return (0..n).into_par_iter().map(f).collect();
    }
    (0..n).map(f).collect()
}

/// Map over a slice, preserving order.
pub fn map_slice<S, T, F>(items: &[S], f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode() == Mode::Parallel {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    items.iter().map(f).collect()
}

/// First index (in order) for which `f` returns `Some`, evaluated for all items.
pub fn find_first<T, F>(n: usize, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    map_range(n, f).into_iter().flatten().next()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_kept_in_both_modes() {
        for m in [Mode::Sequential, Mode::Parallel] {
            let v = with_mode(m, || map_range(100, |i| i * i));
            assert_eq!(v, (0..100).map(|i| i * i).collect::<Vec<_>>());
        }
    }

    #[test]
    fn find_first_is_deterministic() {
        let r = find_first(50, |i| if i % 7 == 3 { Some(i) } else { None });
        assert_eq!(r, Some(3));
    }
}

/// Run two closures, possibly in parallel.
pub fn join<A, B, FA, FB>(fa: FA, fb: FB) -> (A, B)
where
    A: Send,
    B: Send,
    FA: FnOnce() -> A + Send,
    FB: FnOnce() -> B + Send,
{
    #[cfg(feature = "parallel")]
    if mode() == Mode::Parallel {
        return rayon::join(fa, fb);
    }
    (fa(), fb())
}
