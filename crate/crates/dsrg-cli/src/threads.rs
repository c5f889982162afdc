//! Deterministic fan-out over a mask range.
//!
//! The range `0..total` is split into one contiguous chunk per worker;
//! workers run a pure function on their chunk and the results are
//! concatenated in chunk order, so the merged output never depends on the
//! schedule (callers canonically sort afterwards anyway).

pub(crate) fn split(total: u64, parts: usize) -> Vec<(u64, u64)> {
    let parts = parts.max(1) as u64;
    let base = total / parts;
    let extra = total % parts;
    let mut ranges = Vec::new();
    let mut lo = 0;
    for i in 0..parts {
        let len = base + u64::from(i < extra);
        if len == 0 {
            continue;
        }
        ranges.push((lo, lo + len));
        lo += len;
    }
    ranges
}

pub(crate) fn run_chunks<T, F>(total: u64, threads: usize, work: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64, u64) -> Vec<T> + Sync,
{
    let ranges = split(total, threads);
    if threads <= 1 || ranges.len() <= 1 {
        return ranges.into_iter().flat_map(|(lo, hi)| work(lo, hi)).collect();
    }
    let work = &work;
    let mut out = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .iter()
            .map(|&(lo, hi)| scope.spawn(move || work(lo, hi)))
            .collect();
        for h in handles {
            out.extend(h.join().expect("worker panicked"));
        }
    });
    out
}
