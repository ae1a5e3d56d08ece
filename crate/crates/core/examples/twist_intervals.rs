// Where along the diagonal does H^t(E(j + tau(1,...,1))) fail to vanish?
// Answered as a finite union of intervals, without scanning.

use multiproj::{nonvanishing_twist_intervals, LineBundleSum, MultiDegree};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let e = LineBundleSum::from_degrees(&[2, 3], &[&[0, 4], &[-5, 1], &[2, 2]])?;
    let j = MultiDegree::new(vec![0, 0]);
    for t in 0..=e.shape().total_dim() {
        let set = nonvanishing_twist_intervals(&e, &j, t)?;
        println!("t = {t}: {set}");
    }

    let set = nonvanishing_twist_intervals(&e, &j, 2)?;
    if let Some((lo, hi)) = set.hull() {
        println!("H^2 is nonzero for {} twists in [{lo}, {hi}]", set.points().count());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
