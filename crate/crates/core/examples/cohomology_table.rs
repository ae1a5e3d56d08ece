// Cohomology table of O(-3,-3) + O(1,0)^2 on P^2 x P^2 over a box of twists,
// plus the Euler characteristic and Serre duality checks.

use multiproj::{
    cohomology_table, emit_table, euler_characteristic, serre_dual, sum_cohomology_dim, twist, Format, LineBundleSum,
    MultiDegree,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let e = LineBundleSum::from_degrees(&[2, 2], &[&[-3, -3], &[1, 0], &[1, 0]])?;
    println!("E = {e}");

    let twists: Vec<MultiDegree> = (-1..=1)
        .flat_map(|a| (-1..=1).map(move |b| MultiDegree::new(vec![a, b])))
        .collect();
    let degrees: Vec<u32> = (0..=4).collect();
    let table = cohomology_table(&e, &twists, &degrees)?;
    print!("{}", emit_table(&table, Format::Table));

    let zero = MultiDegree::zero(2);
    println!("chi(E) = {}", euler_characteristic(&e, &zero)?);
    assert_eq!(sum_cohomology_dim(&e, &zero, 4)?, 1u32.into());

    // h^t(E) = h^{4-t}(E^v (x) K) with K = O(-3,-3)
    let dual = twist(&serre_dual(&e), &e.shape().canonical_degree())?;
    for t in 0..=4 {
        assert_eq!(sum_cohomology_dim(&e, &zero, t)?, sum_cohomology_dim(&dual, &zero, 4 - t)?);
    }
    println!("dual twisted by K: {dual}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
