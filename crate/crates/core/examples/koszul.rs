// Koszul complexes pulled back from each factor and their exactness certificates.

use multiproj::{euler_exactness_check, koszul_factor_complex, proposition_iso_dims, MultiDegree, Shape};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let shape = Shape::new(vec![2, 3])?;
    let d = MultiDegree::new(vec![1, -1]);
    for i in 0..shape.factors() {
        let complex = koszul_factor_complex(&shape, i, &d)?;
        println!("factor {}:", i + 1);
        for (r, term) in complex.terms.iter().enumerate() {
            println!("  K_{r} = {term}");
        }
        for extra in [[0, 0], [-3, 2], [5, -7]] {
            assert!(euler_exactness_check(&complex, &MultiDegree::new(extra.to_vec()))?);
        }
    }
    for iso in proposition_iso_dims(&shape) {
        println!("factor {} {:?}: {} ~ {}", iso.factor + 1, iso.kind, iso.lhs, iso.rhs);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
