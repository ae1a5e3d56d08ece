// Exhaustive audit of a criterion over every small decomposable bundle.

use multiproj::criteria::audit_candidate_count;
use multiproj::{desk_scale_audit, Criterion, Shape};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let shape = Shape::new(vec![2, 2])?;
    for criterion in [Criterion::Thm12, Criterion::Thm13(vec![1, 2]), Criterion::Lemma14] {
        let report = desk_scale_audit(&shape, 2, 2, &criterion)?;
        println!(
            "{}: {} bundles, both {}, neither {}, mismatches {}",
            criterion.name(),
            report.total,
            report.both,
            report.neither,
            report.mismatches.len()
        );
        assert!(report.is_clean());
    }
    println!("B = 3, R = 3 would visit {} bundles", audit_candidate_count(&shape, 3, 3));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
