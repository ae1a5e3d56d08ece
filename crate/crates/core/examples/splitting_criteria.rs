// Splitting criteria: the vanishing hypotheses with their failing rows, and
// whether the bundle has the predicted shape.

use multiproj::criteria::{lemma14_conclusion_match, ExceptionalSet13};
use multiproj::{
    emit_table, lemma14_check, thm12_conclusion_match, thm12_violations, thm13_conclusion_match, thm13_violations,
    ExceptionalSet12, Format, LineBundleSum,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let shape = multiproj::Shape::new(vec![2, 2])?;
    let set = ExceptionalSet12::new(&shape)?;
    println!("exceptional tuples on {shape:?}:");
    for t in set.tuples() {
        println!("  i = {}, j = {:?}", t.i, t.j.entries());
    }

    let good = LineBundleSum::from_degrees(&[2, 2], &[&[1, 1], &[1, 3], &[0, 0]])?;
    let bad = LineBundleSum::from_degrees(&[2, 2], &[&[0, 3]])?;
    for e in [&good, &bad] {
        let report = thm12_violations(e)?;
        println!("{e}: {} violations, form match {}", report.len(), thm12_conclusion_match(e).is_match());
        print!("{}", emit_table(&report, Format::Table));
    }

    let r = [1, 0];
    let e = LineBundleSum::from_degrees(&[2, 2], &[&[0, 1], &[3, 3]])?;
    println!("r = {r:?}: {} exceptional tuples", ExceptionalSet13::new(e.shape(), &r)?.members().len());
    println!(
        "{e}: {} violations, form match {}",
        thm13_violations(&e, &r)?.len(),
        thm13_conclusion_match(&e, &r)?.is_match()
    );

    let e = LineBundleSum::from_degrees(&[1, 1], &[&[0, 1], &[2, 0]])?;
    let report = lemma14_check(&e)?;
    println!(
        "{e}: conditions hold {}, (a) {}, (b) {}, gaps small {}",
        report.conditions_hold,
        report.condition_a,
        report.condition_b,
        lemma14_conclusion_match(&e)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
