// Arithmetically Cohen-Macaulay test, exact search against the closed form.

use multiproj::{acm_closed_form, is_acm, LineBundleSum};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for degree in [[0i64, 0, 0], [0, 2, 1], [3, 0, 0], [0, 0, 3], [-2, 1, 0]] {
        let e = LineBundleSum::from_degrees(&[1, 1, 2], &[&degree])?;
        let verdict = is_acm(&e);
        assert_eq!(verdict.acm, acm_closed_form(&e.summands()[0].0, e.shape())?);
        match verdict.witnesses.first() {
            None => println!("{e}: aCM"),
            Some(w) => println!("{e}: not aCM, H^{} at diagonal twist {}", w.i, w.t),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
