// Castelnuovo-Mumford regularity, the regularity index and global generation.

use multiproj::{is_globally_generated, is_m_regular, is_zero_regular, regularity_index, LineBundleSum, MultiDegree};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for degrees in [&[&[0i64, 0][..]][..], &[&[2, 1]], &[&[-1, 3], &[0, 0]]] {
        let e = LineBundleSum::from_degrees(&[2, 2], degrees)?;
        let v = is_zero_regular(&e);
        println!(
            "{e}: 0-regular {}, Reg {}, globally generated {}",
            v.regular,
            regularity_index(&e)?,
            is_globally_generated(&e)
        );
        for w in v.witnesses.iter().take(3) {
            println!("  H^{}(E{:?}) has dimension {}", w.t, w.j.entries(), w.dim);
        }
    }

    let e = LineBundleSum::from_degrees(&[1, 2], &[&[-1, 3]])?;
    let m = MultiDegree::new(vec![1, 0]);
    println!("{e} is (1,0)-regular: {}", is_m_regular(&e, &m)?.regular);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
