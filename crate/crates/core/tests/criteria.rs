//! Exhaustive checks of the "only if" directions: bundles of the concluded
//! shape always satisfy the vanishing hypotheses.

use multiproj::criteria::{lemma14_check, ExceptionalSet12};
use multiproj::{thm12_conclusion_match, thm12_violations, LineBundleSum, Shape};

fn pairs<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = items.iter().map(|a| vec![a.clone()]).collect();
    for (x, a) in items.iter().enumerate() {
        for b in &items[x..] {
            out.push(vec![a.clone(), b.clone()]);
        }
    }
    out
}

fn bundle(shape: &[u32], parts: &[Vec<i64>]) -> LineBundleSum {
    let refs: Vec<&[i64]> = parts.iter().map(Vec::as_slice).collect();
    LineBundleSum::from_degrees(shape, &refs).unwrap()
}

#[test]
fn excess_forms_pass_on_p2_squared() {
    let mut forms = Vec::new();
    for l in -2..=2 {
        for k in 0..2 {
            for c in 0..=2 {
                let mut v = vec![l; 2];
                v[k] += c;
                if !forms.contains(&v) {
                    forms.push(v);
                }
            }
        }
    }
    for parts in pairs(&forms) {
        let e = bundle(&[2, 2], &parts);
        assert!(thm12_conclusion_match(&e).is_match());
        assert!(thm12_violations(&e).unwrap().is_empty(), "{e}");
    }
}

#[test]
fn small_gaps_pass_the_power_conditions() {
    for n in [1u32, 2] {
        let b = i64::from(n) + 2;
        let mut degrees = Vec::new();
        for u in -b..=b {
            for v in -b..=b {
                if (u - v).abs() <= i64::from(n) {
                    degrees.push(vec![u, v]);
                }
            }
        }
        for parts in pairs(&degrees) {
            let e = bundle(&[n, n], &parts);
            assert!(lemma14_check(&e).unwrap().conditions_hold, "{e}");
        }
    }
}

#[test]
fn exceptional_set_size_grows_with_factors() {
    for (dims, size) in [(&[2u32, 2][..], 4), (&[2, 2, 2], 12), (&[3, 2, 2, 2], 32)] {
        assert_eq!(ExceptionalSet12::new(&Shape::new(dims.to_vec()).unwrap()).unwrap().len(), size);
    }
}
