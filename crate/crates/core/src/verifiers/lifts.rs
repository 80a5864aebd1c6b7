use crate::colouring::{Colour, CompleteColouring};

/// Checks that every triple of `lifted` names (by palette position) a colour
/// missing from its three edges in `base`. Returns the first bad triple.
pub fn verify_complement_lift(
    base: &CompleteColouring,
    lifted: &CompleteColouring,
    palette: &[Colour],
) -> Result<(), String> {
    if base.k() != 2 || lifted.k() != 3 || base.n() != lifted.n() {
        return Err(format!(
            "need a graph colouring and a triple colouring on the same vertices, got k = {}/{} n = {}/{}",
            base.k(),
            lifted.k(),
            base.n(),
            lifted.n()
        ));
    }
    let n = base.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let idx = lifted.triple(a, b, c) as usize;
                let Some(&col) = palette.get(idx) else {
                    return Err(format!("triple {a} {b} {c}: colour index {idx} outside the palette"));
                };
                if [base.edge(a, b), base.edge(a, c), base.edge(b, c)].contains(&col) {
                    return Err(format!("triple {a} {b} {c}: colour {col} appears on one of its edges"));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detects_present_colour() {
        let base = CompleteColouring::new(3, 2, 4, vec![0, 1, 2]).unwrap();
        let good = CompleteColouring::new(3, 3, 4, vec![3]).unwrap();
        assert_eq!(verify_complement_lift(&base, &good, &[0, 1, 2, 3]), Ok(()));
        let bad = CompleteColouring::new(3, 3, 4, vec![1]).unwrap();
        assert!(verify_complement_lift(&base, &bad, &[0, 1, 2, 3]).is_err());
        assert!(verify_complement_lift(&base, &good, &[0, 1, 2]).is_err());
    }
}
