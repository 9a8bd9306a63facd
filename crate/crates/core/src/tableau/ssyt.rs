//! Semistandard Young tableaux and Schensted row insertion.

use crate::error::{Error, Result};
use crate::tableau::Partition;
use crate::word::Word;

/// A semistandard tableau in English notation: rows weakly increase,
/// columns strictly increase.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Tableau {
    rows: Vec<Vec<u8>>,
}

impl Tableau {
    pub fn empty() -> Self {
        Tableau::default()
    }

    pub fn from_rows(rows: Vec<Vec<u8>>) -> Result<Self> {
        let t = Tableau { rows };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidTableau(m.to_string()));
        for (i, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                return bad("empty row");
            }
            if row.contains(&0) {
                return bad("letters start at 1");
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return bad("row is not weakly increasing");
            }
            if i > 0 {
                let above = &self.rows[i - 1];
                if row.len() > above.len() {
                    return bad("row lengths are not a partition");
                }
                if row.iter().zip(above).any(|(b, a)| a >= b) {
                    return bad("column is not strictly increasing");
                }
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect()).expect("valid shape")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Row insertion: `z` replaces the leftmost entry strictly greater than
    /// it (or is appended) and the displaced entry moves to the next row.
    pub fn insert(&mut self, z: u8) {
        let mut carry = z;
        for row in self.rows.iter_mut() {
            match row.iter().position(|&x| x > carry) {
                Some(i) => carry = std::mem::replace(&mut row[i], carry),
                None => {
                    row.push(carry);
                    return;
                }
            }
        }
        self.rows.push(vec![carry]);
    }

    /// Rows read bottom to top, each left to right.
    pub fn reading_word(&self, n: u8) -> Result<Word> {
        Word::new(n, self.rows.iter().rev().flatten().copied().collect())
    }

    /// Number of columns, i.e. the length of the first row.
    pub fn width(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }
}

pub fn schensted_insert(t: &Tableau, z: u8) -> Tableau {
    let mut out = t.clone();
    out.insert(z);
    out
}

/// The insertion tableau of `w`.
pub fn p_tableau(w: &Word) -> Tableau {
    let mut t = Tableau::empty();
    for &z in w.letters() {
        t.insert(z);
    }
    t
}

/// All semistandard tableaux of `shape` with entries in `{1..n}`.
pub fn enumerate_ssyt(shape: &Partition, n: u8) -> Vec<Tableau> {
    let parts: Vec<usize> = shape.parts().iter().map(|&p| p as usize).collect();
    let cells: Vec<(usize, usize)> = parts
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut rows: Vec<Vec<u8>> = parts.iter().map(|&len| vec![0; len]).collect();
    let mut out = Vec::new();

    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        rows: &mut Vec<Vec<u8>>,
        n: u8,
        out: &mut Vec<Tableau>,
    ) {
        if k == cells.len() {
            out.push(Tableau { rows: rows.clone() });
            return;
        }
        let (r, c) = cells[k];
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(rows[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(rows[r - 1][c] + 1);
        }
        for v in lo..=n {
            rows[r][c] = v;
            fill(k + 1, cells, rows, n, out);
        }
    }

    fill(0, &cells, &mut rows, n, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s, 9).unwrap()
    }

    #[test]
    fn insertion_examples() {
        let t = schensted_insert(&Tableau::empty(), 3);
        assert_eq!(t.rows(), &[vec![3]]);
        let t = schensted_insert(&t, 1);
        assert_eq!(t.rows(), &[vec![1], vec![3]]);
        let t = schensted_insert(&t, 2);
        assert_eq!(t.rows(), &[vec![1, 2], vec![3]]);
    }

    #[test]
    fn p_tableau_examples() {
        assert_eq!(p_tableau(&w("312")).rows(), &[vec![1, 2], vec![3]]);
        assert_eq!(p_tableau(&w("")), Tableau::empty());
        assert_eq!(p_tableau(&w("132")), p_tableau(&w("312")));
    }

    #[test]
    fn reading_word_examples() {
        let t = Tableau::from_rows(vec![vec![1, 2], vec![3]]).unwrap();
        assert_eq!(t.reading_word(9).unwrap(), w("312"));
        let t = Tableau::from_rows(vec![vec![1, 1, 2]]).unwrap();
        assert_eq!(t.reading_word(9).unwrap(), w("112"));
        let t = Tableau::from_rows(vec![
            vec![1, 1, 1, 2, 4, 6, 7],
            vec![2, 5, 5, 5, 5],
            vec![4, 9],
        ])
        .unwrap();
        assert_eq!(t.reading_word(9).unwrap(), w("49255551112467"));
    }

    #[test]
    fn invalid_tableaux_are_rejected() {
        assert!(Tableau::from_rows(vec![vec![2, 1]]).is_err());
        assert!(Tableau::from_rows(vec![vec![1, 2], vec![1]]).is_err());
        assert!(Tableau::from_rows(vec![vec![1], vec![2, 3]]).is_err());
    }

    #[test]
    fn ssyt_counts() {
        assert_eq!(
            enumerate_ssyt(&Partition::new(vec![1, 1]).unwrap(), 2).len(),
            1
        );
        assert_eq!(
            enumerate_ssyt(&Partition::new(vec![2]).unwrap(), 2).len(),
            3
        );
        // s_(2,1) on 3 letters has 8 tableaux
        assert_eq!(
            enumerate_ssyt(&Partition::new(vec![2, 1]).unwrap(), 3).len(),
            8
        );
        assert_eq!(enumerate_ssyt(&Partition::empty(), 3).len(), 1);
    }
}
