//! Shifted semistandard tableaux over the doubled alphabet and Haiman's
//! mixed insertion.
//!
//! Row `i` (0-based) of a shifted tableau starts in column `i`, so cell
//! `(i, i)` is on the main diagonal. Bumped entries move as follows: an
//! unprimed entry bumped off the diagonal is row-inserted into the row
//! below; a primed entry, or an unprimed entry bumped from the diagonal,
//! is column-inserted (primed) into the column to the right. A primed
//! entry keeps its prime.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::tableau::StrictPartition;
use crate::word::{ContentVector, Word};

/// A letter of the doubled alphabet, ordered `1' < 1 < 2' < 2 < ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimedLetter {
    pub base: u8,
    pub primed: bool,
}

impl PrimedLetter {
    pub fn unprimed(base: u8) -> Self {
        PrimedLetter {
            base,
            primed: false,
        }
    }

    pub fn primed(base: u8) -> Self {
        PrimedLetter { base, primed: true }
    }

    fn key(self) -> u16 {
        2 * self.base as u16 - self.primed as u16
    }

    fn with_prime(self) -> Self {
        PrimedLetter {
            primed: true,
            ..self
        }
    }
}

impl Ord for PrimedLetter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for PrimedLetter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PrimedLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.base, if self.primed { "'" } else { "" })
    }
}

impl FromStr for PrimedLetter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (digits, primed) = match t.strip_suffix('\'') {
            Some(d) => (d, true),
            None => (t, false),
        };
        let base: u8 = digits
            .parse()
            .map_err(|_| Error::ParseWord(s.to_string()))?;
        if base == 0 {
            return Err(Error::ParseWord(s.to_string()));
        }
        Ok(PrimedLetter { base, primed })
    }
}

/// A shifted tableau; `rows[i]` holds the cells of row `i` from column `i`
/// rightwards.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ShiftedTableau {
    rows: Vec<Vec<PrimedLetter>>,
}

enum Step {
    Row(usize, PrimedLetter),
    Column(usize, PrimedLetter),
}

impl ShiftedTableau {
    pub fn empty() -> Self {
        ShiftedTableau::default()
    }

    /// Builds a tableau and checks all shifted semistandard conditions.
    pub fn from_rows(rows: Vec<Vec<PrimedLetter>>) -> Result<Self> {
        let t = ShiftedTableau { rows };
        t.validate()?;
        Ok(t)
    }

    pub fn rows(&self) -> &[Vec<PrimedLetter>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<u32> {
        self.rows.iter().map(|r| r.len() as u32).collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn get(&self, row: usize, col: usize) -> Option<PrimedLetter> {
        if col < row {
            return None;
        }
        self.rows.get(row)?.get(col - row).copied()
    }

    /// Content, with `a'` and `a` both counted as `a`.
    pub fn content(&self, n: u8) -> ContentVector {
        let mut c = ContentVector::zero(n);
        for x in self.rows.iter().flatten() {
            c.add_letter(x.base);
        }
        c
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidTableau(m));
        if StrictPartition::new(self.shape()).is_err() {
            return bad(format!(
                "shape {:?} is not a strict partition",
                self.shape()
            ));
        }
        for (r, row) in self.rows.iter().enumerate() {
            if row[0].primed {
                return bad(format!("row {} starts with a primed letter", r + 1));
            }
            for (i, &x) in row.iter().enumerate() {
                let c = r + i;
                if i > 0 {
                    let left = row[i - 1];
                    if left > x {
                        return bad(format!("row {} decreases at column {}", r + 1, c + 1));
                    }
                    if x.primed && left == x {
                        return bad(format!("{x} repeated in row {}", r + 1));
                    }
                }
                if r > 0 {
                    let up = self.get(r - 1, c).expect("shifted shape has a cell above");
                    if up > x {
                        return bad(format!("column {} decreases at row {}", c + 1, r + 1));
                    }
                    if !x.primed && up == x {
                        return bad(format!("{x} repeated in column {}", c + 1));
                    }
                }
            }
        }
        Ok(())
    }

    fn column_height(&self, col: usize) -> usize {
        (0..self.rows.len())
            .take_while(|&r| self.get(r, col).is_some())
            .count()
    }

    /// Mixed insertion of one letter. Primed input is rejected.
    pub fn insert(&mut self, z: PrimedLetter) -> Result<()> {
        if z.primed {
            return Err(Error::PrimedInput(z.to_string()));
        }
        let mut step = Step::Row(0, z);
        loop {
            let (bumped, r, c) = match step {
                Step::Row(r, x) => {
                    if r == self.rows.len() {
                        self.rows.push(vec![x]);
                        return Ok(());
                    }
                    let row = &mut self.rows[r];
                    match row.iter().position(|&y| y > x) {
                        None => {
                            row.push(x);
                            return Ok(());
                        }
                        Some(i) => (std::mem::replace(&mut row[i], x), r, r + i),
                    }
                }
                Step::Column(c, x) => {
                    let height = self.column_height(c);
                    match (0..height).find(|&r| self.get(r, c).expect("cell in column") > x) {
                        None => {
                            if height == self.rows.len() {
                                self.rows.push(Vec::new());
                            }
                            let row = &mut self.rows[height];
                            if height + row.len() != c {
                                return Err(Error::InvalidTableau(format!(
                                    "column insertion into column {} leaves a gap",
                                    c + 1
                                )));
                            }
                            row.push(x);
                            return Ok(());
                        }
                        Some(r) => (std::mem::replace(&mut self.rows[r][c - r], x), r, c),
                    }
                }
            };
            step = if !bumped.primed && r != c {
                Step::Row(r + 1, bumped)
            } else {
                Step::Column(c + 1, bumped.with_prime())
            };
        }
    }

    /// Mixed insertion of a sequence of letters; any primed letter is an
    /// error.
    pub fn from_letters(letters: &[PrimedLetter]) -> Result<Self> {
        let mut t = ShiftedTableau::empty();
        for &z in letters {
            t.insert(z)?;
        }
        Ok(t)
    }

    pub fn first_row_len(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }
}

/// The mixed insertion tableau of a word.
pub fn mixed_insert_word(w: &Word) -> ShiftedTableau {
    let mut t = ShiftedTableau::empty();
    for &z in w.letters() {
        t.insert(PrimedLetter::unprimed(z))
            .expect("words carry no primes");
    }
    t
}

/// All shifted semistandard tableaux of `shape` over `{1', 1, ..., n', n}`.
pub fn enumerate_shssyt(shape: &StrictPartition, n: u8) -> Vec<ShiftedTableau> {
    let parts: Vec<usize> = shape.parts().iter().map(|&p| p as usize).collect();
    let cells: Vec<(usize, usize)> = parts
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |i| (r, i)))
        .collect();
    let mut t = ShiftedTableau {
        rows: parts
            .iter()
            .map(|&len| vec![PrimedLetter::unprimed(1); len])
            .collect(),
    };
    let alphabet: Vec<PrimedLetter> = (1..=n)
        .flat_map(|b| [PrimedLetter::primed(b), PrimedLetter::unprimed(b)])
        .collect();
    let mut out = Vec::new();

    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        t: &mut ShiftedTableau,
        alphabet: &[PrimedLetter],
        out: &mut Vec<ShiftedTableau>,
    ) {
        if k == cells.len() {
            out.push(t.clone());
            return;
        }
        let (r, i) = cells[k];
        for &x in alphabet {
            if i == 0 && x.primed {
                continue;
            }
            if i > 0 {
                let left = t.rows[r][i - 1];
                if left > x || (x.primed && left == x) {
                    continue;
                }
            }
            if r > 0 {
                let up = t.rows[r - 1][i + 1];
                if up > x || (!x.primed && up == x) {
                    continue;
                }
            }
            t.rows[r][i] = x;
            fill(k + 1, cells, t, alphabet, out);
        }
    }

    fill(0, &cells, &mut t, &alphabet, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PrimedLetter {
        s.parse().unwrap()
    }

    fn rows(spec: &[&[&str]]) -> Vec<Vec<PrimedLetter>> {
        spec.iter()
            .map(|r| r.iter().map(|s| p(s)).collect())
            .collect()
    }

    #[test]
    fn doubled_alphabet_order() {
        assert!(p("1'") < p("1"));
        assert!(p("1") < p("2'"));
        assert!(p("2'") < p("2"));
        assert_eq!(p("4'").to_string(), "4'");
    }

    #[test]
    fn insertion_bumps_through_three_rows() {
        let mut t =
            ShiftedTableau::from_rows(rows(&[&["1", "3", "6'"], &["4", "7"], &["8"]])).unwrap();
        t.insert(PrimedLetter::unprimed(2)).unwrap();
        let expected = rows(&[&["1", "2", "4'", "6'"], &["3", "7"], &["8"]]);
        assert_eq!(t.rows(), expected.as_slice());
        t.validate().unwrap();
    }

    #[test]
    fn small_words() {
        let t = mixed_insert_word(&Word::parse("1", 3).unwrap());
        assert_eq!(t.rows(), rows(&[&["1"]]).as_slice());
        let t = mixed_insert_word(&Word::parse("21", 3).unwrap());
        assert_eq!(t.rows(), rows(&[&["1", "2'"]]).as_slice());
    }

    #[test]
    fn primed_input_is_rejected() {
        let err = ShiftedTableau::from_letters(&[p("1"), p("2'")]).unwrap_err();
        assert_eq!(err, Error::PrimedInput("2'".into()));
    }

    #[test]
    fn invariants_catch_bad_fillings() {
        assert!(ShiftedTableau::from_rows(rows(&[&["1'"]])).is_err());
        assert!(ShiftedTableau::from_rows(rows(&[&["1", "2'", "2'"]])).is_err());
        assert!(ShiftedTableau::from_rows(rows(&[&["1", "2"], &["2"]])).is_err());
        assert!(ShiftedTableau::from_rows(rows(&[&["1", "2"], &["3", "4"]])).is_err());
        assert!(
            ShiftedTableau::from_rows(rows(&[&["1", "1", "3'", "4", "5'"], &["2", "3'"]])).is_ok()
        );
    }

    #[test]
    fn shssyt_counts() {
        let s21 = StrictPartition::new(vec![2, 1]).unwrap();
        // P_(2,1)(x1,x2) = x1^2 x2 + x1 x2^2: two tableaux
        assert_eq!(enumerate_shssyt(&s21, 2).len(), 2);
        let s1 = StrictPartition::new(vec![1]).unwrap();
        assert_eq!(enumerate_shssyt(&s1, 3).len(), 3);
        // P_(2) on 2 letters: 11, 12', 12, 22 -> x1^2 + 2 x1 x2 + x2^2
        let s2 = StrictPartition::new(vec![2]).unwrap();
        assert_eq!(enumerate_shssyt(&s2, 2).len(), 4);
        for t in enumerate_shssyt(&StrictPartition::new(vec![3, 1]).unwrap(), 3) {
            t.validate().unwrap();
        }
    }
}
