//! Free and shifted free Schur functions and their commutative images.

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::poly::{CPoly, NcPoly, PolyContext};
use crate::error::{Error, Result};
use crate::tableau::{
    enumerate_hook, enumerate_shssyt, enumerate_ssyt, Partition, StrictPartition,
};
use crate::word::Word;

fn check_room(size: usize, ctx: PolyContext) -> Result<()> {
    if size > ctx.max_degree {
        return Err(Error::DegreeBound {
            degree: size,
            bound: ctx.max_degree,
        });
    }
    Ok(())
}

/// `S_nu`: the sum of the reading words of all semistandard tableaux of
/// shape `nu` over `{1..n}`.
pub fn free_schur(nu: &Partition, ctx: PolyContext) -> Result<NcPoly> {
    check_room(nu.size(), ctx)?;
    let words = enumerate_ssyt(nu, ctx.n)
        .into_iter()
        .map(|t| t.reading_word(ctx.n))
        .collect::<Result<Vec<_>>>()?;
    NcPoly::sum_of(ctx, words)
}

fn lwis(letters: &[u8]) -> usize {
    let mut best = vec![1usize; letters.len()];
    for j in 0..letters.len() {
        for i in 0..j {
            if letters[i] <= letters[j] {
                best[j] = best[j].max(best[i] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// Whether `w` splits into weakly increasing segments of lengths
/// `nu_l, ..., nu_1`, each a longest weakly increasing subword of itself
/// preceded by the previous segment.
pub fn is_free_schur_word(w: &Word, nu: &Partition) -> bool {
    if w.degree() != nu.size() {
        return false;
    }
    let letters = w.letters();
    let mut start = 0;
    let mut prev: Option<&[u8]> = None;
    for &len in nu.parts().iter().rev() {
        let len = len as usize;
        let seg = &letters[start..start + len];
        if seg.windows(2).any(|x| x[0] > x[1]) {
            return false;
        }
        if let Some(p) = prev {
            let joined: Vec<u8> = p.iter().chain(seg).copied().collect();
            if lwis(&joined) != len {
                return false;
            }
        }
        prev = Some(seg);
        start += len;
    }
    true
}

/// `S_nu` by testing the segment condition on every word of length `|nu|`.
pub fn free_schur_by_filter(nu: &Partition, ctx: PolyContext) -> Result<NcPoly> {
    check_room(nu.size(), ctx)?;
    NcPoly::sum_of(
        ctx,
        Word::all(ctx.n, nu.size()).filter(|w| is_free_schur_word(w, nu)),
    )
}

/// `P_nu`: the sum of all words in `hook(nu)` over `{1..n}`.
pub fn shifted_free_schur(nu: &StrictPartition, ctx: PolyContext) -> Result<NcPoly> {
    check_room(nu.size(), ctx)?;
    NcPoly::sum_of(ctx, enumerate_hook(nu, ctx.n))
}

/// The Schur polynomial `s_nu(x_1..x_n)` as a content generating function.
pub fn schur_poly(nu: &Partition, n: u8) -> CPoly {
    let mut out = CPoly::zero();
    for t in enumerate_ssyt(nu, n) {
        let w = t.reading_word(n).expect("entries lie in 1..n");
        out.add_term(w.content(), BigInt::one());
    }
    out
}

/// The Schur P-polynomial `P_nu(x_1..x_n)`; primes are ignored in content.
pub fn p_schur_poly(nu: &StrictPartition, n: u8) -> CPoly {
    let mut out = CPoly::zero();
    for t in enumerate_shssyt(nu, n) {
        out.add_term(t.content(n), BigInt::one());
    }
    out
}
