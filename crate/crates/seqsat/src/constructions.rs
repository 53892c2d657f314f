//! Explicit families of saturated and semisaturated sequences with
//! closed-form lengths. Each builder returns the sequence in canonical form
//! together with its claimed length; the test suite re-verifies every claim
//! through the checkers in [`crate::predicates`].

use serde_json::{json, Map, Value};

use crate::embed::contains;
use crate::pattern::Pattern;
use crate::predicates::{check_saturated, VerdictStatus};
use crate::seq::{Letter, Sequence};
use crate::{Error, Result};

#[derive(Clone, Debug, serde::Serialize)]
pub struct ConstructionOutput {
    pub sequence: Sequence,
    pub claimed_length: usize,
    pub construction_id: &'static str,
    pub parameters: Map<String, Value>,
}

fn params(entries: &[(&str, u64)]) -> Map<String, Value> {
    entries.iter().map(|&(k, v)| (k.to_string(), json!(v))).collect()
}

/// `a_0 a_1 ... a_{n-1}` repeated `times` times; length n * times.
pub fn up(n: u32, times: u32) -> Sequence {
    let letters: Vec<Letter> = (0..times).flat_map(|_| 0..n).collect();
    Sequence::new(letters, n.max(1)).expect("up emits letters below n")
}

/// Saturated host of length s(n-1)+1 for the alternation of order `order`.
///
/// Even order: blocks `0,b,0,b,...` of `order` terms for b = 1..n, then a
/// trailing 0. Odd order: blocks `i,i+1,i,...,i` of `order` terms for
/// i = 0..n-1, then a trailing n-1.
pub fn alt_saturated(n: u32, order: u32) -> Result<ConstructionOutput> {
    if n < 2 {
        return Err(Error::unsupported("alt_saturated needs an alphabet of at least 2 letters"));
    }
    if order < 1 {
        return Err(Error::unsupported("alternation order must be at least 1"));
    }
    let s = order as usize;
    let mut letters: Vec<Letter> = Vec::with_capacity(s * (n as usize - 1) + 1);
    if order % 2 == 0 {
        for b in 1..n {
            for t in 0..s {
                letters.push(if t % 2 == 0 { 0 } else { b });
            }
        }
        letters.push(0);
    } else {
        for i in 0..n - 1 {
            for t in 0..s {
                letters.push(if t % 2 == 0 { i } else { i + 1 });
            }
        }
        letters.push(n - 1);
    }
    let sequence = Sequence::new(letters, n)?;
    Ok(ConstructionOutput {
        claimed_length: s * (n as usize - 1) + 1,
        sequence,
        construction_id: "alt-saturated",
        parameters: params(&[("n", n as u64), ("order", order as u64)]),
    })
}

/// Saturated host for the pattern (a_0 a_1 ... a_{k-1})^reps on n >= k
/// letters: for each special letter i in k-1..n, repeat `0..k-1,i` reps-1
/// times; close with a final `0..k-1`. Length (k*reps-k)n-(k-1)(k*reps-k-1).
pub fn power_block_saturated(k: u32, reps: u32, n: u32) -> Result<ConstructionOutput> {
    if k < 2 || reps < 2 {
        return Err(Error::unsupported("power blocks need k >= 2 and at least 2 repetitions"));
    }
    if n < k {
        return Err(Error::unsupported("power block construction needs n >= k"));
    }
    let (k_, r_, n_) = (k as usize, reps as usize, n as usize);
    let mut letters: Vec<Letter> = Vec::new();
    for i in k - 1..n {
        for _ in 0..reps - 1 {
            letters.extend(0..k - 1);
            letters.push(i);
        }
    }
    letters.extend(0..k - 1);
    let claimed = (k_ * r_ - k_) * n_ - (k_ - 1) * (k_ * r_ - k_ - 1);
    debug_assert_eq!(letters.len(), claimed);
    let sequence = Sequence::new(letters, n)?;
    Ok(ConstructionOutput {
        claimed_length: claimed,
        sequence,
        construction_id: "power-block-saturated",
        parameters: params(&[("k", k as u64), ("reps", reps as u64), ("n", n as u64)]),
    })
}

fn two_letter_preconditions(u: &Pattern) -> Result<()> {
    let w = u.letters();
    if u.r() != 2 {
        return Err(Error::unsupported("pattern must use exactly 2 distinct letters"));
    }
    if w[0] == w[1] {
        return Err(Error::unsupported("first two pattern letters must differ"));
    }
    if w[w.len() - 1] == w[w.len() - 2] {
        return Err(Error::unsupported("last two pattern letters must differ"));
    }
    Ok(())
}

/// Longest alternation 0,1,0,1,... avoiding `u`; requires `u` on two
/// distinct letters with differing first pair and differing last pair.
/// Alternations are nested, so containment is monotone in the length and a
/// linear scan upward finds the threshold; length 2|u| always contains `u`.
pub fn longest_avoiding_alternation(u: &Pattern) -> Result<Sequence> {
    two_letter_preconditions(u)?;
    let alt = |m: usize| {
        Sequence::new((0..m).map(|i| (i % 2) as Letter).collect(), 2).expect("two-letter word")
    };
    let mut best = 0;
    for m in 1..=2 * u.len() {
        if contains(&alt(m), u).is_some() {
            break;
        }
        best = m;
    }
    Ok(alt(best))
}

/// Saturated host on n letters for a two-letter pattern whose first pair and
/// last pair both differ: start from the longest avoiding alternation and,
/// for each new letter, append a copy of it on (last letter, new letter)
/// minus its first element. Length <= 2|u|n.
pub fn two_letter_saturated(u: &Pattern, n: u32) -> Result<ConstructionOutput> {
    if n < 2 {
        return Err(Error::unsupported("two_letter_saturated needs n >= 2"));
    }
    let base = longest_avoiding_alternation(u)?;
    let m = base.len();
    let mut letters: Vec<Letter> = base.letters().to_vec();
    for new in 2..n {
        let x = *letters.last().expect("base alternation is nonempty");
        for &c in &base.letters()[1..] {
            letters.push(if c == 0 { x } else { new });
        }
    }
    let claimed = m + (n as usize - 2) * m.saturating_sub(1);
    debug_assert_eq!(letters.len(), claimed);
    let sequence = Sequence::new(letters, n)?;
    Ok(ConstructionOutput {
        claimed_length: claimed,
        sequence,
        construction_id: "two-letter-saturated",
        parameters: params(&[("n", n as u64), ("pattern_len", u.len() as u64)]),
    })
}

/// From a host saturated for `u`, build one saturated for `u` with its last
/// letter doubled: relabel so the host's final r-1 letters are the top ids,
/// append `0..n`, then greedily insert top-id letters while the result stays
/// sparse and avoids the doubled pattern. Output length < |host| + r*n.
pub fn double_last_extend(u: &Pattern, host: &Sequence) -> Result<ConstructionOutput> {
    let r = u.r();
    let n = host.alphabet_size();
    if n < r {
        return Err(Error::unsupported("double_last_extend needs n >= r"));
    }
    if host.len() < r as usize - 1 {
        return Err(Error::unsupported("host must have at least r-1 letters"));
    }
    if check_saturated(host, u).status != VerdictStatus::Saturated {
        return Err(Error::unsupported("host must be saturated for the pattern"));
    }
    let doubled = u.with_last_doubled();

    // Relabel: the final r-1 host letters become n-r+1..n in order; every
    // other alphabet letter keeps its relative order below them.
    let tail = &host.letters()[host.len() - (r as usize - 1)..];
    let mut relabel: Vec<Option<Letter>> = vec![None; n as usize];
    for (offset, &a) in tail.iter().enumerate() {
        relabel[a as usize] = Some(n - r + 1 + offset as u32);
    }
    let mut next = 0;
    for a in 0..n {
        if relabel[a as usize].is_none() {
            relabel[a as usize] = Some(next);
            next += 1;
        }
    }
    let mut letters: Vec<Letter> =
        host.letters().iter().map(|&a| relabel[a as usize].expect("total map")).collect();
    letters.extend(0..n);

    let admissible = |w: &[Letter]| {
        let t = Sequence::new(w.to_vec(), n).expect("letters stay below n");
        t.is_r_sparse(r) && contains(&t, &doubled).is_none()
    };
    debug_assert!(admissible(&letters));

    loop {
        let mut inserted = false;
        'scan: for a in n - r + 1..n {
            for gap in 0..=letters.len() {
                let mut candidate = letters.clone();
                candidate.insert(gap, a);
                if admissible(&candidate) {
                    // Such insertions cannot land inside the original host:
                    // there they would complete the doubled pattern or break
                    // sparsity.
                    assert!(gap >= host.len(), "insertion at {gap} inside the host copy");
                    letters = candidate;
                    inserted = true;
                    break 'scan;
                }
            }
        }
        if !inserted {
            break;
        }
    }

    let claimed = letters.len();
    assert!(claimed < host.len() + (r as usize) * (n as usize));
    let sequence = Sequence::new(letters, n)?.canonicalize();
    Ok(ConstructionOutput {
        claimed_length: claimed,
        sequence,
        construction_id: "double-last-extend",
        parameters: params(&[("n", n as u64), ("r", r as u64), ("host_len", host.len() as u64)]),
    })
}

/// Semisaturated host of length |u| * n for any pattern on r >= 2 letters,
/// valid for n >= r: every insertion lands in some block of up(n, |u|) and
/// serves as that block's contribution to a fresh copy.
pub fn ssat_general(u: &Pattern, n: u32) -> Result<ConstructionOutput> {
    if u.r() < 2 {
        return Err(Error::unsupported("single-letter patterns make sparsity degenerate"));
    }
    if n < u.r() {
        return Err(Error::unsupported("ssat_general needs n >= r for r-sparsity"));
    }
    let sequence = up(n, u.len() as u32);
    Ok(ConstructionOutput {
        claimed_length: u.len() * n as usize,
        sequence,
        construction_id: "ssat-general",
        parameters: params(&[("n", n as u64), ("pattern_len", u.len() as u64)]),
    })
}

/// Constant-size semisaturated host up(r, 2|u|) for patterns whose first and
/// last letters each occur exactly once; works for every alphabet size
/// n >= r, so the semisaturation function of such patterns is bounded.
pub fn ssat_constant(u: &Pattern) -> Result<ConstructionOutput> {
    if u.first_multiplicity() != 1 || u.last_multiplicity() != 1 {
        return Err(Error::unsupported(
            "first and last pattern letters must each occur exactly once",
        ));
    }
    let sequence = up(u.r(), 2 * u.len() as u32);
    Ok(ConstructionOutput {
        claimed_length: 2 * u.len() * u.r() as usize,
        sequence,
        construction_id: "ssat-constant",
        parameters: params(&[("r", u.r() as u64), ("pattern_len", u.len() as u64)]),
    })
}

/// Semisaturated host for the alternation of order `order` on n >= 2
/// letters: up(n, (order+2)/2) for even order; up(n, (order+1)/2) with one
/// extra 0 appended for odd order.
pub fn ssat_alt(n: u32, order: u32) -> Result<ConstructionOutput> {
    if n < 2 {
        return Err(Error::unsupported("ssat_alt needs an alphabet of at least 2 letters"));
    }
    if order < 1 {
        return Err(Error::unsupported("alternation order must be at least 1"));
    }
    let (sequence, claimed) = if order % 2 == 0 {
        let times = (order + 2) / 2;
        (up(n, times), (times * n) as usize)
    } else {
        let times = (order + 1) / 2;
        let mut letters: Vec<Letter> = up(n, times).letters().to_vec();
        letters.push(0);
        (Sequence::new(letters, n)?, (times * n) as usize + 1)
    };
    Ok(ConstructionOutput {
        claimed_length: claimed,
        sequence,
        construction_id: "ssat-alt",
        parameters: params(&[("n", n as u64), ("order", order as u64)]),
    })
}
