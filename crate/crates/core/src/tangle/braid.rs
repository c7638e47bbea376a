use super::{CrossingKind, Dir, MorseWord, Rotation, Slice};
use crate::error::{Error, Result};

/// Parses a braid word such as `"1 -2 1 -2"` (commas also accepted).
pub fn parse_braid(text: &str) -> Result<Vec<i32>> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i32>().map_err(|_| Error::Syntax {
                pos: 0,
                msg: format!("bad braid generator {t:?}"),
            })
        })
        .collect()
}

fn check_word(word: &[i32], strands: usize) -> Result<()> {
    if strands == 0 {
        return Err(Error::IndexOutOfRange { index: 0, max: 1 });
    }
    for &g in word {
        let i = g.unsigned_abs() as usize;
        if g == 0 || i >= strands {
            return Err(Error::IndexOutOfRange { index: g as i64, max: strands as i64 - 1 });
        }
    }
    Ok(())
}

/// A two-endpoint tangle whose closure is the closure of the braid: strand 1
/// stays open, strands `2..=strands` are closed off on the right by nested
/// cups below and caps above the braid. All braid strands point up; the
/// generator `i` is an `Over` crossing at position `i`, the inverse `-i` an
/// `Under` one.
pub fn braid_to_tangle(word: &[i32], strands: usize) -> Result<MorseWord> {
    check_word(word, strands)?;
    let mut slices = Vec::with_capacity(word.len() + 2 * strands);
    for k in 2..=strands {
        slices.push(Slice::Cup(k, Rotation::Cw));
    }
    for &g in word {
        let kind = if g > 0 { CrossingKind::Over } else { CrossingKind::Under };
        slices.push(Slice::Cross(g.unsigned_abs() as usize, kind));
    }
    for k in (2..=strands).rev() {
        slices.push(Slice::Cap(k));
    }
    MorseWord::new(vec![Dir::Up], slices)
}

/// Number of components of the braid closure (cycles of the permutation).
pub fn braid_closure_components(word: &[i32], strands: usize) -> Result<usize> {
    check_word(word, strands)?;
    let mut perm: Vec<usize> = (0..strands).collect();
    for &g in word {
        let i = g.unsigned_abs() as usize - 1;
        perm.swap(i, i + 1);
    }
    let mut seen = vec![false; strands];
    let mut cycles = 0;
    for s in 0..strands {
        if !seen[s] {
            cycles += 1;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = perm[x];
            }
        }
    }
    Ok(cycles)
}
