use super::{CrossingKind, Dir, MorseWord, Rotation, Slice, SliceErrorKind};
use crate::error::{Error, Result};

/// Statement grammar (`;`-separated, whitespace-insensitive, `#` comments to
/// end of line):
///
/// ```text
/// bottom <k> [up|down]{k}
/// cup <i> cw|ccw
/// cap <i>
/// x+ <i>
/// x- <i>
/// ```
///
/// `bottom` may only appear first; without it the word starts from zero
/// endpoints.
pub(super) fn parse(text: &str) -> Result<MorseWord> {
    let cleaned = strip_comments(text);
    let mut bottom: Option<Vec<Dir>> = None;
    let mut slices = Vec::new();
    let mut offsets = Vec::new();
    let mut bottom_pos = 0;
    let mut seen_statement = false;

    let mut start = 0;
    for piece in cleaned.split(';') {
        let here = start;
        start += piece.len() + 1;
        let lead = piece.len() - piece.trim_start().len();
        let pos = here + lead;
        let tokens: Vec<&str> = piece.split_whitespace().collect();
        let Some((&head, args)) = tokens.split_first() else {
            continue;
        };
        let syntax = |msg: String| Error::Syntax { pos, msg };
        let index = |args: &[&str]| -> Result<usize> {
            let a = args.first().ok_or_else(|| syntax(format!("`{head}` needs a position")))?;
            a.parse::<usize>()
                .map_err(|_| syntax(format!("bad position {a:?}")))
        };
        let arity = |n: usize| -> Result<()> {
            if args.len() != n {
                return Err(syntax(format!("`{head}` takes {n} argument(s), got {}", args.len())));
            }
            Ok(())
        };
        match head {
            "bottom" => {
                if seen_statement {
                    return Err(syntax("`bottom` must be the first statement".into()));
                }
                let k = index(args)?;
                if args.len() != k + 1 {
                    return Err(syntax(format!("`bottom {k}` needs {k} directions, got {}", args.len() - 1)));
                }
                let dirs = args[1..]
                    .iter()
                    .map(|d| match *d {
                        "up" => Ok(Dir::Up),
                        "down" => Ok(Dir::Down),
                        other => Err(syntax(format!("expected up or down, got {other:?}"))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                bottom = Some(dirs);
                bottom_pos = pos;
            }
            "cup" => {
                arity(2)?;
                let rot = match args[1] {
                    "cw" => Rotation::Cw,
                    "ccw" => Rotation::Ccw,
                    other => return Err(syntax(format!("expected cw or ccw, got {other:?}"))),
                };
                slices.push(Slice::Cup(index(args)?, rot));
                offsets.push(pos);
            }
            "cap" => {
                arity(1)?;
                slices.push(Slice::Cap(index(args)?));
                offsets.push(pos);
            }
            "x+" | "x-" => {
                arity(1)?;
                let kind = if head == "x+" { CrossingKind::Over } else { CrossingKind::Under };
                slices.push(Slice::Cross(index(args)?, kind));
                offsets.push(pos);
            }
            other => return Err(syntax(format!("unknown statement {other:?}"))),
        }
        seen_statement = true;
    }

    MorseWord::validate(bottom.unwrap_or_default(), slices).map_err(|e| {
        let pos = e.slice.map_or(bottom_pos, |i| offsets[i]);
        match e.kind {
            SliceErrorKind::Width => Error::Width { pos, msg: e.msg },
            SliceErrorKind::Orientation => Error::Orientation { pos, msg: e.msg },
        }
    })
}

/// Blanks out `#` comments, keeping byte offsets intact.
fn strip_comments(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut in_comment = false;
    for c in text.chars() {
        match c {
            '#' => in_comment = true,
            '\n' => in_comment = false,
            _ => {}
        }
        if in_comment {
            out.extend(std::iter::repeat_n(' ', c.len_utf8()));
        } else {
            out.push(c);
        }
    }
    out
}
