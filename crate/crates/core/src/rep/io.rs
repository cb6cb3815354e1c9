use std::fmt::Write as _;

use super::{RepError, Representation};
use crate::coxeter::Quiver;
use crate::exactlin::{Rat, RatMatrix};

/// Parses one or more representations of `q`.
///
/// Each block starts with `dims d_1 ... d_n`, followed by `map <a>` headers
/// (1-based arrow index) each followed by `d_{t(a)}` rows of `d_{s(a)}`
/// rationals. Maps that are not given are zero. `#` starts a comment.
pub fn parse_representations(q: &Quiver, text: &str) -> Result<Vec<Representation>, RepError> {
    let lines: Vec<(usize, Vec<&str>)> = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, toks)| !toks.is_empty())
        .collect();
    let err = |line: usize, message: String| RepError::Parse { line, message };
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < lines.len() {
        let (ln, toks) = &lines[pos];
        if toks[0] != "dims" {
            return Err(err(*ln, format!("expected `dims`, found `{}`", toks[0])));
        }
        let dims: Vec<usize> = toks[1..]
            .iter()
            .map(|t| t.parse::<usize>().map_err(|_| err(*ln, format!("bad dimension `{t}`"))))
            .collect::<Result<_, _>>()?;
        if dims.len() != q.vertex_count() {
            return Err(err(*ln, format!("expected {} dimensions, got {}", q.vertex_count(), dims.len())));
        }
        let mut maps: Vec<RatMatrix> = q
            .arrows()
            .iter()
            .map(|&(s, t)| RatMatrix::zeros(dims[t - 1], dims[s - 1]))
            .collect();
        let mut given = vec![false; maps.len()];
        pos += 1;
        while pos < lines.len() && lines[pos].1[0] == "map" {
            let (ln, toks) = &lines[pos];
            let a = match toks.as_slice() {
                [_, a] => a.parse::<usize>().ok().filter(|&a| a >= 1 && a <= maps.len()),
                _ => None,
            }
            .ok_or_else(|| err(*ln, "expected `map <arrow index>`".into()))?;
            if given[a - 1] {
                return Err(err(*ln, format!("arrow {a} given twice")));
            }
            given[a - 1] = true;
            let (s, t) = q.arrows()[a - 1];
            let (rows, cols) = (dims[t - 1], dims[s - 1]);
            pos += 1;
            let mut m = RatMatrix::zeros(rows, cols);
            for r in 0..rows {
                let Some((ln, toks)) = lines.get(pos) else {
                    return Err(err(*ln, format!("arrow {a}: missing matrix rows")));
                };
                if toks.len() != cols {
                    return Err(err(*ln, format!("arrow {a}: expected {cols} entries, got {}", toks.len())));
                }
                for (c, tok) in toks.iter().enumerate() {
                    m[(r, c)] = tok
                        .parse::<Rat>()
                        .map_err(|_| err(*ln, format!("bad entry `{tok}`")))?;
                }
                pos += 1;
            }
            maps[a - 1] = m;
        }
        out.push(Representation::new(q.clone(), dims, maps)?);
    }
    Ok(out)
}

/// Inverse of [`parse_representations`] for a single representation; maps
/// with an empty shape are omitted.
pub fn write_representation(x: &Representation) -> String {
    let mut s = String::from("dims");
    for d in x.dims() {
        let _ = write!(s, " {d}");
    }
    s.push('\n');
    for (a, m) in x.maps().iter().enumerate() {
        if m.rows() == 0 || m.cols() == 0 {
            continue;
        }
        let _ = writeln!(s, "map {}", a + 1);
        for r in 0..m.rows() {
            let row: Vec<String> = m.row(r).iter().map(|v| v.to_string()).collect();
            let _ = writeln!(s, "{}", row.join(" "));
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::projective;

    #[test]
    fn roundtrip() {
        let q = Quiver::new(3, vec![(1, 2), (2, 3), (1, 3)]).unwrap();
        let p = projective(&q, 1).unwrap();
        let text = write_representation(&p) + &write_representation(&projective(&q, 2).unwrap());
        let parsed = parse_representations(&q, &text).unwrap();
        assert_eq!(parsed.len(), 2);
        assert_eq!(parsed[0], p);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let q = Quiver::linear(2);
        let e = parse_representations(&q, "dims 1 1\nmap 1\n1 2\n").unwrap_err();
        assert_eq!(e, RepError::Parse { line: 3, message: "arrow 1: expected 1 entries, got 2".into() });
        assert!(parse_representations(&q, "dims 1\n").is_err());
        assert!(parse_representations(&q, "map 1\n").is_err());
        let ok = parse_representations(&q, "# zero map\ndims 1 1\n").unwrap();
        assert!(ok[0].map(0).is_zero());
        let frac = parse_representations(&q, "dims 1 1\nmap 1\n-3/4\n").unwrap();
        assert_eq!(frac[0].map(0)[(0, 0)], Rat::new(-3, 4));
    }
}
