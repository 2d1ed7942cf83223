//! Permutations in disjoint-cycle notation and the generator-file format.
//!
//! ```text
//! # comment
//! degree 5
//! (1,2,3,4,5)
//! (3,4,5)
//! ```

use std::fmt;

use crate::{Error, Result};

/// A permutation of `{0, .., degree-1}`, stored as its image list.
/// Products apply the left factor first: `(a * b)(i) = b(a(i))`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i as usize >= images.len() || std::mem::replace(&mut seen[i as usize], true) {
                return None;
            }
        }
        Some(Perm(images))
    }

    /// Builds a permutation from 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Option<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for (i, &pt) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                if pt == 0 || pt as usize > degree || next == 0 || next as usize > degree {
                    return None;
                }
                if std::mem::replace(&mut moved[pt as usize - 1], true) {
                    return None;
                }
                images[pt as usize - 1] = next - 1;
            }
        }
        Some(Perm(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }

    /// Parses one permutation in disjoint-cycle notation. Errors carry a
    /// 1-based column.
    pub fn parse(text: &str, degree: usize) -> std::result::Result<Perm, (usize, String)> {
        let bytes = text.as_bytes();
        let mut pos = 0;
        let mut cycles: Vec<(usize, Vec<u32>)> = Vec::new();
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        skip_ws(&mut pos);
        if pos == bytes.len() {
            return Err((pos + 1, "expected '('".into()));
        }
        while pos < bytes.len() {
            if bytes[pos] != b'(' {
                return Err((pos + 1, format!("expected '(' found '{}'", bytes[pos] as char)));
            }
            let start = pos;
            pos += 1;
            let mut cycle = Vec::new();
            skip_ws(&mut pos);
            if pos < bytes.len() && bytes[pos] == b')' {
                pos += 1;
                cycles.push((start, cycle));
                skip_ws(&mut pos);
                continue;
            }
            loop {
                skip_ws(&mut pos);
                let num_start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if num_start == pos {
                    return Err((pos + 1, "expected a point".into()));
                }
                let pt: u32 = text[num_start..pos]
                    .parse()
                    .map_err(|_| (num_start + 1, "point out of range".to_string()))?;
                if pt == 0 || pt as usize > degree {
                    return Err((num_start + 1, format!("point {pt} outside 1..={degree}")));
                }
                cycle.push(pt);
                skip_ws(&mut pos);
                match bytes.get(pos) {
                    Some(b',') => pos += 1,
                    Some(b')') => {
                        pos += 1;
                        break;
                    }
                    Some(&c) => return Err((pos + 1, format!("expected ',' or ')' found '{}'", c as char))),
                    None => return Err((pos + 1, "unterminated cycle".into())),
                }
            }
            cycles.push((start, cycle));
            skip_ws(&mut pos);
        }
        let mut seen = vec![false; degree];
        for (start, cycle) in &cycles {
            for &pt in cycle {
                if std::mem::replace(&mut seen[pt as usize - 1], true) {
                    return Err((start + 1, format!("point {pt} repeated")));
                }
            }
        }
        let refs: Vec<&[u32]> = cycles.iter().map(|(_, c)| c.as_slice()).collect();
        Ok(Perm::from_cycles(degree, &refs).expect("validated above"))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.0.len()];
        let mut any = false;
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = self.0[i] as usize;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Parses a generator file: first significant line `degree N`, then one
/// permutation per non-empty, non-`#` line.
pub fn parse_generator_file(text: &str) -> Result<(usize, Vec<Perm>)> {
    let mut degree = None;
    let mut perms = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let trimmed = raw.trim_start();
        let indent = raw.len() - trimmed.len();
        let content = trimmed.trim_end();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        match degree {
            None => {
                let rest = content.strip_prefix("degree").ok_or_else(|| Error::GeneratorFile {
                    line,
                    column: indent + 1,
                    message: "expected 'degree N'".into(),
                })?;
                let n: usize = rest.trim().parse().map_err(|_| Error::GeneratorFile {
                    line,
                    column: indent + 7,
                    message: format!("invalid degree '{}'", rest.trim()),
                })?;
                if n == 0 {
                    return Err(Error::GeneratorFile {
                        line,
                        column: indent + 7,
                        message: "degree must be positive".into(),
                    });
                }
                degree = Some(n);
            }
            Some(n) => {
                let perm = Perm::parse(content, n).map_err(|(column, message)| Error::GeneratorFile {
                    line,
                    column: column + indent,
                    message,
                })?;
                perms.push(perm);
            }
        }
    }
    let degree = degree.ok_or(Error::GeneratorFile {
        line: 1,
        column: 1,
        message: "missing 'degree N' line".into(),
    })?;
    Ok((degree, perms))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let p = Perm::parse("(1,2,3)(4,5)", 5).unwrap();
        assert_eq!(p.images(), &[1, 2, 0, 4, 3]);
        assert_eq!(p.to_string(), "(1,2,3)(4,5)");
        assert_eq!(Perm::parse("()", 3).unwrap(), Perm::identity(3));
        assert_eq!(Perm::identity(3).to_string(), "()");
        assert_eq!(Perm::parse(" ( 1 , 2 ) ", 2).unwrap().images(), &[1, 0]);
    }

    #[test]
    fn compose_applies_left_first() {
        let a = Perm::parse("(1,2)", 3).unwrap();
        let b = Perm::parse("(2,3)", 3).unwrap();
        // 1 -a-> 2 -b-> 3
        assert_eq!(a.compose(&b).to_string(), "(1,3,2)");
    }

    #[test]
    fn parse_errors() {
        assert_eq!(Perm::parse("(1,2", 3).unwrap_err().0, 5);
        assert_eq!(Perm::parse("(1,4)", 3).unwrap_err().0, 4);
        assert!(Perm::parse("(1,2)(2,3)", 3).is_err());
        assert!(Perm::parse("1,2", 3).is_err());
        assert!(Perm::parse("(1,,2)", 3).is_err());
    }

    #[test]
    fn generator_file() {
        let (d, gens) = parse_generator_file("# A5\ndegree 5\n(1,2,3,4,5)\n\n(3,4,5)\n").unwrap();
        assert_eq!(d, 5);
        assert_eq!(gens.len(), 2);

        let err = parse_generator_file("degree 3\n(1,2,3)\n(1,2\n").unwrap_err();
        assert_eq!(
            err,
            Error::GeneratorFile {
                line: 3,
                column: 5,
                message: "unterminated cycle".into()
            }
        );
        assert!(matches!(
            parse_generator_file("(1,2)\n"),
            Err(Error::GeneratorFile { line: 1, column: 1, .. })
        ));
        assert!(parse_generator_file("").is_err());
    }
}
