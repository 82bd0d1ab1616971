//! The argumentation framework `(A, R)` and its APX / TGF interchange formats.
//!
//! Arguments carry opaque string labels and are indexed `0..n` in order of
//! first declaration. The attack relation is a set of index pairs; duplicate
//! attacks collapse and self-attacks are allowed.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ArgumentationFramework {
    arguments: Vec<String>,
    attacks: BTreeSet<(usize, usize)>,
    index_of: HashMap<String, usize>,
}

impl ArgumentationFramework {
    /// Builds a framework from labels and label-level attack pairs.
    pub fn from_pairs<L, P, S>(labels: L, attack_pairs: P) -> Result<Self>
    where
        L: IntoIterator,
        L::Item: Into<String>,
        P: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let mut builder = FrameworkBuilder::default();
        for label in labels {
            builder.add_argument(label.into())?;
        }
        for (from, to) in attack_pairs {
            builder.add_attack(from.as_ref(), to.as_ref(), None)?;
        }
        Ok(builder.finish())
    }

    /// Builds a framework with labels `1..=n` from 0-based index pairs.
    pub fn from_index_pairs<I>(n: usize, attack_pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut builder = FrameworkBuilder::default();
        for i in 1..=n {
            builder.add_argument(i.to_string())?;
        }
        for (from, to) in attack_pairs {
            if from >= n || to >= n {
                return Err(Error::DimensionMismatch(format!(
                    "attack ({from},{to}) outside {n} arguments"
                )));
            }
            builder.attacks.insert((from, to));
        }
        Ok(builder.finish())
    }

    pub fn len(&self) -> usize {
        self.arguments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arguments.is_empty()
    }

    pub fn arguments(&self) -> &[String] {
        &self.arguments
    }

    pub fn label(&self, index: usize) -> &str {
        &self.arguments[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index_of.get(label).copied()
    }

    /// Attack pairs in lexicographic `(source, target)` order.
    pub fn attacks(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.attacks.iter().copied()
    }

    pub fn attack_count(&self) -> usize {
        self.attacks.len()
    }

    pub fn attacks_pair(&self, from: usize, to: usize) -> bool {
        self.attacks.contains(&(from, to))
    }

    pub fn to_apx(&self) -> String {
        let mut out = String::new();
        for label in &self.arguments {
            let _ = writeln!(out, "arg({label}).");
        }
        for &(a, b) in &self.attacks {
            let _ = writeln!(out, "att({},{}).", self.arguments[a], self.arguments[b]);
        }
        out
    }

    pub fn to_tgf(&self) -> String {
        let mut out = String::new();
        for label in &self.arguments {
            let _ = writeln!(out, "{label}");
        }
        out.push_str("#\n");
        for &(a, b) in &self.attacks {
            let _ = writeln!(out, "{} {}", self.arguments[a], self.arguments[b]);
        }
        out
    }
}

#[derive(Default)]
struct FrameworkBuilder {
    arguments: Vec<String>,
    attacks: BTreeSet<(usize, usize)>,
    index_of: HashMap<String, usize>,
}

impl FrameworkBuilder {
    fn add_argument(&mut self, label: String) -> Result<usize> {
        if !is_valid_label(&label) {
            return Err(Error::InvalidLabel(label));
        }
        if self.index_of.contains_key(&label) {
            return Err(Error::DuplicateArgument(label));
        }
        let idx = self.arguments.len();
        self.index_of.insert(label.clone(), idx);
        self.arguments.push(label);
        Ok(idx)
    }

    fn add_attack(&mut self, from: &str, to: &str, line: Option<usize>) -> Result<()> {
        let lookup = |label: &str| {
            self.index_of
                .get(label)
                .copied()
                .ok_or_else(|| Error::UnknownArgument {
                    label: label.to_string(),
                    line,
                })
        };
        let pair = (lookup(from)?, lookup(to)?);
        self.attacks.insert(pair);
        Ok(())
    }

    fn finish(self) -> ArgumentationFramework {
        ArgumentationFramework {
            arguments: self.arguments,
            attacks: self.attacks,
            index_of: self.index_of,
        }
    }
}

/// Labels must survive both serializers unchanged.
fn is_valid_label(label: &str) -> bool {
    !label.is_empty()
        && !label
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '(' | ')' | ',' | '#' | '%'))
}

/// Parses the APX format: `arg(x).` and `att(x,y).` statements, with `%`
/// starting a comment that runs to the end of the line.
pub fn parse_apx(text: &str) -> Result<ArgumentationFramework> {
    let mut builder = FrameworkBuilder::default();
    let mut lexer = ApxLexer::new(text);
    while let Some((keyword, line)) = lexer.keyword()? {
        lexer.expect('(')?;
        let first = lexer.label()?;
        match keyword.as_str() {
            "arg" => {
                lexer.expect(')')?;
                lexer.expect('.')?;
                builder.add_argument(first.clone()).map_err(|e| match e {
                    Error::InvalidLabel(l) => Error::Parse {
                        line,
                        message: format!("invalid argument label `{l}`"),
                    },
                    other => other,
                })?;
            }
            "att" => {
                lexer.expect(',')?;
                let second = lexer.label()?;
                lexer.expect(')')?;
                lexer.expect('.')?;
                builder.add_attack(&first, &second, Some(line))?;
            }
            other => {
                return Err(Error::Parse {
                    line,
                    message: format!("unknown statement `{other}`, expected `arg` or `att`"),
                })
            }
        }
    }
    if builder.arguments.is_empty() {
        return Err(Error::EmptyFramework);
    }
    Ok(builder.finish())
}

struct ApxLexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
}

impl<'a> ApxLexer<'a> {
    fn new(text: &'a str) -> Self {
        ApxLexer {
            chars: text.chars().peekable(),
            line: 1,
        }
    }

    fn skip_trivia(&mut self) {
        while let Some(&c) = self.chars.peek() {
            if c == '%' {
                for c in self.chars.by_ref() {
                    if c == '\n' {
                        self.line += 1;
                        break;
                    }
                }
            } else if c.is_whitespace() {
                if c == '\n' {
                    self.line += 1;
                }
                self.chars.next();
            } else {
                break;
            }
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            message: message.into(),
        }
    }

    fn keyword(&mut self) -> Result<Option<(String, usize)>> {
        self.skip_trivia();
        if self.chars.peek().is_none() {
            return Ok(None);
        }
        let line = self.line;
        let mut word = String::new();
        while let Some(&c) = self.chars.peek() {
            if c.is_ascii_alphabetic() {
                word.push(c);
                self.chars.next();
            } else {
                break;
            }
        }
        if word.is_empty() {
            let c = self.chars.peek().copied().unwrap_or(' ');
            return Err(self.error(format!("unexpected character `{c}`")));
        }
        Ok(Some((word, line)))
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_trivia();
        match self.chars.next() {
            Some(c) if c == want => Ok(()),
            Some(c) => Err(self.error(format!("expected `{want}`, found `{c}`"))),
            None => Err(self.error(format!("expected `{want}`, found end of input"))),
        }
    }

    fn label(&mut self) -> Result<String> {
        self.skip_trivia();
        let mut label = String::new();
        while let Some(&c) = self.chars.peek() {
            if c.is_whitespace() || matches!(c, '(' | ')' | ',' | '%') {
                break;
            }
            label.push(c);
            self.chars.next();
        }
        if label.is_empty() {
            return Err(self.error("expected an argument label"));
        }
        Ok(label)
    }
}

/// Parses trivial graph format: one node per line, a `#` line, then one
/// `source target` edge per line. Extra tokens on a node line are ignored.
pub fn parse_tgf(text: &str) -> Result<ArgumentationFramework> {
    let mut builder = FrameworkBuilder::default();
    let mut in_edges = false;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if !in_edges {
            if trimmed == "#" {
                in_edges = true;
                continue;
            }
            let label = trimmed.split_whitespace().next().unwrap_or_default();
            builder
                .add_argument(label.to_string())
                .map_err(|e| match e {
                    Error::InvalidLabel(l) => Error::Parse {
                        line,
                        message: format!("invalid node label `{l}`"),
                    },
                    other => other,
                })?;
        } else {
            let mut tokens = trimmed.split_whitespace();
            match (tokens.next(), tokens.next()) {
                (Some(from), Some(to)) => builder.add_attack(from, to, Some(line))?,
                _ => {
                    return Err(Error::Parse {
                        line,
                        message: format!("edge line `{trimmed}` needs a source and a target"),
                    })
                }
            }
        }
    }
    if !in_edges {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            message: "missing `#` separator between nodes and edges".into(),
        });
    }
    if builder.arguments.is_empty() {
        return Err(Error::EmptyFramework);
    }
    Ok(builder.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example6() -> ArgumentationFramework {
        ArgumentationFramework::from_pairs(["1", "2", "3"], [("1", "2"), ("2", "3"), ("3", "1")])
            .unwrap()
    }

    #[test]
    fn from_pairs_examples() {
        let f = example6();
        assert_eq!(f.len(), 3);
        assert_eq!(f.attack_count(), 3);

        let single = ArgumentationFramework::from_pairs(["a"], Vec::<(&str, &str)>::new()).unwrap();
        assert_eq!((single.len(), single.attack_count()), (1, 0));

        let five = ArgumentationFramework::from_pairs(
            ["1", "2", "3", "4", "5"],
            [("1", "2"), ("2", "3"), ("2", "5"), ("4", "3"), ("5", "4")],
        )
        .unwrap();
        assert_eq!((five.len(), five.attack_count()), (5, 5));
        assert_eq!(five.index_of("4"), Some(3));
    }

    #[test]
    fn from_pairs_errors() {
        assert_eq!(
            ArgumentationFramework::from_pairs(["a", "a"], Vec::<(&str, &str)>::new()),
            Err(Error::DuplicateArgument("a".into()))
        );
        assert!(matches!(
            ArgumentationFramework::from_pairs(["a"], [("a", "b")]),
            Err(Error::UnknownArgument { label, .. }) if label == "b"
        ));
        assert!(matches!(
            ArgumentationFramework::from_pairs([""], Vec::<(&str, &str)>::new()),
            Err(Error::InvalidLabel(_))
        ));
    }

    #[test]
    fn apx_examples() {
        let f = parse_apx("arg(1). arg(2). arg(3). att(1,2). att(2,3). att(3,1).").unwrap();
        assert_eq!(f, example6());

        assert_eq!(parse_apx(""), Err(Error::EmptyFramework));
        assert_eq!(parse_apx("% only a comment\n"), Err(Error::EmptyFramework));

        let selfish = parse_apx("arg(a). att(a,a).").unwrap();
        assert_eq!(selfish.len(), 1);
        assert!(selfish.attacks_pair(0, 0));
    }

    #[test]
    fn apx_comments_whitespace_and_names() {
        let text = "% header\narg( alpha ).\narg(beta).  % trailing\n att(alpha , beta) .\n";
        let f = parse_apx(text).unwrap();
        assert_eq!(f.arguments(), &["alpha".to_string(), "beta".to_string()]);
        assert!(f.attacks_pair(0, 1));
    }

    #[test]
    fn apx_errors_carry_lines() {
        assert!(matches!(
            parse_apx("arg(a).\narg(b)\natt(a,b)."),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_apx("arg(a).\natt(a,b).\narg(b)."),
            Err(Error::UnknownArgument { line: Some(2), .. })
        ));
        assert!(matches!(
            parse_apx("arg(a).\nfoo(a)."),
            Err(Error::Parse { line: 2, .. })
        ));
        assert_eq!(
            parse_apx("arg(a). arg(a)."),
            Err(Error::DuplicateArgument("a".into()))
        );
    }

    #[test]
    fn tgf_examples() {
        assert_eq!(
            parse_tgf("1\n2\n3\n#\n1 2\n2 3\n3 1\n").unwrap(),
            example6()
        );

        let single = parse_tgf("a\n#\n").unwrap();
        assert_eq!((single.len(), single.attack_count()), (1, 0));

        let dedup = parse_tgf("1\n2\n#\n1 2\n1 2\n").unwrap();
        assert_eq!((dedup.len(), dedup.attack_count()), (2, 1));
    }

    #[test]
    fn tgf_errors() {
        assert!(matches!(parse_tgf("1\n2\n"), Err(Error::Parse { .. })));
        assert_eq!(
            parse_tgf("1\n2\n1 2\n"),
            Err(Error::DuplicateArgument("1".into()))
        );
        assert!(matches!(
            parse_tgf("1\n#\n1 9\n"),
            Err(Error::UnknownArgument { line: Some(3), .. })
        ));
        assert!(matches!(
            parse_tgf("1\n#\n1\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert_eq!(parse_tgf("#\n"), Err(Error::EmptyFramework));
    }

    #[test]
    fn serializers_use_index_and_lexicographic_order() {
        let f = parse_apx("arg(b). arg(a). att(a,b). att(b,b). att(b,a).").unwrap();
        assert_eq!(
            f.to_apx(),
            "arg(b).\narg(a).\natt(b,b).\natt(b,a).\natt(a,b).\n"
        );
        assert_eq!(f.to_tgf(), "b\na\n#\nb b\nb a\na b\n");
    }
}
