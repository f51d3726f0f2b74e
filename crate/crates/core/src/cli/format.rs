//! The `pogs 1` structure format and the `fz 1` fuzzy-subset format.
//!
//! Both are line oriented: `#` starts a comment, blank lines are ignored,
//! fields are separated by whitespace.
//!
//! ```text
//! pogs 1
//! S 2            # carrier size n
//! G 1            # sort count m
//! NS 0 zero      # optional element name
//! NG 0 alpha     # optional sort name
//! T 0 0 0 0      # element 0 · sort 0 · element 0 = element 0, n·m·n lines
//! T 0 0 1 0
//! T 1 0 0 0
//! T 1 0 1 0
//! O 0 1          # 0 <= 1; list every non-reflexive pair, no closure is taken
//! ```
//!
//! ```text
//! fz 1
//! S 2
//! F 0 1/1
//! F 1 1/2
//! ```

use std::collections::BTreeSet;
use std::fmt;

use crate::fuzzy::{FuzzySubset, Grade};
use crate::structures::{
    validate_compatibility, validate_gamma_semigroup, validate_partial_order, GammaSemigroup,
    PartialOrder, PoGammaSemigroup, MAX_ELEMENTS,
};
use crate::verdict::{Verdict, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagnosticKind {
    Syntax,
    Range,
    Totality,
    Duplicate,
    Associativity,
    OrderAxiom,
    Compatibility,
    Mismatch,
}

impl DiagnosticKind {
    pub fn code(self) -> &'static str {
        match self {
            DiagnosticKind::Syntax => "E001",
            DiagnosticKind::Range => "E002",
            DiagnosticKind::Totality => "E003",
            DiagnosticKind::Duplicate => "E004",
            DiagnosticKind::Associativity => "E005",
            DiagnosticKind::OrderAxiom => "E006",
            DiagnosticKind::Compatibility => "E007",
            DiagnosticKind::Mismatch => "E008",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DiagnosticKind::Syntax => "syntax",
            DiagnosticKind::Range => "range",
            DiagnosticKind::Totality => "totality",
            DiagnosticKind::Duplicate => "duplicate",
            DiagnosticKind::Associativity => "associativity",
            DiagnosticKind::OrderAxiom => "order-axiom",
            DiagnosticKind::Compatibility => "compatibility",
            DiagnosticKind::Mismatch => "mismatch",
        }
    }

    /// Whether the file was well formed but describes an invalid structure.
    pub fn is_validation_failure(self) -> bool {
        matches!(
            self,
            DiagnosticKind::Associativity
                | DiagnosticKind::OrderAxiom
                | DiagnosticKind::Compatibility
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub kind: DiagnosticKind,
    /// 1-based source line, when one line is to blame.
    pub line: Option<usize>,
    pub message: String,
    pub witness: Option<Box<Witness>>,
}

impl Diagnostic {
    fn new(kind: DiagnosticKind, line: Option<usize>, message: impl Into<String>) -> Self {
        Diagnostic {
            kind,
            line,
            message: message.into(),
            witness: None,
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(line) = self.line {
            write!(f, "line {line}: ")?;
        }
        write!(
            f,
            "error[{}] {}: {}",
            self.kind.code(),
            self.kind.name(),
            self.message
        )
    }
}

impl std::error::Error for Diagnostic {}

type Parsed<T> = std::result::Result<T, Diagnostic>;

/// Content lines with their 1-based numbers, comments stripped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("");
        let fields: Vec<&str> = line.split_whitespace().collect();
        (!fields.is_empty()).then_some((i + 1, fields))
    })
}

fn syntax(line: usize, msg: impl Into<String>) -> Diagnostic {
    Diagnostic::new(DiagnosticKind::Syntax, Some(line), msg)
}

fn int(line: usize, field: &str) -> Parsed<usize> {
    if field.is_empty() || !field.bytes().all(|b| b.is_ascii_digit()) {
        return Err(syntax(
            line,
            format!("expected a non-negative integer, got {field:?}"),
        ));
    }
    field
        .parse()
        .map_err(|_| syntax(line, format!("integer {field:?} is too large")))
}

fn in_range(line: usize, what: &str, value: usize, bound: usize) -> Parsed<usize> {
    if value < bound {
        Ok(value)
    } else {
        Err(Diagnostic::new(
            DiagnosticKind::Range,
            Some(line),
            format!("{what} {value} is outside [0, {bound})"),
        ))
    }
}

/// Reads `<tag> <count>` header lines (`S n`, `G m`).
fn header_count<'a>(
    lines: &mut impl Iterator<Item = (usize, Vec<&'a str>)>,
    tag: &str,
    last_line: usize,
) -> Parsed<(usize, usize)> {
    let (line, fields) = lines.next().ok_or_else(|| {
        Diagnostic::new(
            DiagnosticKind::Syntax,
            Some(last_line),
            format!("missing `{tag} <count>` line"),
        )
    })?;
    if fields.len() != 2 || fields[0] != tag {
        return Err(syntax(line, format!("expected `{tag} <count>`")));
    }
    let count = int(line, fields[1])?;
    if count == 0 {
        return Err(Diagnostic::new(
            DiagnosticKind::Range,
            Some(line),
            format!("`{tag}` count must be positive"),
        ));
    }
    Ok((line, count))
}

fn magic<'a>(lines: &mut impl Iterator<Item = (usize, Vec<&'a str>)>, tag: &str) -> Parsed<usize> {
    match lines.next() {
        Some((line, fields)) if fields == [tag, "1"] => Ok(line),
        Some((line, _)) => Err(syntax(line, format!("expected header `{tag} 1`"))),
        None => Err(syntax(1, format!("empty file, expected header `{tag} 1`"))),
    }
}

/// Source lines of table entries and order pairs, used to attach line
/// numbers to validation failures.
#[derive(Debug, Default)]
struct LineIndex {
    table: Vec<usize>,
    order: Vec<((usize, usize), usize)>,
}

impl LineIndex {
    fn order_line(&self, a: usize, b: usize) -> Option<usize> {
        self.order
            .iter()
            .find(|(pair, _)| *pair == (a, b))
            .map(|&(_, l)| l)
    }
}

/// A parsed structure file, before algebraic validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureFile {
    pub n: usize,
    pub m: usize,
    pub element_names: Vec<Option<String>>,
    pub sort_names: Vec<Option<String>>,
    /// `table[(a * m + g) * n + b]`.
    pub table: Vec<usize>,
    /// Strict pairs `a < b`, sorted.
    pub order_pairs: Vec<(usize, usize)>,
}

impl StructureFile {
    /// Syntax, range, duplicate and totality checks only.
    pub fn parse(text: &str) -> Parsed<Self> {
        Self::parse_indexed(text).map(|(f, _)| f)
    }

    fn parse_indexed(text: &str) -> Parsed<(Self, LineIndex)> {
        let lines: Vec<(usize, Vec<&str>)> = content_lines(text).collect();
        let last_line = lines.last().map_or(1, |(l, _)| *l);
        parse_structure_lines(lines, last_line)
    }

    /// Algebraic validation: associativity, order axioms, compatibility.
    pub fn build(&self) -> Parsed<PoGammaSemigroup> {
        self.build_indexed(None)
    }

    fn build_indexed(&self, index: Option<&LineIndex>) -> Parsed<PoGammaSemigroup> {
        let (n, m) = (self.n, self.m);
        let verdict = validate_gamma_semigroup(n, m, &self.table)
            .map_err(|e| Diagnostic::new(DiagnosticKind::Range, None, e.to_string()))?;
        if let Verdict::Fail(w) = verdict {
            let line = match &w {
                Witness::Associativity { a, alpha, b, .. } => {
                    index.map(|i| i.table[crate::structures::cell(n, m, a.0, alpha.0, b.0)])
                }
                _ => None,
            };
            return Err(Diagnostic {
                kind: DiagnosticKind::Associativity,
                line,
                message: w.to_string(),
                witness: Some(Box::new(w)),
            });
        }
        let sgp = GammaSemigroup::new(n, m, self.table.clone()).expect("table validated above");

        let mut rel = PartialOrder::discrete(n).relation().to_vec();
        for &(a, b) in &self.order_pairs {
            rel[a * n + b] = true;
        }
        let verdict = validate_partial_order(n, &rel).expect("relation is n × n");
        if let Verdict::Fail(w) = verdict {
            let line = index.and_then(|i| match &w {
                Witness::Antisymmetry { a, b } => i.order_line(a.0, b.0),
                Witness::Transitivity { b, c, .. } => i.order_line(b.0, c.0),
                _ => None,
            });
            return Err(Diagnostic {
                kind: DiagnosticKind::OrderAxiom,
                line,
                message: w.to_string(),
                witness: Some(Box::new(w)),
            });
        }
        let ord = PartialOrder::new(n, rel).expect("order validated above");

        let verdict = validate_compatibility(&sgp, &ord).expect("sizes agree");
        if let Verdict::Fail(w) = verdict {
            let line = index.and_then(|i| match &w {
                Witness::Compatibility { a, b, .. } => i.order_line(a.0, b.0),
                _ => None,
            });
            return Err(Diagnostic {
                kind: DiagnosticKind::Compatibility,
                line,
                message: w.to_string(),
                witness: Some(Box::new(w)),
            });
        }
        Ok(PoGammaSemigroup::new(sgp, ord).expect("compatibility validated above"))
    }

    pub fn from_structure(s: &PoGammaSemigroup) -> Self {
        StructureFile {
            n: s.n(),
            m: s.m(),
            element_names: vec![None; s.n()],
            sort_names: vec![None; s.m()],
            table: s.semigroup().table().to_vec(),
            order_pairs: s.order().strict_pairs().collect(),
        }
    }

    /// Canonical text: header, names, table in `(a, g, b)` order, order
    /// pairs sorted.
    pub fn render(&self) -> String {
        let mut out = format!("pogs 1\nS {}\nG {}\n", self.n, self.m);
        for (i, name) in self.element_names.iter().enumerate() {
            if let Some(name) = name {
                out.push_str(&format!("NS {i} {name}\n"));
            }
        }
        for (g, name) in self.sort_names.iter().enumerate() {
            if let Some(name) = name {
                out.push_str(&format!("NG {g} {name}\n"));
            }
        }
        for a in 0..self.n {
            for g in 0..self.m {
                for b in 0..self.n {
                    let k = self.table[(a * self.m + g) * self.n + b];
                    out.push_str(&format!("T {a} {g} {b} {k}\n"));
                }
            }
        }
        for (a, b) in &self.order_pairs {
            out.push_str(&format!("O {a} {b}\n"));
        }
        out
    }
}

fn parse_structure_lines(
    lines: Vec<(usize, Vec<&str>)>,
    last_line: usize,
) -> Parsed<(StructureFile, LineIndex)> {
    let mut it = lines.into_iter();
    magic(&mut it, "pogs")?;
    let (s_line, n) = header_count(&mut it, "S", last_line)?;
    if n > MAX_ELEMENTS {
        return Err(Diagnostic::new(
            DiagnosticKind::Range,
            Some(s_line),
            format!("carrier size {n} exceeds the supported maximum of {MAX_ELEMENTS}"),
        ));
    }
    let (_, m) = header_count(&mut it, "G", last_line)?;
    let cells = n
        .checked_mul(m)
        .and_then(|x| x.checked_mul(n))
        .filter(|&c| c <= 1 << 24)
        .ok_or_else(|| Diagnostic::new(DiagnosticKind::Range, None, "table is too large"))?;

    let mut table = vec![usize::MAX; cells];
    let mut index = LineIndex {
        table: vec![0; cells],
        order: Vec::new(),
    };
    let mut element_names = vec![None; n];
    let mut sort_names = vec![None; m];
    let mut pairs = BTreeSet::new();

    for (line, fields) in it {
        match fields[0] {
            "T" => {
                if fields.len() != 5 {
                    return Err(syntax(line, "expected `T <i> <g> <j> <k>`"));
                }
                let a = in_range(line, "element", int(line, fields[1])?, n)?;
                let g = in_range(line, "sort", int(line, fields[2])?, m)?;
                let b = in_range(line, "element", int(line, fields[3])?, n)?;
                let k = in_range(line, "element", int(line, fields[4])?, n)?;
                let c = (a * m + g) * n + b;
                if table[c] != usize::MAX {
                    return Err(Diagnostic::new(
                        DiagnosticKind::Duplicate,
                        Some(line),
                        format!(
                            "entry for ({a}, {g}, {b}) already given on line {}",
                            index.table[c]
                        ),
                    ));
                }
                table[c] = k;
                index.table[c] = line;
            }
            "O" => {
                if fields.len() != 3 {
                    return Err(syntax(line, "expected `O <i> <j>`"));
                }
                let a = in_range(line, "element", int(line, fields[1])?, n)?;
                let b = in_range(line, "element", int(line, fields[2])?, n)?;
                if a != b && pairs.insert((a, b)) {
                    index.order.push(((a, b), line));
                }
            }
            tag @ ("NS" | "NG") => {
                if fields.len() < 3 {
                    return Err(syntax(line, format!("expected `{tag} <id> <name>`")));
                }
                let (bound, names) = if tag == "NS" {
                    (n, &mut element_names)
                } else {
                    (m, &mut sort_names)
                };
                let id = in_range(line, "id", int(line, fields[1])?, bound)?;
                names[id] = Some(fields[2..].join(" "));
            }
            other => return Err(syntax(line, format!("unknown line tag {other:?}"))),
        }
    }

    for a in 0..n {
        for g in 0..m {
            for b in 0..n {
                if table[(a * m + g) * n + b] == usize::MAX {
                    return Err(Diagnostic::new(
                        DiagnosticKind::Totality,
                        None,
                        format!("missing table entry `T {a} {g} {b} <k>`"),
                    ));
                }
            }
        }
    }

    Ok((
        StructureFile {
            n,
            m,
            element_names,
            sort_names,
            table,
            order_pairs: pairs.into_iter().collect(),
        },
        index,
    ))
}

/// Parses and validates a structure file.
pub fn parse_structure(text: &str) -> Parsed<PoGammaSemigroup> {
    let (file, index) = StructureFile::parse_indexed(text)?;
    file.build_indexed(Some(&index))
}

/// A parsed fuzzy-subset file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzyFile {
    pub grades: Vec<Grade>,
}

impl FuzzyFile {
    pub fn parse(text: &str) -> Parsed<Self> {
        let lines: Vec<(usize, Vec<&str>)> = content_lines(text).collect();
        let last_line = lines.last().map_or(1, |(l, _)| *l);
        let mut it = lines.into_iter();

        match it.next() {
            Some((_, f)) if f == ["fz", "1"] => {}
            Some((line, _)) => return Err(syntax(line, "expected header `fz 1`")),
            None => return Err(syntax(1, "empty file, expected header `fz 1`")),
        }
        let (s_line, n) = match it.next() {
            Some((line, f)) if f.len() == 2 && f[0] == "S" => (line, int(line, f[1])?),
            Some((line, _)) => return Err(syntax(line, "expected `S <count>`")),
            None => return Err(syntax(last_line, "missing `S <count>` line")),
        };
        if n == 0 || n > MAX_ELEMENTS {
            return Err(Diagnostic::new(
                DiagnosticKind::Range,
                Some(s_line),
                format!("carrier size {n} must be in [1, {MAX_ELEMENTS}]"),
            ));
        }
        let mut grades: Vec<Option<(Grade, usize)>> = vec![None; n];
        for (line, f) in it {
            if f[0] != "F" || f.len() != 3 {
                return Err(syntax(line, "expected `F <i> <p>/<q>`"));
            }
            let i = in_range(line, "element", int(line, f[1])?, n)?;
            let grade = parse_grade(line, f[2])?;
            if let Some((_, prev)) = grades[i] {
                return Err(Diagnostic::new(
                    DiagnosticKind::Duplicate,
                    Some(line),
                    format!("grade for element {i} already given on line {prev}"),
                ));
            }
            grades[i] = Some((grade, line));
        }
        let grades = grades
            .into_iter()
            .enumerate()
            .map(|(i, g)| {
                g.map(|(g, _)| g).ok_or_else(|| {
                    Diagnostic::new(
                        DiagnosticKind::Totality,
                        None,
                        format!("missing grade line `F {i} <p>/<q>`"),
                    )
                })
            })
            .collect::<Parsed<Vec<_>>>()?;
        Ok(FuzzyFile { grades })
    }

    pub fn from_subset(mu: &FuzzySubset) -> Self {
        FuzzyFile {
            grades: mu.grades().to_vec(),
        }
    }

    pub fn to_subset(&self) -> FuzzySubset {
        FuzzySubset::new(self.grades.clone()).expect("size checked when parsed")
    }

    /// Checks the carrier size against a companion structure.
    pub fn for_structure(&self, s: &PoGammaSemigroup) -> Parsed<FuzzySubset> {
        if self.grades.len() != s.n() {
            return Err(Diagnostic::new(
                DiagnosticKind::Mismatch,
                None,
                format!(
                    "fuzzy subset has {} grades but the structure has {} elements",
                    self.grades.len(),
                    s.n()
                ),
            ));
        }
        Ok(self.to_subset())
    }

    pub fn render(&self) -> String {
        let mut out = format!("fz 1\nS {}\n", self.grades.len());
        for (i, g) in self.grades.iter().enumerate() {
            out.push_str(&format!("F {i} {g}\n"));
        }
        out
    }
}

/// `p/q` with both parts present; range violations are reported apart from
/// malformed text.
fn parse_grade(line: usize, field: &str) -> Parsed<Grade> {
    let (p, q) = field
        .split_once('/')
        .ok_or_else(|| syntax(line, format!("expected a grade p/q, got {field:?}")))?;
    let p = int(line, p)? as u64;
    let q = int(line, q)? as u64;
    Grade::new(p, q).map_err(|_| {
        Diagnostic::new(
            DiagnosticKind::Range,
            Some(line),
            format!("grade {field} is not a rational in [0, 1]"),
        )
    })
}
