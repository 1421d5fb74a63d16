use crate::error::{Error, Result};
use crate::exactlin::Field;
use crate::freealg::{is_identifier, parse_polynomial, GeneratorSet, NcPolynomial};

/// A connected graded algebra `k<gens>/(relations)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraPresentation {
    label: String,
    field: Field,
    gens: GeneratorSet,
    relations: Vec<NcPolynomial>,
}

impl AlgebraPresentation {
    /// Validates homogeneity, relation degree (at least 2) and field
    /// agreement. Zero relations are dropped.
    pub fn new(
        label: impl Into<String>,
        field: Field,
        gens: GeneratorSet,
        relations: Vec<NcPolynomial>,
    ) -> Result<Self> {
        let mut rels = Vec::new();
        for r in relations {
            if r.is_zero() {
                continue;
            }
            if r.field() != Some(field) {
                return Err(Error::Input(format!("relation `{}` is not over {}", r.to_text(&gens), field.name())));
            }
            let d = match r.homogeneous_degree() {
                Some(d) => d,
                None => return Err(Error::NotHomogeneous(r.to_text(&gens))),
            };
            if d < 2 {
                return Err(Error::Input(format!(
                    "relation `{}` has degree {d}; relations must lie in degree at least 2",
                    r.to_text(&gens)
                )));
            }
            rels.push(r);
        }
        Ok(AlgebraPresentation { label: label.into(), field, gens, relations: rels })
    }

    /// Builds a presentation from relation strings. Panics on invalid input;
    /// intended for built-in algebras and tests.
    pub fn from_strs(label: &str, field: Field, gens: &[(&str, u32)], rels: &[&str]) -> Self {
        let g = GeneratorSet::of(gens);
        let rels = rels.iter().map(|r| parse_polynomial(r, &g, field).expect("valid relation")).collect();
        AlgebraPresentation::new(label, field, g, rels).expect("valid presentation")
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn gens(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn relations(&self) -> &[NcPolynomial] {
        &self.relations
    }

    pub fn max_relation_degree(&self) -> u32 {
        self.relations.iter().filter_map(NcPolynomial::degree).max().unwrap_or(0)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Same presentation over another field (coefficients must map).
    pub fn over_field(&self, field: Field) -> Result<Self> {
        if field == self.field {
            return Ok(self.clone());
        }
        let rels = self
            .relations
            .iter()
            .map(|r| parse_polynomial(&r.to_text(&self.gens), &self.gens, field))
            .collect::<Result<Vec<_>>>()?;
        AlgebraPresentation::new(self.label.clone(), field, self.gens.clone(), rels)
    }

    /// Parses the line-oriented algebra format:
    ///
    /// ```text
    /// label downup
    /// field Q
    /// gens x:1 y:1
    /// rel x*x*y - y*x*x
    /// rel x*y*y - y*y*x
    /// ```
    pub fn parse(text: &str) -> Result<Self> {
        let mut label = None;
        let mut field = None;
        let mut gens: Option<GeneratorSet> = None;
        let mut rels = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("");
            let trimmed = line.trim_start();
            if trimmed.trim().is_empty() {
                continue;
            }
            let indent = line.len() - trimmed.len();
            let (kw, rest) = match trimmed.find(char::is_whitespace) {
                Some(p) => (&trimmed[..p], &trimmed[p..]),
                None => (trimmed.trim_end(), ""),
            };
            let rest_col = indent + kw.len();
            match kw {
                "label" => {
                    let l = rest.trim();
                    if !is_identifier(l) {
                        return Err(Error::parse(line_no, rest_col + 1, "label must be an identifier"));
                    }
                    label = Some(l.to_string());
                }
                "field" => field = Some(parse_field(rest).map_err(|e| e.at_line(line_no, rest_col))?),
                "gens" => {
                    if gens.is_some() {
                        return Err(Error::parse(line_no, indent + 1, "duplicate `gens` line"));
                    }
                    gens = Some(parse_gens(rest).map_err(|e| e.at_line(line_no, rest_col))?);
                }
                "rel" => {
                    let g = gens.as_ref().ok_or_else(|| Error::parse(line_no, indent + 1, "`rel` before `gens`"))?;
                    let f = field.unwrap_or(Field::Rational);
                    let p = parse_polynomial(rest, g, f).map_err(|e| e.at_line(line_no, rest_col))?;
                    rels.push((line_no, p));
                }
                _ => return Err(Error::parse(line_no, indent + 1, format!("unknown keyword `{kw}`"))),
            }
        }
        let field = field.unwrap_or(Field::Rational);
        let gens = gens.ok_or_else(|| Error::parse(1, 1, "missing `gens` line"))?;
        for (line_no, r) in &rels {
            if !r.is_zero() && r.homogeneous_degree().is_none() {
                return Err(Error::parse(*line_no, 1, format!("relation `{}` is not homogeneous", r.to_text(&gens))));
            }
            if r.degree().is_some_and(|d| d < 2) {
                return Err(Error::parse(*line_no, 1, "relations must have degree at least 2"));
            }
        }
        let rels = rels.into_iter().map(|(_, r)| r).collect();
        AlgebraPresentation::new(label.unwrap_or_else(|| "A".to_string()), field, gens, rels)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("label {}\nfield {}\ngens", self.label, self.field);
        for (n, d) in self.gens.names().iter().zip(self.gens.degrees()) {
            out.push_str(&format!(" {n}:{d}"));
        }
        out.push('\n');
        for r in &self.relations {
            out.push_str(&format!("rel {}\n", r.to_text(&self.gens)));
        }
        out
    }

    /// Text that determines the algebra up to relation order and scaling.
    pub(crate) fn canonical_text(&self) -> String {
        let mut rels: Vec<String> = self.relations.iter().map(|r| r.monic().to_text(&self.gens)).collect();
        rels.sort();
        rels.dedup();
        let gens: Vec<String> =
            self.gens.names().iter().zip(self.gens.degrees()).map(|(n, d)| format!("{n}:{d}")).collect();
        format!("field {}\ngens {}\nrels {}\n", self.field.name(), gens.join(" "), rels.join(";"))
    }
}

fn parse_field(rest: &str) -> Result<Field> {
    let words: Vec<&str> = rest.split_whitespace().collect();
    match words.as_slice() {
        ["Q"] => Ok(Field::Rational),
        ["F", p] => {
            let p: u64 = p.parse().map_err(|_| Error::parse(1, 3, format!("`{p}` is not an integer")))?;
            Field::prime(p).map_err(|e| Error::parse(1, 3, e.to_string()))
        }
        _ => Err(Error::parse(1, 1, "expected `Q` or `F <prime>`")),
    }
}

fn parse_gens(rest: &str) -> Result<GeneratorSet> {
    let mut names = Vec::new();
    let mut degrees = Vec::new();
    let mut col = 1;
    for tok in rest.split(' ') {
        if tok.is_empty() {
            col += 1;
            continue;
        }
        let (n, d) = match tok.split_once(':') {
            Some((n, d)) => (n, d),
            None => return Err(Error::parse(1, col, format!("expected `name:degree`, found `{tok}`"))),
        };
        let d: u32 =
            d.trim().parse().map_err(|_| Error::parse(1, col + n.len() + 1, format!("`{d}` is not a degree")))?;
        names.push(n.to_string());
        degrees.push(d);
        col += tok.len() + 1;
    }
    GeneratorSet::new(names, degrees).map_err(|e| Error::parse(1, 1, e.to_string()))
}
