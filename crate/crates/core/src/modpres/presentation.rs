use crate::error::{Error, Result};
use crate::freealg::{is_identifier, parse_polynomial, NcPolynomial};
use crate::gbasis::{AlgebraPresentation, Side};

use super::free::FreeModule;

/// A graded module `coker(relations)` over a presented algebra.
///
/// Row `r` of `relations` is the element `Σ_j p_{rj} e_j` of the cover
/// (coefficients on the acting side). It is homogeneous: `deg p_{rj} + σ_j`
/// is the same for every nonzero entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulePresentation {
    label: String,
    algebra: AlgebraPresentation,
    side: Side,
    cover: FreeModule,
    relations: Vec<Vec<NcPolynomial>>,
    window: Option<i64>,
}

impl ModulePresentation {
    pub fn new(
        label: impl Into<String>,
        algebra: &AlgebraPresentation,
        side: Side,
        cover: FreeModule,
        relations: Vec<Vec<NcPolynomial>>,
    ) -> Result<Self> {
        let mut rows = Vec::new();
        for row in relations {
            if row.len() != cover.rank() {
                return Err(Error::Input(format!(
                    "relation has {} entries but the cover has {} generators",
                    row.len(),
                    cover.rank()
                )));
            }
            if row.iter().all(NcPolynomial::is_zero) {
                continue;
            }
            row_degree(&row, &cover).ok_or_else(|| {
                let text: Vec<String> = row.iter().map(|p| p.to_text(algebra.gens())).collect();
                Error::NotHomogeneous(text.join(" | "))
            })?;
            if row.iter().any(|p| !p.is_zero() && p.field() != Some(algebra.field())) {
                return Err(Error::Input("relation coefficients are not over the algebra's field".into()));
            }
            rows.push(row);
        }
        Ok(ModulePresentation {
            label: label.into(),
            algebra: algebra.clone(),
            side,
            cover,
            relations: rows,
            window: None,
        })
    }

    /// The free module `⊕ A(-σ_j)`.
    pub fn free(algebra: &AlgebraPresentation, side: Side, shifts: Vec<i64>) -> Self {
        ModulePresentation::new("free", algebra, side, FreeModule::new(shifts), Vec::new()).expect("no relations")
    }

    /// The trivial module `k = A/𝔪` in degree 0.
    pub fn trivial(algebra: &AlgebraPresentation, side: Side) -> Self {
        let gens = algebra.gens();
        let rows =
            (0..gens.len()).map(|g| vec![NcPolynomial::monomial(gens.letter(g), algebra.field().one())]).collect();
        ModulePresentation::new("k", algebra, side, FreeModule::new(vec![0]), rows).expect("homogeneous")
    }

    /// `A/A·(p_1, ..., p_r)` (left) or `A/(p_1, ..., p_r)·A` (right), generated in degree 0.
    pub fn cyclic(label: impl Into<String>, algebra: &AlgebraPresentation, side: Side, polys: &[&str]) -> Result<Self> {
        let rows = polys
            .iter()
            .map(|p| parse_polynomial(p, algebra.gens(), algebra.field()).map(|p| vec![p]))
            .collect::<Result<Vec<_>>>()?;
        ModulePresentation::new(label, algebra, side, FreeModule::new(vec![0]), rows)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn algebra(&self) -> &AlgebraPresentation {
        &self.algebra
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn cover(&self) -> &FreeModule {
        &self.cover
    }

    pub fn relations(&self) -> &[Vec<NcPolynomial>] {
        &self.relations
    }

    /// Internal degree of each relation row.
    pub fn relation_degrees(&self) -> Vec<i64> {
        self.relations.iter().map(|r| row_degree(r, &self.cover).expect("validated")).collect()
    }

    /// Degree through which the relations are known to be complete, for
    /// presentations computed inside a window; `None` when exact.
    pub fn window(&self) -> Option<i64> {
        self.window
    }

    pub fn with_window(mut self, window: Option<i64>) -> Self {
        self.window = window;
        self
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Parses the module format against `algebra`:
    ///
    /// ```text
    /// module left
    /// over kxy
    /// free 0 0
    /// rel y | -x
    /// ```
    pub fn parse(text: &str, algebra: &AlgebraPresentation) -> Result<Self> {
        let mut side = None;
        let mut cover: Option<FreeModule> = None;
        let mut label = None;
        let mut rows = Vec::new();
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
                "module" => {
                    side = Some(match rest.trim() {
                        "left" => Side::Left,
                        "right" => Side::Right,
                        _ => return Err(Error::parse(line_no, rest_col + 2, "expected `left` or `right`")),
                    })
                }
                "over" => {
                    if rest.trim() != algebra.label() {
                        return Err(Error::parse(
                            line_no,
                            rest_col + 2,
                            format!("module is over `{}` but the algebra is `{}`", rest.trim(), algebra.label()),
                        ));
                    }
                }
                "label" => {
                    if !is_identifier(rest.trim()) {
                        return Err(Error::parse(line_no, rest_col + 2, "label must be an identifier"));
                    }
                    label = Some(rest.trim().to_string());
                }
                "free" => {
                    let mut shifts = Vec::new();
                    let mut col = rest_col + 1;
                    for tok in rest.split(' ') {
                        if !tok.is_empty() {
                            let s: i64 = tok
                                .trim()
                                .parse()
                                .map_err(|_| Error::parse(line_no, col, format!("`{tok}` is not an integer")))?;
                            shifts.push(s);
                        }
                        col += tok.len() + 1;
                    }
                    cover = Some(FreeModule::new(shifts));
                }
                "rel" => {
                    let c = cover.as_ref().ok_or_else(|| Error::parse(line_no, indent + 1, "`rel` before `free`"))?;
                    let mut row = Vec::new();
                    let mut col = rest_col;
                    for slot in rest.split('|') {
                        let p = parse_polynomial(slot, algebra.gens(), algebra.field())
                            .map_err(|e| e.at_line(line_no, col))?;
                        row.push(p);
                        col += slot.len() + 1;
                    }
                    if row.len() != c.rank() {
                        return Err(Error::parse(
                            line_no,
                            indent + 1,
                            format!("relation has {} slots but `free` lists {}", row.len(), c.rank()),
                        ));
                    }
                    if !row.iter().all(NcPolynomial::is_zero) && row_degree(&row, c).is_none() {
                        return Err(Error::parse(line_no, indent + 1, "relation is not homogeneous"));
                    }
                    rows.push(row);
                }
                _ => return Err(Error::parse(line_no, indent + 1, format!("unknown keyword `{kw}`"))),
            }
        }
        let side = side.ok_or_else(|| Error::parse(1, 1, "missing `module left|right` line"))?;
        let cover = cover.ok_or_else(|| Error::parse(1, 1, "missing `free` line"))?;
        ModulePresentation::new(label.unwrap_or_else(|| "M".into()), algebra, side, cover, rows)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("label {}\nmodule {}\nover {}\nfree", self.label, self.side.name(), self.algebra.label());
        for s in self.cover.shifts() {
            out.push_str(&format!(" {s}"));
        }
        out.push('\n');
        for row in &self.relations {
            let slots: Vec<String> = row.iter().map(|p| p.to_text(self.algebra.gens())).collect();
            out.push_str(&format!("rel {}\n", slots.join(" | ")));
        }
        out
    }
}

/// `M(ℓ)`: cover shifts decrease by `ℓ`, relations unchanged.
pub fn shift_module(m: &ModulePresentation, ell: i64) -> ModulePresentation {
    let mut out = m.clone();
    out.cover = m.cover.twisted(ell);
    out.window = m.window.map(|w| w - ell);
    out
}

fn row_degree(row: &[NcPolynomial], cover: &FreeModule) -> Option<i64> {
    let mut deg = None;
    for (j, p) in row.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        let d = p.homogeneous_degree()? as i64 + cover.shift(j);
        match deg {
            None => deg = Some(d),
            Some(e) if e != d => return None,
            _ => {}
        }
    }
    deg
}
