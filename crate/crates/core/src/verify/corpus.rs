use crate::error::Result;
use crate::exactlin::Field;
use crate::freealg::parse_polynomial;
use crate::gbasis::{compute_groebner, AlgebraPresentation, Side};
use crate::modpres::{
    restrict_scalars, shift_module, subalgebra_presentation, tensor_algebra, truncate_module, AlgebraMap,
    ModulePresentation,
};

/// An algebra with the modules the suites run on.
#[derive(Clone, Debug)]
pub struct Subject {
    pub algebra: AlgebraPresentation,
    pub dmax: u32,
    pub hmax: usize,
    pub modules: Vec<ModulePresentation>,
    /// Tensor factors, when the algebra is a tensor product.
    pub factors: Vec<AlgebraPresentation>,
    /// Expected generator degrees of the resolutions of some modules, by
    /// module label and homological index.
    pub expected: Vec<Expected>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expected {
    pub module: String,
    /// Largest generator degree of `F_i`.
    pub t: Vec<i64>,
    /// All generator degrees of `F_i`, sorted, when known.
    pub degrees: Option<Vec<Vec<i64>>>,
}

impl Subject {
    pub fn label(&self) -> &str {
        self.algebra.label()
    }

    fn new(algebra: AlgebraPresentation, dmax: u32, hmax: usize) -> Self {
        let k = ModulePresentation::trivial(&algebra, Side::Left);
        let a = ModulePresentation::free(&algebra, Side::Left, vec![0]).with_label("A");
        Subject { algebra, dmax, hmax, modules: vec![k, a], factors: Vec::new(), expected: Vec::new() }
    }

    fn quotients(mut self, ideals: &[&[&str]]) -> Self {
        for gens in ideals {
            let label = format!("A/({})", gens.join(","));
            let m = ModulePresentation::cyclic(label, &self.algebra, Side::Left, gens).expect("corpus module");
            self.modules.push(m);
        }
        self
    }

    fn with(mut self, m: ModulePresentation) -> Self {
        self.modules.push(m);
        self
    }

    fn expect(mut self, module: &str, degrees: Vec<Vec<i64>>) -> Self {
        let t = degrees.iter().map(|d| *d.iter().max().expect("nonempty row")).collect();
        self.expected.push(Expected { module: module.into(), t, degrees: Some(degrees) });
        self
    }

    fn expect_t(mut self, module: &str, t: Vec<i64>) -> Self {
        self.expected.push(Expected { module: module.into(), t, degrees: None });
        self
    }
}

fn alg(label: &str, field: Field, gens: &[(&str, u32)], rels: &[&str]) -> AlgebraPresentation {
    AlgebraPresentation::from_strs(label, field, gens, rels)
}

pub fn downup(field: Field) -> AlgebraPresentation {
    alg("downup", field, &[("x", 1), ("y", 1)], &["x^2*y - y*x^2", "x*y^2 - y^2*x"])
}

pub fn kxy(field: Field) -> AlgebraPresentation {
    alg("kxy", field, &[("x", 1), ("y", 1)], &["y*x - x*y"])
}

pub fn kx(field: Field, degree: u32) -> AlgebraPresentation {
    let label = if degree == 1 { "kx".to_string() } else { format!("kx_deg{degree}") };
    alg(&label, field, &[("x", degree)], &[])
}

pub fn kz(field: Field) -> AlgebraPresentation {
    alg("kz", field, &[("z", 1)], &[])
}

pub fn cube_root(field: Field) -> AlgebraPresentation {
    alg("x3", field, &[("x", 1)], &["x^3"])
}

pub fn jordan(field: Field) -> AlgebraPresentation {
    alg("U", field, &[("x", 1), ("y", 1)], &["y*x - x*y - x^2"])
}

/// The subalgebra of the Jordan plane generated by `y` and `xy`, with the
/// Jordan plane as a module over it, valid through degree `dmax`.
pub fn jordan_subalgebra(field: Field, dmax: u32) -> Result<(AlgebraPresentation, ModulePresentation)> {
    let u = jordan(field);
    let gu = compute_groebner(&u, dmax)?;
    let subs = [parse_polynomial("y", u.gens(), field)?, parse_polynomial("x*y", u.gens(), field)?];
    let r = subalgebra_presentation(&gu, &subs, 2, dmax)?;
    let algebra = r.algebra.with_label("R");
    let gr = compute_groebner(&algebra, dmax)?;
    let phi = AlgebraMap::new(&algebra, &u, r.images)?;
    let free = ModulePresentation::free(&u, Side::Left, vec![0]);
    let ru = restrict_scalars(&gr, &gu, &phi, &free, dmax as i64, dmax as i64)?.with_label("U");
    Ok((algebra, ru))
}

/// The built-in algebras and modules.
pub fn default_corpus(field: Field) -> Result<Vec<Subject>> {
    let mut out = Vec::new();

    out.push(Subject::new(kx(field, 1), 12, 6).quotients(&[&["x^2"], &["x^3"]]).expect("k", vec![vec![0], vec![1]]));
    out.push(Subject::new(kx(field, 2), 12, 6).quotients(&[&["x^2"]]).expect("k", vec![vec![0], vec![2]]));

    let a = kxy(field);
    let gd = compute_groebner(&a, 16)?;
    let max_ideal = truncate_module(&ModulePresentation::free(&a, Side::Left, vec![0]), 1, &gd)?.with_label("A_ge1");
    let line = ModulePresentation::cyclic("A/(x)", &a, Side::Left, &["x"])?;
    let line_ge2 = truncate_module(&line, 2, &gd)?.with_label("A/(x)_ge2");
    out.push(
        Subject::new(a.clone(), 16, 8)
            .quotients(&[
                &["x"],
                &["y"],
                &["x^2"],
                &["x*y"],
                &["x^3"],
                &["x", "y^2"],
                &["x^2", "y"],
                &["x^2", "x*y"],
                &["x^2", "y^2"],
                &["x^2", "x*y", "y^2"],
                &["x*y", "y^3"],
                &["x^3", "y^2"],
                &["x^2*y", "x*y^2"],
            ])
            .with(shift_module(&ModulePresentation::free(&a, Side::Left, vec![0]), -2).with_label("A(-2)"))
            .with(max_ideal)
            .with(line_ge2)
            .expect("k", vec![vec![0], vec![1, 1], vec![2]]),
    );

    out.push(
        Subject::new(cube_root(field), 12, 5).expect("k", vec![vec![0], vec![1], vec![3], vec![4], vec![6], vec![7]]),
    );

    let d = downup(field);
    let gd = compute_groebner(&d, 14)?;
    let d_ge1 = truncate_module(&ModulePresentation::free(&d, Side::Left, vec![0]), 1, &gd)?.with_label("A_ge1");
    out.push(
        Subject::new(d.clone(), 14, 6)
            .quotients(&[
                &["x"],
                &["y"],
                &["x^2"],
                &["y^2"],
                &["x*y"],
                &["y*x"],
                &["x", "y^2"],
                &["x^2", "y"],
                &["x*y", "y*x"],
                &["x^2", "y^2"],
                &["x^3"],
                &["x^2", "x*y"],
            ])
            .with(shift_module(&ModulePresentation::free(&d, Side::Left, vec![0]), -1).with_label("A(-1)"))
            .with(d_ge1)
            .expect("k", vec![vec![0], vec![1, 1], vec![3, 3], vec![4]]),
    );

    out.push(Subject::new(jordan(field), 14, 6).quotients(&[&["x"], &["y"], &["x^2"]]));

    let (r, ru) = jordan_subalgebra(field, 14)?;
    let mut rs = Subject::new(r, 14, 4);
    rs.modules.truncate(1);
    let k_degrees = (0..=4).map(|n: i64| if n == 0 { vec![0] } else { vec![3 * n - 2, 3 * n - 1] }).collect();
    let u_t = (0..=4).map(|i: i64| 3 * i + 1).collect();
    out.push(rs.with(ru).expect("k", k_degrees).expect_t("U", u_t));

    let dz = tensor_algebra(&d, &kz(field))?;
    let mut s = Subject::new(dz, 12, 6);
    s.modules.truncate(1);
    s.factors = vec![d, kz(field)];
    out.push(s);

    let x12 = tensor_algebra(&kx(field, 1), &alg("ky_deg2", field, &[("y", 2)], &[]))?;
    let mut s = Subject::new(x12, 12, 6);
    s.factors = vec![kx(field, 1), alg("ky_deg2", field, &[("y", 2)], &[])];
    out.push(s);

    Ok(out)
}
