use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use gradreg_core::gbasis::{cache_key, CachedGroebner};
use gradreg_core::{
    compute_groebner, AlgebraPresentation, Error, Field, GroebnerData, ModulePresentation, Result, Side,
};

/// A parse error with the file it came from.
#[derive(Debug)]
pub struct Failure {
    pub error: Error,
    pub path: Option<PathBuf>,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure { error, path: None }
    }
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self.error {
            Error::Unsupported(_) | Error::Hypothesis(_) | Error::Window(_) => 1,
            Error::Parse { .. } | Error::Input(_) | Error::NotHomogeneous(_) | Error::Io(_) => 2,
        }
    }

    pub fn message(&self) -> String {
        match (&self.error, &self.path) {
            (Error::Parse { line, column, message }, Some(p)) => format!("{}:{line}:{column}: {message}", p.display()),
            (e, Some(p)) => format!("{}: {e}", p.display()),
            (e, None) => e.to_string(),
        }
    }
}

pub type Outcome<T> = std::result::Result<T, Failure>;

fn read(path: &Path) -> Outcome<String> {
    fs::read_to_string(path).map_err(|e| Failure { error: Error::Io(e.to_string()), path: Some(path.to_path_buf()) })
}

/// `Q`, `F32003`, `F_32003`, `F 32003` or a bare prime.
pub fn parse_field(text: &str) -> Result<Field> {
    let t = text.trim();
    if t == "Q" || t == "QQ" {
        return Ok(Field::Rational);
    }
    let digits = t.trim_start_matches(['F', 'f']).trim_start_matches(['_', ' ']);
    let p: u64 = digits.parse().map_err(|_| Error::Input(format!("unknown field `{text}`")))?;
    Field::prime(p)
}

pub fn load_algebra(path: &Path, field: Option<Field>) -> Outcome<AlgebraPresentation> {
    let text = read(path)?;
    let a = AlgebraPresentation::parse(&text).map_err(|error| Failure { error, path: Some(path.to_path_buf()) })?;
    match field {
        Some(f) => Ok(a.over_field(f)?),
        None => Ok(a),
    }
}

/// `k`, `A`, `A/(x, y^2)` or a module file.
pub fn load_module(spec: &str, a: &AlgebraPresentation, side: Side) -> Outcome<ModulePresentation> {
    let s = spec.trim();
    if s == "k" {
        return Ok(ModulePresentation::trivial(a, side));
    }
    if s == "A" {
        return Ok(ModulePresentation::free(a, side, vec![0]).with_label("A"));
    }
    if let Some(inner) = s.strip_prefix("A/(").and_then(|r| r.strip_suffix(')')) {
        let gens: Vec<&str> = inner.split(',').map(str::trim).collect();
        return Ok(ModulePresentation::cyclic(s, a, side, &gens)?);
    }
    let path = Path::new(s);
    let text = read(path)?;
    ModulePresentation::parse(&text, a).map_err(|error| Failure { error, path: Some(path.to_path_buf()) })
}

/// The Gröbner data of `a` through `dmax`, read from and written to `cache`
/// when one is given.
pub fn groebner(a: &AlgebraPresentation, dmax: u32, cache: Option<&Path>) -> Result<GroebnerData> {
    let Some(dir) = cache else {
        return compute_groebner(a, dmax);
    };
    let path = dir.join(format!("{}.json", cache_key(a, dmax)));
    if let Ok(text) = fs::read_to_string(&path) {
        if let Ok(g) = CachedGroebner::from_json(&text).and_then(|c| c.restore(a)) {
            return Ok(g);
        }
    }
    let g = compute_groebner(a, dmax)?;
    store(dir, &path, &CachedGroebner::from_data(&g).to_json())?;
    Ok(g)
}

fn store(dir: &Path, path: &Path, text: &str) -> Result<()> {
    fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(text.as_bytes())?;
    tmp.persist(path).map_err(|e| Error::Io(e.to_string()))?;
    Ok(())
}
