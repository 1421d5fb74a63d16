use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use gradreg_core::freealg::parse_polynomial;
use gradreg_core::modpres::{
    restrict_scalars, subalgebra_presentation, veronese_presentation, AlgebraMap, WindowedPresentation,
};
use gradreg_core::regularity::{
    asreg, check_as_regular, cmreg_module, depth, extreg, koszul_check, local_cohomology_degrees, pdim, prop58_bound,
    rate, rate_bound, slope, torreg, ASType, ExtendedValue, KoszulVerdict, Status, Weight,
};
use gradreg_core::verify::{verify_default, Suite};
use gradreg_core::{
    minimal_free_resolution, AlgebraPresentation, BettiTable, Error, Field, GroebnerData, ModulePresentation, Side,
};

use crate::input::{groebner, load_algebra, load_module, parse_field, Failure, Outcome};
use crate::{Cli, Command, Format, ModuleArgs, RegKind, SideArg};

pub struct Output {
    pub body: String,
    pub code: u8,
}

struct Ctx<'a> {
    cli: &'a Cli,
    field: Option<Field>,
    cache: Option<PathBuf>,
}

impl Ctx<'_> {
    fn hmax(&self) -> usize {
        self.cli.hmax as usize
    }

    fn dmax(&self) -> i64 {
        self.cli.dmax as i64
    }

    fn window(&self) -> Value {
        json!([self.cli.hmax, self.cli.dmax])
    }

    fn algebra(&self, path: &Path) -> Outcome<(AlgebraPresentation, GroebnerData)> {
        let a = load_algebra(path, self.field)?;
        let g = groebner(&a, self.cli.dmax, self.cache.as_deref())?;
        Ok((a, g))
    }

    fn module(&self, args: &ModuleArgs) -> Outcome<(GroebnerData, ModulePresentation)> {
        let (a, g) = self.algebra(&args.algebra)?;
        let side = match args.side {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        };
        let m = load_module(&args.module, &a, side)?;
        Ok((g, m))
    }

    fn resolve(&self, g: &GroebnerData, m: &ModulePresentation) -> Outcome<BettiTable> {
        Ok(minimal_free_resolution(m, g, self.hmax(), self.dmax())?.1)
    }

    fn k_table(&self, g: &GroebnerData) -> Outcome<BettiTable> {
        self.resolve(g, &ModulePresentation::trivial(g.algebra(), Side::Left))
    }

    fn as_type(&self, g: &GroebnerData) -> Outcome<ASType> {
        let t = check_as_regular(g, self.hmax(), self.dmax());
        t.require()?;
        Ok(t)
    }

    fn emit(&self, command: &str, subject: &str, result: Value, text: String) -> Output {
        let body = match self.cli.format {
            Format::Table => text,
            Format::Json => {
                let v = json!({
                    "schema": 1,
                    "version": env!("CARGO_PKG_VERSION"),
                    "command": command,
                    "subject": subject,
                    "window": self.window(),
                    "result": result,
                });
                serde_json::to_string_pretty(&v).expect("serializable") + "\n"
            }
        };
        Output { body, code: 0 }
    }
}

fn value(v: Value, status: &str, window: Value) -> Value {
    json!({"value": v, "status": status, "window": window})
}

fn table_status(b: &BettiTable) -> &'static str {
    if b.is_exact() {
        Status::Exact.name()
    } else {
        Status::ObservedLowerBound.name()
    }
}

pub fn run(cli: &Cli) -> Result<Output, Failure> {
    let field = cli.field.as_deref().map(parse_field).transpose()?;
    let cache = std::env::var_os("GRADREG_CACHE").map(PathBuf::from).or_else(|| cli.cache_dir.clone());
    let ctx = Ctx { cli, field, cache };
    match &cli.command {
        Command::Gb { algebra } => gb(&ctx, algebra),
        Command::Hilbert { algebra } => hilbert(&ctx, algebra),
        Command::Betti(args) => betti(&ctx, args),
        Command::Reg { kind, target, xi } => reg(&ctx, *kind, target, xi),
        Command::Depth(args) => depth_cmd(&ctx, args),
        Command::Pdim(args) => pdim_cmd(&ctx, args),
        Command::Rate { algebra } => k_invariant(&ctx, algebra, "rate", rate),
        Command::Slope { algebra } => k_invariant(&ctx, algebra, "slope", slope),
        Command::Koszul { algebra } => koszul(&ctx, algebra),
        Command::Veronese { algebra, d, gen_bound, rel_bound } => veronese(&ctx, algebra, *d, *gen_bound, *rel_bound),
        Command::Subalgebra { algebra, gens, gen_bound, rel_bound } => {
            subalgebra(&ctx, algebra, gens, *gen_bound, *rel_bound)
        }
        Command::Astype { algebra } => astype(&ctx, algebra),
        Command::Bound58 { algebra, via, images } => bound58(&ctx, algebra, via, images.as_deref()),
        Command::Verify { suite } => verify(&ctx, suite),
    }
}

fn gb(ctx: &Ctx, path: &Path) -> Result<Output, Failure> {
    let (a, g) = ctx.algebra(path)?;
    let elems: Vec<String> = g.gb().iter().map(|p| p.to_text(g.gens())).collect();
    let dims = g.dims();
    let mut text = format!("Groebner basis of {} through degree {}:\n", a.label(), g.dmax());
    for e in &elems {
        text.push_str(&format!("  {e}\n"));
    }
    text.push_str(&format!("dims: {dims:?}\n"));
    let window = json!([null, g.dmax()]);
    let result = json!({
        "gb": value(json!(elems), Status::Exact.name(), window.clone()),
        "dims": value(json!(dims), Status::Exact.name(), window),
    });
    Ok(ctx.emit("gb", a.label(), result, text))
}

fn hilbert(ctx: &Ctx, path: &Path) -> Result<Output, Failure> {
    let (a, g) = ctx.algebra(path)?;
    let dims = gradreg_core::gbasis::hilbert_series(&g);
    let terms: Vec<String> = dims
        .iter()
        .enumerate()
        .filter(|(_, &d)| d != 0)
        .map(|(n, d)| match n {
            0 => d.to_string(),
            1 => format!("{d}t"),
            _ => format!("{d}t^{n}"),
        })
        .collect();
    let text = format!("H(t) = {} + O(t^{})\n", terms.join(" + "), g.dmax() + 1);
    let result = value(json!(dims), Status::Exact.name(), json!([null, g.dmax()]));
    Ok(ctx.emit("hilbert", a.label(), result, text))
}

fn betti(ctx: &Ctx, args: &ModuleArgs) -> Result<Output, Failure> {
    let (g, m) = ctx.module(args)?;
    let b = ctx.resolve(&g, &m)?;
    let status = table_status(&b);
    let mut text = format!("Betti table of {} over {} ({status}):\n", m.label(), g.algebra().label());
    text.push_str(&b.to_text());
    let result = value(b.to_json(), status, json!([b.hmax(), b.dmax()]));
    Ok(ctx.emit("betti", &subject(&g, &m), result, text))
}

fn subject(g: &GroebnerData, m: &ModulePresentation) -> String {
    format!("{}/{}", g.algebra().label(), m.label())
}

fn reg(ctx: &Ctx, kind: RegKind, args: &ModuleArgs, xis: &[String]) -> Result<Output, Failure> {
    let weights = xis.iter().map(|x| Weight::parse(x)).collect::<gradreg_core::Result<Vec<_>>>()?;
    let (g, m) = ctx.module(args)?;
    let (name, short, label) = match kind {
        RegKind::Tor => ("Torreg", "tor", m.label().to_string()),
        RegKind::Ext => ("Extreg", "ext", m.label().to_string()),
        RegKind::Cm => ("CMreg", "cm", m.label().to_string()),
        RegKind::As => ("ASreg", "as", g.algebra().label().to_string()),
    };
    let values: Vec<ExtendedValue> = match kind {
        RegKind::Tor | RegKind::Ext => {
            let b = ctx.resolve(&g, &m)?;
            let f = if kind == RegKind::Tor { torreg } else { extreg };
            weights.iter().map(|xi| f(&b, xi)).collect()
        }
        RegKind::Cm => {
            let t = ctx.as_type(&g)?;
            let (lc, _) = local_cohomology_degrees(&m, &t, &g, ctx.hmax(), ctx.dmax())?;
            weights.iter().map(|xi| cmreg_module(&lc, xi)).collect::<gradreg_core::Result<_>>()?
        }
        RegKind::As => {
            let t = ctx.as_type(&g)?;
            let kb = ctx.k_table(&g)?;
            weights.iter().map(|xi| asreg(&kb, &t, xi)).collect::<gradreg_core::Result<_>>()?
        }
    };
    let mut text = String::new();
    let mut rows = Vec::new();
    for (xi, v) in weights.iter().zip(&values) {
        text.push_str(&format!("{name}_{xi}({label}) = {v}\n"));
        rows.push(json!({"xi": xi.to_json(), "reg": v.to_json()}));
    }
    Ok(ctx.emit(&format!("reg {short}"), &subject(&g, &m), json!(rows), text))
}

fn depth_cmd(ctx: &Ctx, args: &ModuleArgs) -> Result<Output, Failure> {
    let (g, m) = ctx.module(args)?;
    let t = ctx.as_type(&g)?;
    let (lc, _) = local_cohomology_degrees(&m, &t, &g, ctx.hmax(), ctx.dmax())?;
    let d = depth(&lc);
    let mut text = format!("depth({}) = {d}\n", m.label());
    for j in 0..=lc.d {
        text.push_str(&format!("  deg H^{j} = {}\n", lc.degree(j)));
    }
    let result = json!({"depth": d.to_json(), "local_cohomology": lc.to_json()});
    Ok(ctx.emit("depth", &subject(&g, &m), result, text))
}

fn pdim_cmd(ctx: &Ctx, args: &ModuleArgs) -> Result<Output, Failure> {
    let (g, m) = ctx.module(args)?;
    let b = ctx.resolve(&g, &m)?;
    let v = pdim(&b);
    let text = format!("pdim({}) = {v}\n", m.label());
    Ok(ctx.emit("pdim", &subject(&g, &m), v.to_json(), text))
}

fn k_invariant(ctx: &Ctx, path: &Path, name: &str, f: fn(&BettiTable) -> ExtendedValue) -> Result<Output, Failure> {
    let (a, g) = ctx.algebra(path)?;
    let v = f(&ctx.k_table(&g)?);
    let text = format!("{name}({}) = {v}\n", a.label());
    Ok(ctx.emit(name, a.label(), v.to_json(), text))
}

fn koszul(ctx: &Ctx, path: &Path) -> Result<Output, Failure> {
    let (a, g) = ctx.algebra(path)?;
    let b = ctx.k_table(&g)?;
    let window = json!([b.hmax(), b.dmax()]);
    let (text, result) = match koszul_check(&b) {
        KoszulVerdict::ThroughWindow => {
            let status = if b.is_exact() { "exact" } else { "through the window" };
            (
                format!("{} is Koszul ({status}) [hmax = {}, dmax = {}]\n", a.label(), b.hmax(), b.dmax()),
                value(json!(true), status, window),
            )
        }
        KoszulVerdict::NotKoszul { i, j } => (
            format!("{} is not Koszul: beta_{{{i},{j}}} is nonzero\n", a.label()),
            json!({"value": false, "status": "exact", "window": window, "witness": {"i": i, "j": j}}),
        ),
    };
    Ok(ctx.emit("koszul", a.label(), result, text))
}

fn presentation_output(ctx: &Ctx, command: &str, source: &GroebnerData, w: &WindowedPresentation) -> Output {
    let b = &w.algebra;
    let images: Vec<String> = w.images.iter().map(|p| p.to_text(source.gens())).collect();
    let mut text =
        format!("# generators complete through degree {}, relations through degree {}\n", w.gen_bound, w.rel_bound);
    for (n, im) in b.gens().names().iter().zip(&images) {
        text.push_str(&format!("# {n} = {im}\n"));
    }
    text.push_str(&b.to_text());
    let rels: Vec<String> = b.relations().iter().map(|r| r.to_text(b.gens())).collect();
    let window = json!({"generators": w.gen_bound, "relations": w.rel_bound});
    let result = json!({
        "presentation": value(json!(b.to_text()), "through the window", window.clone()),
        "gens": b.gens().names(),
        "degrees": b.gens().degrees(),
        "relations": rels,
        "images": images,
    });
    ctx.emit(command, source.algebra().label(), result, text)
}

fn veronese(ctx: &Ctx, path: &Path, d: u32, gen_bound: Option<u32>, rel_bound: Option<u32>) -> Result<Output, Failure> {
    if d == 0 {
        return Err(Error::Input("--d must be positive".into()).into());
    }
    let (_, g) = ctx.algebra(path)?;
    let rel = rel_bound.unwrap_or((ctx.cli.dmax / d).min(4));
    let gen = gen_bound.unwrap_or(rel);
    let w = veronese_presentation(&g, d, gen, rel)?;
    Ok(presentation_output(ctx, "veronese", &g, &w))
}

fn subalgebra(
    ctx: &Ctx,
    path: &Path,
    gens: &[String],
    gen_bound: Option<u32>,
    rel_bound: Option<u32>,
) -> Result<Output, Failure> {
    let (a, g) = ctx.algebra(path)?;
    let polys =
        gens.iter().map(|s| parse_polynomial(s, a.gens(), a.field())).collect::<gradreg_core::Result<Vec<_>>>()?;
    let top = polys.iter().filter_map(|p| p.degree()).max().unwrap_or(1);
    let w = subalgebra_presentation(&g, &polys, gen_bound.unwrap_or(top), rel_bound.unwrap_or(ctx.cli.dmax))?;
    Ok(presentation_output(ctx, "subalgebra", &g, &w))
}

fn astype(ctx: &Ctx, path: &Path) -> Result<Output, Failure> {
    let (a, g) = ctx.algebra(path)?;
    let t = ctx.as_type(&g)?;
    let text = format!("AS regular, type ({},{})\n", t.d, t.ell);
    Ok(ctx.emit("astype", a.label(), value(t.to_json(), "exact", ctx.window()), text))
}

fn bound58(ctx: &Ctx, path: &Path, via: &Path, images: Option<&[String]>) -> Result<Output, Failure> {
    let (a, ga) = ctx.algebra(path)?;
    let (t, gt) = ctx.algebra(via)?;
    let phi = match images {
        None => AlgebraMap::by_names(&t, &a)?,
        Some(ims) => {
            let polys = ims
                .iter()
                .map(|s| parse_polynomial(s, a.gens(), a.field()))
                .collect::<gradreg_core::Result<Vec<_>>>()?;
            AlgebraMap::new(&t, &a, polys)?
        }
    };
    if !phi.check(&gt) {
        return Err(Error::Input("the generator images do not define an algebra map".into()).into());
    }
    let free = ModulePresentation::free(&a, Side::Left, vec![0]);
    let ta = restrict_scalars(&gt, &ga, &phi, &free, ctx.dmax(), ctx.dmax())?;
    let tb = ctx.resolve(&gt, &ta)?;
    let c = prop58_bound(&tb)?;
    let kb = ctx.k_table(&ga)?;
    let at_c = torreg(&kb, &Weight::one(c.clone()));
    let observed_rate = rate(&kb);
    let bound = at_c.value.finite().map(|v| rate_bound(v, &c));
    let mut text = format!("c = {c} (exact)\n");
    text.push_str(&format!("Torreg_(1, {c})(k_{}) = {at_c}\n", a.label()));
    text.push_str(&format!("rate({}) = {observed_rate}\n", a.label()));
    if let Some(rb) = &bound {
        text.push_str(&format!("rate bound = {rb}\n"));
    }
    let result = json!({
        "c": value(json!(c.to_string()), "exact", json!([tb.hmax(), tb.dmax()])),
        "torreg_at_c": at_c.to_json(),
        "rate": observed_rate.to_json(),
        "rate_bound": bound.map(|b| value(json!(b.to_string()), Status::UpperBound.name(), Value::Null)),
    });
    Ok(ctx.emit("bound58", a.label(), result, text))
}

fn verify(ctx: &Ctx, suite: &str) -> Result<Output, Failure> {
    let suites = Suite::parse(suite)?;
    let report = verify_default(&suites, ctx.field.unwrap_or(Field::Rational))?;
    let body = match ctx.cli.format {
        Format::Table => report.to_text(),
        Format::Json => serde_json::to_string_pretty(&report.to_json()).expect("serializable") + "\n",
    };
    Ok(Output { body, code: if report.passed() { 0 } else { 1 } })
}
