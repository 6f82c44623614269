use std::thread;

use clap::Args;
use num_bigint::BigInt;
use serde_json::{json, Value};

use k0ring::analysis::roots_report;
use k0ring::characters::{brauer_equal, char_of_elt};
use k0ring::family::f_iter;
use k0ring::modp::fiber_report;
use k0ring::numth::{checked_pow, is_prime};
use k0ring::ring::{identity_sweep, verify_identity, Identity, SweepReport};
use k0ring::steinberg::{decompose, jh_product, jh_sym, unitriangular_determinant, virtual_product};
use k0ring::{Error, GroundField, IntPoly, RingElt, SymLaurent};

use crate::report::{to_value, Failure, Report};
use crate::{EltArgs, FieldArgs, Global};

type CmdResult = Result<Report, Failure>;

/// The fields a grid command runs over. With neither `--p` nor `--primes`
/// the grid is `{2, 3, 5} x {1, 2}`.
#[derive(Args, Debug, Clone)]
pub struct GridArgs {
    /// A single prime.
    #[arg(long, conflicts_with = "primes")]
    pub p: Option<u64>,
    /// Comma-separated primes.
    #[arg(long, value_delimiter = ',')]
    pub primes: Option<Vec<u64>>,
    /// Comma-separated exponents g.
    #[arg(long, value_delimiter = ',')]
    pub g: Option<Vec<u32>>,
    /// Random (k, h) pairs per identity and field.
    #[arg(long, default_value_t = 50)]
    pub trials: usize,
    /// Worker threads for independent fields (sweep only).
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub grid: GridArgs,
    /// Check a single identity: delta, sigma, pi or phi.
    #[arg(long, conflicts_with = "all")]
    pub identity: Option<Identity>,
    /// Check all four identities (the default).
    #[arg(long)]
    pub all: bool,
    /// Evaluate at this k instead of random trials.
    #[arg(long, allow_negative_numbers = true)]
    pub k: Option<i64>,
    /// Second index for the product identity; defaults to 0.
    #[arg(long, allow_negative_numbers = true, requires = "k")]
    pub h: Option<i64>,
}

/// Each side is `sym:K`, `tuple:K0,K1,...`, `poly:EXPR` (a polynomial in x)
/// or `char:EXPR` (a symmetric Laurent polynomial in t). A bare expression
/// is read as a character.
#[derive(Args, Debug, Clone)]
pub struct CharEqualArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub left: String,
    #[arg(long, allow_hyphen_values = true)]
    pub right: String,
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn field_for(p: u64, g: u32, global: &Global) -> Result<GroundField, Failure> {
    let field = GroundField::new(p, g)?;
    if field.q() > global.q_cap {
        return Err(usage(format!(
            "q = {p}^{g} = {} exceeds the q cap {} (raise --q-cap or K0RING_Q_CAP)",
            field.q(),
            global.q_cap
        )));
    }
    Ok(field)
}

fn field_json(f: &GroundField) -> Value {
    json!({"p": f.p(), "g": f.g(), "q": f.q()})
}

fn with_field(r: &mut Report, f: &GroundField) {
    r.set("p", f.p()).set("g", f.g()).set("q", f.q());
}

fn poly_json(a: &IntPoly) -> Value {
    json!({"text": a.to_string(), "list": a.to_list_string()})
}

fn parse_tuple(s: &str) -> Result<Vec<i64>, Failure> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| usage(format!("bad tuple entry {t:?} in {s:?}")))
        })
        .collect()
}

enum Input {
    Sym(i64),
    Tuple(Vec<i64>),
    Poly(IntPoly),
}

impl Input {
    fn from_args(e: &EltArgs) -> Result<Input, Failure> {
        if let Some(k) = e.sym {
            Ok(Input::Sym(k))
        } else if let Some(t) = &e.tuple {
            Ok(Input::Tuple(parse_tuple(t)?))
        } else if let Some(s) = &e.poly {
            Ok(Input::Poly(s.parse()?))
        } else {
            Err(usage("one of --sym, --tuple or --poly is required"))
        }
    }

    fn elt(&self, f: &GroundField) -> Result<RingElt, Failure> {
        Ok(match self {
            Input::Sym(k) => RingElt::sym_class(*k, f),
            Input::Tuple(ks) => {
                if ks.len() > f.g() as usize {
                    return Err(usage(format!("at most g = {} tuple entries allowed, got {}", f.g(), ks.len())));
                }
                virtual_product(ks, f)
            }
            Input::Poly(a) => RingElt::reduce(a, f),
        })
    }

    fn describe(&self) -> Value {
        match self {
            Input::Sym(k) => json!({"sym": k}),
            Input::Tuple(ks) => json!({"tuple": ks}),
            Input::Poly(a) => json!({"poly": a.to_string()}),
        }
    }
}

pub fn present(a: &FieldArgs, global: &Global) -> CmdResult {
    let f = field_for(a.p, a.g, global)?;
    let fg = f_iter(a.p, a.g)?;
    let modulus = f.modulus();
    let mut r = Report::new("present", global);
    with_field(&mut r, &f);
    r.set("f", poly_json(f.f()))
        .set("f_g", poly_json(&fg))
        .set("modulus", poly_json(modulus))
        .set("modulus_degree", modulus.degree().unwrap_or(0))
        .set("modulus_monic", modulus.is_monic());
    r.line(format!("p = {}, g = {}, q = {}", f.p(), f.g(), f.q()))
        .line(format!("f        = {}", f.f()))
        .line(format!("           {}", f.f().to_list_string()))
        .line(format!("f^[g]    = {fg}"))
        .line(format!("           {}", fg.to_list_string()))
        .line(format!("modulus  = {modulus}"))
        .line(format!("           {}", modulus.to_list_string()))
        .line(format!(
            "degree {}, monic {}",
            modulus.degree().unwrap_or(0),
            modulus.is_monic()
        ));
    Ok(r)
}

pub fn decompose_cmd(a: &FieldArgs, e: &EltArgs, virtual_: bool, global: &Global) -> CmdResult {
    let f = field_for(a.p, a.g, global)?;
    let input = Input::from_args(e)?;
    let checked = !virtual_ && !matches!(input, Input::Poly(_));
    let result = match (&input, checked) {
        (Input::Sym(k), true) => jh_sym(*k, &f),
        (Input::Tuple(ks), true) => jh_product(ks, &f),
        _ => Ok(decompose(&input.elt(&f)?)),
    };
    let mut r = Report::new("decompose", global);
    with_field(&mut r, &f);
    r.set("input", input.describe()).set("virtual", !checked);
    match result {
        Ok(v) => {
            r.set("factors", to_value(&v))
                .set("dimension", v.dimension().to_string())
                .set("module_check", if checked { Value::Bool(true) } else { Value::Null });
            r.line(serde_json::to_string(&v).expect("vector serializes"))
                .line(format!("dimension {}", v.dimension()));
        }
        Err(Error::NegativeIndex(k)) => {
            return Err(usage(format!(
                "negative index {k} is not a module; pass --virtual to decompose the virtual class"
            )))
        }
        Err(Error::Internal(msg)) => {
            r.ok = false;
            r.set("module_check", false).set("error", msg.clone());
            r.line(format!("module check failed: {msg}"));
        }
        Err(e) => return Err(e.into()),
    }
    Ok(r)
}

/// Primes and exponents of a grid request, before the q cap is applied.
fn grid_pairs(grid: &GridArgs) -> Result<Vec<(u64, u32)>, Failure> {
    let explicit = grid.p.is_some() || grid.primes.is_some();
    let primes = match (&grid.p, &grid.primes) {
        (Some(p), _) => vec![*p],
        (None, Some(ps)) => ps.clone(),
        (None, None) => vec![2, 3, 5],
    };
    let gs = match &grid.g {
        Some(gs) => gs.clone(),
        None if explicit => vec![1],
        None => vec![1, 2],
    };
    if let Some(&p) = primes.iter().find(|&&p| !is_prime(p)) {
        return Err(Error::NotPrime(p).into());
    }
    if gs.contains(&0) {
        return Err(usage("g must be at least 1"));
    }
    let mut pairs: Vec<(u64, u32)> = primes.iter().flat_map(|&p| gs.iter().map(move |&g| (p, g))).collect();
    pairs.sort_unstable();
    pairs.dedup();
    Ok(pairs)
}

/// Splits the grid into fields within the cap and skipped `(p, g)` pairs,
/// printing a notice for each skip.
fn grid_fields(grid: &GridArgs, global: &Global) -> Result<(Vec<GroundField>, Vec<Value>), Failure> {
    let mut fields = Vec::new();
    let mut skipped = Vec::new();
    for (p, g) in grid_pairs(grid)? {
        match checked_pow(p, g).filter(|&q| q <= global.q_cap) {
            Some(_) => fields.push(GroundField::new(p, g)?),
            None => {
                eprintln!("notice: skipping p = {p}, g = {g}: q exceeds the cap {}", global.q_cap);
                skipped.push(json!({"p": p, "g": g}));
            }
        }
    }
    if fields.is_empty() {
        return Err(usage("every requested field exceeds the q cap"));
    }
    Ok((fields, skipped))
}

pub fn verify(a: &VerifyArgs, global: &Global) -> CmdResult {
    let (fields, skipped) = grid_fields(&a.grid, global)?;
    let which: Vec<Identity> = match a.identity {
        Some(id) => vec![id],
        None => Identity::ALL.to_vec(),
    };
    let mut r = Report::new("verify", global);
    r.set("identities", to_value(&which)).set("skipped", skipped);
    let mut records = Vec::new();
    match a.k {
        Some(k) => {
            let h = a.h.unwrap_or(0);
            r.set("k", k).set("h", h);
            for f in &fields {
                for &id in &which {
                    let rep = verify_identity(id, k, h, f);
                    r.ok &= rep.holds;
                    r.line(format!(
                        "{id} p={} g={} k={k} h={h}: {} (lhs = {}, rhs = {})",
                        f.p(),
                        f.g(),
                        if rep.holds { "holds" } else { "FAILS" },
                        rep.lhs.residue(),
                        rep.rhs.residue()
                    ));
                    let mut v = field_json(f);
                    v["identity"] = id.name().into();
                    v["holds"] = rep.holds.into();
                    v["lhs"] = rep.lhs.residue().to_string().into();
                    v["rhs"] = rep.rhs.residue().to_string().into();
                    records.push(v);
                }
            }
        }
        None => {
            r.set("trials", a.grid.trials);
            for f in &fields {
                let rep = identity_sweep(f, &which, a.grid.trials, global.seed);
                r.ok &= rep.all_hold();
                r.line(sweep_line(&rep));
                records.push(to_value(&rep));
            }
        }
    }
    let ok = r.ok;
    r.set("fields", records).set("holds", ok);
    r.line(format!("seed {}: {}", global.seed, if r.ok { "all identities hold" } else { "counterexample found" }));
    Ok(r)
}

fn sweep_line(rep: &SweepReport) -> String {
    let mut s = format!(
        "p={} g={} q={}: {} checks, {} counterexamples",
        rep.p,
        rep.g,
        rep.q,
        rep.checked,
        rep.counterexamples.len()
    );
    if let Some(c) = rep.counterexamples.first() {
        s += &format!(" (first: {} at k={} h={}: {} vs {})", c.which, c.k, c.h, c.lhs, c.rhs);
    }
    s
}

pub fn twist(a: &FieldArgs, e: &EltArgs, i: i64, global: &Global) -> CmdResult {
    let f = field_for(a.p, a.g, global)?;
    let input = Input::from_args(e)?;
    let elt = input.elt(&f)?;
    let t = elt.frobenius_twist(i);
    let factors = decompose(&t);
    let mut r = Report::new("twist", global);
    with_field(&mut r, &f);
    r.set("input", input.describe())
        .set("i", i)
        .set("element", poly_json(elt.residue()))
        .set("twisted", poly_json(t.residue()))
        .set("twisted_factors", to_value(&factors));
    r.line(format!("({})^[{i}] = {}", elt.residue(), t.residue()))
        .line(format!("factors {}", serde_json::to_string(&factors).expect("vector serializes")));
    Ok(r)
}

pub fn modp(a: &FieldArgs, global: &Global) -> CmdResult {
    let f = field_for(a.p, a.g, global)?;
    let rep = fiber_report(&f);
    let mut r = Report::new("modp", global);
    r.ok = rep.all_pass();
    if let (Value::Object(m), Value::Object(extra)) = (&mut r.json, to_value(&rep)) {
        m.extend(extra);
    }
    let pairs: Vec<String> = rep.pairs.iter().map(|x| format!("({},{})", x.d, x.psi)).collect();
    r.line(format!("p = {}, g = {}, q = {}", rep.p, rep.g, rep.q))
        .line(format!("pairs (d, psi): [{}]", pairs.join(",")))
        .line(format!(
            "congruence {}, ddf_match {}, dimension_sum {}",
            rep.checks.congruence, rep.checks.ddf_match, rep.checks.dimension_sum
        ));
    Ok(r)
}

pub fn roots(p: u64, bound: u64, global: &Global) -> CmdResult {
    if p > global.q_cap {
        return Err(usage(format!("p = {p} exceeds the q cap {}", global.q_cap)));
    }
    let rep = roots_report(p, bound)?;
    let mut r = Report::new("roots", global);
    r.ok = rep.all_real;
    r.set("bound", bound);
    if let (Value::Object(m), Value::Object(extra)) = (&mut r.json, to_value(&rep)) {
        m.extend(extra);
    }
    r.line(format!("f(x) - x for p = {p}, degree {}", rep.degree))
        .line(format!("rational roots in [-{bound}, {bound}]: {:?}", rep.rational_roots))
        .line(format!("real roots: {}, all real: {}", rep.real_root_count, rep.all_real));
    if let Some(w) = &rep.repeated_factor {
        r.line(format!("repeated factor: {w}"));
    }
    Ok(r)
}

pub fn character(a: &FieldArgs, e: &EltArgs, global: &Global) -> CmdResult {
    let f = field_for(a.p, a.g, global)?;
    let input = Input::from_args(e)?;
    let c = char_of_elt(&input.elt(&f)?);
    let mut r = Report::new("char", global);
    with_field(&mut r, &f);
    r.set("input", input.describe())
        .set("character", c.to_string())
        .set("dimension", c.eval_one().to_string());
    r.line(c.to_string());
    Ok(r)
}

fn parse_side(s: &str, f: &GroundField) -> Result<SymLaurent, Failure> {
    let s = s.trim();
    let (kind, body) = s.split_once(':').unwrap_or(("char", s));
    let elt = |i: Input| -> Result<SymLaurent, Failure> { Ok(char_of_elt(&i.elt(f)?)) };
    match kind.trim() {
        "sym" => {
            let k = body.trim().parse().map_err(|_| usage(format!("bad index in {s:?}")))?;
            elt(Input::Sym(k))
        }
        "tuple" => elt(Input::Tuple(parse_tuple(body)?)),
        "poly" => elt(Input::Poly(body.parse()?)),
        "char" => Ok(body.parse()?),
        other => Err(usage(format!("unknown input kind {other:?} (expected sym, tuple, poly or char)"))),
    }
}

pub fn char_equal(a: &CharEqualArgs, global: &Global) -> CmdResult {
    let f = field_for(a.field.p, a.field.g, global)?;
    let left = parse_side(&a.left, &f)?;
    let right = parse_side(&a.right, &f)?;
    let equal = brauer_equal(&left, &right, &f);
    let mut r = Report::new("char-equal", global);
    with_field(&mut r, &f);
    r.set("left", left.to_string())
        .set("right", right.to_string())
        .set("equal", equal);
    r.line(format!(
        "{left}  {}  {right}  (Brauer characters of SL2(F_{}))",
        if equal { "==" } else { "!=" },
        f.q()
    ));
    Ok(r)
}

/// Everything checked for one field in a sweep.
fn sweep_cell(f: &GroundField, trials: usize, seed: u64) -> (bool, Value, String) {
    let ids = identity_sweep(f, &Identity::ALL, trials, seed);
    let det = unitriangular_determinant(f);
    let det_ok = matches!(&det, Ok(d) if *d == BigInt::from(1));
    let fiber = fiber_report(f);
    let ok = ids.all_hold() && det_ok && fiber.all_pass();
    let text = format!(
        "{}; steinberg determinant {}; mod-p checks {}",
        sweep_line(&ids),
        match &det {
            Ok(d) => d.to_string(),
            Err(e) => e.to_string(),
        },
        if fiber.all_pass() { "pass" } else { "FAIL" }
    );
    let mut v = field_json(f);
    v["ok"] = ok.into();
    v["identities"] = to_value(&ids);
    v["steinberg_determinant"] = match det {
        Ok(d) => d.to_string().into(),
        Err(e) => json!({"error": e.to_string()}),
    };
    v["modp"] = to_value(&fiber);
    (ok, v, text)
}

pub fn sweep(a: &GridArgs, global: &Global) -> CmdResult {
    let (fields, skipped) = grid_fields(a, global)?;
    let jobs = a
        .jobs
        .unwrap_or_else(|| thread::available_parallelism().map_or(1, |n| n.get()))
        .clamp(1, fields.len());
    // Field i goes to worker i % jobs; results are put back in grid order.
    let mut cells: Vec<Option<(bool, Value, String)>> = vec![None; fields.len()];
    thread::scope(|s| {
        let handles: Vec<_> = (0..jobs)
            .map(|w| {
                let fields = &fields;
                s.spawn(move || {
                    (w..fields.len())
                        .step_by(jobs)
                        .map(|i| (i, sweep_cell(&fields[i], a.trials, global.seed)))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for h in handles {
            for (i, cell) in h.join().expect("sweep worker panicked") {
                cells[i] = Some(cell);
            }
        }
    });
    let mut r = Report::new("sweep", global);
    r.set("trials", a.trials).set("skipped", skipped);
    let mut records = Vec::new();
    for cell in cells {
        let (ok, v, text) = cell.expect("every cell ran");
        r.ok &= ok;
        records.push(v);
        r.line(text);
    }
    let ok = r.ok;
    r.set("fields", records).set("ok", ok);
    r.line(format!("seed {}: {}", global.seed, if r.ok { "all checks pass" } else { "FAILURES" }));
    Ok(r)
}
