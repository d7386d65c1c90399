//! Command-line front end. [`dispatch`] never prints or exits; the binary
//! does both with the returned [`Outcome`].

use std::collections::BTreeSet;
use std::ffi::OsString;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use crate::b3::ThurstonClass3;
use crate::b3::{classify_3, conjugate_3, invariants_3, is_trivial_3, min_entropy_search, theta};
use crate::braid::BraidWord;
use crate::cabling::{extract_component, reducible_invariants, ComponentTree};
use crate::error::{Error, Result};
use crate::invariants::{ExtReal, InvariantPair};
use crate::monodromy::{
    bundle_classify, gorin_lin_check, penner_bound, penner_bound_gs, project_bundle,
    zero_entropy_commutator_check, BundleClass, CommutatorVerdict, GorinLinVerdict,
};
use crate::poly::{winding_index, PolyLoop};
use crate::sl2::SL2Matrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "braidmod",
    version,
    about = "Braid types, entropy and conformal module"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Out {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Thurston type of a 3-braid
    Classify {
        #[arg(allow_hyphen_values = true)]
        braid: String,
        #[command(flatten)]
        out: Out,
    },
    /// Entropy of a braid on at most 3 strands
    Entropy {
        #[arg(allow_hyphen_values = true)]
        braid: String,
        #[command(flatten)]
        out: Out,
    },
    /// Conformal module of a braid on at most 3 strands
    Module {
        #[arg(allow_hyphen_values = true)]
        braid: String,
        #[command(flatten)]
        out: Out,
    },
    /// Image of a 3-braid in SL(2,Z)
    Theta {
        #[arg(allow_hyphen_values = true)]
        braid: String,
        #[command(flatten)]
        out: Out,
    },
    /// Whether two 3-braids are conjugate
    Conjugate {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
        #[command(flatten)]
        out: Out,
    },
    /// Whether a 3-braid is the identity
    Trivial {
        #[arg(allow_hyphen_values = true)]
        braid: String,
        #[command(flatten)]
        out: Out,
    },
    /// Linking number of strands i and j of a pure braid
    Link {
        #[arg(allow_hyphen_values = true)]
        braid: String,
        i: usize,
        j: usize,
        #[command(flatten)]
        out: Out,
    },
    /// Keep only the listed strands
    Delete {
        #[arg(allow_hyphen_values = true)]
        braid: String,
        /// Comma-separated strand positions
        #[arg(long, value_delimiter = ',', required = true)]
        keep: Vec<usize>,
        #[command(flatten)]
        out: Out,
    },
    /// Synthesize the braid of a component tree (JSON text or file)
    Cable {
        tree: String,
        #[command(flatten)]
        out: Out,
    },
    /// Braid traced by a block of strands under the k-th power
    Extract {
        #[arg(allow_hyphen_values = true)]
        braid: String,
        #[arg(long, value_delimiter = ',', required = true)]
        orbit: Vec<usize>,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        k: i64,
        #[command(flatten)]
        out: Out,
    },
    /// Entropy and module of a component tree (JSON text or file)
    Reducible {
        tree: String,
        #[command(flatten)]
        out: Out,
    },
    /// A 3-braid whose image in SL(2,Z) is the given matrix
    Project {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
        #[command(flatten)]
        out: Out,
    },
    /// Type of the torus bundle with the given monodromy
    Bundle {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
        #[command(flatten)]
        out: Out,
    },
    /// Winding of the discriminant along a loop (JSON text or file), or along
    /// the model loop z^n - e^(2 pi i k t)
    DiscIndex {
        #[arg(required_unless_present = "degree")]
        path: Option<String>,
        #[arg(long, requires = "k")]
        degree: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
        #[arg(long, default_value_t = 1024)]
        samples: usize,
        #[command(flatten)]
        out: Out,
    },
    /// Reducibility test for prime degree on an annulus
    CheckGl {
        #[arg(long)]
        n: u64,
        #[arg(long = "module")]
        annulus_module: f64,
        #[arg(long, allow_hyphen_values = true)]
        index: i64,
        #[command(flatten)]
        out: Out,
    },
    /// Commutator triviality test for zero-entropy 3-braids
    CheckCor81 {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
        #[command(flatten)]
        out: Out,
    },
    /// Lower bound on positive entropy
    Penner {
        #[arg(long, conflicts_with_all = ["genus", "punctures"], required_unless_present = "genus")]
        n: Option<usize>,
        #[arg(long, requires = "punctures")]
        genus: Option<u64>,
        #[arg(long)]
        punctures: Option<u64>,
        #[command(flatten)]
        out: Out,
    },
    /// Shortlex-least 3-braid of minimal positive entropy
    SearchMin {
        #[arg(long, default_value_t = 6)]
        max_len: usize,
        #[command(flatten)]
        out: Out,
    },
    /// Run the built-in oracle checks
    Selftest {
        #[command(flatten)]
        out: Out,
    },
}

/// Parse `argv` (program name first) and run one subcommand.
pub fn dispatch<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match run(cli.command) {
        Ok(stdout) => Outcome::ok(stdout),
        Err(e) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {}: {}\n", e.kind(), one_line(&e.to_string())),
        },
    }
}

fn one_line(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn braid(text: &str) -> Result<BraidWord> {
    text.parse()
}

/// `[[a, b], [c, d]]`, `a,b,c,d` or `a b c d`.
pub fn parse_matrix(text: &str) -> Result<SL2Matrix> {
    let cleaned: String = text
        .chars()
        .map(|c| {
            if matches!(c, '[' | ']' | ',' | ';') {
                ' '
            } else {
                c
            }
        })
        .collect();
    let entries = cleaned
        .split_whitespace()
        .map(|t| {
            t.parse::<BigInt>()
                .map_err(|_| Error::MalformedToken(t.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    let [a, b, c, d]: [BigInt; 4] = entries.try_into().map_err(|v: Vec<BigInt>| {
        Error::InvalidInput(format!("expected 4 entries, got {}", v.len()))
    })?;
    SL2Matrix::new(a, b, c, d)
}

/// Inline JSON when the argument starts with `{`, otherwise a file path.
fn json_source(arg: &str) -> Result<String> {
    if arg.trim_start().starts_with('{') {
        Ok(arg.to_string())
    } else {
        std::fs::read_to_string(arg).map_err(|e| Error::InvalidInput(format!("{arg}: {e}")))
    }
}

/// JSON number with 17 significant digits.
pub fn float17(x: f64) -> Value {
    if x == 0.0 || !x.is_finite() {
        return json!(x);
    }
    let exp = x.abs().log10().floor() as i32;
    let decimals = (16 - exp).max(0) as usize;
    let text = format!("{x:.decimals$}");
    Value::Number(text.parse::<Number>().expect("decimal literal"))
}

fn ext_json(x: &ExtReal) -> Value {
    if x.is_infinite() {
        json!("inf")
    } else if x.is_zero() {
        json!("0")
    } else {
        float17(x.value())
    }
}

fn big_json(x: &BigInt) -> Value {
    Value::Number(x.to_string().parse::<Number>().expect("integer literal"))
}

fn pair_text(p: &InvariantPair) -> String {
    format!("entropy={} module={}", p.entropy, p.module)
}

fn pair_json(map: &mut Map<String, Value>, p: &InvariantPair) {
    map.insert("entropy".into(), ext_json(&p.entropy));
    map.insert("module".into(), ext_json(&p.module));
}

fn render(json: bool, text: String, value: Value) -> String {
    if json {
        format!("{value}\n")
    } else {
        format!("{text}\n")
    }
}

fn class_output(c: &ThurstonClass3, as_json: bool) -> String {
    let inv = c.invariants();
    let mut map = Map::new();
    map.insert("class".into(), json!(c.name()));
    let head = match c {
        ThurstonClass3::Periodic {
            circular,
            power,
            order,
        } => {
            map.insert("circular".into(), json!(circular));
            map.insert("power".into(), json!(power));
            map.insert("order".into(), json!(order));
            format!("periodic circular={circular} power={power} order={order}")
        }
        ThurstonClass3::ReducibleParabolic { k, l } => {
            map.insert("k".into(), json!(k));
            map.insert("l".into(), json!(l));
            format!("reducible_parabolic k={k} l={l}")
        }
        ThurstonClass3::PseudoAnosov {
            trace, dilatation, ..
        } => {
            map.insert("trace".into(), big_json(trace));
            map.insert("dilatation".into(), float17(*dilatation));
            format!("pseudo_anosov trace={trace}")
        }
    };
    pair_json(&mut map, &inv);
    render(
        as_json,
        format!("{head} {}", pair_text(&inv)),
        Value::Object(map),
    )
}

fn matrix_json(m: &SL2Matrix) -> Value {
    let [a, b, c, d] = m.entries();
    json!([[big_json(a), big_json(b)], [big_json(c), big_json(d)]])
}

fn run(command: Command) -> Result<String> {
    Ok(match command {
        Command::Classify { braid: b, out } => class_output(&classify_3(&braid(&b)?)?, out.json),
        Command::Entropy { braid: b, out } => {
            let p = invariants_3(&braid(&b)?)?;
            render(
                out.json,
                p.entropy.to_string(),
                json!({ "entropy": ext_json(&p.entropy) }),
            )
        }
        Command::Module { braid: b, out } => {
            let p = invariants_3(&braid(&b)?)?;
            render(
                out.json,
                p.module.to_string(),
                json!({ "module": ext_json(&p.module) }),
            )
        }
        Command::Theta { braid: b, out } => {
            let m = theta(&braid(&b)?)?;
            render(
                out.json,
                m.to_string(),
                json!({ "matrix": matrix_json(&m) }),
            )
        }
        Command::Conjugate { first, second, out } => {
            let r = conjugate_3(&braid(&first)?, &braid(&second)?)?;
            render(out.json, r.to_string(), json!({ "conjugate": r }))
        }
        Command::Trivial { braid: b, out } => {
            let r = is_trivial_3(&braid(&b)?)?;
            render(out.json, r.to_string(), json!({ "trivial": r }))
        }
        Command::Link {
            braid: b,
            i,
            j,
            out,
        } => {
            let lk = braid(&b)?.linking_number(i, j)?;
            render(out.json, lk.to_string(), json!({ "linking": lk }))
        }
        Command::Delete {
            braid: b,
            keep,
            out,
        } => {
            let keep: BTreeSet<usize> = keep.into_iter().collect();
            let r = braid(&b)?.delete_strands(&keep)?;
            render(out.json, r.to_string(), json!({ "braid": r.to_string() }))
        }
        Command::Cable { tree, out } => {
            let tree = ComponentTree::from_json(&json_source(&tree)?)?;
            let b = tree.synthesize();
            render(out.json, b.to_string(), json!({ "braid": b.to_string() }))
        }
        Command::Extract {
            braid: b,
            orbit,
            k,
            out,
        } => {
            let block: BTreeSet<usize> = orbit.into_iter().collect();
            let r = extract_component(&braid(&b)?, &block, k)?;
            render(out.json, r.to_string(), json!({ "braid": r.to_string() }))
        }
        Command::Reducible { tree, out } => {
            let tree = ComponentTree::from_json(&json_source(&tree)?)?;
            let p = reducible_invariants(&tree)?;
            let mut map = Map::new();
            pair_json(&mut map, &p);
            render(out.json, pair_text(&p), Value::Object(map))
        }
        Command::Project { matrix, out } => {
            let b = project_bundle(&parse_matrix(&matrix)?);
            render(out.json, b.to_string(), json!({ "braid": b.to_string() }))
        }
        Command::Bundle { matrix, out } => {
            let class = bundle_classify(&parse_matrix(&matrix)?);
            let inv = class.invariants();
            let mut map = Map::new();
            map.insert("class".into(), json!(class.name()));
            let head = match &class {
                BundleClass::Periodic { order } => {
                    map.insert("order".into(), json!(order));
                    format!("periodic order={order}")
                }
                BundleClass::ParabolicTwist { sign, k } => {
                    map.insert("sign".into(), json!(sign));
                    map.insert("k".into(), big_json(k));
                    format!("parabolic_twist sign={sign} k={k}")
                }
                BundleClass::Anosov { trace, .. } => {
                    map.insert("trace".into(), big_json(trace));
                    format!("anosov trace={trace}")
                }
            };
            pair_json(&mut map, &inv);
            render(
                out.json,
                format!("{head} {}", pair_text(&inv)),
                Value::Object(map),
            )
        }
        Command::DiscIndex {
            path,
            degree,
            k,
            samples,
            out,
        } => {
            let lp = match (path, degree, k) {
                (Some(p), _, _) => PolyLoop::from_json(&json_source(&p)?)?,
                (None, Some(n), Some(k)) => PolyLoop::model(n, k, samples)?,
                _ => {
                    return Err(Error::InvalidInput(
                        "need a loop or --degree and --k".into(),
                    ))
                }
            };
            let w = winding_index(&lp)?;
            render(out.json, w.to_string(), json!({ "index": w }))
        }
        Command::CheckGl {
            n,
            annulus_module,
            index,
            out,
        } => {
            let v = match gorin_lin_check(n, annulus_module, index)? {
                GorinLinVerdict::MustBeReducible => "must_be_reducible",
                GorinLinVerdict::Inconclusive => "inconclusive",
            };
            render(out.json, v.to_string(), json!({ "verdict": v }))
        }
        Command::CheckCor81 { first, second, out } => {
            let (text, value) =
                match zero_entropy_commutator_check(&braid(&first)?, &braid(&second)?)? {
                    CommutatorVerdict::CommutatorTrivial { via } => (
                        format!("commutator_trivial via={via}"),
                        json!({ "verdict": "commutator_trivial", "via": via }),
                    ),
                    CommutatorVerdict::HypothesisFails { which } => (
                        format!("hypothesis_fails which={which}"),
                        json!({ "verdict": "hypothesis_fails", "which": which }),
                    ),
                    CommutatorVerdict::Contradiction { witness } => (
                        format!("contradiction witness={witness}"),
                        json!({ "verdict": "contradiction", "witness": witness }),
                    ),
                };
            render(out.json, text, value)
        }
        Command::Penner {
            n,
            genus,
            punctures,
            out,
        } => {
            let bound = match (n, genus, punctures) {
                (Some(n), _, _) => penner_bound(n)?,
                (None, Some(g), Some(s)) => penner_bound_gs(g, s)?,
                _ => {
                    return Err(Error::InvalidInput(
                        "need --n or --genus and --punctures".into(),
                    ))
                }
            };
            render(
                out.json,
                bound.to_string(),
                json!({ "bound": float17(bound) }),
            )
        }
        Command::SearchMin { max_len, out } => match min_entropy_search(max_len)? {
            Some((b, h)) => render(
                out.json,
                format!("{b}  entropy={h}"),
                json!({ "braid": b.to_string(), "entropy": ext_json(&h) }),
            ),
            None => render(
                out.json,
                "none".into(),
                json!({ "braid": null, "entropy": "0" }),
            ),
        },
        Command::Selftest { out } => {
            let results = selftest();
            let failed: Vec<&str> = results.iter().filter(|r| !r.1).map(|r| r.0).collect();
            let passed = results.len() - failed.len();
            let mut text = String::new();
            for (name, ok) in &results {
                text.push_str(&format!("{} {name}\n", if *ok { "PASS" } else { "FAIL" }));
            }
            text.push_str(&format!("{passed} passed, {} failed", failed.len()));
            let s = render(
                out.json,
                text,
                json!({ "passed": passed, "failed": failed.len(), "failures": failed }),
            );
            if !failed.is_empty() {
                return Err(Error::InternalInconsistency(format!(
                    "selftest failures: {}",
                    failed.join(", ")
                )));
            }
            s
        }
    })
}

/// Checks against hand-computed answers.
pub fn selftest() -> Vec<(&'static str, bool)> {
    fn check(f: impl FnOnce() -> Result<bool>) -> bool {
        f().unwrap_or(false)
    }
    let golden = (3f64 + 5f64.sqrt()) / 2.0;
    vec![
        (
            "golden entropy of 1 -2",
            check(|| {
                let p = invariants_3(&braid("B3: 1 -2")?)?;
                Ok((p.entropy.value() - golden.ln()).abs() < 1e-12)
            }),
        ),
        (
            "module is pi over twice the entropy",
            check(|| {
                let p = invariants_3(&braid("B3: 1 -2 1 -2 1")?)?;
                Ok(
                    (p.entropy.value() * p.module.value() - std::f64::consts::FRAC_PI_2).abs()
                        < 1e-12,
                )
            }),
        ),
        (
            "square doubles entropy",
            check(|| {
                let p = invariants_3(&braid("B3: 1 -2 1 -2")?)?;
                Ok((p.entropy.value() - 2.0 * golden.ln()).abs() < 1e-12)
            }),
        ),
        (
            "braid relation",
            check(|| is_trivial_3(&braid("B3: 1 2 1 -2 -1 -2")?)),
        ),
        (
            "full twist is central in theta",
            check(|| Ok(theta(&braid("B3: 1 2 1 1 2 1")?)? == SL2Matrix::minus_identity())),
        ),
        (
            "sigma1 cubed is parabolic",
            check(|| {
                Ok(classify_3(&braid("B3: 1 1 1")?)?
                    == ThurstonClass3::ReducibleParabolic { k: 3, l: 0 })
            }),
        ),
        (
            "commutator boundary",
            check(|| {
                let c = BraidWord::commutator(&braid("B3: -2 1")?, &braid("B3: 2 -1")?)?;
                Ok(theta(&c)? == SL2Matrix::new(-1, 0, -6, -1)?)
            }),
        ),
        (
            "linking of a full twist",
            check(|| Ok(braid("B3: 1 2 1 1 2 1")?.linking_number(1, 3)? == 1)),
        ),
        (
            "model loop winding",
            check(|| Ok(winding_index(&PolyLoop::model(3, 2, 256)?)? == 4)),
        ),
        (
            "projection inverts theta",
            check(|| {
                let m = SL2Matrix::new(5, 2, 7, 3)?;
                Ok(theta(&project_bundle(&m))? == m)
            }),
        ),
        (
            "minimal entropy word",
            check(|| {
                Ok(min_entropy_search(4)?.is_some_and(|(b, h)| {
                    b == BraidWord::from_raw(3, vec![1, -2])
                        && (h.value() - golden.ln()).abs() < 1e-12
                }))
            }),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Outcome {
        dispatch(std::iter::once("braidmod").chain(args.iter().copied()))
    }

    #[test]
    fn classify_text() {
        let o = run(&["classify", "B3: 1 -2"]);
        assert_eq!(o.code, 0);
        assert_eq!(
            o.stdout,
            "pseudo_anosov trace=3 entropy=0.9624236501192069 module=1.6321256513182483\n"
        );
        let o = run(&["classify", "B3: 1 1 1"]);
        assert_eq!(
            o.stdout,
            "reducible_parabolic k=3 l=0 entropy=0 module=inf\n"
        );
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(&["frobnicate"]).code, 2);
        assert_eq!(run(&["classify"]).code, 2);
        assert_eq!(run(&["--help"]).code, 0);
        let o = run(&["classify", "B3: 1 x"]);
        assert_eq!(o.code, 1);
        assert!(o.stderr.starts_with("error: malformed_token:"));
        assert_eq!(o.stderr.lines().count(), 1);
    }

    #[test]
    fn hyphen_values() {
        assert_eq!(run(&["theta", "-2"]).stdout, "[[1, 0], [1, 1]]\n");
        assert_eq!(run(&["project", "[[2,1],[1,1]]"]).stdout, "B3: 1 -2\n");
    }

    #[test]
    fn json_numbers() {
        let o = run(&["classify", "--json", "B3: 1 -2"]);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["class"], "pseudo_anosov");
        assert_eq!(v["trace"], 3);
        assert_eq!(v["entropy"].to_string(), "0.96242365011920694");
        assert_eq!(float17(0.5).to_string(), "0.50000000000000000");
    }

    #[test]
    fn matrices() {
        assert_eq!(parse_matrix("1 1 0 1").unwrap(), SL2Matrix::r());
        assert!(matches!(
            parse_matrix("1 2 3 4"),
            Err(Error::NotUnimodular(_))
        ));
        assert!(parse_matrix("1 2 3").is_err());
    }

    #[test]
    fn selftest_passes() {
        assert!(selftest().iter().all(|r| r.1));
    }
}
