use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use dialgebra::action::{check_action, functor_commutes, DialgebraAction};
use dialgebra::bracket::{
    check_bihom_leibniz, check_bihom_lie, check_bracket, check_lr_conditions, check_poisson, lb_functor,
    lie_from_associative, lr_bracket, plain_commutator_poisson, poisson_functor, BracketAlgebra,
};
use dialgebra::cohomology::{
    central_extension, cohomology_dims, equivalence_witness, is_cocycle, BiHomModule, CochainPair,
};
use dialgebra::corpus::{corpus_entry, corpus_list, corpus_verify, Profile};
use dialgebra::derivation::{derivation_space, is_derivation};
use dialgebra::format::{
    parse_action, parse_bracket, parse_cochains, parse_dialgebra, parse_module, parse_operator, to_field,
    write_bracket, write_dialgebra, write_operator,
};
use dialgebra::operators::{
    averaging_report, averaging_twist, centroid_report, centroid_twist_pair, find_averaging, find_centroid,
    find_nijenhuis, find_rota_baxter, nijenhuis_report, nijenhuis_twist, rota_baxter_report, rota_baxter_twist,
    yau_twist, LinearOperator,
};
use dialgebra::scalar::{parse_rational, Gf2, Gf3, Scalar, Q};
use dialgebra::{check_axioms, check_morphism, check_multiplicative, is_regular, CheckReport, Dialgebra, Error, Matrix};
use serde_json::{json, Value};

use crate::{BracketKindArg, Cli, Command, CohomologyArgs, CorpusCommand, Field, OperatorArgs, OperatorKind, TwistArgs, TwistKind};

pub struct Outcome {
    pub command: &'static str,
    pub pass: bool,
    pub json: Value,
    pub text: String,
}

pub enum Failure {
    /// Bad input or usage: exit 2.
    Usage(String),
    /// A construction or precondition was refused by a check: exit 1.
    Violation(Outcome),
}

type Res<T> = std::result::Result<T, Failure>;

fn is_violation(e: &Error) -> bool {
    !matches!(
        e,
        Error::Parse { .. }
            | Error::InvalidArgument(_)
            | Error::DimensionMismatch(_)
            | Error::UnknownEntry(_)
            | Error::MissingParameter(_)
            | Error::ProductsDiffer
    )
}

fn lib(command: &'static str) -> impl Fn(Error) -> Failure {
    move |e| {
        if is_violation(&e) {
            Failure::Violation(Outcome {
                command,
                pass: false,
                json: json!({ "error": e.to_string() }),
                text: format!("{command}: FAIL\n  {e}\n"),
            })
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

fn read(path: &Path) -> Res<String> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn parsed<T>(path: &Path, f: impl Fn(&str) -> dialgebra::Result<T>) -> Res<T> {
    f(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn no_image() -> Failure {
    Failure::Usage("a coefficient has no image in the chosen field".into())
}

fn algebra<S: Scalar>(path: &Path) -> Res<Dialgebra<S>> {
    let d = parsed(path, parse_dialgebra)?;
    to_field(&d).map_err(|_| no_image())
}

fn operator<S: Scalar>(path: &Path) -> Res<LinearOperator<S>> {
    let op = parsed(path, parse_operator)?;
    let m = op.matrix.try_map(S::from_rational).ok_or_else(no_image)?;
    Ok(LinearOperator::new(op.label, m))
}

fn module<S: Scalar>(path: &Path) -> Res<BiHomModule<S>> {
    let m = parsed(path, parse_module)?;
    let a = m.alpha_m().try_map(S::from_rational).ok_or_else(no_image)?;
    let b = m.beta_m().try_map(S::from_rational).ok_or_else(no_image)?;
    BiHomModule::new(a, b).map_err(|e| Failure::Usage(e.to_string()))
}

fn cochains<S: Scalar>(path: &Path) -> Res<CochainPair<S>> {
    let t = parsed(path, parse_cochains)?;
    let t1 = t.theta1.try_map(S::from_rational).ok_or_else(no_image)?;
    let t2 = t.theta2.try_map(S::from_rational).ok_or_else(no_image)?;
    CochainPair::new(t1, t2).map_err(|e| Failure::Usage(e.to_string()))
}

fn bracket_file<S: Scalar>(path: &Path) -> Res<BracketAlgebra<S>> {
    parsed(path, parse_bracket)?.convert(S::from_rational).ok_or_else(no_image)
}

fn action<S: Scalar>(path: &Path) -> Res<DialgebraAction<S>> {
    let a = parsed(path, parse_action)?;
    let t = |x: &dialgebra::Tensor3<Q>| x.try_map(S::from_rational).ok_or_else(no_image);
    DialgebraAction::new_unchecked(
        to_field(a.acted_on()).map_err(|_| no_image())?,
        to_field(a.acting()).map_err(|_| no_image())?,
        t(a.dl_left())?,
        t(a.ld_left())?,
        t(a.dl_right())?,
        t(a.ld_right())?,
    )
    .map_err(|e| Failure::Usage(e.to_string()))
}

fn from_report<S: Scalar>(command: &'static str, rep: &CheckReport<S>) -> Outcome {
    Outcome {
        command,
        pass: rep.passed(),
        json: json!({ "report": rep.to_json() }),
        text: rep.to_text(),
    }
}

pub fn run(cli: &Cli) -> Res<Outcome> {
    if let Command::Corpus { action } = &cli.command {
        return corpus(action);
    }
    match cli.field {
        Field::Q => run_in::<Q>(&cli.command),
        Field::Gf2 => run_in::<Gf2>(&cli.command),
        Field::Gf3 => run_in::<Gf3>(&cli.command),
    }
}

fn run_in<S: Scalar>(command: &Command) -> Res<Outcome> {
    match command {
        Command::Check { algebra: path } => {
            let d = algebra::<S>(path)?;
            let rep = check_axioms(&d);
            let mult = check_multiplicative(&d);
            let regular = is_regular(&d);
            let mut text = rep.to_text();
            text.push_str(&format!("multiplicative: {}\nregular: {regular}\n", mult.passed()));
            Ok(Outcome {
                command: "check",
                pass: rep.passed(),
                json: json!({ "report": rep.to_json(), "multiplicative": mult.passed(), "regular": regular }),
                text,
            })
        }
        Command::Morphism { map, source, target } => {
            let f = operator::<S>(map)?;
            let (a, b) = (algebra::<S>(source)?, algebra::<S>(target)?);
            let rep = check_morphism(&f.matrix, &a, &b).map_err(lib("morphism"))?;
            Ok(from_report("morphism", &rep))
        }
        Command::Twist(args) => twist::<S>(args),
        Command::Operator(args) => operator_cmd::<S>(args),
        Command::Bracket(args) => {
            let (b, extra) = match (&args.bracket, &args.algebra) {
                (Some(path), _) => (bracket_file::<S>(path)?, None),
                (None, Some(path)) => {
                    let d = algebra::<S>(path)?;
                    match args.kind {
                        BracketKindArg::Lb => (lb_functor(&d).map_err(lib("bracket"))?, None),
                        BracketKindArg::Lie => (lie_from_associative(&d).map_err(lib("bracket"))?, None),
                        BracketKindArg::Lr => {
                            let cond = check_lr_conditions(&d);
                            (lr_bracket(&d).map_err(lib("bracket"))?, Some(cond))
                        }
                    }
                }
                (None, None) => return Err(Failure::Usage("--algebra or --bracket is required".into())),
            };
            let rep = match (&args.bracket, args.kind) {
                (Some(_), _) => check_bracket(&b),
                (None, BracketKindArg::Lb) => check_bihom_leibniz(&b),
                (None, _) => check_bihom_lie(&b),
            };
            let mut text = rep.to_text();
            let mut json = json!({ "report": rep.to_json(), "bracket": write_bracket(&b) });
            if let Some(c) = extra {
                text.push_str(&c.to_text());
                json["conditions"] = c.to_json();
            }
            text.push_str(&write_bracket(&b));
            Ok(Outcome { command: "bracket", pass: rep.passed(), json, text })
        }
        Command::Poisson { algebra: path, plain } => {
            let d = algebra::<S>(path)?;
            let p = if *plain { plain_commutator_poisson(&d) } else { poisson_functor(&d) }.map_err(lib("poisson"))?;
            let rep = check_poisson(&p);
            let mut out = from_report("poisson", &rep);
            out.json["bracket"] = json!(write_bracket(p.bracket()));
            Ok(out)
        }
        Command::Action { action: path } => {
            let a = action::<S>(path)?;
            let rep = check_action(&a);
            let both_regular = is_regular(a.acted_on()) && is_regular(a.acting());
            let commutes = if rep.passed() && both_regular {
                Some(functor_commutes(&a).map_err(lib("action"))?)
            } else {
                None
            };
            let mut out = from_report("action", &rep);
            out.pass = rep.passed() && commutes != Some(false);
            out.json["functor_commutes"] = json!(commutes);
            if let Some(c) = commutes {
                out.text.push_str(&format!("functor commutes: {c}\n"));
            }
            Ok(out)
        }
        Command::Cohomology(args) => cohomology::<S>(args),
        Command::Derive { algebra: path, k, l, op } => {
            let d = algebra::<S>(path)?;
            if let Some(op) = op {
                let t = operator::<S>(op)?;
                let yes = is_derivation(&t.matrix, *k, *l, &d).map_err(lib("derive"))?;
                return Ok(Outcome {
                    command: "derive",
                    pass: yes,
                    json: json!({ "k": k, "l": l, "is_derivation": yes }),
                    text: format!("derivation at ({k}, {l}): {yes}\n"),
                });
            }
            let sp = derivation_space(&d, *k, *l).map_err(lib("derive"))?;
            let basis: Vec<String> = sp
                .basis
                .iter()
                .enumerate()
                .map(|(i, m)| write_operator(&LinearOperator::new(format!("T{}", i + 1), m.clone())))
                .collect();
            let mut text = format!("dim {}\n", sp.dim());
            for b in &basis {
                text.push('\n');
                text.push_str(b);
            }
            Ok(Outcome {
                command: "derive",
                pass: true,
                json: json!({ "k": k, "l": l, "dim": sp.dim(), "basis": basis }),
                text,
            })
        }
        Command::Corpus { .. } => unreachable!("handled before field dispatch"),
    }
}

fn second<S: Scalar>(args: &TwistArgs) -> Res<LinearOperator<S>> {
    match &args.op2 {
        Some(p) => operator(p),
        None => Err(Failure::Usage("--op2 is required for this twist".into())),
    }
}

fn twist<S: Scalar>(args: &TwistArgs) -> Res<Outcome> {
    let d = algebra::<S>(&args.algebra)?;
    let op = operator::<S>(&args.op)?.matrix;
    let e = lib("twist");
    let out = match args.kind {
        TwistKind::Yau => yau_twist(&d, &op, &second::<S>(args)?.matrix),
        TwistKind::RotaBaxter => rota_baxter_twist(&op, &d),
        TwistKind::Nijenhuis => nijenhuis_twist(&op, &d),
        TwistKind::Averaging => averaging_twist(&op, args.k, args.l, &d),
        TwistKind::Centroid => centroid_twist_pair(&d, &op, &second::<S>(args)?.matrix),
    }
    .map_err(e)?;
    let text = write_dialgebra(&out);
    if let Some(path) = &args.output {
        fs::write(path, &text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    let rep = check_axioms(&out);
    let mut o = from_report("twist", &rep);
    o.json["algebra"] = json!(text);
    o.text.push_str(&text);
    Ok(o)
}

fn operator_cmd<S: Scalar>(args: &OperatorArgs) -> Res<Outcome> {
    let d = algebra::<S>(&args.algebra)?;
    let e = lib("operator");
    if args.search {
        if S::elements().is_none() {
            return Err(Failure::Usage("--search needs --field gf2 or gf3".into()));
        }
        let found: Vec<Matrix<S>> = match args.kind {
            OperatorKind::RotaBaxter => find_rota_baxter(&d),
            OperatorKind::Nijenhuis => find_nijenhuis(&d),
            OperatorKind::Averaging => find_averaging(&d, args.k, args.l),
            OperatorKind::Centroid => find_centroid(&d, args.k, args.l),
        }
        .map_err(|err| Failure::Usage(err.to_string()))?;
        let ops: Vec<String> = found
            .iter()
            .enumerate()
            .map(|(i, m)| write_operator(&LinearOperator::new(format!("op{}", i + 1), m.clone())))
            .collect();
        let mut text = format!("found {}\n", ops.len());
        for o in &ops {
            text.push('\n');
            text.push_str(o);
        }
        return Ok(Outcome {
            command: "operator",
            pass: true,
            json: json!({ "count": ops.len(), "operators": ops }),
            text,
        });
    }
    let path = args.op.as_ref().ok_or_else(|| Failure::Usage("--op or --search is required".into()))?;
    let op = operator::<S>(path)?.matrix;
    let rep = match args.kind {
        OperatorKind::RotaBaxter => rota_baxter_report(&op, &d),
        OperatorKind::Nijenhuis => nijenhuis_report(&op, &d),
        OperatorKind::Averaging => averaging_report(&op, args.k, args.l, &d),
        OperatorKind::Centroid => centroid_report(&op, args.k, args.l, &d),
    }
    .map_err(e)?;
    Ok(from_report("operator", &rep))
}

fn cohomology<S: Scalar>(args: &CohomologyArgs) -> Res<Outcome> {
    let d = algebra::<S>(&args.algebra)?;
    let m = match &args.module {
        Some(p) => module::<S>(p)?,
        None => BiHomModule::trivial(args.trivial),
    };
    let (z, b, h) = cohomology_dims(&d, &m);
    let mut json = json!({ "z2": z, "b2": b, "h2": h });
    let mut text = format!("dim Z2 = {z}\ndim B2 = {b}\ndim H2 = {h}\n");
    let mut pass = true;
    if let Some(p) = &args.cochains {
        let t = cochains::<S>(p)?;
        let e = lib("cohomology");
        let rep = is_cocycle(&t, &d, &m).map_err(&e)?;
        let ext = check_axioms(&central_extension(&d, &m, &t).map_err(&e)?);
        pass &= rep.passed();
        json["cocycle"] = rep.to_json();
        json["extension"] = ext.to_json();
        text.push_str(&rep.to_text());
        text.push_str(&ext.to_text());
        if let Some(p2) = &args.against {
            let t2 = cochains::<S>(p2)?;
            let w = equivalence_witness(&t, &t2, &d, &m).map_err(&e)?;
            pass &= w.is_some();
            let nu = w.map(|nu| write_operator(&LinearOperator::new("nu", nu)));
            text.push_str(&format!("equivalent: {}\n", nu.is_some()));
            if let Some(n) = &nu {
                text.push_str(n);
            }
            json["equivalent"] = json!(nu.is_some());
            json["witness"] = json!(nu);
        }
    }
    Ok(Outcome { command: "cohomology", pass, json, text })
}

fn corpus(cmd: &CorpusCommand) -> Res<Outcome> {
    let usage = |e: Error| Failure::Usage(e.to_string());
    match cmd {
        CorpusCommand::List => {
            let rows: Vec<Value> = corpus_list()
                .iter()
                .map(|e| json!({ "id": e.id, "dim": e.dim, "params": e.params }))
                .collect();
            let text = corpus_list()
                .iter()
                .map(|e| format!("{:<14} dim {}  params [{}]\n", e.id, e.dim, e.params.join(", ")))
                .collect();
            Ok(Outcome { command: "corpus list", pass: true, json: json!({ "entries": rows }), text })
        }
        CorpusCommand::Verify { profile } => {
            let p = Profile::parse(profile).map_err(usage)?;
            let report = corpus_verify(p).map_err(usage)?;
            let flagged: Vec<String> = report["table_discrepancies"]
                .as_array()
                .map(|a| a.iter().filter_map(|v| v.as_str().map(String::from)).collect())
                .unwrap_or_default();
            let mut text = String::new();
            for e in report["entries"].as_array().into_iter().flatten() {
                let coh = &e["cohomology_trivial_1"];
                text.push_str(&format!(
                    "{:<14} axioms {}  multiplicative {}  regular {}  Der00 {}  H2 ({}, {}, {})\n",
                    e["id"].as_str().unwrap_or_default(),
                    if e["table_discrepancy"] == json!(true) { "FAIL" } else { "pass" },
                    e["multiplicative"]["pass"],
                    e["regular"],
                    e["derivations_00"],
                    coh["z2"],
                    coh["b2"],
                    coh["h2"],
                ));
            }
            text.push_str(&format!("dim2 alpha = beta: {}\n", report["dim2_alpha_equals_beta"]));
            Ok(Outcome { command: "corpus verify", pass: flagged.is_empty(), json: report, text })
        }
        CorpusCommand::Export { id, profile, params } => {
            let entry = corpus_entry(id).map_err(usage)?;
            let p = Profile::parse(profile).map_err(usage)?;
            let mut values: BTreeMap<String, Q> = p.values(entry);
            for kv in params {
                let (k, v) = kv
                    .split_once('=')
                    .ok_or_else(|| Failure::Usage(format!("--param expects name=value, got `{kv}`")))?;
                let v = parse_rational(v).ok_or_else(|| Failure::Usage(format!("bad scalar `{v}`")))?;
                values.insert(k.to_string(), v);
            }
            let d = entry.build(&values).map_err(usage)?;
            let text = write_dialgebra(&d);
            Ok(Outcome { command: "corpus export", pass: true, json: json!({ "algebra": text }), text })
        }
    }
}
