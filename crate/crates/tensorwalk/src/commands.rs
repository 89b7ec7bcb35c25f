use std::io::Read;
use std::path::Path;

use num_bigint::BigInt;
use serde_json::{json, Value};
use tensorwalk_core::branching::{self, PolynomialMismatch};
use tensorwalk_core::combinat::{
    count_inversion_sequences, count_rect_tableaux, count_rect_tableaux_exhaustive, count_set_partitions,
    count_tableau_walks, quadrant_sum, quadrant_sum_exhaustive, InversionFilter, PartitionFilter, QuadrantVariant,
    TableauKind,
};
use tensorwalk_core::holonomic::{
    check_recurrence, diffop_apply, diffop_mul, guess_recurrence, ode_to_recurrence, operator_fixture,
    shift_right_divide, unroll, Fixture, RecurrenceCheck,
};
use tensorwalk_core::laurent::{ct_sequence, g2_spec, quadrant_spec, sl2_spec};
use tensorwalk_core::regress::{check_all, check_names, CheckOptions, Status};
use tensorwalk_core::registry::{self, Engine};
use tensorwalk_core::series::{asymptotic_estimate, closed_form_series, verify_closed_form, ClosedForm};
use tensorwalk_core::transforms::bt_power;
use tensorwalk_core::walks::{self, Axis};
use tensorwalk_core::{DiffOp, Guards, PRecurrence, PowerSeries, Sequence, WalkConfig};

use crate::args::{
    BranchCmd, BtArgs, CheckArgs, ClosedformCmd, Cli, Command, CtArgs, CtBuiltin, Kind, OdeCmd, OpSource, OracleCmd,
    RecCmd, RecSource, SeqArgs, SeqSource, Variant, WalkCmd, WalkSource,
};
use crate::config::{self, bigints, CtSpecJson, Num, OperatorJson, RecurrenceJson, WalkConfigJson};
use crate::output::{self, big_strings, Output, Table};
use crate::CliError;

fn usage<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

pub fn dispatch(cli: Cli, guards: &Guards, stdin: &mut dyn Read) -> Result<Output, CliError> {
    let config = cli.config.as_deref();
    match cli.command {
        Command::Seq(a) => seq(a, guards),
        Command::Walk(c) => walk(c, config),
        Command::Ct(a) => ct(a, config),
        Command::Bt(a) => bt(a, stdin),
        Command::Rec(c) => rec(c, config, guards, stdin),
        Command::Ode(c) => ode(c, config, guards, stdin),
        Command::Closedform(c) => closedform(c),
        Command::Asym(a) => Ok(asym(&a.samples)),
        Command::Oracle(c) => oracle(c, guards),
        Command::Branch(c) => branch(c),
        Command::Check(a) => check(a),
    }
}

fn seq(a: SeqArgs, guards: &Guards) -> Result<Output, CliError> {
    let Some(name) = a.name else {
        let mut table = Table::new(["name", "oeis", "engines", "description"]);
        let mut list = Vec::new();
        for s in &registry::SEQUENCES {
            let engines: Vec<&str> = s.engines.iter().map(|e| e.name()).collect();
            table.push([s.name, s.oeis.unwrap_or(""), &engines.join(" "), s.description]);
            list.push(json!({"name": s.name, "oeis": s.oeis, "engines": engines, "description": s.description}));
        }
        return Ok(Output::new(Value::from(list), table));
    };
    let engine: Engine = a.engine.parse()?;
    let s = registry::compute(&name, engine, a.terms, guards)?;
    Ok(output::sequence(s.terms()))
}

fn walk_config(source: &WalkSource, config: Option<&Path>) -> Result<WalkConfig, CliError> {
    match config {
        Some(path) => config::read_json::<WalkConfigJson>(path)?.build(),
        None => Ok(walks::builtin_config(&source.builtin, source.k)?),
    }
}

fn endpoint_rows(table: &mut Table, length: usize, counts: &std::collections::BTreeMap<[i64; 2], BigInt>) -> Value {
    let mut cells = Vec::new();
    for (p, c) in counts {
        table.push([length.to_string(), p[0].to_string(), p[1].to_string(), c.to_string()]);
        cells.push(json!([p[0], p[1], c.to_string()]));
    }
    Value::from(cells)
}

fn walk(c: WalkCmd, config: Option<&Path>) -> Result<Output, CliError> {
    Ok(match c {
        WalkCmd::Excursions { source, n } => output::sequence(walks::excursions(&walk_config(&source, config)?, n).terms()),
        WalkCmd::Axis { source, n, axis } => {
            let axis = Axis::from_index(axis).ok_or_else(|| CliError::Usage(format!("axis must be 0 or 1, got {axis}")))?;
            output::sequence(walks::axis_sum(&walk_config(&source, config)?, axis, n).terms())
        }
        WalkCmd::Endpoints { source, n } => {
            let mut table = Table::new(["length", "x", "y", "count"]);
            let tables = walks::count_endpoints(&walk_config(&source, config)?, n);
            let docs: Vec<Value> = tables
                .iter()
                .map(|t| json!({"length": t.length, "counts": endpoint_rows(&mut table, t.length, &t.counts)}))
                .collect();
            Output::new(Value::from(docs), table)
        }
        WalkCmd::Brute { source, n } => {
            let cfg = walk_config(&source, config)?;
            let words = (cfg.steps().len() as f64).powi(n as i32);
            if words > 1e8 {
                return usage(format!("{} step words of length {n} is too many to enumerate", cfg.steps().len()));
            }
            let mut table = Table::new(["length", "x", "y", "count"]);
            let counts = walks::brute_force_endpoints(&cfg, n);
            let cells = endpoint_rows(&mut table, n, &counts);
            Output::new(json!({"length": n, "counts": cells}), table)
        }
        WalkCmd::Show { source } => {
            let cfg = WalkConfigJson::from(&walk_config(&source, config)?);
            let mut table = Table::new(["dx", "dy", "multiplicity", "conditional"]);
            for s in &cfg.steps {
                table.push([
                    s.vector[0].to_string(),
                    s.vector[1].to_string(),
                    s.multiplicity.to_string(),
                    (!s.forbidden_when.is_empty()).to_string(),
                ]);
            }
            Output::new(serde_json::to_value(&cfg).map_err(|e| CliError::Usage(e.to_string()))?, table)
        }
    })
}

fn ct(a: CtArgs, config: Option<&Path>) -> Result<Output, CliError> {
    let spec = match config {
        Some(path) => config::read_json::<CtSpecJson>(path)?.build()?,
        None => match a.builtin {
            CtBuiltin::G2 => g2_spec(),
            CtBuiltin::Quadrant => quadrant_spec(a.k),
            CtBuiltin::Sl2 => sl2_spec(),
        },
    };
    if a.show {
        let doc = CtSpecJson::from(&spec);
        let mut table = Table::new(["poly", "exponent", "coeff"]);
        for (label, terms) in [("delta", &doc.delta), ("kernel", &doc.kernel)] {
            for (e, c) in terms {
                let e: Vec<String> = e.iter().map(ToString::to_string).collect();
                let Num::Str(c) = c else { unreachable!("spec coefficients serialize as strings") };
                table.push([label, &e.join(" "), c.as_str()]);
            }
        }
        return Ok(Output::new(serde_json::to_value(&doc).map_err(|e| CliError::Usage(e.to_string()))?, table));
    }
    Ok(output::sequence(ct_sequence(&spec, a.n).terms()))
}

fn read_array(path: Option<&Path>, stdin: &mut dyn Read) -> Result<Vec<BigInt>, CliError> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p).map_err(|e| CliError::Usage(format!("{}: {e}", p.display())))?,
        None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(CliError::Io)?;
            s
        }
    };
    let nums: Vec<Num> =
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("expected a JSON array of integers: {e}")))?;
    bigints(&nums)
}

fn bt(a: BtArgs, stdin: &mut dyn Read) -> Result<Output, CliError> {
    let input = Sequence::new(read_array(a.input.as_deref(), stdin)?);
    Ok(output::sequence(bt_power(&input, a.power).terms()))
}

fn sequence_data(data: &SeqSource, guards: &Guards, stdin: &mut dyn Read) -> Result<Vec<BigInt>, CliError> {
    match &data.seq {
        Some(name) => Ok(registry::compute(name, data.engine.parse()?, data.terms, guards)?.into_terms()),
        None => read_array(data.input.as_deref(), stdin),
    }
}

fn recurrence(source: &RecSource, config: Option<&Path>) -> Result<PRecurrence, CliError> {
    if let Some(path) = config {
        return config::read_json::<RecurrenceJson>(path)?.build();
    }
    let Some(name) = &source.name else {
        return usage("give --name or --config");
    };
    named_recurrence(name, source.k)
}

fn named_recurrence(name: &str, k: Option<i64>) -> Result<PRecurrence, CliError> {
    match operator_fixture(name, k)? {
        Fixture::Recurrence(r) => Ok(r),
        Fixture::Operator(_) => usage(format!("`{name}` is a differential operator, not a recurrence")),
    }
}

fn recurrence_output(rec: &PRecurrence) -> Output {
    let doc = RecurrenceJson::from(rec);
    let mut table = Table::new(["shift", "degree", "coeff"]);
    for (i, p) in rec.coeffs().iter().enumerate() {
        for (d, c) in p.coeffs().iter().enumerate() {
            table.push([i.to_string(), d.to_string(), c.to_string()]);
        }
    }
    Output::new(json!({"order": rec.order(), "coeffs": doc.coeffs, "text": rec.to_string()}), table)
}

fn rec(c: RecCmd, config: Option<&Path>, guards: &Guards, stdin: &mut dyn Read) -> Result<Output, CliError> {
    match c {
        RecCmd::Show { rec } => Ok(recurrence_output(&recurrence(&rec, config)?)),
        RecCmd::Unroll { rec, initial, n } => {
            let r = recurrence(&rec, config)?;
            let initial = bigints(&initial.into_iter().map(Num::Str).collect::<Vec<_>>())?;
            Ok(output::sequence(&unroll(&r, &initial, n)?))
        }
        RecCmd::Verify { rec, data } => {
            let r = recurrence(&rec, config)?;
            let a = sequence_data(&data, guards, stdin)?;
            let mut table = Table::new(["satisfied", "equations", "n", "residual"]);
            Ok(match check_recurrence(&r, &a)? {
                RecurrenceCheck::Satisfied { equations } => {
                    table.push(["true".to_string(), equations.to_string(), String::new(), String::new()]);
                    Output::new(json!({"satisfied": true, "equations": equations}), table)
                }
                RecurrenceCheck::Violated { n, residual } => {
                    table.push(["false".to_string(), String::new(), n.to_string(), residual.to_string()]);
                    Output::new(json!({"satisfied": false, "n": n, "residual": residual.to_string()}), table)
                        .with_status(false)
                }
            })
        }
        RecCmd::Guess { data, max_order, max_degree } => {
            let a = sequence_data(&data, guards, stdin)?;
            match guess_recurrence(&a, max_order, max_degree)? {
                Some(r) => Ok(recurrence_output(&r)),
                None => Ok(Output::new(Value::Null, Table::new(["shift", "degree", "coeff"]))),
            }
        }
        RecCmd::Divide { left, left_k, right, right_k } => {
            let r2 = named_recurrence(&left, left_k)?;
            let r1 = named_recurrence(&right, right_k)?;
            let q = shift_right_divide(&r2, &r1);
            let mut table = Table::new(["divisible", "quotient_order"]);
            let order = q.as_ref().map(|q| q.order());
            table.push([q.is_some().to_string(), order.map(|o| o.to_string()).unwrap_or_default()]);
            let coeffs = q.as_ref().map(|q| q.coeffs().iter().map(config::RationalFunctionJson::from).collect::<Vec<_>>());
            let doc = json!({"divisible": q.is_some(), "quotient_order": order, "quotient": coeffs});
            Ok(Output::new(doc, table))
        }
    }
}

fn operator(source: &OpSource, config: Option<&Path>) -> Result<DiffOp, CliError> {
    if let Some(path) = config {
        return config::read_json::<OperatorJson>(path)?.build();
    }
    let Some(name) = &source.name else {
        return usage("give --name or --config");
    };
    named_operator(name)
}

fn named_operator(name: &str) -> Result<DiffOp, CliError> {
    match operator_fixture(name, None)? {
        Fixture::Operator(op) => Ok(op),
        Fixture::Recurrence(_) => usage(format!("`{name}` is a recurrence, not a differential operator")),
    }
}

fn operator_output(op: &DiffOp) -> Output {
    let coeffs = config::operator_json(op);
    let mut table = Table::new(["derivative", "numer", "denom"]);
    for (i, c) in coeffs.iter().enumerate() {
        let join = |v: &[Num]| {
            v.iter()
                .map(|n| match n {
                    Num::Str(s) => s.clone(),
                    Num::Int(i) => i.to_string(),
                })
                .collect::<Vec<_>>()
                .join(" ")
        };
        table.push([i.to_string(), join(&c.numer), c.denom.as_deref().map(join).unwrap_or_else(|| "1".into())]);
    }
    Output::new(json!({"order": op.order(), "coeffs": coeffs, "text": op.to_string()}), table)
}

fn ode(c: OdeCmd, config: Option<&Path>, guards: &Guards, stdin: &mut dyn Read) -> Result<Output, CliError> {
    match c {
        OdeCmd::Show { op } => Ok(operator_output(&operator(&op, config)?)),
        OdeCmd::ToRec { op } => Ok(recurrence_output(&ode_to_recurrence(&operator(&op, config)?)?)),
        OdeCmd::Mul { left, right } => Ok(operator_output(&diffop_mul(&named_operator(&left)?, &named_operator(&right)?))),
        OdeCmd::Apply { op, data } => {
            let op = operator(&op, config)?;
            let g = PowerSeries::from_integers(&sequence_data(&data, guards, stdin)?);
            let s = diffop_apply(&op, &g)?;
            let coeffs: Vec<String> = s.coeffs().iter().map(ToString::to_string).collect();
            let mut table = Table::new(["n", "coeff"]);
            for (n, c) in coeffs.iter().enumerate() {
                table.push([n.to_string(), c.clone()]);
            }
            let doc = json!({"order": s.order(), "valuation": s.valuation(), "coeffs": coeffs});
            Ok(Output::new(doc, table))
        }
    }
}

fn closed_form(name: &str) -> Result<ClosedForm, CliError> {
    name.parse().map_err(|()| {
        let names: Vec<&str> = ClosedForm::ALL.iter().map(|c| c.name()).collect();
        CliError::Usage(format!("unknown closed form `{name}`; expected one of {}", names.join(", ")))
    })
}

fn closedform(c: ClosedformCmd) -> Result<Output, CliError> {
    match c {
        ClosedformCmd::List => {
            let names: Vec<&str> = ClosedForm::ALL.iter().map(|c| c.name()).collect();
            let mut table = Table::new(["name"]);
            for n in &names {
                table.push([n]);
            }
            Ok(Output::new(Value::from(names), table))
        }
        ClosedformCmd::Verify { name, order } => {
            let report = verify_closed_form(closed_form(&name)?, order)?;
            let mismatch = report.mismatch.as_ref().map(|m| {
                json!({"index": m.index, "expected": m.expected.to_string(), "found": m.found.to_string()})
            });
            let mut table = Table::new(["name", "order", "success", "index", "expected", "found"]);
            let m = report.mismatch.as_ref();
            table.push([
                report.form.name().to_string(),
                order.to_string(),
                report.is_success().to_string(),
                m.map(|m| m.index.to_string()).unwrap_or_default(),
                m.map(|m| m.expected.to_string()).unwrap_or_default(),
                m.map(|m| m.found.to_string()).unwrap_or_default(),
            ]);
            let doc = json!({
                "name": report.form.name(),
                "order": order,
                "success": report.is_success(),
                "numerator_valuation": report.numerator_valuation,
                "mismatch": mismatch,
            });
            Ok(Output::new(doc, table).with_status(report.is_success()))
        }
        ClosedformCmd::Series { name, order } => {
            let (s, _) = closed_form_series(closed_form(&name)?, order)?;
            let coeffs: Vec<String> = s.coeffs().iter().map(ToString::to_string).collect();
            let mut table = Table::new(["n", "coeff"]);
            for (n, c) in coeffs.iter().enumerate() {
                table.push([n.to_string(), c.clone()]);
            }
            Ok(Output::new(Value::from(coeffs), table))
        }
    }
}

fn asym(samples: &[usize]) -> Output {
    let report = asymptotic_estimate(samples);
    let mut table = Table::new(["n", "r_n", "r_2n", "extrapolated", "relative_deviation"]);
    let docs: Vec<Value> = report
        .samples
        .iter()
        .map(|s| {
            table.push([s.n.to_string(), s.r_n.to_string(), s.r_2n.to_string(), s.extrapolated.to_string(), s.relative_deviation.to_string()]);
            json!({
                "n": s.n,
                "r_n": s.r_n,
                "r_2n": s.r_2n,
                "extrapolated": s.extrapolated,
                "relative_deviation": s.relative_deviation,
            })
        })
        .collect();
    Output::new(json!({"constant": report.constant, "monotone": report.monotone, "samples": docs}), table)
}

fn count_output(count: BigInt) -> Output {
    let mut table = Table::new(["count"]);
    table.push([count.to_string()]);
    Output::new(json!({"count": count.to_string()}), table)
}

fn oracle(c: OracleCmd, guards: &Guards) -> Result<Output, CliError> {
    let count = match c {
        OracleCmd::Partitions { n, forbid_singletons, max_crossing, max_enhanced_crossing } => {
            let filter = PartitionFilter { forbid_singletons, max_crossing, max_enhanced_crossing };
            count_set_partitions(n, filter, guards)?
        }
        OracleCmd::Inversions { n, forbid_wdec3, forbid_fixed } => {
            count_inversion_sequences(n, InversionFilter { forbid_wdec3, forbid_fixed }, guards)?
        }
        OracleCmd::Tableaux { kind, n, height, shape, exclude_row1_zero } => {
            let kind = match kind {
                Kind::Hesitating => TableauKind::Hesitating,
                Kind::Vacillating => TableauKind::Vacillating,
            };
            count_tableau_walks(kind, n, height, &shape, exclude_row1_zero, guards)?
        }
        OracleCmd::Sst { m, content, exhaustive } => {
            if exhaustive {
                count_rect_tableaux_exhaustive(m, &content, guards)?
            } else {
                count_rect_tableaux(m, &content)?
            }
        }
        OracleCmd::Quadrant { variant, n, exhaustive } => {
            let variant = match variant {
                Variant::S0 => QuadrantVariant::S0,
                Variant::S1a => QuadrantVariant::S1a,
                Variant::S1b => QuadrantVariant::S1b,
                Variant::S2 => QuadrantVariant::S2,
            };
            if exhaustive {
                quadrant_sum_exhaustive(variant, n, guards)?
            } else {
                quadrant_sum(variant, n)?
            }
        }
    };
    Ok(count_output(count))
}

fn comparison_output(cmp: &branching::Comparison) -> Output {
    let mut table = Table::new(["n", "lhs", "rhs"]);
    for (n, (l, r)) in cmp.lhs.terms().iter().zip(cmp.rhs.terms()).enumerate() {
        table.push([n.to_string(), l.to_string(), r.to_string()]);
    }
    let doc = json!({
        "holds": cmp.holds(),
        "first_mismatch": cmp.first_mismatch(),
        "lhs": big_strings(cmp.lhs.terms()),
        "rhs": big_strings(cmp.rhs.terms()),
    });
    Output::new(doc, table).with_status(cmp.holds())
}

fn mismatch_json(m: &PolynomialMismatch) -> Value {
    match m {
        PolynomialMismatch::Cell { n, cell, k, table, walks } => {
            json!({"kind": "cell", "n": n, "cell": [cell.0, cell.1], "k": k, "table": table.to_string(), "walks": walks.to_string()})
        }
        PolynomialMismatch::Unmatched { n, weight, k, walks } => {
            json!({"kind": "unmatched", "n": n, "weight": [weight.0, weight.1], "k": k, "walks": walks.to_string()})
        }
        PolynomialMismatch::RowSum { n, k, formula, table } => {
            json!({"kind": "row_sum", "n": n, "k": k, "formula": formula.to_string(), "table": table.to_string()})
        }
    }
}

fn branch(c: BranchCmd) -> Result<Output, CliError> {
    match c {
        BranchCmd::Table { max_deg, minus } => {
            let t = if minus { branching::expand_branching_gf_minus(max_deg) } else { branching::expand_branching_gf(max_deg) };
            let mut table = Table::new(["r", "s", "p", "q", "m"]);
            let mut entries = Vec::new();
            let d = t.max_deg();
            for r in 0..=d {
                for s in 0..=d {
                    for p in 0..=d {
                        for q in 0..=d {
                            let m = t.get(r, s, p, q);
                            if m != 0 {
                                table.push([r.to_string(), s.to_string(), p.to_string(), q.to_string(), m.to_string()]);
                                entries.push(json!([r, s, p, q, m.to_string()]));
                            }
                        }
                    }
                }
            }
            Ok(Output::new(json!({"max_deg": d, "entries": entries}), table))
        }
        BranchCmd::VerifyAxis { k, n } => Ok(comparison_output(&branching::verify_axis_excursions(k, n)?)),
        BranchCmd::VerifyRestriction { k, p, q, n } => {
            if n > branching::AXIS_MAX_N {
                return usage(format!("n = {n} exceeds the limit {}", branching::AXIS_MAX_N));
            }
            Ok(comparison_output(&branching::verify_restriction(k, p, q, n)))
        }
        BranchCmd::Polynomials { n, k_max } => {
            let found = branching::octant_polynomials_check(n, k_max);
            let mut table = Table::new(["mismatch"]);
            for m in &found {
                table.push([format!("{m:?}")]);
            }
            let docs: Vec<Value> = found.iter().map(mismatch_json).collect();
            Ok(Output::new(json!({"n": n.min(3), "k_max": k_max, "mismatches": docs}), table).with_status(found.is_empty()))
        }
    }
}

fn check(a: CheckArgs) -> Result<Output, CliError> {
    let known: Vec<&str> = check_names().map(|(n, _)| n).collect();
    if let Some(bad) = a.only.iter().chain(&a.corrupt).find(|n| !known.contains(&n.as_str())) {
        return usage(format!("unknown check `{bad}`; expected one of {}", known.join(", ")));
    }
    let mut table = Table::new(["name", "criterion", "status", "details"]);
    if a.list {
        let docs: Vec<Value> = check_names()
            .map(|(name, criterion)| {
                table.push([name.to_string(), criterion.to_string(), String::new(), String::new()]);
                json!({"name": name, "criterion": criterion})
            })
            .collect();
        return Ok(Output::new(Value::from(docs), table));
    }
    let reports = check_all(&CheckOptions { only: a.only, corrupt: a.corrupt });
    let ok = reports.iter().all(|r| r.status != Status::Fail);
    let docs: Vec<Value> = reports
        .iter()
        .map(|r| {
            table.push([r.name.to_string(), r.criterion.to_string(), r.status.to_string(), r.details.clone()]);
            json!({"name": r.name, "criterion": r.criterion, "status": r.status.name(), "details": r.details})
        })
        .collect();
    Ok(Output::new(Value::from(docs), table).with_status(ok))
}
