use std::fs;

use flagtype_core::cartan::{find_isomorphism, match_catalog};
use flagtype_core::coxeter::CoxeterError;
use flagtype_core::flags::{induction_sequence_from, induction_start, FlagError, InductionStep};
use flagtype_core::ftverify::{self, Consistency, IntersectionData, Violation};
use flagtype_core::picard2::{self, Rank2Class, Rank2Data};
use flagtype_core::rootsys::RootError;
use flagtype_core::{CartanMatrix, FtError, Kind, MarkedDiagram, RootSystem, WeylGroup};
use serde::Serialize;

use crate::report::*;
use crate::{dot, dsl, CliError, DiagramSpec, Format, Output, Request};

fn json<T: Serialize>(value: &T, code: i32) -> Output {
    let mut text = serde_json::to_string(value).expect("reports serialize");
    text.push('\n');
    Output { text, code }
}

fn require_json(req: &Request, command: &str) -> Result<(), CliError> {
    match req.format {
        Format::Json => Ok(()),
        Format::Dot => Err(CliError::Input(format!("{command} has no dot output"))),
    }
}

fn no_marking(spec: &DiagramSpec, command: &str) -> Result<(), CliError> {
    match spec.marked {
        Some(_) => Err(CliError::Input(format!(
            "{command} does not take a marking"
        ))),
        None => Ok(()),
    }
}

fn root_error(e: RootError) -> CliError {
    match e {
        RootError::NotFinite => CliError::NotFinite("matrix is not of finite type".into()),
        e => CliError::Input(e.to_string()),
    }
}

fn coxeter_error(e: CoxeterError) -> CliError {
    match e {
        CoxeterError::Root(e) => root_error(e),
        e => CliError::Input(e.to_string()),
    }
}

fn flag_error(e: FlagError) -> CliError {
    CliError::Input(e.to_string())
}

fn violation_json(v: Option<Violation>) -> Option<ViolationJson> {
    v.map(|v| ViolationJson {
        nodes: v.nodes,
        kind: v.kind.to_string(),
    })
}

fn exit_for(kind: Kind) -> i32 {
    if kind == Kind::Finite {
        0
    } else {
        2
    }
}

pub fn cmd_classify(req: &Request, positional: Option<&str>) -> Result<Output, CliError> {
    let spec = req.resolve(positional)?;
    let marked = spec.checked_marking()?.unwrap_or_default();
    let report = ftverify::verdict(&spec.matrix);
    let code = exit_for(report.verdict.kind);
    if req.format == Format::Dot {
        let names: Vec<String> = report
            .verdict
            .components
            .iter()
            .filter_map(|c| c.cartan_type.map(|t| t.to_string()))
            .collect();
        let title = dot::kind_title(report.verdict.kind, &names);
        return Ok(Output {
            text: dot::render(&spec.matrix, &marked, Some(&title))?,
            code,
        });
    }
    let out = ClassifyReport {
        kind: report.verdict.kind.to_string(),
        kernel: report.affine_witness.clone(),
        components: report
            .verdict
            .components
            .iter()
            .map(ComponentJson::of)
            .collect(),
        dimension_bound: report.dimension_bound,
        violation: violation_json(report.violation),
    };
    Ok(json(&out, code))
}

pub fn cmd_roots(req: &Request, positional: Option<&str>) -> Result<Output, CliError> {
    require_json(req, "roots")?;
    let spec = req.resolve(positional)?;
    no_marking(&spec, "roots")?;
    let rs = RootSystem::new(&spec.matrix).map_err(root_error)?;
    let roots: Vec<Vec<i64>> = rs
        .positive_roots()
        .iter()
        .map(|r| r.coords().to_vec())
        .collect();
    let heights = rs
        .positive_roots()
        .iter()
        .map(|r| r.height().expect("positive roots have heights"))
        .collect();
    let anticanonical = rationals(&rs.anticanonical_coefficients().map_err(root_error)?);
    let filtration = rs
        .build_filtration()
        .map_err(root_error)?
        .into_iter()
        .map(|s| FiltrationJson {
            k: s.k,
            j: s.j,
            l: s.l,
        })
        .collect();
    Ok(json(
        &RootsReport {
            rank: rs.rank(),
            count: rs.len(),
            roots,
            heights,
            anticanonical,
            filtration,
        },
        0,
    ))
}

pub fn cmd_dim(req: &Request, positional: Option<&str>) -> Result<Output, CliError> {
    let spec = req.resolve(positional)?;
    let marked = spec
        .checked_marking()?
        .unwrap_or_else(|| spec.matrix.nodes());
    if req.format == Format::Dot {
        return Ok(Output {
            text: dot::render(&spec.matrix, &marked, spec.label.as_deref())?,
            code: 0,
        });
    }
    let rs = RootSystem::new(&spec.matrix).map_err(root_error)?;
    let dimension = rs.flag_dimension(&marked).map_err(root_error)?;
    let md = MarkedDiagram::new(spec.matrix.clone(), &marked).map_err(flag_error)?;
    let relative_canonical = if marked.len() == rs.rank() {
        Vec::new()
    } else {
        rs.relative_canonical_coefficients(&marked)
            .map_err(root_error)?
            .into_iter()
            .map(|(node, coefficient)| CoefficientJson { node, coefficient })
            .collect()
    };
    Ok(json(
        &DimReport {
            diagram: spec.label,
            marked: md.marked.clone(),
            dimension,
            full_dimension: rs.len(),
            ample_weight: md.minimal_ample_weight().0,
            relative_canonical,
        },
        0,
    ))
}

/// Splits `[SPEC] LETTER...`: a leading token that is not a node list is
/// the diagram.
fn spec_and_word<'a>(req: &Request, args: &'a [String]) -> (Option<&'a str>, &'a [String]) {
    let explicit = req.diagram.is_some() || req.matrix.is_some();
    match args.split_first() {
        Some((first, rest)) if !explicit && dsl::parse_nodes(first).is_err() => {
            (Some(first.as_str()), rest)
        }
        _ => (None, args),
    }
}

fn group_for(spec: &DiagramSpec) -> Result<WeylGroup, CliError> {
    WeylGroup::new(&spec.matrix).map_err(coxeter_error)
}

pub fn cmd_chain(req: &Request, args: &[String], equal: Option<&str>) -> Result<Output, CliError> {
    require_json(req, "chain")?;
    let (positional, word) = spec_and_word(req, args);
    let spec = req.resolve(positional)?;
    no_marking(&spec, "chain")?;
    let word = dsl::parse_word(word)?;
    let g = group_for(&spec)?;
    let dimension = g.chain_dimension(&word).map_err(coxeter_error)?;
    let top = g.roots().len();
    let equal = equal
        .map(|w| {
            let other = dsl::parse_nodes(w)?;
            g.chain_equal(&word, &other).map_err(coxeter_error)
        })
        .transpose()?;
    Ok(json(
        &ChainReport {
            dimension,
            saturated: dimension == top,
            reduced: g.is_reduced(&word).map_err(coxeter_error)?,
            equal,
        },
        0,
    ))
}

pub fn cmd_hecke_words(req: &Request, args: &[String]) -> Result<Output, CliError> {
    require_json(req, "hecke-words")?;
    let (positional, word) = spec_and_word(req, args);
    let spec = req.resolve(positional)?;
    no_marking(&spec, "hecke-words")?;
    let word = dsl::parse_word(word)?;
    let g = group_for(&spec)?;
    let h = g.demazure_product(&word).map_err(coxeter_error)?;
    let words = g.reduced_words(&h).map_err(coxeter_error)?;
    Ok(json(
        &HeckeWordsReport {
            length: g.length(&h.0),
            count: words.len(),
            word,
            reduced_words: words.into_iter().collect(),
        },
        0,
    ))
}

/// Induction data of one connected catalog component, in global node
/// numbers.
fn component_induction(m: &CartanMatrix, nodes: &[usize]) -> Option<Vec<StepJson>> {
    let sub = m.principal_submatrix(nodes).ok()?;
    let start = default_start(&sub)?;
    let seq = induction_sequence_from(&sub, &start).ok()?;
    Some(steps_json(&seq, |k| nodes[k - 1]))
}

/// The tabulated start set of the matching catalog type, carried over to
/// this matrix's numbering.
fn default_start(m: &CartanMatrix) -> Option<Vec<usize>> {
    let t = match_catalog(m)?;
    let perm = find_isomorphism(m, &t.cartan_matrix())?;
    let mut start: Vec<usize> = induction_start(t)
        .into_iter()
        .map(|i| perm[i - 1] + 1)
        .collect();
    start.sort_unstable();
    Some(start)
}

fn steps_json(seq: &[InductionStep], relabel: impl Fn(usize) -> usize) -> Vec<StepJson> {
    seq.iter()
        .map(|s| {
            let mut marked: Vec<usize> = s.marked.iter().map(|&k| relabel(k)).collect();
            marked.sort_unstable();
            StepJson {
                marked,
                node: relabel(s.node),
            }
        })
        .collect()
}

pub fn cmd_induct(req: &Request, positional: Option<&str>) -> Result<Output, CliError> {
    require_json(req, "induct")?;
    let spec = req.resolve(positional)?;
    let start = match spec.checked_marking()? {
        Some(s) => s,
        None => default_start(&spec.matrix).ok_or_else(|| {
            CliError::Input("no tabulated start set for this diagram; pass --mark".into())
        })?,
    };
    let sequence = match induction_sequence_from(&spec.matrix, &start) {
        Ok(seq) => Some(steps_json(&seq, |k| k)),
        Err(FlagError::NoValidSequence(_)) => None,
        Err(e) => return Err(flag_error(e)),
    };
    Ok(json(
        &InductReport {
            diagram: spec.label,
            start,
            sequence,
        },
        0,
    ))
}

pub fn cmd_ft_verify(req: &Request, path: &str) -> Result<Output, CliError> {
    require_json(req, "ft-verify")?;
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(path.to_string(), e))?;
    let input: FtInput = serde_json::from_str(&text).map_err(|e| {
        CliError::Input(format!(
            "{path}: expected {{\"intersection_matrix\": [[...]]}}: {e}"
        ))
    })?;
    let m =
        ftverify::ingest(&IntersectionData(input.intersection_matrix)).map_err(|e| match e {
            FtError::ProductOutOfRange(..) => CliError::NotRealizable(format!(
                "not FT-realizable: {e} (rank-two rule: each nonzero product must be 1, 2 or 3)"
            )),
            e => CliError::Input(e.to_string()),
        })?;
    let report = ftverify::verdict(&m);
    let code = exit_for(report.verdict.kind);
    let finite = report.verdict.kind == Kind::Finite;
    let dims = if finite {
        ftverify::component_dimensions(&m).map_err(|e| CliError::Input(e.to_string()))?
    } else {
        Vec::new()
    };
    let components = report
        .verdict
        .components
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let mut j = ComponentJson::of(c);
            if finite {
                j.dimension = Some(dims[k]);
                j.induction = component_induction(&m, &c.nodes);
            }
            j
        })
        .collect();
    let consistency = match report.consistency {
        Consistency::Consistent => "Consistent",
        Consistency::ContradictsFiniteness => "ContradictsFiniteness",
    };
    Ok(json(
        &FtReportJson {
            verdict: report.verdict.kind.to_string(),
            components,
            dimension_bound: report.dimension_bound,
            affine_witness: report.affine_witness,
            consistency: consistency.into(),
            violation: violation_json(report.violation),
        },
        code,
    ))
}

fn parse_u32(s: &str, what: &str) -> Result<u32, CliError> {
    s.parse()
        .map_err(|_| CliError::Input(format!("{what} must be a nonnegative integer, got `{s}`")))
}

/// `NU1 NU2 [MU1 MU2 [M]]`; `M` defaults to the degree of the rank-two type.
pub fn cmd_pic2(req: &Request, args: &[String]) -> Result<Output, CliError> {
    require_json(req, "pic2")?;
    if ![2, 4, 5].contains(&args.len()) {
        return Err(CliError::Input("pic2 takes NU1 NU2 [MU1 MU2 [M]]".into()));
    }
    let names = ["nu1", "nu2", "mu1", "mu2", "m"];
    let v: Vec<u32> = args
        .iter()
        .zip(names)
        .map(|(a, n)| parse_u32(a, n))
        .collect::<Result<_, _>>()?;
    let (nu1, nu2) = (v[0], v[1]);
    let class = picard2::classify_rank2(nu1, nu2);
    let (ty, invalid) = match class {
        Rank2Class::Type(t) => (Some(t), None),
        Rank2Class::Invalid(r) => (None, Some(r)),
    };
    let degree = match v.get(4) {
        Some(&m) => Some(m),
        None => ty.and_then(|t| t.degree()),
    };
    let mut out = Pic2Report {
        nu: [nu1, nu2],
        class: ty.map(|t| t.name().to_string()),
        invalid: invalid.map(|r| match r {
            picard2::InvalidReason::ProductTooLarge(p) => {
                format!("nu1*nu2 = {p} is not 4cos^2(pi/(m+1)) for any admissible m")
            }
            picard2::InvalidReason::NoUnitFactor => "neither nu1 nor nu2 equals 1".to_string(),
        }),
        degree,
        mu: None,
        basechange: None,
        discriminants: None,
        cos_identity: None,
        admissible_degrees: picard2::admissible_degrees().into_iter().collect(),
    };
    if v.len() >= 4 {
        let (mu1, mu2) = (v[2], v[3]);
        let data = Rank2Data {
            nu1,
            nu2,
            mu1,
            mu2,
            m: degree.unwrap_or(0),
        };
        let input = |e: picard2::Picard2Error| CliError::Input(e.to_string());
        let a = picard2::basechange_matrix(&data).map_err(input)?;
        out.mu = Some([mu1, mu2]);
        out.basechange = Some(a.map(|row| row.map(|x| rational(&x))));
        if let Some(m) = degree {
            let disc = |nu: u32, mu: u32| match picard2::discriminant_for(m, nu, mu) {
                Ok(d) => Ok(Some(rational(&d))),
                Err(picard2::Picard2Error::ZeroNu) => Ok(None),
                Err(e) => Err(input(e)),
            };
            out.discriminants = Some([disc(nu1, mu1)?, disc(nu2, mu2)?]);
            out.cos_identity = Some(picard2::verify_cos_identity(m, &data).map_err(input)?);
        }
    }
    let code = if out.class.is_some() { 0 } else { 2 };
    Ok(json(&out, code))
}

pub fn cmd_diagram(req: &Request, positional: Option<&str>) -> Result<Output, CliError> {
    let spec = req.resolve(positional)?;
    let marked = spec.checked_marking()?;
    if req.format == Format::Dot {
        return Ok(Output {
            text: dot::render(
                &spec.matrix,
                marked.as_deref().unwrap_or(&[]),
                spec.label.as_deref(),
            )?,
            code: 0,
        });
    }
    let d = spec.matrix.to_diagram()?;
    let edges = d
        .edges()
        .map(|((i, j), e)| EdgeJson {
            nodes: [i, j],
            multiplicity: e.multiplicity,
            arrow_to: e.head,
        })
        .collect();
    Ok(json(
        &DiagramReport {
            diagram: spec.label,
            rank: d.rank(),
            matrix: spec.matrix.rows(),
            edges,
            marked,
        },
        0,
    ))
}
