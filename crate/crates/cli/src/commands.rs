//! One function per subcommand, returning the rendered output.

use grasscal::derivation::{d_h_pieri, project_pn, quantum_dh, GrassContext};
use grasscal::multivector::{partition_to_monomial, Monomial};
use grasscal::schubert::{
    giambelli_operator, giambelli_solve, gw_number, intersection_number, schubert_product,
    Convention,
};

use crate::args::{GiambelliArgs, GwArgs, IntersectArgs, PieriArgs, ProductArgs};
use crate::render::{self, Notation, Style};
use crate::{json, parse, CliError};

pub struct OutputOpts {
    pub json: bool,
    pub style: Style,
    pub width: Option<usize>,
}

pub fn cmd_pieri(args: &PieriArgs, opts: &OutputOpts) -> Result<String, CliError> {
    let base: Monomial = if let Some(mono_str) = &args.mono {
        let m = parse::parse_monomial(mono_str)?;
        if let Some(k) = args.k {
            if m.arity() != k {
                return Err(CliError::Usage(format!(
                    "--k {k} disagrees with the monomial arity {}",
                    m.arity()
                )));
            }
        }
        m
    } else {
        let partition = parse::parse_partition(args.partition.as_deref().unwrap_or_default())?;
        let k = args.k.expect("clap: --partition requires --k");
        partition_to_monomial(&partition, k)?
    };

    let element = if args.quantum {
        let n = args.n.expect("clap: --quantum requires --n");
        let k = args.k.unwrap_or_else(|| base.arity());
        let ctx = GrassContext::new(k, n)?;
        let raw = quantum_dh(&ctx, args.h, &base)?;
        if Convention::from(args.convention) == Convention::Bertram && k.is_multiple_of(2) {
            raw.map_coeffs(|c| c.subst_neg_q())
        } else {
            raw
        }
    } else if let Some(n) = args.n {
        let k = args.k.unwrap_or_else(|| base.arity());
        let ctx = GrassContext::new(k, n)?;
        project_pn(&ctx, &d_h_pieri(args.h, &base))?
    } else {
        d_h_pieri(args.h, &base)
    };

    if opts.json {
        Ok(to_json(&json::element_to_json(&element)))
    } else {
        let monos = render::render_element(&element, opts.style, Notation::Monomial, opts.width);
        let classes = render::render_element(&element, opts.style, Notation::Class, opts.width);
        Ok(format!("{monos}\n= {classes}"))
    }
}

pub fn cmd_product(args: &ProductArgs, opts: &OutputOpts) -> Result<String, CliError> {
    let ctx = GrassContext::new(args.k, args.n)?;
    let lhs = parse::parse_partition(&args.lhs)?;
    let rhs = parse::parse_partition(&args.rhs)?;
    let map = schubert_product(&ctx, &lhs, &rhs, args.quantum, args.convention.into())?;
    if opts.json {
        Ok(to_json(&json::class_map_to_json(&map)))
    } else {
        Ok(render::render_class_map(&map, opts.style, opts.width))
    }
}

pub fn cmd_intersect(args: &IntersectArgs, opts: &OutputOpts) -> Result<String, CliError> {
    let ctx = GrassContext::new(args.k, args.n)?;
    let classes = parse::parse_classes(&args.classes)?;
    let value = intersection_number(&ctx, &classes);
    if opts.json {
        Ok(to_json(&json::NumberJson {
            value: value.to_string(),
        }))
    } else {
        Ok(render::render_bigint(&value))
    }
}

pub fn cmd_gw(args: &GwArgs, opts: &OutputOpts) -> Result<String, CliError> {
    let ctx = GrassContext::new(args.k, args.n)?;
    let classes = parse::parse_classes(&args.classes)?;
    let value = gw_number(&ctx, &classes, args.degree);
    if opts.json {
        Ok(to_json(&json::NumberJson {
            value: value.to_string(),
        }))
    } else {
        Ok(render::render_bigint(&value))
    }
}

pub fn cmd_giambelli(args: &GiambelliArgs, opts: &OutputOpts) -> Result<String, CliError> {
    let op = if let Some(mono_str) = &args.mono {
        giambelli_solve(&parse::parse_monomial(mono_str)?)
    } else {
        let partition = parse::parse_partition(args.partition.as_deref().unwrap_or_default())?;
        let k = args.k.expect("clap: --partition requires --k");
        giambelli_operator(&partition, k)?
    };
    if opts.json {
        Ok(to_json(&json::operator_to_json(&op)))
    } else {
        Ok(render::render_operator(&op, opts.style, opts.width))
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serialization of plain data cannot fail")
}
