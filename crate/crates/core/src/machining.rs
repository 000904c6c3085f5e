//! Regression surrogates of the machining processes: abrasive water jet
//! (AWJM), electric discharge (EDM), micro-turning, micro-milling,
//! micro-drilling and MQL turning of titanium alloy.
//!
//! Every model is a sum of monomials `c * x1^e1 * ... * xd^ed`, which
//! covers both the polynomial fits and the micro-turning power laws.
//!
//! Milling variables are `f1, f2` and drilling variables `g1, g2` (also
//! known as x and y). The micro-turning parameters are exposed as
//! `mt_w1..mt_w3` to keep them apart from the LAB weights. MQL bounds are
//! positional: k1 in [200, 300], k2 in [0.1, 0.2], k3 in [60, 90].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{grid_search, GridResult};
use crate::problem::{Problem, Sense};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Process {
    #[serde(rename = "AWJM")]
    Awjm,
    #[serde(rename = "EDM")]
    Edm,
    MicroTurning,
    MicroMilling,
    MicroDrilling,
    #[serde(rename = "MQLTurning")]
    MqlTurning,
}

impl Process {
    pub fn key(self) -> &'static str {
        match self {
            Process::Awjm => "awjm",
            Process::Edm => "edm",
            Process::MicroTurning => "turning",
            Process::MicroMilling => "milling",
            Process::MicroDrilling => "drilling",
            Process::MqlTurning => "mql",
        }
    }
}

impl fmt::Display for Process {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Process::Awjm => "AWJM",
            Process::Edm => "EDM",
            Process::MicroTurning => "MicroTurning",
            Process::MicroMilling => "MicroMilling",
            Process::MicroDrilling => "MicroDrilling",
            Process::MqlTurning => "MQLTurning",
        })
    }
}

/// `coef * prod(x[i] ^ exps[i])`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Term {
    pub coef: f64,
    pub exps: [f64; 4],
}

const fn t(coef: f64, exps: [f64; 4]) -> Term {
    Term { coef, exps }
}

const C: [f64; 4] = [0.0, 0.0, 0.0, 0.0];

impl Term {
    fn eval(&self, x: &[f64]) -> f64 {
        let mut v = self.coef;
        for (xi, &e) in x.iter().zip(&self.exps) {
            if e == 0.0 {
                continue;
            } else if e == 1.0 {
                v *= xi;
            } else if e.fract() == 0.0 {
                v *= xi.powi(e as i32);
            } else {
                v *= xi.powf(e);
            }
        }
        v
    }
}

pub fn eval_terms(terms: &[Term], x: &[f64]) -> f64 {
    terms.iter().map(|t| t.eval(x)).sum()
}

const AWJM_RA: [Term; 11] = [
    t(-23.309555, C),
    t(16.6968, [1., 0., 0., 0.]),
    t(26.9296, [0., 1., 0., 0.]),
    t(0.0587, [0., 0., 1., 0.]),
    t(0.0146, [0., 0., 0., 1.]),
    t(-5.1863, [0., 2., 0., 0.]),
    t(-10.4571, [1., 1., 0., 0.]),
    t(-0.0534, [1., 0., 1., 0.]),
    t(-0.0103, [1., 0., 0., 1.]),
    t(0.0113, [0., 1., 1., 0.]),
    t(-0.0039, [0., 1., 0., 1.]),
];

const AWJM_KERF: [Term; 13] = [
    t(-1.15146, C),
    t(0.70118, [1., 0., 0., 0.]),
    t(2.72749, [0., 1., 0., 0.]),
    t(0.00689, [0., 0., 1., 0.]),
    t(-0.00025, [0., 0., 0., 1.]),
    t(0.00386, [0., 1., 1., 0.]),
    t(-0.93947, [0., 2., 0., 0.]),
    t(-0.25711, [1., 1., 0., 0.]),
    t(-0.00314, [1., 0., 1., 0.]),
    t(-0.00249, [1., 0., 0., 1.]),
    t(0.00196, [0., 1., 0., 1.]),
    t(-0.00002, [0., 0., 1., 1.]),
    t(-0.00001, [0., 0., 2., 0.]),
];

const EDM_MRR: [Term; 7] = [
    t(-235.15, C),
    t(39.7, [1., 0., 0., 0.]),
    t(4.277, [0., 1., 0., 0.]),
    t(1.569, [0., 0., 1., 0.]),
    t(-1.375, [0., 0., 0., 1.]),
    t(-0.0059, [0., 0., 2., 0.]),
    t(-0.536, [1., 1., 0., 0.]),
];

const EDM_RA: [Term; 7] = [
    t(30.347, C),
    t(-0.618, [1., 0., 0., 0.]),
    t(-0.438, [0., 1., 0., 0.]),
    t(0.059, [0., 0., 1., 0.]),
    t(-0.59, [0., 0., 0., 1.]),
    t(0.019, [1., 0., 0., 1.]),
    t(0.0075, [0., 1., 0., 1.]),
];

const EDM_REWR: [Term; 14] = [
    t(196.564, C),
    t(-24.19, [1., 0., 0., 0.]),
    t(-3.135, [0., 1., 0., 0.]),
    t(-1.781, [0., 0., 1., 0.]),
    t(0.153, [0., 0., 0., 1.]),
    t(0.464, [1., 1., 0., 0.]),
    t(0.158, [1., 0., 1., 0.]),
    t(0.025, [1., 0., 0., 1.]),
    t(0.029, [0., 1., 1., 0.]),
    t(-0.017, [0., 1., 0., 1.]),
    t(-0.003385, [1., 1., 1., 0.]),
    t(0.093, [2., 0., 0., 0.]),
    t(0.001491, [0., 0., 2., 0.]),
    t(0.005265, [0., 0., 0., 2.]),
];

const TURNING_FB: [Term; 1] = [t(0.004, [0.495, 0.545, 0.763, 0.])];
const TURNING_RA: [Term; 1] = [t(0.048, [-0.062, 0.445, 0.516, 0.])];

const MILL07_RA: [Term; 4] = [
    t(-0.455378, C),
    t(0.00027, [1., 0., 0., 0.]),
    t(0.16422, [0., 1., 0., 0.]),
    t(-0.000077, [1., 1., 0., 0.]),
];
const MILL07_MT: [Term; 4] = [
    t(17.71644, C),
    t(-0.0002, [1., 0., 0., 0.]),
    t(-4.8404, [0., 1., 0., 0.]),
    t(0.0001, [1., 1., 0., 0.]),
];
const MILL1_RA: [Term; 3] = [
    t(-0.208871, C),
    t(0.000144, [1., 0., 0., 0.]),
    t(0.019571, [0., 1., 0., 0.]),
];
const MILL1_MT: [Term; 4] = [
    t(20.2906, C),
    t(-0.0015, [1., 0., 0., 0.]),
    t(-5.8369, [0., 1., 0., 0.]),
    t(0.0006, [1., 1., 0., 0.]),
];

const fn drill(c0: f64, c1: f64, c2: f64, c11: f64, c22: f64) -> [Term; 5] {
    [
        t(c0, C),
        t(c1, [1., 0., 0., 0.]),
        t(c2, [0., 1., 0., 0.]),
        t(c11, [2., 0., 0., 0.]),
        t(c22, [0., 2., 0., 0.]),
    ]
}

const DRILL05_BH: [Term; 5] = drill(420.94, -0.234, -99.91, 6.55e-5, 22.152);
const DRILL05_BT: [Term; 5] = drill(90.57, -0.049, -27.12, 1.32e-5, 5.54);
const DRILL06_BH: [Term; 5] = drill(369.67, -0.028, -156.79, 6.64e-6, 23.162);
const DRILL06_BT: [Term; 5] = drill(35.34, -0.019, -0.59, 6.44e-6, 0.51);
const DRILL08_BH: [Term; 5] = drill(106.116, 0.13, -6.62, 1.49e-6, 4.75);
const DRILL08_BT: [Term; 5] = drill(59.79, -0.024, -11.3, 7.78e-6, 2.18);
const DRILL09_BH: [Term; 5] = drill(450.7, -0.09, -34.48, 2.34e-5, 5.03);
const DRILL09_BT: [Term; 5] = drill(80.07, -0.040, -14.81, 1.516e-5, 4.65);

const MQL_FC: [Term; 5] = [
    t(-202.01471, C),
    t(1.28250, [0., 0., 1., 0.]),
    t(3225.0, [1., 0., 0., 0.]),
    t(-0.74167, [0., 1., 0., 0.]),
    t(-9.4, [1., 0., 1., 0.]),
];
const MQL_VBMAX: [Term; 4] = [
    t(-0.27368, C),
    t(0.001575, [0., 0., 1., 0.]),
    t(2.4, [1., 0., 0., 0.]),
    t(-0.0010833, [0., 1., 0., 0.]),
];
const MQL_RA: [Term; 4] = [
    t(-0.16294, C),
    t(0.001425, [0., 0., 1., 0.]),
    t(3.7, [1., 0., 0., 0.]),
    t(-0.000416667, [0., 1., 0., 0.]),
];
const MQL_L: [Term; 4] = [
    t(0.96302, C),
    t(-0.00215931, [0., 0., 1., 0.]),
    t(0.92703, [1., 0., 0., 0.]),
    t(0.00152807, [0., 1., 0., 0.]),
];

type Var = (&'static str, &'static str);

const AWJM_VARS: [Var; 4] = [("u1", "mm"), ("u2", "mm"), ("u3", "mm"), ("u4", "mm/min")];
const AWJM_BOUNDS: [(f64, f64); 4] = [(0.9, 1.25), (0.95, 1.5), (20.0, 96.0), (200.0, 600.0)];
const EDM_VARS: [Var; 4] = [("v1", "A"), ("v2", "V"), ("v3", "us"), ("v4", "us")];
const EDM_BOUNDS: [(f64, f64); 4] = [(7.5, 12.5), (45.0, 55.0), (50.0, 150.0), (40.0, 60.0)];
const TURNING_VARS: [Var; 3] = [("mt_w1", "m/min"), ("mt_w2", "um/rev"), ("mt_w3", "um")];
const TURNING_BOUNDS: [(f64, f64); 3] = [(25.0, 37.0), (5.0, 15.0), (30.0, 70.0)];
const MILLING_VARS: [Var; 2] = [("f1", "rpm"), ("f2", "mm/min")];
const MILLING_BOUNDS: [(f64, f64); 2] = [(1500.0, 2500.0), (1.0, 3.0)];
const DRILLING_VARS: [Var; 2] = [("g1", "rpm"), ("g2", "mm/min")];
const DRILLING_BOUNDS: [(f64, f64); 2] = [(1000.0, 2500.0), (1.0, 4.0)];
const MQL_VARS: [Var; 3] = [("k1", "mm/rev"), ("k2", "deg"), ("k3", "m/min")];
const MQL_BOUNDS: [(f64, f64); 3] = [(200.0, 300.0), (0.1, 0.2), (60.0, 90.0)];

/// Alternative variable names for milling (x), drilling (y) and turning (w).
pub fn variable_aliases(process: Process) -> &'static [&'static str] {
    match process {
        Process::MicroMilling => &["x1", "x2"],
        Process::MicroDrilling => &["y1", "y2"],
        Process::MicroTurning => &["w1", "w2", "w3"],
        _ => &[],
    }
}

struct Model {
    index: u8,
    process: Process,
    response: &'static str,
    tool: Option<&'static str>,
    sense: Sense,
    terms: &'static [Term],
    vars: &'static [Var],
    bounds: &'static [(f64, f64)],
}

const fn m(
    index: u8,
    process: Process,
    response: &'static str,
    tool: Option<&'static str>,
    sense: Sense,
    terms: &'static [Term],
) -> Model {
    let (vars, bounds): (&'static [Var], &'static [(f64, f64)]) = match process {
        Process::Awjm => (&AWJM_VARS, &AWJM_BOUNDS),
        Process::Edm => (&EDM_VARS, &EDM_BOUNDS),
        Process::MicroTurning => (&TURNING_VARS, &TURNING_BOUNDS),
        Process::MicroMilling => (&MILLING_VARS, &MILLING_BOUNDS),
        Process::MicroDrilling => (&DRILLING_VARS, &DRILLING_BOUNDS),
        Process::MqlTurning => (&MQL_VARS, &MQL_BOUNDS),
    };
    Model {
        index,
        process,
        response,
        tool,
        sense,
        terms,
        vars,
        bounds,
    }
}

use Process::*;
use Sense::{Maximize as Max, Minimize as Min};

const MODELS: [Model; 23] = [
    m(1, Awjm, "Ra", None, Min, &AWJM_RA),
    m(2, Awjm, "kerf", None, Min, &AWJM_KERF),
    m(3, Edm, "MRR", None, Max, &EDM_MRR),
    m(4, Edm, "Ra", None, Min, &EDM_RA),
    m(5, Edm, "REWR", None, Min, &EDM_REWR),
    m(6, MicroTurning, "fb", None, Min, &TURNING_FB),
    m(7, MicroTurning, "Ra", None, Min, &TURNING_RA),
    m(8, MicroMilling, "Ra", Some("0.7mm"), Min, &MILL07_RA),
    m(9, MicroMilling, "Mt", Some("0.7mm"), Min, &MILL07_MT),
    m(10, MicroMilling, "Ra", Some("1mm"), Min, &MILL1_RA),
    m(11, MicroMilling, "Mt", Some("1mm"), Min, &MILL1_MT),
    m(12, MicroDrilling, "Bh", Some("0.5mm"), Min, &DRILL05_BH),
    m(13, MicroDrilling, "Bt", Some("0.5mm"), Min, &DRILL05_BT),
    m(14, MicroDrilling, "Bh", Some("0.6mm"), Min, &DRILL06_BH),
    m(15, MicroDrilling, "Bt", Some("0.6mm"), Min, &DRILL06_BT),
    m(16, MicroDrilling, "Bh", Some("0.8mm"), Min, &DRILL08_BH),
    m(17, MicroDrilling, "Bt", Some("0.8mm"), Min, &DRILL08_BT),
    m(18, MicroDrilling, "Bh", Some("0.9mm"), Min, &DRILL09_BH),
    m(19, MicroDrilling, "Bt", Some("0.9mm"), Min, &DRILL09_BT),
    m(20, MqlTurning, "Fc", None, Min, &MQL_FC),
    m(21, MqlTurning, "VBmax", None, Min, &MQL_VBMAX),
    m(22, MqlTurning, "Ra", None, Min, &MQL_RA),
    m(23, MqlTurning, "L", None, Min, &MQL_L),
];

#[derive(Debug, Clone)]
pub struct MachiningSpec {
    pub process: Process,
    pub response: &'static str,
    pub tool_variant: Option<&'static str>,
    pub sense: Sense,
    /// (symbol, unit) per decision variable.
    pub var_names: Vec<(&'static str, &'static str)>,
    /// 1-based position in the catalog.
    pub index: u8,
    pub terms: &'static [Term],
    pub problem: Problem,
}

/// Exported catalog row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MachiningEntry {
    pub id: String,
    pub process: Process,
    pub response: String,
    pub tool_variant: Option<String>,
    pub sense: Sense,
    pub variables: Vec<String>,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
}

impl MachiningSpec {
    /// Selector id such as `awjm:kerf` or `drilling:bh:0.5mm`.
    pub fn id(&self) -> String {
        let mut id = format!("{}:{}", self.process.key(), self.response.to_ascii_lowercase());
        if let Some(tool) = self.tool_variant {
            id.push(':');
            id.push_str(tool);
        }
        id
    }

    pub fn dim(&self) -> usize {
        self.problem.dim()
    }

    pub fn evaluate(&self, x: &[f64]) -> Result<f64> {
        evaluate_machining(self, x)
    }

    pub fn catalog_entry(&self) -> MachiningEntry {
        MachiningEntry {
            id: self.id(),
            process: self.process,
            response: self.response.to_string(),
            tool_variant: self.tool_variant.map(str::to_string),
            sense: self.sense,
            variables: self
                .var_names
                .iter()
                .map(|(s, u)| format!("{s} [{u}]"))
                .collect(),
            lower: self.problem.lower().to_vec(),
            upper: self.problem.upper().to_vec(),
        }
    }
}

fn build(model: &Model) -> MachiningSpec {
    let dim = model.vars.len();
    let terms = model.terms;
    let (lower, upper) = model.bounds.iter().copied().unzip();
    let mut spec = MachiningSpec {
        process: model.process,
        response: model.response,
        tool_variant: model.tool,
        sense: model.sense,
        var_names: model.vars.to_vec(),
        index: model.index,
        terms,
        problem: Problem::new("", lower, upper, model.sense, move |x| {
            eval_terms(terms, &x[..dim])
        })
        .expect("catalog bounds are valid"),
    };
    let id = spec.id();
    spec.problem = spec.problem.renamed(id);
    spec
}

/// All 23 machining problems in catalog order.
pub fn machining_registry() -> Vec<MachiningSpec> {
    MODELS.iter().map(build).collect()
}

/// Finds a model by selector. Accepts `:` or `-` as separators and ignores
/// case, e.g. `EDM:MRR`, `milling-ra-0.7mm`.
pub fn lookup(selector: &str) -> Option<MachiningSpec> {
    let norm = selector.to_ascii_lowercase().replace('-', ":");
    MODELS.iter().map(build).find(|s| s.id() == norm)
}

/// Value of the model at `x`, which must lie inside the box.
pub fn evaluate_machining(spec: &MachiningSpec, x: &[f64]) -> Result<f64> {
    if x.len() != spec.dim() {
        return Err(Error::Dimension {
            expected: spec.dim(),
            actual: x.len(),
        });
    }
    if !spec.problem.contains(x) {
        return Err(Error::Argument(format!(
            "{:?} lies outside the bounds of {}",
            x,
            spec.id()
        )));
    }
    Ok(eval_terms(spec.terms, x))
}

/// Exhaustive evaluation on a uniform grid with both endpoints per axis.
pub fn grid_oracle(spec: &MachiningSpec, points_per_axis: usize) -> Result<GridResult> {
    if spec.dim() > 4 {
        return Err(Error::Argument(format!(
            "grid oracle supports at most 4 variables, {} has {}",
            spec.id(),
            spec.dim()
        )));
    }
    grid_search(&spec.problem, points_per_axis)
}
