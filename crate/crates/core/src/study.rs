//! Convergence studies: configuration, per-level runs and report output.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Arc;

use crate::assembly::{assemble_with, build_global_map, interpolate_global, with_provenance, LoadRule};
use crate::curve::Curve;
use crate::error::{Result, VemError};
use crate::mesh::voronoi::VoronoiSpec;
use crate::mesh::{
    generate_mapped_mesh, generate_square_mesh, read_mesh, straighten_boundary, validate_mesh, write_mesh,
    BaseFamily, CurvedMesh,
};
use crate::postprocess::{compute_errors, ConvergenceReport, ErrorNorms};
use crate::problem::{CubicPatch, ExactSolution, SineChannel};
use crate::solver::{dump_matrix, solve};

#[derive(Debug, Clone, PartialEq)]
pub enum Domain {
    SineChannel,
    Square,
    /// Mesh files; `{level}` in the path is replaced by the level.
    File(PathBuf),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Quad,
    Voronoi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Curved,
    /// Every arc replaced by its chord.
    Straight,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolutionId {
    SineChannel,
    /// Quadratic patch, f = 0, boundary data from u.
    PatchP2,
    /// Cubic patch, f = 0, boundary data from u.
    PatchP3,
}

impl SolutionId {
    pub fn exact(self) -> Box<dyn ExactSolution> {
        match self {
            SolutionId::SineChannel => Box::new(SineChannel),
            SolutionId::PatchP2 => Box::new(CubicPatch::truncated(2)),
            SolutionId::PatchP3 => Box::new(CubicPatch::default()),
        }
    }

    fn is_patch(self) -> bool {
        self != SolutionId::SineChannel
    }
}

macro_rules! keyword_enum {
    ($t:ty, $what:literal, $($name:literal => $v:expr),+) => {
        impl FromStr for $t {
            type Err = VemError;
            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok($v),)+
                    _ => Err(VemError::Config(format!(concat!("unknown ", $what, " '{}'"), s))),
                }
            }
        }

        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                $(if *self == $v { return f.write_str($name); })+
                unreachable!()
            }
        }
    };
}

keyword_enum!(LoadRule, "load rule", "averaged" => LoadRule::Averaged, "projected" => LoadRule::Projected);
keyword_enum!(Family, "family", "quad" => Family::Quad, "voronoi" => Family::Voronoi);
keyword_enum!(Mode, "mode", "curved" => Mode::Curved, "straight" => Mode::Straight);
keyword_enum!(SolutionId, "solution",
    "sine-channel" => SolutionId::SineChannel,
    "patch-p2" => SolutionId::PatchP2,
    "patch-p3" => SolutionId::PatchP3);

impl FromStr for Domain {
    type Err = VemError;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "sine-channel" => Domain::SineChannel,
            "square" => Domain::Square,
            "" => return Err(VemError::Config("empty domain".into())),
            path => Domain::File(PathBuf::from(path)),
        })
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::SineChannel => f.write_str("sine-channel"),
            Domain::Square => f.write_str("square"),
            Domain::File(p) => write!(f, "{}", p.display()),
        }
    }
}

/// A convergence study. Levels are mesh resolutions n: n x n quads, or
/// round(voronoi_density n^2) Voronoi seeds.
#[derive(Debug, Clone, PartialEq)]
pub struct StudyConfig {
    pub degree: usize,
    pub family: Family,
    pub levels: Vec<usize>,
    pub mode: Mode,
    pub dump_matrix: bool,
    pub out: PathBuf,
    pub seed: u64,
    pub domain: Domain,
    pub solution: SolutionId,
    pub rho: f64,
    pub lloyd: usize,
    pub voronoi_density: f64,
    pub load: LoadRule,
}

impl Default for StudyConfig {
    fn default() -> Self {
        StudyConfig {
            degree: 3,
            family: Family::Quad,
            levels: vec![8, 16, 32, 64],
            mode: Mode::Curved,
            dump_matrix: false,
            out: PathBuf::from("out"),
            seed: 1,
            domain: Domain::SineChannel,
            solution: SolutionId::SineChannel,
            rho: 0.05,
            lloyd: 30,
            voronoi_density: 0.55,
            load: LoadRule::Projected,
        }
    }
}

pub const CONFIG_KEYS: [&str; 13] = [
    "degree",
    "family",
    "levels",
    "mode",
    "dump-matrix",
    "out",
    "seed",
    "domain",
    "solution",
    "rho",
    "lloyd",
    "voronoi-density",
    "load",
];

fn parse<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value.parse().map_err(|_| VemError::Config(format!("{key}: cannot parse '{value}'")))
}

impl StudyConfig {
    /// Parses `key = value` lines over the defaults; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = StudyConfig::default();
        for (no, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| VemError::Config(format!("line {}: expected key = value", no + 1)))?;
            cfg.set(key.trim(), value.trim())?;
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path).map_err(|e| VemError::io(path, e))?)
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "degree" => self.degree = parse(key, value)?,
            "family" => self.family = value.parse()?,
            "levels" => {
                self.levels = value.split(',').map(|s| parse(key, s.trim())).collect::<Result<_>>()?;
            }
            "mode" => self.mode = value.parse()?,
            "dump-matrix" => self.dump_matrix = parse(key, value)?,
            "out" => self.out = PathBuf::from(value),
            "seed" => self.seed = parse(key, value)?,
            "domain" => self.domain = value.parse()?,
            "solution" => self.solution = value.parse()?,
            "rho" => self.rho = parse(key, value)?,
            "lloyd" => self.lloyd = parse(key, value)?,
            "voronoi-density" => self.voronoi_density = parse(key, value)?,
            "load" => self.load = value.parse()?,
            _ => return Err(VemError::Config(format!("unknown key '{key}'"))),
        }
        Ok(())
    }

    /// The configuration in the file format, keys in canonical order.
    pub fn to_text(&self) -> String {
        let levels: Vec<String> = self.levels.iter().map(usize::to_string).collect();
        let values = [
            self.degree.to_string(),
            self.family.to_string(),
            levels.join(","),
            self.mode.to_string(),
            self.dump_matrix.to_string(),
            self.out.display().to_string(),
            self.seed.to_string(),
            self.domain.to_string(),
            self.solution.to_string(),
            self.rho.to_string(),
            self.lloyd.to_string(),
            self.voronoi_density.to_string(),
            self.load.to_string(),
        ];
        CONFIG_KEYS.iter().zip(values).map(|(k, v)| format!("{k} = {v}\n")).collect()
    }

    pub fn validate(&self) -> Result<()> {
        if self.degree < 2 {
            return Err(VemError::Config(format!("degree must be >= 2, got {}", self.degree)));
        }
        if self.levels.is_empty() || self.levels.contains(&0) {
            return Err(VemError::Config("levels must be a non-empty list of positive integers".into()));
        }
        if self.levels.windows(2).any(|w| w[0] >= w[1]) {
            return Err(VemError::Config(format!("levels must increase strictly: {:?}", self.levels)));
        }
        if !(self.rho > 0.0 && self.rho < 1.0) {
            return Err(VemError::Config(format!("rho must lie in (0, 1), got {}", self.rho)));
        }
        if !(self.voronoi_density > 0.0) {
            return Err(VemError::Config("voronoi-density must be positive".into()));
        }
        if self.solution == SolutionId::SineChannel && self.domain == Domain::Square {
            return Err(VemError::Config("the sine-channel solution needs the sine-channel domain".into()));
        }
        Ok(())
    }

    pub fn base_family(&self, level: usize) -> BaseFamily {
        match self.family {
            Family::Quad => BaseFamily::Quad { n: level },
            Family::Voronoi => BaseFamily::Voronoi(VoronoiSpec {
                seeds: ((self.voronoi_density * (level * level) as f64).round() as usize).max(2),
                lloyd: self.lloyd,
                seed: self.seed.wrapping_add(level as u64),
            }),
        }
    }

    /// The mesh of one level, straightened in straight mode.
    pub fn mesh(&self, level: usize) -> Result<CurvedMesh> {
        let family = self.base_family(level);
        let mesh = match &self.domain {
            Domain::SineChannel => {
                generate_mapped_mesh(&family, Arc::new(Curve::channel_bottom()), Arc::new(Curve::channel_top()))?
            }
            Domain::Square => generate_square_mesh(&family)?,
            Domain::File(p) => read_mesh(Path::new(&p.to_string_lossy().replace("{level}", &level.to_string())))?,
        };
        match self.mode {
            Mode::Curved => Ok(mesh),
            Mode::Straight => straighten_boundary(&mesh),
        }
    }
}

#[derive(Debug, Clone)]
pub struct LevelResult {
    pub level: usize,
    pub h: f64,
    pub ndof: usize,
    pub errors: ErrorNorms,
    pub residual: f64,
}

/// Meshes, validates, assembles, solves and measures one level. Writes a
/// mesh snapshot (and the matrix when requested) into `out` if given.
pub fn run_level(cfg: &StudyConfig, level: usize, out: Option<&Path>) -> Result<LevelResult> {
    let mesh = cfg.mesh(level)?;
    let report = validate_mesh(&mesh, cfg.rho)?;
    if !report.is_regular() {
        return Err(VemError::Validation(format!(
            "level {level}: {} violations at rho = {} (min h_e/h_E = {:.3e}, min ball ratio = {:.3e}); first: {:?}",
            report.violations.len(),
            cfg.rho,
            report.min_edge_ratio,
            report.min_star_ratio,
            report.violations[0]
        )));
    }
    let exact = cfg.solution.exact();
    let map = build_global_map(&mesh, cfg.degree)?;
    let data = if cfg.solution.is_patch() {
        Some(interpolate_global(&mesh, &map, |x| exact.value(x), |x| exact.gradient(x))?)
    } else {
        None
    };
    let system = assemble_with(&mesh, &map, |x| exact.load(x), data.as_deref(), cfg.load)?;
    if let Some(dir) = out {
        write_mesh(&mesh, &dir.join(format!("mesh_level{level}.json")))?;
        if cfg.dump_matrix {
            dump_matrix(&system.matrix, &dir.join(format!("matrix_level{level}.txt")))?;
        }
    }
    let sol = solve(&system).map_err(|e| with_provenance(&map, e))?;
    let u = map.expand(&sol.u, data.as_deref());
    let errors = compute_errors(&mesh, &map, &u, exact.as_ref())?;
    Ok(LevelResult { level, h: mesh.h(), ndof: map.n_free(), errors, residual: sol.residual })
}

/// Runs every level in order and writes report.csv, errs_{0,1,2}.dat and
/// mesh snapshots into `cfg.out`.
pub fn run_study(cfg: &StudyConfig) -> Result<ConvergenceReport> {
    cfg.validate()?;
    std::fs::create_dir_all(&cfg.out).map_err(|e| VemError::io(&cfg.out, e))?;
    let mut report = ConvergenceReport::default();
    for &level in &cfg.levels {
        let r = run_level(cfg, level, Some(&cfg.out))?;
        report.push(r.level, r.h, r.ndof, r.errors)?;
    }
    report.write(&cfg.out)?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        let cfg = StudyConfig::parse(
            "# k = 2 sweep\ndegree = 2\nfamily = voronoi\nlevels = 4, 8 ,16\nmode = straight\n\
             dump-matrix = true\nout = /tmp/x\nseed = 7\ndomain = square\nsolution = patch-p2\n\
             rho = 0.2\nlloyd = 5\nvoronoi-density = 0.75 # trailing\nload = averaged\n",
        )
        .unwrap();
        assert_eq!(cfg.degree, 2);
        assert_eq!(cfg.family, Family::Voronoi);
        assert_eq!(cfg.levels, vec![4, 8, 16]);
        assert_eq!(cfg.mode, Mode::Straight);
        assert!(cfg.dump_matrix);
        assert_eq!(cfg.domain, Domain::Square);
        assert_eq!(cfg.solution, SolutionId::PatchP2);
        assert_eq!(cfg.load, LoadRule::Averaged);
        assert_eq!(StudyConfig::parse(&cfg.to_text()).unwrap(), cfg);
        assert_eq!(StudyConfig::parse("").unwrap(), StudyConfig::default());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(StudyConfig::parse("degree 3").is_err());
        assert!(StudyConfig::parse("colour = red").is_err());
        assert!(StudyConfig::parse("family = hex").is_err());
        assert!(StudyConfig::parse("levels = 4,x").is_err());
        for text in ["degree = 1", "levels = 8,8", "levels = 16,8", "rho = 1.5", "domain = square"] {
            assert!(StudyConfig::parse(text).unwrap().validate().is_err(), "{text}");
        }
        assert!(matches!(
            StudyConfig::parse("domain = mesh_{level}.json").unwrap().domain,
            Domain::File(_)
        ));
    }

    #[test]
    fn straight_mode_keeps_the_nodes() {
        let mut cfg = StudyConfig::default();
        let curved = cfg.mesh(4).unwrap();
        cfg.mode = Mode::Straight;
        let straight = cfg.mesh(4).unwrap();
        assert_eq!(curved.nodes, straight.nodes);
        assert!(curved.has_curved_edges() && !straight.has_curved_edges());
    }

    #[test]
    fn patch_level_is_exact() {
        let cfg = StudyConfig {
            domain: Domain::Square,
            solution: SolutionId::PatchP3,
            levels: vec![3],
            ..StudyConfig::default()
        };
        let r = run_level(&cfg, 3, None).unwrap();
        assert!(r.errors.err2 < 1e-8, "{:?}", r.errors);
        assert!(r.errors.err0 < 1e-8);
    }
}
