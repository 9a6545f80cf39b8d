//! The acceptance suite: fourteen criteria, each a list of named checks
//! with a time limit.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use wang_core::corpus;
use wang_core::render::{stone_layout, total_area, StoneGeometry};
use wang_core::spectral::{
    frequencies, golden_eigencheck, perron, EigenSide, GoldenFraction, GoldenNumber, IntMatrix,
    IntPolynomial,
};
use wang_core::transducer::color_word;
use wang_core::{
    check_equivalence, derive, dominoes_with_surrounding, find_marker_candidates, fuse_sets,
    patterns_with_surrounding, trim_tileset, verify_markers, Axis, MarkerSet, Morphism2d, Pins,
    TilingSolver, Transducer, WangTile, WangTileSet, Word2d,
};

use crate::certify::{certify, Certificate, Plan};
use crate::reference as refdata;

/// Permutations found by computation: derived tile `i` is target tile `p[i]`.
pub const WITNESS_U_TO_V: [usize; 21] = [
    1, 3, 0, 2, 6, 7, 5, 4, 9, 15, 14, 8, 11, 13, 12, 20, 18, 19, 17, 16, 10,
];
pub const WITNESS_V_TO_W: [usize; 19] = [0, 1, 9, 10, 8, 11, 3, 4, 5, 7, 2, 6, 16, 15, 14, 17, 13, 12, 18];

/// Tile sets and morphisms the suite runs on.
#[derive(Clone, Debug)]
pub struct Corpus {
    pub u: WangTileSet,
    pub v: WangTileSet,
    pub w: WangTileSet,
    pub alpha: Morphism2d,
    pub beta: Morphism2d,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusError {
    pub file: String,
    pub msg: String,
}

impl fmt::Display for CorpusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "corpus file {}: {}", self.file, self.msg)
    }
}

impl std::error::Error for CorpusError {}

impl Corpus {
    pub fn builtin() -> Self {
        Corpus {
            u: corpus::tileset_u(),
            v: corpus::tileset_v(),
            w: corpus::tileset_w(),
            alpha: corpus::alpha(),
            beta: corpus::beta(),
        }
    }

    /// Reads `U.txt`, `V.txt`, `W.txt`, `alpha.json` and `beta.json` from `dir`.
    pub fn load(dir: &Path) -> Result<Self, CorpusError> {
        let read = |name: &str| {
            std::fs::read_to_string(dir.join(name)).map_err(|e| CorpusError {
                file: name.to_string(),
                msg: e.to_string(),
            })
        };
        let set = |name: &str| {
            WangTileSet::parse(&read(name)?).map_err(|e| CorpusError {
                file: name.to_string(),
                msg: e.to_string(),
            })
        };
        let u = set("U.txt")?;
        let v = set("V.txt")?;
        let w = set("W.txt")?;
        let morphism = |name: &str, domain: &WangTileSet, codomain: &WangTileSet| {
            let m = Morphism2d::from_json(&read(name)?, Some(codomain.len())).map_err(|e| CorpusError {
                file: name.to_string(),
                msg: e.to_string(),
            })?;
            if m.domain_len() != domain.len() {
                return Err(CorpusError {
                    file: name.to_string(),
                    msg: format!("{} images for {} tiles", m.domain_len(), domain.len()),
                });
            }
            Ok(m)
        };
        let alpha = morphism("alpha.json", &v, &u)?;
        let beta = morphism("beta.json", &w, &v)?;
        Ok(Corpus { u, v, w, alpha, beta })
    }

    /// `gamma` from the equivalence of `U` and `W`, then `alpha ∘ beta ∘ gamma`.
    pub fn omega(&self) -> Option<Morphism2d> {
        let e = check_equivalence(&self.u, &self.w)?;
        let gamma = Morphism2d::new(e.tiles.iter().map(|&j| Word2d::letter(j)).collect(), self.w.len()).ok()?;
        self.alpha.compose(&self.beta).ok()?.compose(&gamma).ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub group: &'static str,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub detail: Vec<String>,
    #[serde(rename = "elapsedSeconds")]
    pub elapsed: f64,
    #[serde(rename = "limitSeconds")]
    pub limit: f64,
}

impl CriterionResult {
    pub fn failed_checks(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect()
    }
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {:>2} {} {:<24} {}/{} checks  {:.2}s (limit {}s)",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.checks.iter().filter(|c| c.passed).count(),
            self.checks.len(),
            self.elapsed,
            self.limit
        )?;
        let failed = self.failed_checks();
        if !failed.is_empty() {
            write!(f, "  failed: {}", failed.join("; "))?;
        }
        Ok(())
    }
}

#[derive(Default)]
struct Outcome {
    checks: Vec<Check>,
    detail: Vec<String>,
}

impl Outcome {
    fn check(&mut self, name: impl Into<String>, passed: bool) -> bool {
        self.checks.push(Check {
            name: name.into(),
            passed,
        });
        passed
    }

    fn note(&mut self, line: impl Into<String>) {
        self.detail.push(line.into());
    }
}

struct Context<'a> {
    corpus: &'a Corpus,
    omega: Option<Morphism2d>,
    certificate: Option<Certificate>,
}

impl Context<'_> {
    fn certificate(&mut self) -> &Certificate {
        let u = &self.corpus.u;
        self.certificate.get_or_insert_with(|| certify(u, "U", &Plan::Auto))
    }
}

type Body = fn(&mut Context, &mut Outcome);

pub struct Criterion {
    pub id: u8,
    pub name: &'static str,
    pub group: &'static str,
    pub limit: Duration,
    body: Body,
}

impl Criterion {
    /// `filter` matches the id, the group, or a substring of the name.
    pub fn matches(&self, filter: &str) -> bool {
        let f = filter.trim().to_lowercase();
        f == self.id.to_string() || f == self.group || self.name.to_lowercase().contains(&f)
    }
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { id: 1, name: "dominoes of U", group: "dominoes", limit: secs(60), body: dominoes_u },
        Criterion { id: 2, name: "dominoes of V", group: "dominoes", limit: secs(30), body: dominoes_v },
        Criterion { id: 3, name: "markers", group: "markers", limit: secs(10), body: markers },
        Criterion { id: 4, name: "derivation U to V", group: "derivation", limit: secs(60), body: derivation_uv },
        Criterion { id: 5, name: "derivation V to W", group: "derivation", limit: secs(30), body: derivation_vw },
        Criterion { id: 6, name: "equivalence U W", group: "equivalence", limit: secs(10), body: equivalence },
        Criterion { id: 7, name: "omega images", group: "morphism", limit: secs(1), body: omega_images },
        Criterion { id: 8, name: "spectral data", group: "spectral", limit: secs(5), body: spectral },
        Criterion { id: 9, name: "2x2 factors", group: "factors", limit: secs(120), body: factors },
        Criterion { id: 10, name: "fixed-point figure", group: "morphism", limit: secs(1), body: fixed_point },
        Criterion { id: 11, name: "prolongability", group: "morphism", limit: secs(1), body: prolongability },
        Criterion { id: 12, name: "frequencies", group: "spectral", limit: secs(1), body: frequency_table },
        Criterion { id: 13, name: "property suites", group: "properties", limit: secs(120), body: properties },
        Criterion { id: 14, name: "end-to-end certificate", group: "certify", limit: secs(300), body: end_to_end },
    ]
}

/// Runs every criterion matching `filter` (all when `None`) in order.
pub fn run(corpus: &Corpus, filter: Option<&str>) -> Vec<CriterionResult> {
    run_with(corpus, filter, |_| {})
}

/// Like [`run`], calling `each` as soon as a criterion finishes.
pub fn run_with(
    corpus: &Corpus,
    filter: Option<&str>,
    mut each: impl FnMut(&CriterionResult),
) -> Vec<CriterionResult> {
    let mut ctx = Context {
        corpus,
        omega: corpus.omega(),
        certificate: None,
    };
    let mut out = Vec::new();
    for c in criteria() {
        if filter.is_some_and(|f| !c.matches(f)) {
            continue;
        }
        let mut outcome = Outcome::default();
        let start = Instant::now();
        (c.body)(&mut ctx, &mut outcome);
        let elapsed = start.elapsed();
        outcome.check(format!("within {}s", c.limit.as_secs()), elapsed <= c.limit);
        let result = CriterionResult {
            id: c.id,
            name: c.name,
            group: c.group,
            passed: outcome.checks.iter().all(|k| k.passed),
            checks: outcome.checks,
            detail: outcome.detail,
            elapsed: elapsed.as_secs_f64(),
            limit: c.limit.as_secs_f64(),
        };
        each(&result);
        out.push(result);
    }
    out
}

fn omega_or_fail<'a>(ctx: &'a Context, out: &mut Outcome) -> Option<&'a Morphism2d> {
    if ctx.omega.is_none() {
        out.check("omega can be built from the corpus", false);
    }
    ctx.omega.as_ref()
}

fn pairs<const N: usize>(list: &[(usize, usize); N]) -> Vec<(usize, usize)> {
    let mut v = list.to_vec();
    v.sort();
    v
}

fn dominoes_u(ctx: &mut Context, out: &mut Outcome) {
    let sets: Vec<_> = (1..=3)
        .map(|r| dominoes_with_surrounding(&ctx.corpus.u, Axis::E2, r))
        .collect();
    let sizes: Vec<usize> = sets.iter().map(Vec::len).collect();
    out.note(format!("sizes for r = 1, 2, 3: {sizes:?}"));
    out.check("sizes are 37, 35, 35", sizes == refdata::DOMINO_SIZES_U_E2);
    out.check("r = 2 set equals the printed 35 pairs", sets[1] == pairs(&refdata::DOMINOES_U_E2));
}

fn dominoes_v(ctx: &mut Context, out: &mut Outcome) {
    let sets: Vec<_> = (1..=2)
        .map(|r| dominoes_with_surrounding(&ctx.corpus.v, Axis::E1, r))
        .collect();
    let sizes: Vec<usize> = sets.iter().map(Vec::len).collect();
    out.note(format!("sizes for r = 1, 2: {sizes:?}"));
    out.check("sizes are 30, 30", sizes == refdata::DOMINO_SIZES_V_E1);
    out.check("r = 1 set equals the printed 30 pairs", sets[0] == pairs(&refdata::DOMINOES_V_E1));
}

fn marker_case(out: &mut Outcome, label: &str, set: &WangTileSet, markers: &MarkerSet, radius: usize) {
    match verify_markers(set, markers, radius) {
        Ok(report) => {
            out.check(format!("{label}: {markers} verified at r = {radius}"), report.passed());
        }
        Err(e) => {
            out.check(format!("{label}: {markers} verified at r = {radius} ({e})"), false);
        }
    }
    let found = find_marker_candidates(set, markers.axis, radius);
    out.note(format!(
        "{label} candidates: {}",
        found.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
    ));
    out.check(format!("{label}: {markers} among the candidates"), found.contains(markers));
}

fn markers(ctx: &mut Context, out: &mut Outcome) {
    let mu = MarkerSet::new(refdata::MARKERS_U, Axis::E2);
    let mv = MarkerSet::new(refdata::MARKERS_V, Axis::E1);
    marker_case(out, "U", &ctx.corpus.u, &mu, 2);
    marker_case(out, "V", &ctx.corpus.v, &mv, 1);
}

fn tile_strings(t: &WangTile) -> [String; 4] {
    [t.right.display(), t.top.display(), t.left.display(), t.bottom.display()]
}

/// Derives, aligns against `target` and compares with `expected`.
#[allow(clippy::too_many_arguments)]
fn derivation_case(
    out: &mut Outcome,
    source: &WangTileSet,
    markers: MarkerSet,
    radius: usize,
    target: &WangTileSet,
    witness: &[usize],
    expected: &Morphism2d,
    k_len: usize,
) {
    let d = match derive(source, &markers, radius) {
        Ok(d) => d,
        Err(e) => {
            out.check(format!("derive with {markers} at r = {radius} ({e})"), false);
            return;
        }
    };
    out.note(format!(
        "{} singles {:?}, {} fusions {:?}",
        d.singles.len(),
        d.singles,
        d.fusions.len(),
        d.fusions
    ));
    out.check(format!("{} derived tiles", target.len()), d.derived.len() == target.len());
    out.check(format!("{k_len} single tiles"), d.singles.len() == k_len);
    let strings_match = d.derived.len() == witness.len()
        && d.derived.tiles().iter().zip(witness).all(|(t, &j)| {
            target
                .get(j)
                .is_some_and(|s| tile_strings(t) == tile_strings(s))
        });
    out.check("tiles string-equal to the listing under the witness", strings_match);
    let alignment = d.alignment_to(target);
    out.note(format!("alignment {alignment:?}"));
    out.check("alignment equals the witness", alignment.as_deref() == Some(witness));
    out.check(
        "morphism equals the printed table",
        d.morphism_for(target).as_ref() == Some(expected),
    );
    out.check("recognizability criterion holds", d.recognizable());
}

fn derivation_uv(ctx: &mut Context, out: &mut Outcome) {
    let c = ctx.corpus;
    derivation_case(
        out,
        &c.u,
        MarkerSet::new(refdata::MARKERS_U, Axis::E2),
        2,
        &c.v,
        &WITNESS_U_TO_V,
        &c.alpha,
        8,
    );
}

fn derivation_vw(ctx: &mut Context, out: &mut Outcome) {
    let c = ctx.corpus;
    derivation_case(
        out,
        &c.v,
        MarkerSet::new(refdata::MARKERS_V, Axis::E1),
        1,
        &c.w,
        &WITNESS_V_TO_W,
        &c.beta,
        6,
    );
}

fn equivalence(ctx: &mut Context, out: &mut Outcome) {
    let Some(e) = check_equivalence(&ctx.corpus.u, &ctx.corpus.w) else {
        out.check("U and W are equivalent", false);
        return;
    };
    out.check("U and W are equivalent", true);
    out.check("tile map is the identity", e.is_identity_on_tiles());
    out.check("vertical colors follow k", e.vertical == corpus::gamma_vertical());
    out.check("horizontal colors follow h", e.horizontal == corpus::gamma_horizontal());
}

fn printed_omega() -> Morphism2d {
    Morphism2d::from_columns(
        refdata::OMEGA_IMAGES
            .iter()
            .map(|cols| cols.iter().map(|c| c.to_vec()).collect())
            .collect(),
    )
    .expect("printed table is well formed")
}

fn omega_images(ctx: &mut Context, out: &mut Outcome) {
    let Some(omega) = omega_or_fail(ctx, out) else { return };
    let printed = printed_omega();
    let mismatched: Vec<usize> = (0..printed.domain_len())
        .filter(|&a| a >= omega.domain_len() || omega.image(a) != printed.image(a))
        .collect();
    out.check("domain has 19 letters", omega.domain_len() == 19);
    out.check(format!("all images as drawn (mismatches {mismatched:?})"), mismatched.is_empty());
    let mut shapes: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for w in omega.images() {
        *shapes.entry(w.shape()).or_default() += 1;
    }
    out.note(format!("shape multiset {shapes:?}"));
    let expected: BTreeMap<(usize, usize), usize> = [((1, 1), 2), ((2, 1), 6), ((1, 2), 4), ((2, 2), 7)].into();
    let mut drawn: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for w in printed.images() {
        *drawn.entry(w.shape()).or_default() += 1;
    }
    out.check("shape multiset 1x1:2 2x1:6 1x2:4 2x2:7", shapes == expected && drawn == expected);
    out.check(
        "omega(u18) = [[14,2],[8,0]]",
        omega.domain_len() > 18 && omega.image(18).columns() == [vec![14, 2], vec![8, 0]],
    );
}

fn phi_sum(terms: refdata::PhiSum) -> GoldenNumber {
    terms
        .iter()
        .map(|&(c, k)| GoldenNumber::phi_pow(k) * c)
        .sum()
}

fn phi_sum_inv(terms: refdata::PhiSum) -> GoldenNumber {
    terms
        .iter()
        .map(|&(c, k)| GoldenNumber::phi_pow(-k) * c)
        .sum()
}

fn spectral(ctx: &mut Context, out: &mut Outcome) {
    let Some(omega) = omega_or_fail(ctx, out) else { return };
    let m = omega.incidence_matrix();
    let printed = IntMatrix::from_i64(&refdata::INCIDENCE.iter().map(|r| r.to_vec()).collect::<Vec<_>>());
    out.check("incidence matrix equals the printed one", m == printed);
    let exponent = m.primitivity_exponent();
    out.note(format!("primitivity exponent {exponent:?}"));
    out.check("primitive with exponent 7", exponent == Some(refdata::PRIMITIVITY_EXPONENT));
    let claimed = refdata::CHAR_POLY_FACTORS
        .iter()
        .fold(IntPolynomial::one(), |acc, (f, e)| acc.mul(&IntPolynomial::from_i64(f).pow(*e)));
    match m.char_poly() {
        Ok(chi) => {
            out.note(format!("char poly {chi}"));
            out.check("char poly equals the expanded factorization", chi == claimed);
        }
        Err(e) => {
            out.check(format!("char poly ({e})"), false);
        }
    }
    let lambda = GoldenNumber::new(1, 1);
    match perron(&m, 1e-13) {
        Ok(p) => {
            let expected = (3.0 + 5f64.sqrt()) / 2.0;
            out.note(format!("Perron value {:.12}", p.value));
            out.check("Perron value (3+√5)/2 within 1e-9", (p.value - expected).abs() < 1e-9);
        }
        Err(e) => {
            out.check(format!("Perron value ({e})"), false);
        }
    }
    let right: Vec<GoldenNumber> = refdata::RIGHT_EIGENVECTOR.iter().map(|t| phi_sum(t)).collect();
    let left: Vec<GoldenNumber> = refdata::LEFT_EIGENVECTOR.iter().map(|t| phi_sum(t)).collect();
    out.check("printed right eigenvector, exact", golden_eigencheck(&m, lambda, &right, EigenSide::Right));
    out.check("printed left eigenvector, exact", golden_eigencheck(&m, lambda, &left, EigenSide::Left));
}

fn pattern_set() -> BTreeSet<Word2d> {
    refdata::PATTERNS_2X2
        .iter()
        .map(|rows| Word2d::from_cartesian_rows(&[rows[0].to_vec(), rows[1].to_vec()]).expect("2x2"))
        .collect()
}

/// The 2x2 language computed on fused tiles: trim `U ⊟¹ U`, trim the vertical
/// fusion of that with itself, keep the fused tiles admitting a surrounding
/// of radius 1 and split each back into a 2x2 pattern of `U`.
fn fused_route(u: &WangTileSet, out: &mut Outcome) -> Option<BTreeSet<Word2d>> {
    let h = trim_tileset(&fuse_sets(u, u, Axis::E1), Axis::E1);
    let sq = trim_tileset(&fuse_sets(&h, &h, Axis::E2), Axis::E2);
    out.note(format!("trimmed fusions: {} horizontal, {} square", h.len(), sq.len()));
    out.check("trimmed horizontal fusion has 35 tiles", h.len() == refdata::TRIMMED_HORIZONTAL);
    out.check("trimmed square fusion has 55 tiles", sq.len() == refdata::TRIMMED_SQUARE);
    let kept = patterns_with_surrounding(&sq, (1, 1), 1).ok()?;
    let mut by_tile: BTreeMap<WangTile, Vec<Word2d>> = BTreeMap::new();
    let n = u.len();
    for a in 0..n {
        for b in 0..n {
            let Some(ab) = u.tiles()[a].fuse(&u.tiles()[b], Axis::E1) else { continue };
            for c in 0..n {
                for d in 0..n {
                    let Some(cd) = u.tiles()[c].fuse(&u.tiles()[d], Axis::E1) else { continue };
                    if let Some(t) = ab.fuse(&cd, Axis::E2) {
                        let w = Word2d::new(vec![vec![a, c], vec![b, d]]).expect("2x2");
                        by_tile.entry(t).or_default().push(w);
                    }
                }
            }
        }
    }
    let mut unique = true;
    let mut result = BTreeSet::new();
    for p in kept {
        let tile = &sq.tiles()[p.get(0, 0)];
        match by_tile.get(tile).map(Vec::as_slice) {
            Some([w]) => {
                result.insert(w.clone());
            }
            _ => unique = false,
        }
    }
    out.check("every kept fused tile splits uniquely", unique);
    Some(result)
}

fn factors(ctx: &mut Context, out: &mut Outcome) {
    let Some(omega) = omega_or_fail(ctx, out).cloned() else { return };
    let factors = match omega.factors_2x2() {
        Ok(f) => f,
        Err(e) => {
            out.check(format!("factors of omega ({e})"), false);
            return;
        }
    };
    let printed = pattern_set();
    out.check("factors_2x2(omega) has 50 elements", factors.len() == 50);
    out.check("factors equal the printed list", factors == printed);
    let u = &ctx.corpus.u;
    for r in 1..=2 {
        match patterns_with_surrounding(u, (2, 2), r) {
            Ok(p) => {
                let p: BTreeSet<Word2d> = p.into_iter().collect();
                let extra: Vec<_> = p.difference(&factors).map(Word2d::cartesian_rows).collect();
                let missing: Vec<_> = factors.difference(&p).map(Word2d::cartesian_rows).collect();
                out.note(format!(
                    "radius {r}: {} patterns; extra {extra:?}; missing {missing:?}",
                    p.len()
                ));
                out.check(format!("patterns_with_surrounding(U, 2x2, {r}) equals the factors"), p == factors);
            }
            Err(e) => {
                out.check(format!("patterns_with_surrounding(U, 2x2, {r}) ({e})"), false);
            }
        }
    }
    if let Some(route) = fused_route(u, out) {
        out.check("fused-tile route gives the factors", route == factors);
    }
    let minimal = ctx.certificate().conclusion.minimal;
    out.check("certificate marks minimal", minimal);
}

fn fixed_point(ctx: &mut Context, out: &mut Outcome) {
    let Some(omega) = omega_or_fail(ctx, out) else { return };
    let w = match omega.iterate(4, 5) {
        Ok(w) => w,
        Err(e) => {
            out.check(format!("omega^5(u4) ({e})"), false);
            return;
        }
    };
    let u = &ctx.corpus.u;
    out.check("shape 13x8", w.shape() == refdata::FIXED_POINT_SHAPE);
    out.check("adjacency-valid in U", w.is_valid_pattern(u));
    let row = |y: usize, top: bool| -> String {
        (0..w.width())
            .map(|x| {
                let t = &u.tiles()[w.get(x, y)];
                if top { t.top.as_str() } else { t.bottom.as_str() }.to_string()
            })
            .collect()
    };
    let bottom = row(0, false);
    out.note(format!("bottom colors {bottom}"));
    out.check("bottom colors KOKPOKOKPOKPO", bottom == refdata::FIXED_POINT_BOTTOM);
    let run = Transducer::from_tileset(u).run(&"G".parse().expect("color"), &color_word(&bottom));
    let output = run.as_ref().map(|(o, end)| {
        (
            o.iter().map(|c| c.as_str()).collect::<String>(),
            end.as_str().to_string(),
        )
    });
    out.check(
        "transducer from G writes PLKPLPLKPLPPL and ends in G",
        output.as_ref().ok() == Some(&(refdata::FIXED_POINT_RUN_OUTPUT.to_string(), "G".to_string())),
    );
    out.check("that output is the top of the lowest row", row(0, true) == refdata::FIXED_POINT_RUN_OUTPUT);
}

const SIGNS: [(i8, i8); 4] = [(1, 1), (-1, 1), (1, -1), (-1, -1)];

fn prolongability(ctx: &mut Context, out: &mut Outcome) {
    let Some(omega) = omega_or_fail(ctx, out) else { return };
    let any = (0..omega.domain_len()).any(|a| SIGNS.iter().any(|&s| omega.is_prolongable(a, s)));
    out.check("omega prolongable on no letter and sign", !any);
    let square = match omega.power(2) {
        Ok(m) => m,
        Err(e) => {
            out.check(format!("omega^2 ({e})"), false);
            return;
        }
    };
    let expected = Word2d::new(refdata::OMEGA2_U16.iter().map(|c| c.to_vec()).collect()).expect("3x3");
    out.check("omega^2(u16) as assembled by hand", square.image(16) == &expected);
    let (w, h) = expected.shape();
    let corner = |s: i8, n: usize| if s > 0 { 0 } else { n - 1 };
    let mut agree = true;
    let mut signs = Vec::new();
    for s in SIGNS {
        let want = expected.get(corner(s.0, w), corner(s.1, h)) == 16;
        let got = square.is_prolongable(16, s);
        if got {
            signs.push(s);
        }
        agree &= want == got;
    }
    out.note(format!("omega^2 prolongable on u16 for signs {signs:?}"));
    out.check("omega^2 on u16 prolongable exactly at the corners holding u16", agree);
    out.check("not prolongable at (+1,+1)", !square.is_prolongable(16, (1, 1)));
}

fn frequency_table(ctx: &mut Context, out: &mut Outcome) {
    let Some(omega) = omega_or_fail(ctx, out) else { return };
    let f = match frequencies(&omega.incidence_matrix()) {
        Ok(f) => f,
        Err(e) => {
            out.check(format!("frequencies ({e})"), false);
            return;
        }
    };
    let two = GoldenNumber::int(2);
    let expected: Vec<GoldenFraction> = refdata::FREQUENCIES
        .iter()
        .map(|t| GoldenFraction::new(phi_sum_inv(t), two))
        .collect();
    out.check("exact vector matches the table", f.exact == expected);
    let printed_sum: GoldenNumber = refdata::FREQUENCIES.iter().map(|t| phi_sum_inv(t)).sum();
    let computed_sum: GoldenNumber = f.exact.iter().map(|q| q.num).sum();
    let den = f.exact.first().map(|q| q.den).unwrap_or(GoldenNumber::ONE);
    out.check(
        "exact sum is 1",
        printed_sum == two && f.exact.iter().all(|q| q.den == den) && computed_sum == den,
    );
    let round4 = |x: f64| (x * 1e4).round() / 1e4;
    let decimals_ok = refdata::FREQUENCY_DECIMALS.iter().all(|&(terms, value)| {
        let exact = GoldenFraction::new(phi_sum_inv(terms), two).to_f64();
        round4(exact) == value
            && refdata::FREQUENCIES
                .iter()
                .zip(&f.decimal)
                .filter(|(t, _)| **t == terms)
                .all(|(_, &d)| round4(d) == value)
    });
    out.check("decimals match the printed values to 4 places", decimals_ok);
    out.note(format!(
        "decimals {:?}",
        f.decimal.iter().map(|&d| round4(d)).collect::<Vec<_>>()
    ));
}

fn random_set(rng: &mut ChaCha8Rng) -> WangTileSet {
    let n = rng.gen_range(1..=4);
    let v = ["a", "b", "c"];
    let h = ["x", "y", "z"];
    let mut tiles = BTreeSet::new();
    while tiles.len() < n {
        let t = WangTile::from_tokens(
            v[rng.gen_range(0..2)],
            h[rng.gen_range(0..3)],
            v[rng.gen_range(0..2)],
            h[rng.gen_range(0..3)],
        )
        .expect("literal colors");
        tiles.insert(t);
    }
    WangTileSet::new(tiles.into_iter().collect()).expect("distinct")
}

/// Every assignment of tiles to the `w x h` cells, filtered by validity.
fn brute_force(set: &WangTileSet, w: usize, h: usize, pins: &Pins) -> Vec<Word2d> {
    let n = set.len();
    let cells = w * h;
    let total = n.pow(cells as u32);
    let mut out = Vec::new();
    for mut code in 0..total {
        let mut columns = vec![vec![0; h]; w];
        for c in 0..cells {
            columns[c / h][c % h] = code % n;
            code /= n;
        }
        let word = Word2d::new(columns).expect("rectangular");
        if pins.iter().all(|(&(x, y), &t)| word.get(x, y) == t) && word.is_valid_pattern(set) {
            out.push(word);
        }
    }
    out.sort();
    out
}

fn solver_oracle(out: &mut Outcome) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut agree = 0;
    let cases = 200;
    for case in 0..cases {
        let set = random_set(&mut rng);
        let (w, h) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let mut pins = Pins::new();
        if case % 2 == 1 {
            pins.insert((rng.gen_range(0..w), rng.gen_range(0..h)), rng.gen_range(0..set.len()));
        }
        let expected = brute_force(&set, w, h, &pins);
        let solver = TilingSolver::new(&set);
        let ok = solver.enumerate(w, h, &pins).ok() == Some(expected.clone())
            && solver.count(w, h, &pins).ok() == Some(expected.len() as u128)
            && solver.exists(w, h, &pins).ok() == Some(!expected.is_empty());
        if ok {
            agree += 1;
        } else {
            out.note(format!("solver disagrees on case {case}: {set:?} {w}x{h} pins {pins:?}"));
        }
    }
    out.check(format!("solver equals brute force on {cases} random cases ({agree} agree)"), agree == cases);
}

fn same_tiles(a: &WangTileSet, b: &WangTileSet) -> bool {
    a.tiles().iter().collect::<BTreeSet<_>>() == b.tiles().iter().collect::<BTreeSet<_>>()
}

fn fusion_identities(u: &WangTileSet, out: &mut Outcome) {
    let d = u.dual();
    out.check("dual is an involution", d.dual() == *u);
    out.check(
        "dual of a horizontal fusion is the vertical fusion of duals",
        same_tiles(&fuse_sets(u, u, Axis::E1).dual(), &fuse_sets(&d, &d, Axis::E2)),
    );
    let composed = Transducer::from_tileset(u).compose(&Transducer::from_tileset(u));
    out.check(
        "transducer composition is vertical fusion",
        composed
            .to_tileset()
            .is_ok_and(|t| same_tiles(&t, &fuse_sets(u, u, Axis::E2))),
    );
    out.check(
        "horizontal dominoes are vertical dominoes of the dual",
        dominoes_with_surrounding(u, Axis::E1, 1) == dominoes_with_surrounding(&d, Axis::E2, 1),
    );
}

fn morphism_laws(omega: &Morphism2d, ctx: &Context, out: &mut Outcome) {
    let u = &ctx.corpus.u;
    let Ok(words) = omega.factors_2x2() else {
        out.check("factors available for the morphism laws", false);
        return;
    };
    let Ok(square) = omega.power(2) else {
        out.check("omega^2 exists", false);
        return;
    };
    let mut hom = true;
    let mut comp = true;
    let mut valid = true;
    for w in words.iter().filter(|w| w.shape() == (2, 2)) {
        let left = w.factor_at(0, 0, 1, 2).expect("column");
        let right = w.factor_at(1, 0, 1, 2).expect("column");
        let bottom = w.factor_at(0, 0, 2, 1).expect("row");
        let top = w.factor_at(0, 1, 2, 1).expect("row");
        let image = omega.apply(w);
        let by_cols = omega
            .apply(&left)
            .and_then(|l| l.concat(&omega.apply(&right)?, Axis::E1));
        let by_rows = omega
            .apply(&bottom)
            .and_then(|b| b.concat(&omega.apply(&top)?, Axis::E2));
        hom &= image.is_ok() && image == by_cols && image == by_rows;
        let twice = image.as_ref().ok().map(|i| omega.apply(i));
        comp &= twice.is_some_and(|t| t.ok() == square.apply(w).ok());
        valid &= image.is_ok_and(|i| i.is_valid_pattern(u));
    }
    out.check("omega(x ⊙ y) = omega(x) ⊙ omega(y) in both directions", hom);
    out.check("omega^2 agrees with applying omega twice", comp);
    out.check("omega maps valid 2x2 patterns to valid patterns", valid);
    let c = ctx.corpus;
    let inc_ok = c
        .alpha
        .compose(&c.beta)
        .ok()
        .zip(c.alpha.incidence_matrix().mul(&c.beta.incidence_matrix()).ok())
        .is_some_and(|(ab, prod)| ab.incidence_matrix() == prod)
        && omega
            .incidence_matrix()
            .pow(2)
            .is_ok_and(|m2| m2 == square.incidence_matrix());
    out.check("incidence matrices multiply under composition", inc_ok);
}

fn golden_laws(out: &mut Outcome) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x901d);
    let mut g = || GoldenNumber::new(rng.gen_range(-60..=60), rng.gen_range(-60..=60));
    let mut ok = true;
    for _ in 0..500 {
        let (x, y, z) = (g(), g(), g());
        ok &= (x + y) + z == x + (y + z);
        ok &= (x * y) * z == x * (y * z);
        ok &= x * y == y * x;
        ok &= x * (y + z) == x * y + x * z;
        ok &= x + (-x) == GoldenNumber::ZERO;
        ok &= (x * y).norm() == x.norm() * y.norm();
        ok &= (x * y).conjugate() == x.conjugate() * y.conjugate();
    }
    ok &= GoldenNumber::PHI * GoldenNumber::PHI == GoldenNumber::PHI + GoldenNumber::ONE;
    ok &= (-12..=12).all(|n| GoldenNumber::phi_pow(n) * GoldenNumber::phi_pow(-n) == GoldenNumber::ONE);
    out.check("ring laws of Z[φ]", ok);
}

fn area_conservation(omega: &Morphism2d, out: &mut Outcome) {
    let g = StoneGeometry::for_u();
    let phi2 = GoldenNumber::phi_pow(2);
    let bad: Vec<usize> = (0..omega.domain_len())
        .filter(|&a| {
            !stone_layout(omega.image(a), &g).is_ok_and(|rects| total_area(&rects) == phi2 * g.area(a))
        })
        .collect();
    out.check(format!("image areas are φ² times the tile area (failures {bad:?})"), bad.is_empty());
}

fn properties(ctx: &mut Context, out: &mut Outcome) {
    solver_oracle(out);
    fusion_identities(&ctx.corpus.u, out);
    let mut rng = ChaCha8Rng::seed_from_u64(0xd0a1);
    let random_ok = (0..40).all(|_| {
        let a = random_set(&mut rng);
        let b = random_set(&mut rng);
        same_tiles(&fuse_sets(&a, &b, Axis::E1).dual(), &fuse_sets(&a.dual(), &b.dual(), Axis::E2))
            && dominoes_with_surrounding(&a, Axis::E1, 1) == dominoes_with_surrounding(&a.dual(), Axis::E2, 1)
    });
    out.check("fusion and domino duality on random sets", random_ok);
    if let Some(omega) = ctx.omega.clone() {
        morphism_laws(&omega, ctx, out);
        area_conservation(&omega, out);
    } else {
        out.check("omega can be built from the corpus", false);
    }
    golden_laws(out);
}

/// The certificate JSON with the timestamp blanked.
pub fn without_timestamp(c: &Certificate) -> String {
    let mut c = c.clone();
    c.generated_at.clear();
    c.to_json()
}

fn end_to_end(ctx: &mut Context, out: &mut Outcome) {
    let first = ctx.certificate().clone();
    let failed: Vec<&str> = first
        .steps
        .iter()
        .filter(|s| s.status != crate::certify::Status::Pass)
        .map(|s| s.claim.as_str())
        .collect();
    out.check(format!("every step passes (failing {failed:?})"), failed.is_empty());
    out.check("selfSimilar", first.conclusion.self_similar);
    out.check("aperiodic", first.conclusion.aperiodic);
    out.check("minimal", first.conclusion.minimal);
    let second = certify(&ctx.corpus.u, "U", &Plan::Auto);
    out.check(
        "byte-identical modulo timestamp",
        without_timestamp(&first) == without_timestamp(&second),
    );
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filter_semantics() {
        let ids: Vec<u8> = criteria().iter().filter(|c| c.matches("spectral")).map(|c| c.id).collect();
        assert_eq!(ids, vec![8, 12]);
        let ids: Vec<u8> = criteria().iter().filter(|c| c.matches("9")).map(|c| c.id).collect();
        assert_eq!(ids, vec![9]);
        assert!(criteria().iter().all(|c| !c.matches("nothing-like-this")));
    }

    #[test]
    fn brute_force_counts_free_row() {
        let set = WangTileSet::from_compact(&["ABAB"]).unwrap();
        assert_eq!(brute_force(&set, 3, 2, &Pins::new()).len(), 1);
        let set = WangTileSet::from_compact(&["AXAX", "AYAY"]).unwrap();
        // each column is constant, columns independent
        assert_eq!(brute_force(&set, 2, 2, &Pins::new()).len(), 4);
    }

    #[test]
    fn printed_patterns_are_distinct() {
        assert_eq!(pattern_set().len(), 50);
    }

    #[test]
    fn missing_corpus_names_the_file() {
        let dir = std::env::temp_dir().join("wang-suite-missing-corpus");
        let _ = std::fs::create_dir_all(&dir);
        let e = Corpus::load(&dir).unwrap_err();
        assert_eq!(e.file, "U.txt");
    }
}
