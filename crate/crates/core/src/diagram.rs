//! Morse-position (1,1)-tangle diagrams: a vertical sequence of elementary
//! slices, their structural validation, the propagation of characters
//! through crossings, and path holonomy.
//!
//! Sections (horizontal cuts) are numbered 0 at the bottom; slice i maps
//! section i to section i+1. A segment is addressed by (section, position).
//! Cups create two new strands carrying one seed color; caps require their
//! two strands to carry equal colors. Crossings only ever involve two
//! upward strands; a crossing with a downward strand is expressed by the
//! cup-crossing-cap gadget the knot builders emit.

use crate::characters::{
    check_groupoid_relations, crossing_map, lower, upper, CentralCharacter, CharError,
    Holonomy2x2,
};
use crate::scalars::Field;
use std::collections::BTreeMap;
use thiserror::Error;

/// One elementary slice. Positions index the strand (pair) acted on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SliceKind {
    /// No-op used for the bare identity tangle.
    Id,
    /// Positive crossing of the upward strands at (pos, pos+1).
    Pos(usize),
    /// Negative crossing of the upward strands at (pos, pos+1).
    Neg(usize),
    /// Cup creating (up, down) at (pos, pos+1): coevaluation.
    CupL(usize),
    /// Cup creating (down, up): pivotal coevaluation.
    CupR(usize),
    /// Cap closing (down, up): evaluation.
    CapL(usize),
    /// Cap closing (up, down): pivotal evaluation.
    CapR(usize),
}

impl SliceKind {
    pub fn pos(&self) -> usize {
        match self {
            SliceKind::Id => 0,
            SliceKind::Pos(p)
            | SliceKind::Neg(p)
            | SliceKind::CupL(p)
            | SliceKind::CupR(p)
            | SliceKind::CapL(p)
            | SliceKind::CapR(p) => *p,
        }
    }
}

/// A (1,1)-tangle diagram in Morse position.
#[derive(Clone, Debug, PartialEq)]
pub struct MorseWord {
    pub slices: Vec<SliceKind>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orient {
    Up,
    Down,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DiagramError {
    #[error("structural errors: {0:?}")]
    Structural(Vec<String>),
    #[error("missing seed color for the cup at slice {slice} (segment {section}:{pos})")]
    MissingSeed { slice: usize, section: usize, pos: usize },
    #[error("inadmissible colors at crossing slice {0}")]
    Inadmissible(usize),
    #[error("crossing system degenerated at slice {0}")]
    NoSolution(usize),
    #[error("cap at slice {0} joins segments with different colors")]
    CapMismatch(usize),
    #[error("closure mismatch: top color differs from the bottom color")]
    ClosureMismatch,
    #[error("all seeds must carry the same fractional eigenvalue")]
    MuMismatch,
}

impl MorseWord {
    pub fn new(slices: Vec<SliceKind>) -> Self {
        MorseWord { slices }
    }

    /// Orientations of every section, or the list of structural errors.
    pub fn orientations(&self) -> Result<Vec<Vec<Orient>>, DiagramError> {
        let mut errs = vec![];
        let mut sections = vec![vec![Orient::Up]];
        for (i, s) in self.slices.iter().enumerate() {
            let below = sections.last().unwrap().clone();
            let w = below.len();
            let above = match *s {
                SliceKind::Id => below,
                SliceKind::Pos(p) | SliceKind::Neg(p) => {
                    if p + 1 >= w {
                        errs.push(format!("slice {i}: crossing at {p} exceeds width {w}"));
                        below
                    } else {
                        if below[p] != Orient::Up || below[p + 1] != Orient::Up {
                            errs.push(format!(
                                "slice {i}: crossing at {p} involves a downward strand"
                            ));
                        }
                        below
                    }
                }
                SliceKind::CupL(p) | SliceKind::CupR(p) => {
                    if p > w {
                        errs.push(format!("slice {i}: cup at {p} exceeds width {w}"));
                        below
                    } else {
                        let mut v = below;
                        let pair = if matches!(s, SliceKind::CupL(_)) {
                            [Orient::Up, Orient::Down]
                        } else {
                            [Orient::Down, Orient::Up]
                        };
                        v.splice(p..p, pair);
                        v
                    }
                }
                SliceKind::CapL(p) | SliceKind::CapR(p) => {
                    if p + 1 >= w {
                        errs.push(format!("slice {i}: cap at {p} exceeds width {w}"));
                        below
                    } else {
                        let want = if matches!(s, SliceKind::CapL(_)) {
                            [Orient::Down, Orient::Up]
                        } else {
                            [Orient::Up, Orient::Down]
                        };
                        if below[p] != want[0] || below[p + 1] != want[1] {
                            errs.push(format!(
                                "slice {i}: cap at {p} closes strands with wrong orientations"
                            ));
                        }
                        let mut v = below;
                        v.drain(p..p + 2);
                        v
                    }
                }
            };
            sections.push(above);
        }
        match sections.last() {
            Some(top) if top.len() == 1 && top[0] == Orient::Up => {}
            Some(top) => errs.push(format!(
                "top boundary must be a single upward strand, found width {}",
                top.len()
            )),
            None => unreachable!(),
        }
        if errs.is_empty() {
            Ok(sections)
        } else {
            Err(DiagramError::Structural(errs))
        }
    }

    pub fn validate(&self) -> Result<(), DiagramError> {
        self.orientations().map(|_| ())
    }

    /// Width of each section.
    pub fn widths(&self) -> Result<Vec<usize>, DiagramError> {
        Ok(self.orientations()?.iter().map(|s| s.len()).collect())
    }

    /// Signed crossing count (writhe of the underlying braid-like word).
    pub fn writhe(&self) -> i64 {
        self.slices
            .iter()
            .map(|s| match s {
                SliceKind::Pos(_) => 1,
                SliceKind::Neg(_) => -1,
                _ => 0,
            })
            .sum()
    }
}

/// Seed colors, keyed by segment id (section, position). The (1,1)-input
/// strand is (0, 0); each cup at slice i seeds segment (i + 1, p).
pub type Seeds<F> = BTreeMap<(usize, usize), CentralCharacter<F>>;

/// Complete coloring: one character per segment, one global mu.
#[derive(Clone, Debug)]
pub struct Coloring<F: Field> {
    pub sections: Vec<Vec<CentralCharacter<F>>>,
    pub mu: F::El,
}

impl<F: Field> Coloring<F> {
    pub fn color(&self, section: usize, pos: usize) -> &CentralCharacter<F> {
        &self.sections[section][pos]
    }
    /// Bottom boundary color of the open strand.
    pub fn boundary(&self) -> &CentralCharacter<F> {
        &self.sections[0][0]
    }
}

fn char_err(i: usize, e: CharError) -> DiagramError {
    match e {
        CharError::Inadmissible => DiagramError::Inadmissible(i),
        CharError::NoSolution => DiagramError::NoSolution(i),
        _ => DiagramError::Inadmissible(i),
    }
}

/// Propagate seed colors through the word bottom-to-top, checking
/// admissibility at crossings, color matching at caps, and the closure
/// condition at the top boundary.
pub fn propagate<F: Field>(
    f: &F,
    word: &MorseWord,
    seeds: &Seeds<F>,
) -> Result<Coloring<F>, DiagramError> {
    word.validate()?;
    let bottom = seeds
        .get(&(0, 0))
        .ok_or(DiagramError::MissingSeed { slice: 0, section: 0, pos: 0 })?;
    let mu = bottom.mu.clone();
    let mut sections: Vec<Vec<CentralCharacter<F>>> = vec![vec![bottom.clone()]];
    for (i, s) in word.slices.iter().enumerate() {
        let below = sections.last().unwrap().clone();
        let above = match *s {
            SliceKind::Id => below,
            SliceKind::Pos(p) | SliceKind::Neg(p) => {
                let sign = if matches!(s, SliceKind::Pos(_)) { 1 } else { -1 };
                let (chi3, chi4) = crossing_map(f, sign, &below[p], &below[p + 1])
                    .map_err(|e| char_err(i, e))?;
                let mut v = below;
                v[p] = chi4;
                v[p + 1] = chi3;
                v
            }
            SliceKind::CupL(p) | SliceKind::CupR(p) => {
                let seed = seeds.get(&(i + 1, p)).ok_or(DiagramError::MissingSeed {
                    slice: i,
                    section: i + 1,
                    pos: p,
                })?;
                if !f.eq_el(&seed.mu, &mu) {
                    return Err(DiagramError::MuMismatch);
                }
                let mut v = below;
                v.splice(p..p, [seed.clone(), seed.clone()]);
                v
            }
            SliceKind::CapL(p) | SliceKind::CapR(p) => {
                if !below[p].eq_full(f, &below[p + 1]) {
                    return Err(DiagramError::CapMismatch(i));
                }
                let mut v = below;
                v.drain(p..p + 2);
                v
            }
        };
        sections.push(above);
    }
    let top = &sections.last().unwrap()[0];
    if !top.eq_full(f, bottom) {
        return Err(DiagramError::ClosureMismatch);
    }
    Ok(Coloring { sections, mu })
}

/// Re-verify the groupoid relations at every crossing of a coloring. This is
/// the well-definedness of the holonomy representation.
pub fn groupoid_check<F: Field>(f: &F, word: &MorseWord, coloring: &Coloring<F>) -> bool {
    for (i, s) in word.slices.iter().enumerate() {
        match *s {
            SliceKind::Pos(p) | SliceKind::Neg(p) => {
                let sign = if matches!(s, SliceKind::Pos(_)) { 1 } else { -1 };
                let below = &coloring.sections[i];
                let above = &coloring.sections[i + 1];
                // above[p] is chi4, above[p+1] is chi3
                if !check_groupoid_relations(
                    f,
                    sign,
                    &below[p],
                    &below[p + 1],
                    &above[p + 1],
                    &above[p],
                ) {
                    return false;
                }
            }
            _ => {}
        }
    }
    true
}

/// One transverse intersection of a path with a diagram segment.
#[derive(Clone, Debug)]
pub struct PathStep {
    pub section: usize,
    pub pos: usize,
    /// true when the path passes above the strand
    pub over: bool,
    /// +1 for crossing an upward strand left-to-right
    pub dir: i8,
}

/// An ordered list of transverse intersections.
pub type DiagramPath = Vec<PathStep>;

/// Holonomy of a path: the ordered product of (chi^eta)^epsilon.
pub fn path_holonomy<F: Field>(
    f: &F,
    coloring: &Coloring<F>,
    path: &DiagramPath,
) -> Holonomy2x2<F> {
    let mut acc = Holonomy2x2::identity(f);
    for step in path {
        let chi = coloring.color(step.section, step.pos);
        let m = if step.over { upper(f, chi) } else { lower(f, chi) };
        let m = if step.dir >= 0 { m } else { m.inv(f).expect("holonomy invertible") };
        acc = acc.mul(f, &m);
    }
    acc
}
