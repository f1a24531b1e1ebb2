use serde::Serialize;

use crate::moves::MoveTrace;

use super::facts::{applicable_fact, fact_delta, FactCounts};
use super::levels::alternating_levels;
use super::schematic::{CDiskError, CDiskSchematic, DiskKind, Side};

/// A width-decreasing sequence of swaps: no presentation with the starting
/// schematic is thin.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub fact: u8,
    pub region: usize,
    pub counts: FactCounts,
    pub total_delta: i64,
    pub moves: MoveTrace,
    pub start: CDiskSchematic,
    pub result: CDiskSchematic,
}

impl Certificate {
    /// Applies the recorded swaps to `start`.
    pub fn replay(&self) -> CDiskSchematic {
        let mut s = self.start.clone();
        for step in &self.moves.steps {
            s.events.swap(step.exchange - 1, step.exchange);
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub certificate: Option<Certificate>,
    /// Heuristic: the cut-disk may come from sliding a compressing disk.
    pub possibly_fake: bool,
}

/// Cut-disk whose tau arc on one side has no critical point and meets `P`
/// in that side's only strand.
pub fn possibly_fake(s: &CDiskSchematic) -> bool {
    if s.disk != DiskKind::Cut {
        return false;
    }
    let quiet = |side: Side| !s.events.iter().any(|e| e.on_tau() && e.side() == Some(side));
    (quiet(Side::Beta) && s.base.beta == 1) || (quiet(Side::Alpha) && s.base.alpha == 1)
}

/// The first region (from the top) whose Fact pattern fails, as a move
/// that strictly lowers the width.
pub fn thinness_certificate(s: &CDiskSchematic) -> Result<CertificateReport, CDiskError> {
    let levels = alternating_levels(s)?;
    let mut certificate = None;
    for i in 1..levels.n() {
        let Some(fact) = applicable_fact(s, &levels, i) else { continue };
        let report = fact_delta(s, fact, i)?;
        if !report.pattern_holds() && report.recomputed_delta < 0 {
            certificate = Some(Certificate {
                fact,
                region: i,
                counts: report.counts,
                total_delta: report.recomputed_delta,
                moves: report.moves,
                start: report.start,
                result: report.result,
            });
            break;
        }
    }
    Ok(CertificateReport { certificate, possibly_fake: possibly_fake(s) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cdisk::{SchematicEvent as E, SideCounts};

    #[test]
    fn violation_fixture_certifies() {
        let s = CDiskSchematic {
            disk: DiskKind::Compress,
            base: SideCounts::new(0, 2),
            top: SideCounts::default(),
            inside: Side::Beta,
            events: vec![E::min(Side::Alpha), E::max(Side::Alpha), E::min(Side::Beta), E::max(Side::Beta), E::max(Side::Beta)],
        };
        let c = thinness_certificate(&s).unwrap().certificate.unwrap();
        assert_eq!(c.total_delta, -4);
        assert_eq!(c.replay(), c.result);
        assert!(c.result.check().is_ok());
        assert_eq!(c.result.relative_width() + 4, s.relative_width());
    }

    #[test]
    fn fake_flag() {
        let s = CDiskSchematic {
            disk: DiskKind::Cut,
            base: SideCounts::new(1, 1),
            top: SideCounts::default(),
            inside: Side::Alpha,
            events: vec![E::Transfer, E::max(Side::Alpha).tau()],
        };
        let r = thinness_certificate(&s).unwrap();
        assert!(r.possibly_fake);
        assert!(r.certificate.is_none());
    }
}
