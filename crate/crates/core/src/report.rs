//! Bound reports: everything known about a group over a base field, with
//! provenance on every bound.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::ed::{
    ed_char_p_at_p, ed_local, interesting_flag, known_values, ledet_conditional_bound,
    provenance, psl2_literal_condition, EdBound, FieldContext, LedetBound,
};
use crate::error::Result;
use crate::families::{Family, GroupDescriptor};
use crate::nt::{prime_divisors, Prime};
use crate::sylow::{SylowClass, SylowTag};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SylowEntry {
    pub prime: u64,
    pub class: SylowTag,
    pub order: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<u32>,
    #[serde(skip)]
    pub description: String,
}

impl SylowEntry {
    fn new(prime: Prime, class: &SylowClass) -> Self {
        SylowEntry {
            prime: prime.get(),
            class: class.tag(),
            order: class.order(),
            rank: class.rank(),
            description: class.to_string(),
        }
    }
}

/// Field order is the JSON key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub group: String,
    pub order: u64,
    pub tame: BTreeMap<u64, bool>,
    pub weakly_tame: BTreeMap<u64, bool>,
    pub sylow: Vec<SylowEntry>,
    pub ed_local: Option<EdBound>,
    pub ledet_conditional: Option<LedetBound>,
    pub literal_condition: Option<BTreeMap<u64, u32>>,
    pub interesting: Option<bool>,
    pub known_values: Option<EdBound>,
    pub provenance: Vec<String>,
    pub field: String,
    pub ed_at_p: Option<EdBound>,
}

pub fn bound_report(g: &GroupDescriptor, ctx: FieldContext) -> Result<BoundReport> {
    let divisors = prime_divisors(g.order());
    let mut primes = divisors.clone();
    if let Ok(c) = Prime::new(ctx.characteristic()) {
        if !primes.contains(&c) {
            primes.push(c);
            primes.sort();
        }
    }

    let mut tame = BTreeMap::new();
    let mut weakly_tame = BTreeMap::new();
    for &l in &primes {
        tame.insert(l.get(), !g.order().is_multiple_of(l.get()));
        weakly_tame.insert(l.get(), g.structural_weakly_tame(l)?);
    }
    let sylow = divisors
        .iter()
        .map(|&l| Ok(SylowEntry::new(l, &g.sylow(l)?)))
        .collect::<Result<Vec<_>>>()?;

    let ledet_conditional = if ctx.is_char_zero() {
        Some(ledet_conditional_bound(g, ctx)?)
    } else {
        match (g.as_cyclic_prime_power(), ctx) {
            (Some((l, n)), FieldContext::CharP(p)) if l == p => Some(LedetBound {
                prime: Some(l),
                s: n,
                bound: EdBound::ledet_value(u64::from(n), &[provenance::LEDET_CYCLIC]),
            }),
            _ => None,
        }
    };

    let mut literal_condition = None;
    let mut interesting = None;
    if let (Family::Psl2 { p, r }, true) = (g.family(), ctx.is_char_zero()) {
        if p.get() != 2 {
            let q = p.get().pow(*r);
            let mut table = BTreeMap::new();
            for &l in divisors.iter().filter(|&&l| l != *p) {
                table.insert(l.get(), psl2_literal_condition(q, l)?);
            }
            literal_condition = Some(table);
        }
        let s = ledet_conditional.as_ref().map_or(0, |b| b.s);
        interesting = Some(interesting_flag(*p, *r, s));
    }

    let ed_at_p = match ctx {
        FieldContext::CharP(p) | FieldContext::CharPAtP(p) => Some(ed_char_p_at_p(g, p)),
        _ => None,
    };
    let ed_local = ed_local(g, ctx);
    let known_values = known_values(g, ctx);

    let mut prov: Vec<String> = Vec::new();
    let bounds = ed_local
        .iter()
        .chain(ledet_conditional.as_ref().map(|b| &b.bound))
        .chain(&known_values)
        .chain(&ed_at_p);
    for b in bounds {
        for s in &b.provenance {
            if !prov.contains(s) {
                prov.push(s.clone());
            }
        }
    }
    if literal_condition.is_some() {
        prov.push(provenance::LITERAL.to_string());
    }
    if interesting.is_some() {
        prov.push(provenance::INTERESTING.to_string());
    }

    Ok(BoundReport {
        group: g.to_string(),
        order: g.order(),
        tame,
        weakly_tame,
        sylow,
        ed_local,
        ledet_conditional,
        literal_condition,
        interesting,
        known_values,
        provenance: prov,
        field: ctx.to_string(),
        ed_at_p,
    })
}

impl BoundReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        let table = |m: &BTreeMap<u64, bool>| {
            m.iter()
                .map(|(l, b)| format!("{l}: {}", yes_no(*b)))
                .collect::<Vec<_>>()
                .join(", ")
        };
        let bound_line = |out: &mut String, label: &str, b: &EdBound| {
            let _ = writeln!(out, "{label}: {b}");
            for s in &b.provenance {
                let _ = writeln!(out, "    [{s}]");
            }
        };

        let _ = writeln!(out, "group: {}", self.group);
        let _ = writeln!(out, "order: {}", self.order);
        let _ = writeln!(out, "field: {}", self.field);
        let _ = writeln!(out, "tame: {}", table(&self.tame));
        let _ = writeln!(out, "weakly tame: {}", table(&self.weakly_tame));
        let _ = writeln!(out, "sylow:");
        for e in &self.sylow {
            let _ = writeln!(out, "  {}: {}", e.prime, e.description);
        }
        match &self.ed_local {
            Some(b) => bound_line(&mut out, "ed^loc", b),
            None => {
                let _ = writeln!(out, "ed^loc: no formula in scope");
            }
        }
        if let Some(b) = &self.ed_at_p {
            bound_line(&mut out, "ed at p", b);
        }
        match &self.ledet_conditional {
            Some(l) => {
                let label = match l.prime {
                    Some(p) => format!("Ledet-conditional (l = {p}, s = {}): ed", l.s),
                    None => "Ledet-conditional: ed".to_string(),
                };
                bound_line(&mut out, &label, &l.bound);
            }
            None => {
                let _ = writeln!(out, "Ledet-conditional: not applicable over {}", self.field);
            }
        }
        if let Some(t) = &self.literal_condition {
            let cells: Vec<String> = t.iter().map(|(l, s)| format!("l = {l}: s = {s}")).collect();
            let _ = writeln!(out, "literal condition: {}", cells.join(", "));
            let _ = writeln!(out, "    [{}]", provenance::LITERAL);
        }
        if let Some(i) = self.interesting {
            let _ = writeln!(out, "interesting: {}", yes_no(i));
            let _ = writeln!(out, "    [{}]", provenance::INTERESTING);
        }
        match &self.known_values {
            Some(b) => bound_line(&mut out, "known value: ed", b),
            None => {
                let _ = writeln!(out, "known value: none tabulated");
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn psl2_961() {
        let r = bound_report(&make_psl2(961).unwrap(), FieldContext::C).unwrap();
        assert_eq!(r.order, 443_751_360);
        assert_eq!(r.ed_local.as_ref().unwrap().lower, 2);
        let l = r.ledet_conditional.as_ref().unwrap();
        assert_eq!((l.prime.map(Prime::get), l.s, l.bound.lower), (Some(2), 5, 5));
        assert_eq!(r.interesting, Some(true));
        assert_eq!(r.literal_condition.as_ref().unwrap()[&2], 6);
        assert!(r.weakly_tame.values().all(|&b| b));
    }

    #[test]
    fn metacyclic_272() {
        let r = bound_report(&make_metacyclic(2, 4, 17).unwrap(), FieldContext::C).unwrap();
        assert_eq!(r.order, 272);
        assert_eq!(r.ed_local.as_ref().unwrap().lower, 1);
        assert_eq!(r.ledet_conditional.as_ref().unwrap().bound.lower, 4);
        assert!(!r.weakly_tame[&17]);
    }

    #[test]
    fn cyclic_8_in_characteristic_2() {
        let r = bound_report(&make_cyclic(8).unwrap(), FieldContext::CharP(Prime::new(2).unwrap()))
            .unwrap();
        let k = r.known_values.as_ref().unwrap();
        assert_eq!((k.lower, k.upper), (2, Some(3)));
        let l = r.ledet_conditional.as_ref().unwrap();
        assert_eq!((l.bound.lower, l.bound.upper, l.bound.conditional), (3, Some(3), true));
        assert_eq!(r.ed_at_p.as_ref().unwrap().lower, 1);
    }

    #[test]
    fn json_key_order() {
        let r = bound_report(&make_metacyclic(2, 2, 5).unwrap(), FieldContext::C).unwrap();
        let json = r.to_json();
        let keys = [
            "\"group\"",
            "\"order\"",
            "\"tame\"",
            "\"weakly_tame\"",
            "\"sylow\"",
            "\"ed_local\"",
            "\"ledet_conditional\"",
            "\"literal_condition\"",
            "\"interesting\"",
            "\"known_values\"",
            "\"provenance\"",
        ];
        let positions: Vec<usize> = keys
            .iter()
            .map(|k| json.find(&format!("\n  {k}:")).unwrap())
            .collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]), "{json}");
        assert_eq!(json, bound_report(&make_metacyclic(2, 2, 5).unwrap(), FieldContext::C).unwrap().to_json());
    }

    #[test]
    fn text_bound_lines_carry_provenance() {
        let r = bound_report(&make_psl2(65537).unwrap(), FieldContext::C).unwrap();
        let text = r.to_text();
        let lines: Vec<&str> = text.lines().collect();
        for (i, line) in lines.iter().enumerate() {
            if ["(exact)", "(conditional", "(unconditional)"].iter().any(|m| line.contains(m)) {
                assert!(lines[i + 1].trim_start().starts_with('['), "{line}");
            }
        }
        assert!(text.contains("s = 15"));
    }
}
