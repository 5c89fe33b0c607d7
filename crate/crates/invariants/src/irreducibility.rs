use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Conclusion {
    Irreducible,
    Inconclusive,
}

/// One divisibility condition: `divisor | value`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub name: String,
    pub divisor: u64,
    pub value: u64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrreducibilityVerdict {
    pub conditions: Vec<Condition>,
    pub conclusion: Conclusion,
    pub reasons: Vec<String>,
}

impl IrreducibilityVerdict {
    pub fn condition(&self, name: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.name == name)
    }
}

fn cond(name: String, divisor: u64, value: u64) -> Condition {
    Condition { holds: value.is_multiple_of(divisor), name, divisor, value }
}

/// Condition for a trivial-knot factor: both parts must hold. `None` when
/// the A4 part holds and no A5 value is known.
fn eq1(conds: &[Condition]) -> Option<bool> {
    let a4 = conds.iter().find(|c| c.name == "eq1-A4").unwrap().holds;
    match conds.iter().find(|c| c.name == "eq1-A5") {
        Some(c) => Some(a4 && c.holds),
        None if !a4 => Some(false),
        None => None,
    }
}

fn any_holds(conds: &[Condition], prefix: &str) -> bool {
    conds.iter().any(|c| c.name.starts_with(prefix) && c.holds)
}

/// Divisibility test for irreducibility of an `(n,1)`-handlebody link
/// whose complement has rank at most `rank_bound`. Every rank from `n + 1`
/// (the abelian lower bound) up to the bound must be excluded by its rule:
/// rank 3 with n = 2 needs the trivial-knot condition to fail; rank 4 with
/// n = 2 needs the 2-generator-knot condition to fail for p = 0, 1; rank 4
/// with n = 3 and rank 5 with n = 4 need both the trivial-knot and the
/// 2-component 2-generator link conditions to fail.
pub fn irreducibility_test(ks_a4: u64, ks_a5: Option<u64>, n: u32, rank_bound: u32) -> IrreducibilityVerdict {
    assert!(n >= 2, "irreducibility test needs n >= 2");
    let p3 = 3u64.pow(n);
    let p4 = 4u64.pow(n);
    let p5 = 5u64.pow(n);
    let mut conditions = vec![cond("eq1-A4".into(), 12, ks_a4 + 6 * p3 + 2 * p4)];
    if let Some(a5) = ks_a5 {
        conditions.push(cond("eq1-A5".into(), 60, a5 + 14 * p4 + 19 * p3 + 22 * p5));
    }
    for p in 0..2u64 {
        conditions.push(cond(format!("eq2-p{}", p), 12 + 24 * p, ks_a4 + (6 + 16 * p) * p3 + (2 + 6 * p) * p4));
    }
    for p in 0..5u64 {
        conditions.push(cond(
            format!("eq3-p{}", p),
            48 + 24 * p,
            ks_a4 + (26 + 16 * p) * (p3 / 3) + (8 + 6 * p) * (p4 / 4),
        ));
    }
    let mut reasons = Vec::new();
    let mut irreducible = true;
    for rank in n + 1..=rank_bound.max(n + 1) {
        let excluded = match (n, rank) {
            (2, 3) => match eq1(&conditions) {
                Some(h) => !h,
                None => {
                    reasons.push("rank 3: eq1 undecided without an A5 value".into());
                    false
                }
            },
            (2, 4) => !any_holds(&conditions, "eq2-"),
            (3, 4) | (4, 5) => {
                let e1 = eq1(&conditions);
                if e1.is_none() {
                    reasons.push(format!("rank {}: eq1 undecided without an A5 value", rank));
                }
                e1 == Some(false) && !any_holds(&conditions, "eq3-")
            }
            _ => {
                reasons.push(format!("no rule for rank {} with n = {}", rank, n));
                false
            }
        };
        if !excluded {
            irreducible = false;
            reasons.push(format!("rank {} not excluded by divisibility", rank));
        }
    }
    let conclusion = if irreducible { Conclusion::Irreducible } else { Conclusion::Inconclusive };
    IrreducibilityVerdict { conditions, conclusion, reasons }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_rows() {
        let v = irreducibility_test(114, Some(600), 2, 3);
        assert_eq!(v.condition("eq1-A4").unwrap().value, 200);
        assert_eq!(v.conclusion, Conclusion::Irreducible);

        let v = irreducibility_test(502, Some(5883), 3, 4);
        assert!(v.condition("eq1-A4").unwrap().holds);
        assert_eq!(v.condition("eq1-A5").unwrap().value, 10042);
        assert!(!v.condition("eq1-A5").unwrap().holds);
        assert_eq!(v.conclusion, Conclusion::Inconclusive);

        let v = irreducibility_test(310, Some(1841), 3, 4);
        let c = v.condition("eq3-p0").unwrap();
        assert_eq!((c.value, c.holds), (672, true));
        assert_eq!(v.conclusion, Conclusion::Inconclusive);
    }

    #[test]
    fn missing_a5_is_inconclusive_only_when_needed() {
        assert_eq!(irreducibility_test(210, None, 2, 4).conclusion, Conclusion::Irreducible);
        // 106 passes the A4 half of eq1 at n = 2
        let v = irreducibility_test(106, None, 2, 3);
        assert_eq!(v.conclusion, Conclusion::Inconclusive);
        assert!(v.reasons.iter().any(|r| r.contains("A5")));
    }
}
