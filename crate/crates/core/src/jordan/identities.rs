use serde::Serialize;

use crate::alphabet::Alphabet;
use crate::bracket::{check_identity, f_comb_expr, BracketExpr as E, CheckMode, IdentityTemplate, IdentityVerdict};
use crate::perm::PermPolynomial;
use crate::rational::{int, ratio};

/// An expansion compared literally against an expected perm polynomial.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExpansionCheck {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub identities: Vec<IdentityVerdict>,
    pub expansions: Vec<ExpansionCheck>,
    pub all_hold: bool,
}

impl IdentityReport {
    fn new(identities: Vec<IdentityVerdict>, expansions: Vec<ExpansionCheck>) -> Self {
        let all_hold = identities.iter().all(|v| v.holds) && expansions.iter().all(|e| e.matches);
        Self { identities, expansions, all_hold }
    }

    pub fn failing(&self) -> Vec<&str> {
        let ids = self.identities.iter().filter(|v| !v.holds).map(|v| v.name.as_str());
        ids.chain(self.expansions.iter().filter(|e| !e.matches).map(|e| e.name.as_str())).collect()
    }
}

fn v(i: usize) -> E {
    E::var(i)
}

fn anti(a: E, b: E) -> E {
    E::anti(a, b)
}

fn checked(name: &str, lhs: E, rhs: E) -> IdentityVerdict {
    let t = IdentityTemplate::new(name, lhs, rhs).expect("slots are contiguous");
    check_identity(&t, CheckMode::Multilinear).expect("arity at most 6")
}

fn expansion(name: &str, expr: E, expected: &[(i64, &[u32])]) -> ExpansionCheck {
    let names = Alphabet::from_names(["a", "b", "c", "d"]).expect("valid names");
    let expected = PermPolynomial::from_words(expected.iter().map(|(c, w)| (int(*c), *w))).expect("valid words");
    let actual = expr.expand().expect("closed expression");
    ExpansionCheck {
        name: name.into(),
        expected: expected.render(&names),
        actual: actual.render(&names),
        matches: actual == expected,
    }
}

/// `{a,b} = {b,a}`, `{{a,b},{c,d}} = {{a,d},{b,c}}` and
/// `2<{a,b},c,d> = <{a,b},d,c> + <{a,c},b,d> + <{b,c},a,d>`, together with
/// the closed expansions of `{{a,b},{c,d}}` and `<{a,b},c,d>`.
pub fn verify_perm_plus_identities() -> IdentityReport {
    let (a, b, c, d) = (v(1), v(2), v(3), v(4));
    let identities = vec![
        checked("commutativity", anti(a.clone(), b.clone()), anti(b.clone(), a.clone())),
        checked(
            "pairing",
            anti(anti(a.clone(), b.clone()), anti(c.clone(), d.clone())),
            anti(anti(a.clone(), d.clone()), anti(b.clone(), c.clone())),
        ),
        checked(
            "associator",
            E::scale(int(2), E::associator(anti(a.clone(), b.clone()), c.clone(), d.clone())),
            E::sum([
                E::associator(anti(a.clone(), b.clone()), d.clone(), c.clone()),
                E::associator(anti(a.clone(), c.clone()), b.clone(), d.clone()),
                E::associator(anti(b, c), a, d),
            ]),
        ),
    ];
    let (x1, x2, x3, x4) = (E::gen(1), E::gen(2), E::gen(3), E::gen(4));
    let expansions = vec![
        expansion(
            "{{a,b},{c,d}}",
            anti(anti(x1.clone(), x2.clone()), anti(x3.clone(), x4.clone())),
            &[(2, &[1, 2, 3, 4]), (2, &[2, 1, 3, 4]), (2, &[3, 1, 2, 4]), (2, &[4, 1, 2, 3])],
        ),
        expansion(
            "<{a,b},c,d>",
            E::associator(anti(x1, x2), x3, x4),
            &[(-1, &[1, 2, 3, 4]), (-1, &[2, 1, 3, 4]), (2, &[4, 1, 2, 3])],
        ),
    ];
    IdentityReport::new(identities, expansions)
}

/// Word product in the Jordan reading: juxtaposition is the anticommutator.
fn lj(factors: &[E]) -> E {
    let mut it = factors.iter().cloned();
    let first = it.next().expect("nonempty");
    it.fold(first, anti)
}

fn f(a: E, b: E, c: E) -> E {
    f_comb_expr(a, b, c)
}

/// The defining identities of the free algebra J(X) and the relations
/// of the f-combination, each checked in the special representation.
pub fn verify_j_identities() -> IdentityReport {
    let (a, b, c, d, e) = (v(1), v(2), v(3), v(4), v(5));
    let half = || ratio(1, 2);
    let identities = vec![
        checked("ab = ba", lj(&[a.clone(), b.clone()]), lj(&[b.clone(), a.clone()])),
        checked(
            "(ab)(cd) = (ad)(bc)",
            anti(lj(&[a.clone(), b.clone()]), lj(&[c.clone(), d.clone()])),
            anti(lj(&[a.clone(), d.clone()]), lj(&[b.clone(), c.clone()])),
        ),
        checked(
            "(ab)(cd) = -2((ab)c)d + ((ab)d)c + ((ac)b)d + ((bc)a)d",
            anti(lj(&[a.clone(), b.clone()]), lj(&[c.clone(), d.clone()])),
            E::sum([
                E::scale(int(-2), lj(&[a.clone(), b.clone(), c.clone(), d.clone()])),
                lj(&[a.clone(), b.clone(), d.clone(), c.clone()]),
                lj(&[a.clone(), c.clone(), b.clone(), d.clone()]),
                lj(&[b.clone(), c.clone(), a.clone(), d.clone()]),
            ]),
        ),
        checked("f(a;b,c) = f(a;c,b)", f(a.clone(), b.clone(), c.clone()), f(a.clone(), c.clone(), b.clone())),
        checked(
            "(ab)c = f(a;b,c) + f(b;a,c) + 2f(c;a,b)",
            lj(&[a.clone(), b.clone(), c.clone()]),
            E::sum([
                f(a.clone(), b.clone(), c.clone()),
                f(b.clone(), a.clone(), c.clone()),
                E::scale(int(2), f(c.clone(), a.clone(), b.clone())),
            ]),
        ),
        checked(
            "f(a;b,cd) = f(a;bc,d)",
            f(a.clone(), b.clone(), lj(&[c.clone(), d.clone()])),
            f(a.clone(), lj(&[b.clone(), c.clone()]), d.clone()),
        ),
        checked(
            "f(a;b,c)d = 1/2 f(a;b,cd) + 1/2 f(d;a,bc)",
            anti(f(a.clone(), b.clone(), c.clone()), d.clone()),
            E::sum([
                E::scale(half(), f(a.clone(), b.clone(), lj(&[c.clone(), d.clone()]))),
                E::scale(half(), f(d.clone(), a.clone(), lj(&[b.clone(), c.clone()]))),
            ]),
        ),
        checked(
            "f(a;b,(cd)e) = f(a;b,c(de))",
            f(a.clone(), b.clone(), lj(&[c.clone(), d.clone(), e.clone()])),
            f(a, b, anti(c, lj(&[d, e]))),
        ),
    ];
    IdentityReport::new(identities, Vec::new())
}

/// Every identity the library knows to hold: the metabelian and
/// right-commutative identities and the two anticommutator suites.
pub fn identity_suite() -> IdentityReport {
    let (a, b, c, d) = (v(1), v(2), v(3), v(4));
    let mut identities = vec![
        checked("[[a,b],[c,d]] = 0", E::comm(E::comm(a.clone(), b.clone()), E::comm(c.clone(), d)), E::zero()),
        checked(
            "abc = acb",
            E::product([a.clone(), b.clone(), c.clone()]).expect("nonempty"),
            E::product([a, c, b]).expect("nonempty"),
        ),
    ];
    let plus = verify_perm_plus_identities();
    let j = verify_j_identities();
    identities.extend(plus.identities);
    identities.extend(j.identities);
    IdentityReport::new(identities, plus.expansions)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perm_plus_suite_holds() {
        let r = verify_perm_plus_identities();
        assert!(r.all_hold, "{:?}", r.failing());
        assert_eq!(r.identities.len(), 3);
        assert_eq!(r.expansions[1].actual, "-abcd - bacd + 2dabc");
    }

    #[test]
    fn j_suite_holds() {
        let r = verify_j_identities();
        assert!(r.all_hold, "{:?}", r.failing());
        assert_eq!(r.identities.len(), 8);
    }

    #[test]
    fn full_suite() {
        let r = identity_suite();
        assert!(r.all_hold);
        assert_eq!(r.identities.len(), 13);
    }

    #[test]
    fn broken_identity_is_reported() {
        let r = IdentityReport::new(
            vec![checked("ab = -ba", anti(v(1), v(2)), E::scale(int(-1), anti(v(2), v(1))))],
            Vec::new(),
        );
        assert!(!r.all_hold);
        assert_eq!(r.failing(), vec!["ab = -ba"]);
    }
}
