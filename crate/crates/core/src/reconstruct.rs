//! Getting module representations back from signature data.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::bimodule::{mod_divides, ModuleElement, ModuleMonomial};
use crate::coeff::Coefficient;
use crate::error::Error;
use crate::index::LeadIndex;
use crate::poly::{first_reducer, Polynomial};
use crate::signatures::{
    build_index, regular_sreduce_indexed, trivial_syzygy, trivial_syzygy_signature, LabelledPolynomial, SigPolynomial,
};
use crate::word::Word;

/// The multiplier `a·g·b` with `a·s(g)·b = sigma` whose leading monomial is
/// smallest, over `partial` and the generators. Ties go to the earliest candidate,
/// partial results before generators.
fn best_multiple(
    sigma: &ModuleMonomial,
    partial: &[LabelledPolynomial],
    gens: &[Polynomial],
) -> Option<LabelledPolynomial> {
    let mut best: Option<(Word, LabelledPolynomial, Word, Word)> = None;
    let mut consider = |g: &LabelledPolynomial| {
        if g.poly.is_zero() {
            return;
        }
        if let Some((a, b)) = mod_divides(g.sig(), sigma) {
            let lm = g.lm().sandwich(a.letters(), b.letters());
            if best.as_ref().is_none_or(|(l, ..)| lm < *l) {
                best = Some((lm, g.clone(), a, b));
            }
        }
    };
    for g in partial {
        consider(g);
    }
    let i = sigma.index;
    if let Some(f) = gens.get(i) {
        consider(&LabelledPolynomial::generator(i, f.clone()));
    }
    best.map(|(_, g, a, b)| g.sandwich(a.letters(), b.letters()))
}

/// Rebuilds full labels for a minimal signature Gröbner basis.
///
/// Elements are processed by increasing signature. Each one is rebuilt from the
/// multiple `a·g·b` of signature `sigma` with the smallest leading monomial and then
/// regular top s-reduced by the labels rebuilt so far. The output is monic, sorted by
/// signature, and has the same leading monomials and signatures as the input.
pub fn sig2labelled(gsig: &[SigPolynomial], gens: &[Polynomial]) -> Result<Vec<LabelledPolynomial>, Error> {
    let mut order: Vec<&SigPolynomial> = gsig.iter().collect();
    order.sort_by(|a, b| a.sig().cmp(b.sig()));
    let mut out: Vec<LabelledPolynomial> = Vec::with_capacity(order.len());
    let mut index = LeadIndex::new();
    for f in order {
        let sigma = f.sig();
        check_index(sigma, gens.len())?;
        let start = best_multiple(sigma, &out, gens).ok_or_else(|| Error::NoMultiplier(format!("{sigma:?}")))?;
        let r = regular_sreduce_indexed(&start, &out, &index, true);
        if r.poly.is_zero() || r.lm() != f.lm() || r.sig() != sigma {
            return Err(Error::LeadingMonomialMismatch(format!("{sigma:?}")));
        }
        index.insert(r.lm().letters(), out.len());
        out.push(r.monic());
    }
    Ok(out)
}

/// Recovers one syzygy for each signature in `h`.
///
/// `gsig` and `h` must come from the same run of the signature pipeline. Each syzygy
/// is obtained by regular s-reducing the cheapest multiple of signature `sigma`
/// to zero; anything else is reported as an error.
pub fn syzygy_recovery(
    gsig: &[SigPolynomial],
    h: &[ModuleMonomial],
    gens: &[Polynomial],
) -> Result<Vec<ModuleElement>, Error> {
    let glab = sig2labelled(gsig, gens)?;
    syzygy_recovery_labelled(&glab, h, gens)
}

/// As [`syzygy_recovery`], reusing labels from [`sig2labelled`].
pub fn syzygy_recovery_labelled(
    glab: &[LabelledPolynomial],
    h: &[ModuleMonomial],
    gens: &[Polynomial],
) -> Result<Vec<ModuleElement>, Error> {
    let index = build_index(glab);
    let mut out = Vec::with_capacity(h.len());
    for sigma in h {
        check_index(sigma, gens.len())?;
        let start = best_multiple(sigma, glab, gens).ok_or_else(|| Error::NoMultiplier(format!("{sigma:?}")))?;
        let r = regular_sreduce_indexed(&start, glab, &index, false);
        if !r.poly.is_zero() || r.label.signature().ok() != Some(sigma) {
            return Err(Error::SyzygyNotRecovered(format!("{sigma:?}")));
        }
        out.push(r.label);
    }
    Ok(out)
}

fn check_index(sigma: &ModuleMonomial, count: usize) -> Result<(), Error> {
    if sigma.index >= count {
        return Err(Error::IndexOutOfRange { index: sigma.index, count });
    }
    Ok(())
}

/// One summand `c·a·f_i·b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateRow {
    pub coeff: Coefficient,
    pub left: Word,
    /// 0-based generator index.
    pub index: usize,
    pub right: Word,
}

/// `target = sum of c·a·f_i·b`, rows sorted by descending module monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub target: Polynomial,
    pub rows: Vec<CertificateRow>,
}

impl Certificate {
    pub fn from_element(target: Polynomial, e: &ModuleElement) -> Self {
        let rows = e
            .iter()
            .map(|(m, c)| CertificateRow {
                coeff: c.clone(),
                left: m.left.clone(),
                index: m.index,
                right: m.right.clone(),
            })
            .collect();
        Certificate { target, rows }
    }

    pub fn to_element(&self) -> ModuleElement {
        ModuleElement::from_terms(
            self.rows
                .iter()
                .map(|r| (ModuleMonomial::new(r.left.clone(), r.index, r.right.clone()), r.coeff.clone()))
                .collect(),
        )
    }

    /// Re-evaluates the rows with exact arithmetic.
    pub fn verify(&self, gens: &[Polynomial]) -> bool {
        let mut sum = Polynomial::zero();
        for r in &self.rows {
            let Some(f) = gens.get(r.index) else { return false };
            sum = sum.axpy(&r.coeff, f, |w| w.sandwich(r.left.letters(), r.right.letters()));
        }
        sum == self.target
    }
}

/// Writes `target` in terms of the generators by reducing it with the polynomial
/// parts of `glab` and collecting the labels used. `None` if the remainder is not
/// zero, i.e. membership cannot be shown with this basis.
pub fn certify(
    target: &Polynomial,
    glab: &[LabelledPolynomial],
    gens: &[Polynomial],
) -> Result<Option<Certificate>, Error> {
    if let Some(g) = glab.iter().find(|g| g.label.max_index().is_some_and(|i| i >= gens.len())) {
        return Err(Error::IndexOutOfRange { index: g.label.max_index().unwrap(), count: gens.len() });
    }
    let index = build_index(glab);
    let mut rest = target.clone();
    let mut acc = ModuleElement::zero();
    while let Some((w, c)) = rest.leading() {
        let Some((id, start)) = first_reducer(&index, w.letters(), |_| true) else { return Ok(None) };
        let g = &glab[id];
        let w = w.letters();
        let (a, b) = (w[..start].to_vec(), w[start + g.lm().len()..].to_vec());
        let q = c / &g.poly.lc();
        rest = rest.axpy(&-&q, &g.poly, |v| v.sandwich(&a, &b));
        acc = acc.axpy(&q, &g.label, |m| m.sandwich(&a, &b));
    }
    let cert = Certificate::from_element(target.clone(), &acc);
    if !cert.verify(gens) {
        return Err(Error::CertificateMismatch);
    }
    Ok(Some(cert))
}

/// Finite data describing the whole syzygy module: the recovered syzygies and a
/// basis whose pairwise trivial syzygies supply the rest.
#[derive(Clone, Debug)]
pub struct SyzygyBasisDescription {
    pub generators: Vec<Polynomial>,
    pub explicit: Vec<ModuleElement>,
    pub trivial_part: Vec<LabelledPolynomial>,
}

impl SyzygyBasisDescription {
    /// `|a| + deg(lm(f_i)) + |b|` for `sigma = a·e_i·b`.
    pub fn degree(&self, sigma: &ModuleMonomial) -> usize {
        let d = self.generators.get(sigma.index).and_then(|f| f.lm().ok()).map_or(0, |w| w.len());
        sigma.outer_len() + d
    }

    fn nvars(&self) -> u16 {
        let words = self.trivial_part.iter().flat_map(|g| {
            g.poly.support().cloned().chain(g.label.iter().flat_map(|(m, _)| [m.left.clone(), m.right.clone()]))
        });
        let gen_words = self.generators.iter().flat_map(|f| f.support().cloned());
        words.chain(gen_words).filter_map(|w| w.max_letter()).max().map_or(1, |m| m + 1)
    }
}

/// Every explicit syzygy and every trivial syzygy `gamma·m·g' - g·m·gamma'` of the
/// trivial part whose signature has degree at most `degree_bound`, skipping
/// signatures already produced. Explicit ones come first, then trivial ones by
/// increasing `|m|`.
pub fn enumerate_syzygy_basis(
    desc: &SyzygyBasisDescription,
    degree_bound: usize,
) -> impl Iterator<Item = ModuleElement> + '_ {
    let mut seen = BTreeSet::new();
    let n = desc.trivial_part.len();
    let nvars = desc.nvars();
    let explicit =
        desc.explicit.iter().filter(move |e| e.signature().is_ok_and(|s| desc.degree(s) <= degree_bound)).cloned();
    let trivial = (0..=degree_bound)
        .flat_map(move |len| words_of_len(nvars, len))
        .flat_map(move |m| (0..n * n).map(move |k| (k / n, k % n, m.clone())))
        .filter_map(move |(i, j, m)| {
            let (g, h) = (&desc.trivial_part[i], &desc.trivial_part[j]);
            let sig = trivial_syzygy_signature(g, h, &m)?;
            if desc.degree(&sig) > degree_bound {
                return None;
            }
            let e = trivial_syzygy(g, h, &m);
            (!e.is_zero()).then_some(e)
        });
    explicit.chain(trivial).filter(move |e| seen.insert(e.signature().unwrap().clone()))
}

fn words_of_len(nvars: u16, len: usize) -> impl Iterator<Item = Word> {
    let total = (nvars as usize).checked_pow(len as u32).unwrap_or(usize::MAX);
    (0..total).map(move |mut k| {
        let mut letters = alloc::vec![0u16; len];
        for slot in letters.iter_mut().rev() {
            *slot = (k % nvars as usize) as u16;
            k /= nvars as usize;
        }
        Word::from_letters(letters)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bimodule::testing::mm;
    use crate::engine::{labelledgb, siggb, EngineOptions};
    use crate::poly::testing::p;
    use crate::signatures::testing::gens3;

    fn gens4() -> Vec<Polynomial> {
        let mut g = gens3();
        g.push(p(&[(1, "xxy")]));
        g
    }

    #[test]
    fn labels_for_four_generators() {
        let g = gens4();
        let r = siggb(&g, &EngineOptions::default()).unwrap();
        let lab = sig2labelled(&r.basis, &g).unwrap();
        assert_eq!(lab.len(), 5);
        let direct = labelledgb(&g, &EngineOptions::default()).unwrap();
        for (a, b) in lab.iter().zip(&direct.basis) {
            assert!(a.is_consistent(&g));
            assert_eq!((a.lm(), a.sig()), (b.lm(), b.sig()));
        }
        let g0 = lab.iter().find(|l| l.sig() == &mm("y", 3, "")).unwrap();
        assert_eq!(g0.poly, p(&[(1, "yxxy")]));
    }

    #[test]
    fn single_generator_untouched() {
        let f = p(&[(1, "xyx"), (-1, "xy")]);
        let gsig = [SigPolynomial::generator(0, f.clone())];
        let lab = sig2labelled(&gsig, &[f.clone()]).unwrap();
        assert_eq!(lab, alloc::vec![LabelledPolynomial::generator(0, f)]);
    }

    #[test]
    fn corrupted_input_is_rejected() {
        let g = gens3();
        let bogus = [SigPolynomial::new(p(&[(1, "yyy")]), mm("", 2, ""))];
        assert!(sig2labelled(&bogus, &g).is_err());
        let bogus = [SigPolynomial::new(p(&[(1, "xy")]), mm("", 7, ""))];
        assert_eq!(sig2labelled(&bogus, &g), Err(Error::IndexOutOfRange { index: 6, count: 3 }));
        let r = siggb(&g, &EngineOptions::default().with_max_degree(5)).unwrap();
        // a signature nothing in the run produced as a syzygy
        assert!(syzygy_recovery(&r.basis, &[mm("", 1, "")], &g).is_err());
    }

    #[test]
    fn recovers_syzygies() {
        let g = gens4();
        let r = siggb(&g, &EngineOptions::default()).unwrap();
        let h = r.syzygy_signatures();
        assert!(!h.is_empty());
        let syz = syzygy_recovery(&r.basis, &h, &g).unwrap();
        assert_eq!(syz.len(), h.len());
        for (s, sigma) in syz.iter().zip(&h) {
            assert!(s.evaluate(&g).unwrap().is_zero());
            assert_eq!(s.signature().unwrap(), sigma);
        }
        assert!(syzygy_recovery(&r.basis, &[], &g).unwrap().is_empty());
    }

    #[test]
    fn example_syzygy_of_a22() {
        // spol(a22) is zero with label e2·xy - yx·e2, whose signature is yx·e2;
        // the criteria would skip it
        let g = gens3();
        let r = siggb(&g, &EngineOptions::plain().with_max_degree(6)).unwrap();
        let sigma = mm("yx", 2, "");
        assert!(r.syzygy_signatures().contains(&sigma));
        let s = syzygy_recovery(&r.basis, &[sigma.clone()], &g).unwrap().remove(0);
        assert_eq!(s.signature().unwrap(), &sigma);
        assert!(s.evaluate(&g).unwrap().is_zero());
    }

    #[test]
    fn certificates() {
        let g = gens3();
        let r = labelledgb(&g, &EngineOptions::default().with_max_degree(6)).unwrap();
        let c = certify(&p(&[(1, "xxy")]), &r.basis, &g).unwrap().unwrap();
        assert!(c.verify(&g));
        assert_eq!(c.to_element().evaluate(&g).unwrap(), p(&[(1, "xxy")]));
        let c = certify(&g[0], &r.basis, &g).unwrap().unwrap();
        assert_eq!(
            c.rows,
            alloc::vec![CertificateRow {
                coeff: Coefficient::one(),
                left: Word::empty(),
                index: 0,
                right: Word::empty()
            }]
        );
        assert_eq!(certify(&p(&[(1, "x")]), &r.basis, &g).unwrap(), None);
        let zero = certify(&Polynomial::zero(), &r.basis, &g).unwrap().unwrap();
        assert!(zero.rows.is_empty());
    }

    #[test]
    fn tampered_certificate_fails() {
        let g = gens3();
        let r = labelledgb(&g, &EngineOptions::default().with_max_degree(6)).unwrap();
        let mut c = certify(&p(&[(1, "xxy")]), &r.basis, &g).unwrap().unwrap();
        c.rows[0].coeff = &c.rows[0].coeff + &Coefficient::one();
        assert!(!c.verify(&g));
    }

    fn description(bound: usize) -> SyzygyBasisDescription {
        let g = gens4();
        let r = labelledgb(&g, &EngineOptions::default().with_max_degree(bound)).unwrap();
        SyzygyBasisDescription { generators: g, explicit: r.syzygies, trivial_part: r.basis }
    }

    #[test]
    fn enumerated_syzygies_vanish() {
        let d = description(6);
        let all: Vec<_> = enumerate_syzygy_basis(&d, 6).collect();
        assert!(all.len() > d.explicit.len());
        let mut sigs = BTreeSet::new();
        for e in &all {
            assert!(e.evaluate(&d.generators).unwrap().is_zero());
            assert!(d.degree(e.signature().unwrap()) <= 6);
            assert!(sigs.insert(e.signature().unwrap().clone()));
        }
    }

    #[test]
    fn low_bound_keeps_only_explicit() {
        let d = description(6);
        let min_trivial = (0..d.trivial_part.len())
            .flat_map(|i| (0..d.trivial_part.len()).map(move |j| (i, j)))
            .filter_map(|(i, j)| trivial_syzygy_signature(&d.trivial_part[i], &d.trivial_part[j], &Word::empty()))
            .map(|s| d.degree(&s))
            .min()
            .unwrap();
        let bound = min_trivial - 1;
        let got: Vec<_> = enumerate_syzygy_basis(&d, bound).collect();
        let want: Vec<_> = d.explicit.iter().filter(|e| d.degree(e.signature().unwrap()) <= bound).cloned().collect();
        assert_eq!(got.len(), {
            let mut s = BTreeSet::new();
            want.iter().filter(|e| s.insert(e.signature().unwrap().clone())).count()
        });
    }

    #[test]
    fn trivial_signature_count_matches_brute_force() {
        let d = SyzygyBasisDescription { explicit: Vec::new(), ..description(6) };
        let bound = 7;
        let got: BTreeSet<_> = enumerate_syzygy_basis(&d, bound).map(|e| e.signature().unwrap().clone()).collect();
        let mut want = BTreeSet::new();
        let n = d.trivial_part.len();
        for len in 0..=bound {
            for m in words_of_len(2, len) {
                for i in 0..n {
                    for j in 0..n {
                        let (g, h) = (&d.trivial_part[i], &d.trivial_part[j]);
                        if trivial_syzygy(g, h, &m).is_zero() {
                            continue;
                        }
                        if let Some(s) = trivial_syzygy_signature(g, h, &m) {
                            if d.degree(&s) <= bound {
                                want.insert(s);
                            }
                        }
                    }
                }
            }
        }
        assert_eq!(got, want);
    }
}
