use super::*;
use crate::amalgam::{nf_evaluate, nf_invert, nf_length, nf_multiply, normalize};

const Z: CoeffRing = CoeffRing::Integers;

fn fp(p: u64) -> CoeffRing {
    CoeffRing::Mod(p)
}

fn mat(s: &str, ring: CoeffRing) -> Mat2 {
    Mat2::parse(s, ring).unwrap()
}

fn gen(s: &str, ring: CoeffRing) -> Generator {
    Generator::parse(s, ring).unwrap()
}

#[test]
fn same_factor_letters_merge() {
    let s = NagaoFp::new(3).unwrap();
    let word = letters_from_generators(&s, &[gen("E12(t)", fp(3)), gen("E12(t^2)", fp(3))]).unwrap();
    let nf = normalize(&s, &word).unwrap();
    assert!(nf.head().is_identity());
    assert_eq!(nf.tail().len(), 1);
    assert_eq!(nf.tail()[0].element(), &mat("[[1, t + t^2], [0, 1]]", fp(3)));
    assert_eq!(nf.tail()[0].factor(), Factor::Two);
}

#[test]
fn cancelling_pair_vanishes() {
    let s = NagaoFp::new(5).unwrap();
    let w = Generator::W.matrix(fp(5)).unwrap();
    let word = vec![
        Letter::new(&s, Factor::One, w.clone()).unwrap(),
        Letter::new(&s, Factor::One, w.adjugate()).unwrap(),
    ];
    assert!(normalize(&s, &word).unwrap().is_identity());
}

#[test]
fn lower_unipotent_has_length_three() {
    let s = NagaoFp::new(2).unwrap();
    let word = letters_from_generators(&s, &[gen("E21(t)", fp(2))]).unwrap();
    assert_eq!(word.len(), 3);
    let nf = normalize(&s, &word).unwrap();
    assert_eq!(nf_length(&nf), 3);
    assert_eq!(nf.tags(), vec![1, 2, 1]);
    assert_eq!(nf_evaluate(&nf), mat("[[1, 0], [t, 1]]", fp(2)));
    let w = Generator::W.matrix(fp(2)).unwrap();
    assert_eq!(nf.tail()[0].element(), &w);
    assert_eq!(nf.tail()[1].element(), &mat("[[1, t], [0, 1]]", fp(2)));
    assert_eq!(nf.tail()[2].element(), &w);
}

#[test]
fn group_law_examples() {
    let s = NagaoFp::new(2).unwrap();
    let e = normalize(&s, &letters_from_generators(&s, &[gen("E12(t)", fp(2))]).unwrap()).unwrap();
    let w = normalize(&s, &letters_from_generators(&s, &[Generator::W]).unwrap()).unwrap();
    let id = NormalForm::identity(&s);
    assert_eq!(nf_multiply(&s, &e, &id).unwrap(), e);
    assert!(nf_multiply(&s, &e, &nf_invert(&s, &e).unwrap()).unwrap().is_identity());
    let ew = nf_multiply(&s, &e, &w).unwrap();
    assert_eq!(ew.len(), 2);
    assert_eq!(nf_evaluate(&ew), &nf_evaluate(&e) * &nf_evaluate(&w));
    assert_eq!(nf_evaluate(&ew), mat("[[t, 1], [1, 0]]", fp(2)));
}

#[test]
fn inversion_examples() {
    let s = NagaoFp::new(7).unwrap();
    let id = NormalForm::identity(&s);
    assert!(nf_invert(&s, &id).unwrap().is_identity());
    let f = "3*t + t^4";
    let e = normalize(
        &s,
        &letters_from_generators(&s, &[gen(&format!("E12({f})"), fp(7))]).unwrap(),
    )
    .unwrap();
    let inv = nf_invert(&s, &e).unwrap();
    assert_eq!(inv.len(), 1);
    assert_eq!(inv.tail()[0].element(), &mat("[[1, -3*t - t^4], [0, 1]]", fp(7)));
}

#[test]
fn structure_mismatch_is_rejected() {
    let s2 = NagaoFp::new(2).unwrap();
    let s3 = NagaoFp::new(3).unwrap();
    let x = NormalForm::identity(&s2);
    assert!(matches!(
        nf_multiply(&s3, &x, &x),
        Err(AmalgamError::StructureMismatch(..))
    ));
}

#[test]
fn invalid_letters_are_rejected() {
    let s = NagaoFp::new(3).unwrap();
    let lower = mat("[[1, 0], [t, 1]]", fp(3));
    assert!(Letter::new(&s, Factor::Two, lower.clone()).is_err());
    assert!(Letter::new(&s, Factor::One, lower).is_err());
    assert!(Letter::new(&E2Zt, Factor::One, mat("[[2, 1], [1, 1]]", fp(3))).is_err());
}

#[test]
fn nagao_examples() {
    for p in [2u64, 3, 5] {
        let id = nagao_normal_form(p, &Mat2::identity(fp(p))).unwrap();
        assert!(id.is_identity());
        let e = nagao_normal_form(p, &mat("[[1, t], [0, 1]]", fp(p))).unwrap();
        assert!(e.head().is_identity());
        assert_eq!(e.len(), 1);
        assert_eq!(e.tail()[0].element(), &mat("[[1, t], [0, 1]]", fp(p)));
    }
    let lower = mat("[[1, 0], [t, 1]]", fp(2));
    let s = NagaoFp::new(2).unwrap();
    let a = nagao_nf_via_factorization(&s, &lower).unwrap();
    let b = nagao_nf_via_degree_reduction(&s, &lower).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.len(), 3);
    assert_eq!(nf_evaluate(&a), lower);
}

#[test]
fn nagao_rejects_bad_input() {
    assert!(matches!(
        nagao_normal_form(3, &mat("[[t, 0], [0, 1]]", fp(3))),
        Err(NagaoError::Matrix(Gl2Error::DetNotOne(_)))
    ));
    assert!(matches!(
        nagao_normal_form(3, &Mat2::identity(fp(5))),
        Err(NagaoError::WrongRing { .. })
    ));
    assert!(nagao_normal_form(4, &Mat2::identity(fp(5))).is_err());
}

#[test]
fn constant_borel_has_length_zero() {
    for (p, m) in [(5u64, [[2, 4], [0, 3]]), (3, [[2, 1], [0, 2]]), (2, [[1, 1], [0, 1]])] {
        let x = Mat2::from_i64(fp(p), m);
        assert!(in_constant_borel(&x));
        let nf = nagao_normal_form(p, &x).unwrap();
        assert_eq!(nf.len(), 0);
        assert_eq!(nf.head(), &x);
    }
    let w = Generator::W.matrix(fp(5)).unwrap();
    assert_eq!(nagao_normal_form(5, &w).unwrap().len(), 1);
}

#[test]
fn e2zt_examples() {
    for k in 1..4 {
        let x = format!("E12(t^{k})");
        let word = letters_from_generators(&E2Zt, &[gen(&x, Z)]).unwrap();
        let nf = e2zt_normal_form(&word).unwrap();
        assert!(nf.head().is_identity());
        assert_eq!(nf.len(), 1);
        assert_eq!(
            nf.tail()[0].element(),
            &Generator::E12(Poly::monomial(Z, 1, k)).matrix(Z).unwrap()
        );
    }
    let ww = letters_from_generators(&E2Zt, &[Generator::W, Generator::W]).unwrap();
    let nf = e2zt_normal_form(&ww).unwrap();
    assert_eq!(nf.head(), &Mat2::from_i64(Z, [[-1, 0], [0, -1]]));
    assert!(nf.is_empty());
}

#[test]
fn e2zt_sl2z_letters_use_canonical_completion() {
    // [[2, 1], [1, 1]] = [[1, 2], [0, 1]] · [[0, -1], [1, 1]]
    let word = vec![Letter::new(&E2Zt, Factor::One, Mat2::from_i64(Z, [[2, 1], [1, 1]])).unwrap()];
    let nf = e2zt_normal_form(&word).unwrap();
    assert_eq!(nf.head(), &Mat2::from_i64(Z, [[1, 2], [0, 1]]));
    assert_eq!(nf.tail()[0].element(), &Mat2::from_i64(Z, [[0, -1], [1, 1]]));
}

#[test]
fn phi_examples() {
    // g_{2,1} = E21(-2) · E12(-t)
    let g = letters_from_generators(&E2Zt, &[gen("E21(-2)", Z), gen("E12(-t)", Z)]).unwrap();
    assert_eq!(evaluate_word(Z, &g), mat("[[1, -t], [-2, 1 + 2*t]]", Z));
    let (m, nf) = phi_p(&g, 2).unwrap();
    assert_eq!(m, mat("[[1, -t], [0, 1]]", fp(2)));
    assert_eq!(nf.len(), 1);
    assert_eq!(nf.tail()[0].element(), &mat("[[1, -t], [0, 1]]", fp(2)));
    assert_eq!(phi_p_letterwise(&g, 2).unwrap(), nf);

    let x = letters_from_generators(&E2Zt, &[gen("E12(t^2)", Z)]).unwrap();
    let (m, nf) = phi_p(&x, 5).unwrap();
    assert_eq!(m, mat("[[1, t^2], [0, 1]]", fp(5)));
    assert_eq!(nf.len(), 1);

    let h = mat("[[1 + 2*t, t^3], [8, 1 - 2*t + 4*t^2]]", Z);
    let nf = nagao_normal_form(2, &h.reduce_mod_p(2).unwrap()).unwrap();
    assert_eq!(nf_evaluate(&nf), mat("[[1, t^3], [0, 1]]", fp(2)));
    assert_eq!(nf.len(), 1);
}
