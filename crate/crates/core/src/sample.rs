//! Seeded random words, matrices and wedge classes for property checks.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::amalgam::{Factor, Letter};
use crate::gl2::{evaluate_generators, Generator, Mat2};
use crate::homology::{WedgeClass, WedgeMonomial};
use crate::nagao::{sl2z_factor, E2Zt};
use crate::ring::{Coeff, CoeffRing, Poly};

/// Shape of random samples.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleParams {
    pub max_len: usize,
    pub max_deg: usize,
    /// Integer coefficients are drawn from `-coeff_bound..=coeff_bound`.
    pub coeff_bound: i64,
}

impl Default for SampleParams {
    fn default() -> Self {
        SampleParams {
            max_len: 8,
            max_deg: 6,
            coeff_bound: 5,
        }
    }
}

pub fn random_poly<R: Rng + ?Sized>(rng: &mut R, ring: CoeffRing, max_deg: usize, coeff_bound: i64) -> Poly {
    let len = rng.gen_range(0..=max_deg + 1);
    let coeffs: Vec<i64> = match ring {
        CoeffRing::Integers => (0..len).map(|_| rng.gen_range(-coeff_bound..=coeff_bound)).collect(),
        CoeffRing::Mod(p) => (0..len).map(|_| rng.gen_range(0..p as i64)).collect(),
    };
    Poly::from_i64s(ring, &coeffs)
}

/// A random elementary generator; diagonal generators only over fields.
pub fn random_generator<R: Rng + ?Sized>(rng: &mut R, ring: CoeffRing, params: SampleParams) -> Generator {
    let kinds = if ring.is_field() { 4 } else { 3 };
    match rng.gen_range(0..kinds) {
        0 => Generator::E12(random_poly(rng, ring, params.max_deg, params.coeff_bound)),
        1 => Generator::E21(random_poly(rng, ring, params.max_deg, params.coeff_bound)),
        2 => Generator::W,
        _ => {
            let p = ring.modulus().expect("field");
            let u = rng.gen_range(1..p);
            Generator::Diag(Coeff::residue(&BigInt::from(u), p).expect("prime modulus"))
        }
    }
}

pub fn random_generator_word<R: Rng + ?Sized>(rng: &mut R, ring: CoeffRing, params: SampleParams) -> Vec<Generator> {
    let len = rng.gen_range(0..=params.max_len);
    (0..len).map(|_| random_generator(rng, ring, params)).collect()
}

/// A random element of `SL2(F_p[t])` as a product of random generators.
pub fn random_sl2fpt<R: Rng + ?Sized>(rng: &mut R, p: u64, params: SampleParams) -> Mat2 {
    let ring = CoeffRing::Mod(p);
    let word = random_generator_word(rng, ring, params);
    evaluate_generators(&word, ring).expect("generators share the ring")
}

fn random_sl2z<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Mat2 {
    let z = CoeffRing::Integers;
    let len = rng.gen_range(0..=4);
    let word: Vec<Generator> = (0..len)
        .map(|_| match rng.gen_range(0..3) {
            0 => Generator::E12(Poly::constant_i64(z, rng.gen_range(-bound..=bound))),
            1 => Generator::E21(Poly::constant_i64(z, rng.gen_range(-bound..=bound))),
            _ => Generator::W,
        })
        .collect();
    evaluate_generators(&word, z).expect("integer generators")
}

fn random_bzt<R: Rng + ?Sized>(rng: &mut R, params: SampleParams) -> Mat2 {
    let z = CoeffRing::Integers;
    let sign = *[1i64, -1].choose(rng).expect("nonempty");
    let f = random_poly(rng, z, params.max_deg, params.coeff_bound);
    let s = Poly::constant_i64(z, sign);
    Mat2::new(s.clone(), &s * &f, Poly::zero(z), s).expect("integer entries")
}

/// A random word of `E2(Z[t])` letters alternating at random between
/// `SL2(Z)` and `B(Z[t])`.
pub fn random_e2zt_word<R: Rng + ?Sized>(rng: &mut R, params: SampleParams) -> Vec<Letter> {
    let len = rng.gen_range(0..=params.max_len);
    (0..len)
        .map(|_| {
            if rng.gen_bool(0.5) {
                let m = random_sl2z(rng, params.coeff_bound);
                Letter::new(&E2Zt, Factor::One, m).expect("SL2(Z) letter")
            } else {
                Letter::new(&E2Zt, Factor::Two, random_bzt(rng, params)).expect("B(Z[t]) letter")
            }
        })
        .collect()
}

/// `E2(Z[t])` generator word for a random letter word: `SL2(Z)` letters are
/// factored, `B(Z[t])` letters become `(±I)·E12(f)`.
pub fn e2zt_generators(word: &[Letter]) -> Vec<Generator> {
    let mut out = Vec::new();
    for l in word {
        match l.factor() {
            Factor::One => out.extend(sl2z_factor(l.element()).expect("SL2(Z) letter")),
            Factor::Two => {
                let m = l.element();
                let u = m.a().constant_term();
                if !u.to_bigint().eq(&BigInt::from(1)) {
                    out.extend([Generator::W, Generator::W]);
                }
                out.push(Generator::E12(m.b().scale(&u).expect("integer scale")));
            }
        }
    }
    out
}

/// A random integral wedge class on exponents `1..=max_exp`.
pub fn random_wedge_class<R: Rng + ?Sized>(
    rng: &mut R,
    max_terms: usize,
    max_degree: usize,
    max_exp: u32,
) -> WedgeClass {
    let terms = rng.gen_range(0..=max_terms);
    let pool: Vec<u32> = (1..=max_exp).collect();
    let mut out = Vec::with_capacity(terms);
    for _ in 0..terms {
        let deg = rng.gen_range(0..=max_degree.min(pool.len()));
        let mut exps: Vec<u32> = pool.choose_multiple(rng, deg).copied().collect();
        exps.sort_unstable();
        let c = rng.gen_range(-30i64..=30);
        out.push((WedgeMonomial::new(exps).expect("sorted distinct"), BigInt::from(c)));
    }
    WedgeClass::from_terms(CoeffRing::Integers, out)
}
