#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use structura::matrix::{PolyMatrix, RationalMatrix};
use structura::poly::{rat, split_over_rationals, Poly, RatFn};
use structura::structure::{extract_poly_structure, extract_rational_structure, PolyStructuralData};
use structura::synth::{Invariants, Prescription, SpanData, Variant};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize, range: i64) -> Poly {
    let d = rng.gen_range(0..=max_deg);
    Poly::from_coeffs((0..=d).map(|_| rat(rng.gen_range(-range..=range))).collect())
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, max_deg: usize) -> PolyMatrix {
    PolyMatrix::from_fn(rows, cols, |_, _| if rng.gen_bool(0.3) { Poly::zero() } else { random_poly(rng, max_deg, 2) })
}

/// Random `m × n` matrix of rank at most `r`, built as a product through an `r`-dimensional middle.
pub fn random_low_rank(rng: &mut ChaCha8Rng, m: usize, n: usize, r: usize, max_deg: usize) -> PolyMatrix {
    let left = random_matrix(rng, m, r, max_deg.min(1));
    let right = random_matrix(rng, r, n, max_deg);
    &left * &right
}

/// Random nonzero matrix with every invariant factor split over the rationals.
pub fn random_split_matrix(rng: &mut ChaCha8Rng, max_dim: usize, max_deg: usize) -> (PolyMatrix, PolyStructuralData) {
    loop {
        let m = rng.gen_range(1..=max_dim);
        let n = rng.gen_range(1..=max_dim);
        let r = if rng.gen_bool(0.7) { m.min(n) } else { rng.gen_range(1..=m.min(n)) };
        let a = random_low_rank(rng, m, n, r, max_deg);
        if a.is_zero() {
            continue;
        }
        let sd = extract_poly_structure(&a).expect("extraction succeeds");
        if sd.invariant_factors.last().map_or(true, |p| split_over_rationals(p).is_split()) {
            return (a, sd);
        }
    }
}

pub fn prescription_from(sd: &PolyStructuralData, variant: Variant) -> Prescription {
    let span = match variant {
        Variant::P1Spans => SpanData::Bases { k: sd.colspan_basis.clone(), lt: sd.rowspan_basis.clone() },
        Variant::Eigenstructure => SpanData::Absent,
        _ => SpanData::Indices { k: sd.colspan_indices.clone(), l: sd.rowspan_indices.clone() },
    };
    let nulls = variant.has_null_indices();
    Prescription {
        variant,
        m: sd.m,
        n: sd.n,
        r: sd.rank,
        invariants: Invariants::Polynomial {
            degree: sd.degree,
            alpha: sd.invariant_factors.clone(),
            f: sd.inf_partial_mults.clone(),
        },
        span,
        right: if nulls { sd.right_indices.clone() } else { vec![] },
        left: if nulls { sd.left_indices.clone() } else { vec![] },
    }
}

/// Random rational matrix `A / q` with split denominators.
pub fn random_rational(rng: &mut ChaCha8Rng, max_dim: usize) -> RationalMatrix {
    loop {
        let (a, _) = random_split_matrix(rng, max_dim, 2);
        let roots = [0, 1, -1, 2];
        let den = (0..rng.gen_range(0..=2)).fold(Poly::one(), |acc, _| &acc * &Poly::linear(&rat(roots[rng.gen_range(0..4)])));
        let entries: Vec<RatFn> = a.entries().iter().map(|e| RatFn::new(e.clone(), den.clone()).unwrap()).collect();
        let r = RationalMatrix::from_entries(a.rows(), a.cols(), entries);
        let sd = extract_rational_structure(&r).expect("extraction succeeds");
        if sd.numerators.last().map_or(true, |p| split_over_rationals(p).is_split()) {
            return r;
        }
    }
}

pub fn rational_prescription_from(r: &RationalMatrix, variant: Variant) -> Prescription {
    let sd = extract_rational_structure(r).unwrap();
    let span = match variant {
        Variant::R1Spans => SpanData::Bases { k: sd.colspan_basis.clone(), lt: sd.rowspan_basis.clone() },
        _ => SpanData::Indices { k: sd.colspan_indices.clone(), l: sd.rowspan_indices.clone() },
    };
    let nulls = variant.has_null_indices();
    Prescription {
        variant,
        m: sd.m,
        n: sd.n,
        r: sd.rank,
        invariants: Invariants::Rational { eps: sd.numerators.clone(), psi: sd.denominators.clone(), q: sd.inf_orders.clone() },
        span,
        right: if nulls { sd.right_indices.clone() } else { vec![] },
        left: if nulls { sd.left_indices.clone() } else { vec![] },
    }
}

/// Random unimodular matrix as a product of elementary operations.
pub fn random_unimodular(rng: &mut ChaCha8Rng, n: usize, steps: usize) -> PolyMatrix {
    let mut u = PolyMatrix::identity(n);
    if n < 2 {
        return u;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let factor = random_poly(rng, 1, 2);
        u.add_row_multiple(i, j, &factor);
    }
    u
}

/// Divisibility chain of `r` monic polynomials with roots in a small set.
pub fn random_chain(rng: &mut ChaCha8Rng, r: usize, max_step: usize) -> Vec<Poly> {
    let roots = [0, 1, -1, 2];
    let mut cur = Poly::one();
    (0..r)
        .map(|_| {
            for _ in 0..rng.gen_range(0..=max_step) {
                cur = &cur * &Poly::linear(&rat(roots[rng.gen_range(0..roots.len())]));
            }
            cur.clone()
        })
        .collect()
}

/// `U · [D 0; 0 0] · V` with unimodular `U`, `V` and `D` a random chain.
pub fn random_designed(rng: &mut ChaCha8Rng, max_dim: usize) -> (PolyMatrix, PolyStructuralData) {
    let m = rng.gen_range(1..=max_dim);
    let n = rng.gen_range(1..=max_dim);
    let r = rng.gen_range(1..=m.min(n));
    let d = PolyMatrix::diagonal(m, n, &random_chain(rng, r, 2));
    let a = &(&random_unimodular(rng, m, 3) * &d) * &random_unimodular(rng, n, 3);
    let sd = extract_poly_structure(&a).expect("extraction succeeds");
    (a, sd)
}

/// Random non-increasing sequence of `len` non-negative integers summing to `total`.
pub fn random_partition(rng: &mut ChaCha8Rng, total: usize, len: usize) -> Vec<usize> {
    let mut parts = vec![0; len];
    if len == 0 {
        return parts;
    }
    for _ in 0..total {
        parts[rng.gen_range(0..len)] += 1;
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

fn random_desc(rng: &mut ChaCha8Rng, len: usize, max: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (0..len).map(|_| rng.gen_range(0..=max)).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Chain `α_1 | … | α_r` with prescribed ascending degrees and roots in `roots`.
pub fn random_chain_with_degrees(rng: &mut ChaCha8Rng, degrees: &[usize], roots: &[i64]) -> Vec<Poly> {
    let mut cur = Poly::one();
    let mut prev = 0;
    degrees
        .iter()
        .map(|&d| {
            for _ in prev..d {
                cur = &cur * &Poly::linear(&rat(roots[rng.gen_range(0..roots.len())]));
            }
            prev = d;
            cur.clone()
        })
        .collect()
}

/// Minimal basis with column degrees `degs` in generic position: the bidiagonal
/// basis under a random constant row change and degree-compatible column operations.
pub fn random_minimal_basis(rng: &mut ChaCha8Rng, degs: &[usize], ambient: usize) -> PolyMatrix {
    let mut b = structura::synth::build_minimal_basis(degs, ambient).unwrap();
    let t = loop {
        let t = PolyMatrix::from_fn(ambient, ambient, |i, j| {
            if i == j { Poly::one() } else if rng.gen_bool(0.5) { Poly::constant(rat(rng.gen_range(-2..=2))) } else { Poly::zero() }
        });
        if !structura::matrix::det(&t).is_zero() {
            break t;
        }
    };
    b = &t * &b;
    for i in 0..degs.len() {
        for j in 0..degs.len() {
            if i != j && degs[i] >= degs[j] && rng.gen_bool(0.5) {
                let factor = Poly::monomial(rat(rng.gen_range(-2..=2)), degs[i] - degs[j]);
                b.add_col_multiple(i, j, &factor);
            }
        }
    }
    b
}

/// Random feasible prescription of a polynomial variant whose invariant factors split.
pub fn random_feasible_poly(rng: &mut ChaCha8Rng, variant: Variant, max_dim: usize, max_rank: usize, max_d: i64) -> Prescription {
    loop {
        let m = rng.gen_range(1..=max_dim);
        let n = rng.gen_range(1..=max_dim);
        let r = rng.gen_range(1..=m.min(n).min(max_rank));
        let d = rng.gen_range(0..=max_d);
        let zero_if = |full: bool, v: Vec<usize>| if full { vec![0; r] } else { v };
        let k = zero_if(r == m, random_desc(rng, r, d as usize));
        let l = zero_if(r == n, random_desc(rng, r, d as usize));
        let mut f: Vec<usize> = (0..r).map(|i| if i == 0 { 0 } else { rng.gen_range(0..=2) }).collect();
        f.sort_unstable();
        let used = (k.iter().sum::<usize>() + l.iter().sum::<usize>() + f.iter().sum::<usize>()) as i64;
        let Ok(total) = usize::try_from(r as i64 * d - used) else { continue };
        let mut degs = random_partition(rng, total, r);
        degs.reverse();
        let alpha = random_chain_with_degrees(rng, &degs, &[-3, -2, -1, 0, 1, 2, 3]);
        let span = match variant {
            Variant::P1Spans => SpanData::Bases { k: random_minimal_basis(rng, &k, m), lt: random_minimal_basis(rng, &l, n) },
            _ => SpanData::Indices { k: k.clone(), l: l.clone() },
        };
        let nulls = variant.has_null_indices();
        let p = Prescription {
            variant,
            m,
            n,
            r,
            invariants: Invariants::Polynomial { degree: d, alpha, f },
            span,
            right: if nulls { random_partition(rng, l.iter().sum(), n - r) } else { vec![] },
            left: if nulls { random_partition(rng, k.iter().sum(), m - r) } else { vec![] },
        };
        if p.validate().is_ok() && structura::synth::check_feasibility(&p).unwrap().feasible {
            return p;
        }
    }
}

/// Random feasible rational prescription: a feasible polynomial one divided by a split `ψ_1`.
pub fn random_feasible_rational(rng: &mut ChaCha8Rng, variant: Variant, max_dim: usize, max_rank: usize) -> Prescription {
    let poly_variant = match variant {
        Variant::R1Spans => Variant::P1Spans,
        Variant::R2SpanIndices => Variant::P2SpanIndices,
        _ => Variant::P3Full,
    };
    loop {
        let p = random_feasible_poly(rng, poly_variant, max_dim, max_rank, 4);
        let Invariants::Polynomial { degree, alpha, f } = &p.invariants else { unreachable!() };
        let psi1 = (0..rng.gen_range(0..=3)).fold(Poly::one(), |acc, _| &acc * &Poly::linear(&rat(rng.gen_range(-3..=3))));
        let (eps, psi): (Vec<Poly>, Vec<Poly>) = alpha
            .iter()
            .map(|a| {
                let f = RatFn::new(a.clone(), psi1.clone()).unwrap();
                (f.num().clone(), f.den().clone())
            })
            .unzip();
        // the lcm of the reduced denominators must be ψ_1 itself
        if psi[0] != psi1 {
            continue;
        }
        let q: Vec<i64> = f.iter().map(|&fi| fi as i64 + psi1.deg() - degree).collect();
        let out = Prescription { variant, invariants: Invariants::Rational { eps, psi, q }, ..p };
        if out.validate().is_ok() && structura::synth::check_feasibility(&out).unwrap().feasible {
            return out;
        }
    }
}
