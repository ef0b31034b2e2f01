use crate::poly::{split_over_rationals, Poly, Rat};

/// Exponents of one point or block across the invariant rational functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalBlock<T> {
    pub at: T,
    pub exponents: Vec<i64>,
}

/// Local structure over ℚ: exact data at every rational root, and for the rest
/// a coprime base of square-free blocks whose irreducible factors all share
/// the reported exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalStructure {
    pub roots: Vec<LocalBlock<Rat>>,
    pub cofactor_blocks: Vec<LocalBlock<Poly>>,
}

/// Yun decomposition `p = ∏ parts[j]^(j+1)` of a monic polynomial.
fn square_free_parts(p: &Poly) -> Vec<Poly> {
    if p.is_constant() {
        return Vec::new();
    }
    let d = p.derivative();
    let a0 = p.gcd(&d).expect("nonzero");
    let mut b = p.exact_div(&a0).expect("gcd divides");
    let mut c = d.exact_div(&a0).expect("gcd divides");
    let mut parts = Vec::new();
    loop {
        let c2 = &c - &b.derivative();
        if c2.is_zero() {
            parts.push(b.monic());
            break;
        }
        let a = b.gcd(&c2).expect("nonzero");
        parts.push(a.clone());
        b = b.exact_div(&a).expect("gcd divides");
        c = c2.exact_div(&a).expect("gcd divides");
        if b.is_constant() {
            break;
        }
    }
    parts
}

/// Pairwise coprime monic non-constant polynomials such that every input
/// divides a product of them and each is coprime to or divides every input.
fn coprime_base(inputs: Vec<Poly>) -> Vec<Poly> {
    let mut base: Vec<Poly> = inputs.into_iter().filter(|p| !p.is_constant()).map(|p| p.monic()).collect();
    'outer: loop {
        for i in 0..base.len() {
            for j in i + 1..base.len() {
                let g = base[i].gcd(&base[j]).expect("nonzero");
                if g.is_constant() {
                    continue;
                }
                let (a, b) = (base[i].exact_div(&g).unwrap(), base[j].exact_div(&g).unwrap());
                base.swap_remove(j);
                base.swap_remove(i);
                base.extend([g, a, b].into_iter().filter(|p| !p.is_constant()));
                continue 'outer;
            }
        }
        break;
    }
    base.sort_by(|a, b| a.deg().cmp(&b.deg()).then_with(|| a.coeffs().cmp(b.coeffs())));
    base.dedup();
    base
}

fn block_multiplicity(p: &Poly, block: &Poly) -> i64 {
    let mut rest = p.clone();
    let mut e = 0;
    while let Some(q) = rest.exact_div(block) {
        rest = q;
        e += 1;
    }
    e
}

/// Local structure of `num_i / den_i`; pass ones as denominators for polynomial data.
pub fn local_structure(nums: &[Poly], dens: &[Poly]) -> LocalStructure {
    let mut roots: Vec<Rat> = Vec::new();
    let mut cofactors = Vec::new();
    for p in nums.iter().chain(dens).filter(|p| !p.is_zero()) {
        let fp = split_over_rationals(p);
        roots.extend(fp.linear_factors.iter().map(|(r, _)| r.clone()));
        cofactors.extend(square_free_parts(&fp.cofactor));
    }
    roots.sort();
    roots.dedup();
    let signed = |f: &dyn Fn(&Poly) -> i64| -> Vec<i64> { nums.iter().zip(dens).map(|(n, d)| f(n) - f(d)).collect() };
    LocalStructure {
        roots: roots
            .iter()
            .map(|l| LocalBlock { at: l.clone(), exponents: signed(&|p| p.root_multiplicity(l) as i64) })
            .collect(),
        cofactor_blocks: coprime_base(cofactors)
            .into_iter()
            .map(|b| LocalBlock { exponents: signed(&|p| block_multiplicity(p, &b)), at: b })
            .collect(),
    }
}
