//! Jucys-Murphy elements and the map from the center of the type A algebra
//! onto the even center of the Sergeev algebra.

use std::collections::{BTreeMap, HashMap};

use serde_json::json;

use crate::dirac::DiracBundle;
use crate::engine::{AlgElem, Algebra, AlgebraParams, PbwMonomial};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Subspace};
use crate::modules::block_jucys_murphy;
use crate::partition::distinct_partitions;
use crate::report::Report;
use crate::scalar::Scalar;
use crate::weyl::CartanType;

/// Largest rank for which the even center is computed.
pub const MAX_CENTER_RANK: usize = 5;

fn type_a(n: usize, k: &Scalar) -> Result<Algebra> {
    Algebra::new(AlgebraParams::type_a(n, k.clone()))
}

fn require_type_a(alg: &Algebra) -> Result<()> {
    if alg.params().ty != CartanType::A {
        return Err(Error::ParamsMismatch(
            "Jucys-Murphy elements need type A".into(),
        ));
    }
    Ok(())
}

/// `zeta'(x_i) = k sum_{j<i} s_{ij}(1 - c_i c_j)`.
pub fn jucys_murphy(n: usize, i: usize, k: &Scalar) -> Result<AlgElem> {
    let alg = type_a(n, k)?;
    jucys_murphy_in(&alg, i)
}

pub fn jucys_murphy_in(alg: &Algebra, i: usize) -> Result<AlgElem> {
    require_type_a(alg)?;
    if i == 0 || i > alg.n() {
        return Err(Error::InvalidGenerator(format!("x{i}")));
    }
    Ok(block_jucys_murphy(alg, i, 1))
}

/// Image of an element under the homomorphism fixing `Seg_n` and sending `x_i`
/// to its Jucys-Murphy element.
pub fn apply_zeta(alg: &Algebra, e: &AlgElem) -> Result<AlgElem> {
    require_type_a(alg)?;
    let n = alg.n();
    let jm: Vec<AlgElem> = (1..=n).map(|i| block_jucys_murphy(alg, i, 1)).collect();
    let mut acc = alg.zero();
    for (m, coef) in e.iter() {
        let mut term = alg.one();
        for (i, &p) in m.exps().iter().enumerate() {
            if p > 0 {
                term = alg.mul(&term, &alg.pow(&jm[i], p));
            }
        }
        let seg = AlgElem::monomial(
            PbwMonomial::new(vec![0; n], m.cliff(), m.group_element().clone()),
            coef.clone(),
        );
        acc = &acc + &alg.mul(&term, &seg);
    }
    Ok(acc)
}

/// `sum_i JM_i^{2r}`, the image of the central power sum `p_r(x^2)`.
pub fn zeta_on_power_sums(n: usize, r: u32, k: &Scalar) -> Result<AlgElem> {
    let alg = type_a(n, k)?;
    zeta_on_power_sums_in(&alg, r)
}

pub fn zeta_on_power_sums_in(alg: &Algebra, r: u32) -> Result<AlgElem> {
    require_type_a(alg)?;
    let mut acc = alg.zero();
    for i in 1..=alg.n() {
        acc = &acc + &alg.pow(&block_jucys_murphy(alg, i, 1), 2 * r);
    }
    Ok(acc)
}

pub fn power_sum(alg: &Algebra, r: u32) -> AlgElem {
    (1..=alg.n()).fold(alg.zero(), |acc, i| &acc + &alg.pow(&alg.x(i), 2 * r))
}

pub fn zeta_of_d(n: usize, k: &Scalar) -> Result<AlgElem> {
    let alg = type_a(n, k)?;
    apply_zeta(&alg, &DiracBundle::new(&alg)?.d)
}

/// The even part of the center of `Seg_n`, as coordinates over the even
/// monomials `c^e w`.
#[derive(Clone, Debug)]
pub struct SegCenter {
    pub basis: Vec<PbwMonomial>,
    pub space: Subspace,
    index: HashMap<PbwMonomial, usize>,
}

impl SegCenter {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn ambient(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of an even Sergeev element, `None` if it leaves that space.
    pub fn coordinates(&self, e: &AlgElem) -> Option<Vec<Scalar>> {
        let mut v = vec![Scalar::zero(); self.basis.len()];
        for (m, c) in e.iter() {
            v[*self.index.get(m)?] = c.clone();
        }
        Some(v)
    }

    pub fn element(&self, coords: &[Scalar], n: usize) -> AlgElem {
        coords
            .iter()
            .zip(&self.basis)
            .filter(|(c, _)| !c.is_zero())
            .fold(AlgElem::zero(n), |acc, (c, m)| {
                &acc + &AlgElem::monomial(m.clone(), c.clone())
            })
    }
}

/// Simultaneous kernel of `z -> [g, z]` over the Sergeev generators `g`,
/// restricted to even elements.
pub fn seg_even_center(n: usize) -> Result<SegCenter> {
    if n == 0 || n > MAX_CENTER_RANK {
        return Err(Error::SizeGuard(format!(
            "even center computed for 1 <= n <= {MAX_CENTER_RANK}, got {n}"
        )));
    }
    let alg = type_a(n, &Scalar::one())?;
    let mut basis = Vec::new();
    for w in alg.ctx().elements() {
        for mask in 0u32..1 << n {
            if mask.count_ones() % 2 == 0 {
                basis.push(PbwMonomial::new(vec![0; n], mask, w.clone()));
            }
        }
    }
    let index: HashMap<PbwMonomial, usize> = basis
        .iter()
        .enumerate()
        .map(|(j, m)| (m.clone(), j))
        .collect();

    let mut gens: Vec<AlgElem> = (1..=n).map(|i| alg.c(i)).collect();
    gens.extend(alg.simple_reflections());
    let mut equations: BTreeMap<(usize, PbwMonomial), BTreeMap<usize, Scalar>> = BTreeMap::new();
    for (j, m) in basis.iter().enumerate() {
        let b = AlgElem::monomial(m.clone(), Scalar::one());
        for (g_idx, g) in gens.iter().enumerate() {
            let comm = &alg.mul(g, &b) - &alg.mul(&b, g);
            for (out, c) in comm.iter() {
                equations
                    .entry((g_idx, out.clone()))
                    .or_default()
                    .insert(j, c.clone());
            }
        }
    }
    let mut ech = Echelon::new(basis.len());
    for row in equations.into_values() {
        ech.insert(row);
    }
    let space = Subspace::from_vectors(basis.len(), ech.null_space());
    Ok(SegCenter {
        basis,
        space,
        index,
    })
}

/// Checks `zeta'(D) = 0`, that each `zeta'(p_r)` is even and central in `Seg_n`,
/// and that they span the even center.
pub fn verify_zeta_surjective(n: usize, k: &Scalar, max_r: u32) -> Result<Report> {
    let alg = type_a(n, k)?;
    let center = seg_even_center(n)?;
    let mut rep = Report::new();

    let zd = apply_zeta(&alg, &DiracBundle::new(&alg)?.d)?;
    rep.push(
        format!("zeta_of_d_vanishes[n={n}]"),
        zd.is_zero(),
        json!({ "witness": if zd.is_zero() { json!(null) } else { json!(zd.to_string()) } }),
    );

    let mut images = Vec::new();
    let mut all_in_center = true;
    let mut generators_agree = true;
    for r in 1..=max_r {
        let z = zeta_on_power_sums_in(&alg, r)?;
        generators_agree &= apply_zeta(&alg, &power_sum(&alg, r))? == z;
        match center.coordinates(&z) {
            Some(v) if center.space.contains(&v) => images.push(v),
            _ => all_in_center = false,
        }
    }
    rep.push(
        format!("zeta_images_in_even_center[n={n}]"),
        all_in_center && generators_agree,
        json!({ "max_r": max_r, "homomorphism_matches_power_sums": generators_agree }),
    );

    let span = Subspace::from_vectors(center.ambient(), images);
    let distinct = distinct_partitions(n).len();
    rep.push(
        format!("even_center_dim[n={n}]"),
        center.dim() == distinct,
        json!({ "center_dim": center.dim(), "distinct_partitions": distinct }),
    );
    rep.push(
        format!("zeta_surjective[n={n}]"),
        span.dim() == center.dim() && center.space.contains_subspace(&span),
        json!({
            "n": n,
            "k": k,
            "max_r": max_r,
            "rank": span.dim(),
            "center_dim": center.dim(),
        }),
    );
    Ok(rep)
}
