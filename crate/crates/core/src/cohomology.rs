//! Dirac cohomology of finite-dimensional modules, central characters and the
//! spectral form of the Vogan-type statement.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::dirac::DiracBundle;
use crate::error::{Error, Result};
use crate::linalg::{generalized_eigenspace_dim, image, kernel, Matrix, Subspace};
use crate::modules::{induced_module, ModuleKind, ModuleRep};
use crate::partition::{distinct_partitions, partitions, Partition};
use crate::report::Report;
use crate::scalar::Scalar;

pub use crate::partition::{phi_maps, PhiData};

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumEntry {
    pub eigenvalue: Scalar,
    pub multiplicity: usize,
}

/// Eigenvalues found on a subspace, plus what could not be resolved exactly.
#[derive(Clone, Debug, Serialize)]
pub struct Spectrum {
    pub entries: Vec<SpectrumEntry>,
    pub unresolved: usize,
    /// Characteristic polynomial, constant term first; filled only when `unresolved > 0`.
    pub charpoly: Option<Vec<Scalar>>,
}

impl Spectrum {
    pub fn values(&self) -> Vec<Scalar> {
        self.entries.iter().map(|e| e.eigenvalue.clone()).collect()
    }

    pub fn single_value(&self) -> Option<&Scalar> {
        match (self.entries.as_slice(), self.unresolved) {
            ([e], 0) => Some(&e.eigenvalue),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CohomologyReport {
    pub lambda: Option<Partition>,
    pub k: Scalar,
    pub dim_module: usize,
    pub dim_ker: usize,
    pub dim_im: usize,
    pub dim_im_cap_ker: usize,
    pub dim_hd: usize,
    pub dim_ker_d_squared: usize,
    /// Vectors of `ker D` whose classes span `H_D`.
    pub representatives: Vec<Vec<Scalar>>,
    pub omega_seg_spectrum: Spectrum,
    pub matched_partition: Vec<Partition>,
    pub seg_stable: bool,
}

impl CohomologyReport {
    pub fn to_json(&self) -> Value {
        json!({
            "lambda": self.lambda,
            "k": self.k,
            "dim_module": self.dim_module,
            "dim_ker": self.dim_ker,
            "dim_im": self.dim_im,
            "dim_im_cap_ker": self.dim_im_cap_ker,
            "dim_HD": self.dim_hd,
            "dim_ker_d_squared": self.dim_ker_d_squared,
            "omega_seg_spectrum": self.omega_seg_spectrum,
            "omega_seg_eigenvalues": self.omega_seg_spectrum.values(),
            "matched_partition": self.matched_partition,
            "status": if self.seg_stable { "pass" } else { "fail" },
        })
    }
}

fn stable_under(sub: &Subspace, m: &Matrix) -> bool {
    sub.basis().iter().all(|v| sub.contains(&m.apply(v)))
}

/// `k^2 |Phi_1(mu)|^2` for every partition `mu` of `n`, deduplicated.
fn candidate_eigenvalues(n: usize, k: &Scalar) -> Vec<Scalar> {
    let k2 = k * k;
    let mut vals: Vec<i64> = partitions(n).iter().map(Partition::norm1_sq).collect();
    vals.push(0);
    vals.sort_unstable();
    vals.dedup();
    vals.into_iter()
        .map(|v| &k2 * &Scalar::from_int(v))
        .collect()
}

/// Exact spectrum of a square matrix: first against the candidate values, then
/// by rational roots of the characteristic polynomial.
pub fn spectrum(m: &Matrix, candidates: &[Scalar]) -> Spectrum {
    let mut entries = Vec::new();
    let mut found = 0;
    for t in candidates {
        if found == m.rows() {
            break;
        }
        let mult = generalized_eigenspace_dim(m, t);
        if mult > 0 {
            found += mult;
            entries.push(SpectrumEntry {
                eigenvalue: t.clone(),
                multiplicity: mult,
            });
        }
    }
    let mut unresolved = m.rows() - found;
    let mut charpoly = None;
    if unresolved > 0 {
        let cp = m.charpoly();
        for (root, mult) in rational_roots(&cp).unwrap_or_default() {
            let t = Scalar::from_rational(root);
            if entries.iter().all(|e| e.eigenvalue != t) {
                entries.push(SpectrumEntry {
                    eigenvalue: t,
                    multiplicity: mult,
                });
                unresolved -= mult;
            }
        }
        charpoly = (unresolved > 0).then_some(cp);
    }
    Spectrum {
        entries,
        unresolved,
        charpoly,
    }
}

/// Spectrum of `pi(Omega_Seg)` on a stable subspace of the module.
pub fn omega_seg_spectrum(module: &ModuleRep, subspace: &Subspace) -> Result<Spectrum> {
    let omega = module.act_matrix(&DiracBundle::new(module.algebra())?.omega_seg)?;
    let restricted = subspace.restrict(&omega)?;
    Ok(spectrum(
        &restricted,
        &candidate_eigenvalues(module.algebra().n(), &module.params().k_long),
    ))
}

fn divisors(v: &BigInt) -> Option<Vec<BigInt>> {
    let mut x = v.abs().to_u64()?;
    if x == 0 {
        return None;
    }
    let mut primes: Vec<(u64, u32)> = Vec::new();
    let mut p = 2u64;
    while p * p <= x {
        if p > 1_000_000 {
            return None;
        }
        let mut e = 0;
        while x % p == 0 {
            x /= p;
            e += 1;
        }
        if e > 0 {
            primes.push((p, e));
        }
        p += 1;
    }
    if x > 1 {
        primes.push((x, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::new();
        for d in &divs {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..e {
                acc *= p;
                next.push(acc.clone());
            }
        }
        divs = next;
    }
    Some(divs)
}

/// Rational roots with multiplicity of a polynomial (constant term first), when
/// all coefficients are rational and small enough to factor.
pub fn rational_roots(coeffs: &[Scalar]) -> Option<Vec<(BigRational, usize)>> {
    let rat: Vec<BigRational> = coeffs
        .iter()
        .map(|c| c.as_rational().cloned())
        .collect::<Option<_>>()?;
    let mut poly = integral(&rat);
    while poly.last().is_some_and(Zero::is_zero) {
        poly.pop();
    }
    let mut roots: Vec<(BigRational, usize)> = Vec::new();
    let push = |r: BigRational, roots: &mut Vec<(BigRational, usize)>| match roots
        .iter_mut()
        .find(|(x, _)| *x == r)
    {
        Some((_, m)) => *m += 1,
        None => roots.push((r, 1)),
    };
    while poly.len() > 1 && poly[0].is_zero() {
        poly.remove(0);
        push(BigRational::zero(), &mut roots);
    }
    'outer: while poly.len() > 1 {
        poly = integral(&poly);
        let ps = divisors(&poly[0].to_integer())?;
        let qs = divisors(&poly[poly.len() - 1].to_integer())?;
        for p in &ps {
            for q in &qs {
                for sign in [1, -1] {
                    let r = BigRational::new(p * sign, q.clone());
                    if let Some(quot) = divide_linear(&poly, &r) {
                        poly = quot;
                        push(r, &mut roots);
                        continue 'outer;
                    }
                }
            }
        }
        break;
    }
    Some(roots)
}

fn integral(poly: &[BigRational]) -> Vec<BigRational> {
    let denom = poly.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let scale = BigRational::from_integer(denom);
    poly.iter().map(|q| q * &scale).collect()
}

/// Synthetic division by `(t - r)`, returning the quotient if the remainder vanishes.
fn divide_linear(poly: &[BigRational], r: &BigRational) -> Option<Vec<BigRational>> {
    let deg = poly.len() - 1;
    let mut quot = vec![BigRational::zero(); deg];
    let mut carry = BigRational::zero();
    for i in (0..=deg).rev() {
        let v = &poly[i] + &carry * r;
        if i == 0 {
            return v.is_zero().then_some(quot);
        }
        quot[i - 1] = v.clone();
        carry = v;
    }
    None
}

/// `H_D = ker pi(D) / (ker pi(D) cap im pi(D))`, with all dimensions, the
/// `Omega_Seg` spectrum on the quotient and the partitions matching it.
pub fn dirac_cohomology(module: &ModuleRep) -> Result<CohomologyReport> {
    let alg = module.algebra();
    let bundle = DiracBundle::new(alg)?;
    let d = module.act_matrix(&bundle.d)?;
    let ker = kernel(&d);
    let im = image(&d);
    let cap = ker.intersect(&im)?;
    let ker_d2 = kernel(&(&d * &d));

    let seg_stable = module
        .sergeev_generators()
        .into_iter()
        .all(|g| stable_under(&ker, g) && stable_under(&cap, g));
    if !seg_stable {
        return Err(Error::Unstable(
            "ker D or ker D cap im D is not stable under Seg".into(),
        ));
    }

    let omega = module.act_matrix(&bundle.omega_seg)?;
    let on_hd = ker.induced_on_quotient(&cap, &omega)?;
    let k = module.params().k_long.clone();
    let on_hd_spectrum = spectrum(&on_hd, &candidate_eigenvalues(alg.n(), &k));
    let matched = match on_hd_spectrum.single_value() {
        Some(v) => label_by_eigenvalue(alg.n(), &k, v),
        None => Vec::new(),
    };
    let lambda = match module.kind() {
        ModuleKind::Induced { lambda, .. } => Some(lambda.clone()),
        _ => None,
    };
    Ok(CohomologyReport {
        lambda,
        k,
        dim_module: module.dim(),
        dim_ker: ker.dim(),
        dim_im: im.dim(),
        dim_im_cap_ker: cap.dim(),
        dim_hd: ker.dim() - cap.dim(),
        dim_ker_d_squared: ker_d2.dim(),
        representatives: ker.complement_in(&cap)?,
        omega_seg_spectrum: on_hd_spectrum,
        matched_partition: matched,
        seg_stable,
    })
}

/// Distinct-part partitions `mu` with `k^2 |Phi_1(mu)|^2 = value`.
pub fn label_by_eigenvalue(n: usize, k: &Scalar, value: &Scalar) -> Vec<Partition> {
    let k2 = k * k;
    distinct_partitions(n)
        .into_iter()
        .filter(|mu| &(&k2 * &Scalar::from_int(mu.norm1_sq())) == value)
        .collect()
}

/// Multiset of `x_i^2` eigenvalues, sorted by their text form for comparison.
#[derive(Clone, Debug, Serialize)]
pub struct CentralCharacter {
    pub values: Vec<Scalar>,
    /// Scalars by which `p_r = sum_i x_i^{2r}` act, `r = 1..n`.
    pub power_sums: Vec<Scalar>,
}

impl CentralCharacter {
    pub fn sorted(&self) -> Vec<String> {
        let mut v: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        v.sort();
        v
    }

    pub fn same_as(&self, other: &CentralCharacter) -> bool {
        self.sorted() == other.sorted()
    }

    /// `chi(Omega_H) = sum_i gamma_i`.
    pub fn omega_h_value(&self) -> Scalar {
        self.power_sums
            .first()
            .cloned()
            .unwrap_or_else(|| self.values.iter().cloned().sum())
    }
}

/// The central character of a quasisimple module, read from the power sums
/// `p_r(x^2)`, which generate the center.
pub fn central_character(module: &ModuleRep) -> Result<CentralCharacter> {
    let alg = module.algebra();
    let n = alg.n();
    let squares: Vec<Matrix> = (1..=n).map(|i| module.x(i) * module.x(i)).collect();
    let mut powers = squares.clone();
    let mut power_sums = Vec::with_capacity(n);
    for r in 1..=n {
        if r > 1 {
            for (p, s) in powers.iter_mut().zip(&squares) {
                *p = &*p * s;
            }
        }
        let sum = powers
            .iter()
            .fold(Matrix::zeros(module.dim(), module.dim()), |a, b| &a + b);
        let v = sum
            .as_scalar()
            .ok_or_else(|| Error::NotQuasisimple(format!("p_{r}(x^2) does not act by a scalar")))?;
        power_sums.push(v);
    }
    // Newton: r e_r = sum_{i=1}^r (-1)^{i-1} e_{r-i} p_i
    let mut e = vec![Scalar::one()];
    for r in 1..=n {
        let mut acc = Scalar::zero();
        for i in 1..=r {
            let term = &e[r - i] * &power_sums[i - 1];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= &term;
            }
        }
        e.push(&acc * &Scalar::frac(1, r as i64));
    }
    // prod (t - gamma_i), constant term first
    let poly: Vec<Scalar> = (0..=n)
        .map(|deg| {
            let r = n - deg;
            if r.is_multiple_of(2) {
                e[r].clone()
            } else {
                -&e[r]
            }
        })
        .collect();
    let roots = rational_roots(&poly)
        .ok_or_else(|| Error::NotQuasisimple("central character is not rational".into()))?;
    let mut values = Vec::with_capacity(n);
    for (r, m) in roots {
        values.extend(std::iter::repeat_n(Scalar::from_rational(r), m));
    }
    if values.len() != n {
        return Err(Error::NotQuasisimple(
            "central character has roots outside the rationals".into(),
        ));
    }
    Ok(CentralCharacter { values, power_sums })
}

/// The scalars by which `x_i^2` acts on the identity-coset block `1 (x) St_lambda`.
pub fn block_x_squared(module: &ModuleRep) -> Result<Vec<Scalar>> {
    let ModuleKind::Induced { lambda, .. } = module.kind() else {
        return Err(Error::ParamsMismatch(
            "block eigenvalues need an induced module".into(),
        ));
    };
    let n = lambda.size();
    let block = 1usize << n;
    (1..=n)
        .map(|i| {
            let sq = module.x(i) * module.x(i);
            let mut sub = Matrix::zeros(block, block);
            for r in 0..module.dim() {
                for c in 0..block {
                    let v = sq.get(r, c);
                    if r >= block && !v.is_zero() {
                        return Err(Error::NotQuasisimple(format!(
                            "x_{i}^2 leaves the identity-coset block"
                        )));
                    }
                    if r < block {
                        sub.set(r, c, v.clone());
                    }
                }
            }
            sub.as_scalar().ok_or_else(|| {
                Error::NotQuasisimple(format!("x_{i}^2 is not scalar on the identity-coset block"))
            })
        })
        .collect()
}

/// Expected block scalars `k^2 j(j-1)` with `j` the position inside the block.
pub fn expected_block_x_squared(lambda: &Partition, k: &Scalar) -> Vec<Scalar> {
    let k2 = k * k;
    lambda
        .phi2_squares()
        .into_iter()
        .map(|v| &k2 * &Scalar::from_int(v))
        .collect()
}

/// Builds `X_lambda`, computes `H_D` and checks nonvanishing, `ker D = ker D^2`,
/// `ker D cap im D = 0`, that `Omega_Seg` acts on `H_D` by `chi(Omega_H)`, and
/// that the eigenvalue labels `lambda` uniquely.
pub fn verify_vogan(lambda: &Partition, k: &Scalar) -> Result<(Report, CohomologyReport)> {
    let module = induced_module(lambda, k.clone())?;
    let coh = dirac_cohomology(&module)?;
    let chi = central_character(&module)?;
    let block = block_x_squared(&module)?;
    let expected_block = expected_block_x_squared(lambda, k);
    let omega_h = chi.omega_h_value();
    let predicted = &(k * k) * &Scalar::from_int(lambda.norm2_sq());

    let mut rep = Report::new();
    let tag = lambda.to_string();
    rep.push(
        format!("hd_nonzero[{tag}]"),
        coh.dim_hd > 0,
        json!({ "dim_HD": coh.dim_hd, "dim_module": coh.dim_module }),
    );
    rep.push(
        format!("ker_d_eq_ker_d2[{tag}]"),
        coh.dim_ker == coh.dim_ker_d_squared,
        json!({ "dim_ker": coh.dim_ker, "dim_ker_d_squared": coh.dim_ker_d_squared }),
    );
    rep.push(
        format!("ker_cap_im_zero[{tag}]"),
        coh.dim_im_cap_ker == 0,
        json!({ "dim_im_cap_ker": coh.dim_im_cap_ker }),
    );
    rep.push(
        format!("block_x_squared[{tag}]"),
        block == expected_block,
        json!({ "computed": block, "expected": expected_block }),
    );
    let single = coh.omega_seg_spectrum.single_value().cloned();
    rep.push(
        format!("omega_seg_equals_chi_omega_h[{tag}]"),
        single.as_ref() == Some(&omega_h) && omega_h == predicted,
        json!({
            "spectrum": coh.omega_seg_spectrum,
            "chi_omega_h": omega_h,
            "k2_norm2_sq": predicted,
            "central_character": chi.values,
        }),
    );
    rep.push(
        format!("label_recovers_lambda[{tag}]"),
        coh.matched_partition.as_slice() == std::slice::from_ref(lambda),
        json!({ "matched": coh.matched_partition }),
    );
    Ok((rep, coh))
}
