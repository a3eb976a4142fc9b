//! The cross-cutting verification suite: ten independent checks covering
//! defining relations, dimension counts, symmetrizer conjugation, parabolic
//! intersections, the decorated-matrix basis, algebra structure, base
//! change, the double centralizer, the irreducible census, and the
//! involutions. `run_all` executes them (optionally in parallel) and returns
//! reports in a canonical order.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::clifford::{c_lambda_alpha, c_q, c_q_prime};
use crate::coeff::{ExactInteger, IntAtQ, LaurentV, PolyMatrix, PolyQ, Ring};
use crate::combinatorics::{
    enumerate_decorated_margins, min_coset_reps, strict_partitions, Composition, Permutation,
};
use crate::hecke_clifford::{
    basis_of_x_h, coordinate_matrix, is_in_h_x, is_in_x_h, x_lambda, y_lambda, HCElement,
    Involution,
};
use crate::schur::{hc_dimension, schur_dimension, SchurContext, SchurElement};
use crate::tensor::{RelationCheck, TensorSpace};

/// The outcome of one verification item.
#[derive(Debug, Clone)]
pub struct CheckReport {
    /// Position in the canonical report order (1-based).
    pub index: usize,
    pub name: String,
    pub passed: bool,
    pub details: String,
}

impl CheckReport {
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        map.insert("index".to_string(), serde_json::Value::Number(self.index.into()));
        map.insert("name".to_string(), serde_json::Value::String(self.name.clone()));
        map.insert("passed".to_string(), serde_json::Value::Bool(self.passed));
        map.insert("details".to_string(), serde_json::Value::String(self.details.clone()));
        serde_json::Value::Object(map)
    }
}

/// The defining-relation suite for the algebra arithmetic at one rank,
/// over Z[q]. Returns one named check per relation instance.
pub fn hc_relation_checks(r: usize) -> Vec<RelationCheck> {
    type H = HCElement<PolyQ>;
    let q = H::unit(r).scale(&PolyQ::q());
    let one = H::unit(r);
    let qm1 = q.sub(&one);
    let t = |i: usize| H::gen_t(r, i);
    let c = |j: usize| H::gen_c(r, j);
    let mut out = Vec::new();
    let mut push = |name: String, lhs: H, rhs: H| {
        out.push(RelationCheck { name, ok: lhs == rhs });
    };
    for i in 1..r {
        push(
            format!("(T{i} - q)(T{i} + 1) = 0"),
            t(i).mul(&t(i)),
            qm1.mul(&t(i)).add(&q),
        );
    }
    for i in 1..r.saturating_sub(1) {
        push(
            format!("T{i} T{} T{i} = T{} T{i} T{}", i + 1, i + 1, i + 1),
            t(i).mul(&t(i + 1)).mul(&t(i)),
            t(i + 1).mul(&t(i)).mul(&t(i + 1)),
        );
    }
    for i in 1..r {
        for j in i + 2..r {
            push(format!("T{i} T{j} = T{j} T{i}"), t(i).mul(&t(j)), t(j).mul(&t(i)));
        }
    }
    for j in 1..=r {
        push(format!("c{j}^2 = -1"), c(j).mul(&c(j)), one.neg());
    }
    for i in 1..=r {
        for j in i + 1..=r {
            push(
                format!("c{i} c{j} = -c{j} c{i}"),
                c(i).mul(&c(j)),
                c(j).mul(&c(i)).neg(),
            );
        }
    }
    for i in 1..r {
        for j in 1..=r {
            if j != i && j != i + 1 {
                push(format!("T{i} c{j} = c{j} T{i}"), t(i).mul(&c(j)), c(j).mul(&t(i)));
            }
        }
        push(
            format!("T{i} c{i} = c{} T{i}", i + 1),
            t(i).mul(&c(i)),
            c(i + 1).mul(&t(i)),
        );
        push(
            format!("T{i} c{} = c{i} T{i} - (q-1)(c{i} - c{})", i + 1, i + 1),
            t(i).mul(&c(i + 1)),
            c(i).mul(&t(i)).sub(&qm1.mul(&c(i).sub(&c(i + 1)))),
        );
    }
    out
}

fn report(index: usize, name: &str, passed: bool, details: String) -> CheckReport {
    CheckReport { index, name: name.to_string(), passed, details }
}

/// All compositions of r with only positive parts (any number of parts).
fn positive_compositions(r: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    for k in 1..=r {
        for lam in Composition::enumerate(k, r) {
            if lam.parts().iter().all(|&p| p > 0) {
                out.push(lam);
            }
        }
    }
    out
}

fn multinomial(parts: &[usize]) -> u64 {
    let factorial = |m: usize| -> u64 { (1..=m as u64).product::<u64>().max(1) };
    let total: usize = parts.iter().sum();
    parts.iter().fold(factorial(total), |acc, &p| acc / factorial(p))
}

/// Random elements with a few terms and small coefficients, deterministic in
/// the seed.
fn random_hc_element(r: usize, rng: &mut StdRng, perms: &[Permutation]) -> HCElement<PolyQ> {
    let mut h = HCElement::zero(r);
    for _ in 0..3 {
        let w = perms[rng.gen_range(0..perms.len())].clone();
        let alpha = rng.gen_range(0..(1u32 << r));
        let coeff = PolyQ::from_terms([
            (rng.gen_range(0..3usize), rng.gen_range(-3i64..=3)),
            (rng.gen_range(0..3usize), rng.gen_range(-3i64..=3)),
        ]);
        h = h.add(&HCElement::from_term(r, w, alpha, coeff));
    }
    h
}

fn check_defining_relations(max_r: usize, max_n: usize) -> CheckReport {
    let mut total = 0usize;
    let mut failures = Vec::new();
    for r in 2..=4.min(max_r) {
        for check in hc_relation_checks(r) {
            total += 1;
            if !check.ok {
                failures.push(format!("algebra r={r}: {}", check.name));
            }
        }
    }
    for (n, r) in [(1usize, 2usize), (1, 3), (2, 2), (2, 3)] {
        if n > max_n || r > max_r {
            continue;
        }
        let sp = match TensorSpace::new(n, r) {
            Ok(sp) => sp,
            Err(e) => {
                failures.push(format!("tensor space (n={n}, r={r}): {e}"));
                continue;
            }
        };
        for check in sp.check_action_relations() {
            total += 1;
            if !check.ok {
                failures.push(format!("tensor action (n={n}, r={r}): {}", check.name));
            }
        }
    }
    report(
        1,
        "defining relations (algebra and tensor action)",
        failures.is_empty(),
        if failures.is_empty() {
            format!("{total} relation identities hold exactly")
        } else {
            failures.join("; ")
        },
    )
}

fn check_dimension_counts(max_r: usize, _max_n: usize) -> CheckReport {
    let mut failures = Vec::new();
    let mut total = 0usize;
    for r in 1..=4.min(max_r) {
        let full = basis_of_x_h::<PolyQ>(&Composition::new(vec![1; r]));
        total += 1;
        if full.len() as u64 != hc_dimension(r) {
            failures.push(format!(
                "rank {r}: free-module basis has {} elements, expected {}",
                full.len(),
                hc_dimension(r)
            ));
        }
        for lam in positive_compositions(r) {
            total += 1;
            let basis = basis_of_x_h::<PolyQ>(&lam);
            let expected = multinomial(lam.parts()) * (1u64 << r);
            let reps = min_coset_reps(&lam).len() as u64;
            if basis.len() as u64 != expected || reps * (1u64 << r) != expected {
                failures.push(format!(
                    "lambda = {lam}: basis size {} vs multinomial count {expected}",
                    basis.len()
                ));
            }
        }
    }
    report(
        2,
        "dimension counts (2^r r! and coset-indexed module bases)",
        failures.is_empty(),
        if failures.is_empty() {
            format!("{total} size counts match the closed forms")
        } else {
            failures.join("; ")
        },
    )
}

fn check_weighted_conjugation(max_r: usize, _max_n: usize) -> CheckReport {
    let mut failures = Vec::new();
    let mut total = 0usize;
    for r in 1..=5.min(max_r) {
        let lam = Composition::new(vec![r]);
        let x = x_lambda::<PolyQ>(&lam);
        let lhs = x.mul(&HCElement::from_clifford(&c_q::<PolyQ>(r, 1, r)));
        let rhs = HCElement::from_clifford(&c_q_prime::<PolyQ>(r, 1, r)).mul(&x);
        total += 1;
        if lhs != rhs {
            failures.push(format!("x-version fails at r = {r}"));
        }
        let y = y_lambda::<LaurentV>(&lam).expect("q is invertible here");
        let lhs = y.mul(&HCElement::from_clifford(&c_q_prime::<LaurentV>(r, 1, r)));
        let rhs = HCElement::from_clifford(&c_q::<LaurentV>(r, 1, r)).mul(&y);
        total += 1;
        if lhs != rhs {
            failures.push(format!("y-version fails at r = {r}"));
        }
    }
    report(
        3,
        "weighted Clifford conjugation across symmetrizers",
        failures.is_empty(),
        if failures.is_empty() {
            format!("{total} conjugation identities hold exactly")
        } else {
            failures.join("; ")
        },
    )
}

/// The dimension of x_lambda H_lambda intersect H_lambda x_lambda, where
/// H_lambda is the parabolic subalgebra spanned by T_w c^alpha with w in the
/// Young subgroup: kernel dimension of the two-sided membership constraints
/// over that span. Returns None if arithmetic ever left the span (it cannot,
/// and the caller treats None as a failure).
fn parabolic_intersection_dim(lambda: &Composition) -> Option<usize> {
    let r = lambda.sum();
    let mut basis = Vec::new();
    for w in lambda.young_subgroup() {
        for mask in 0..(1u32 << r) {
            basis.push(HCElement::<PolyQ>::from_term(r, w.clone(), mask, PolyQ::one()));
        }
    }
    let gens = lambda.simple_generators();
    if gens.is_empty() {
        return Some(basis.len());
    }
    let mut key_index = std::collections::BTreeMap::new();
    for e in &basis {
        for (t, _) in e.terms() {
            let next = key_index.len();
            key_index.entry(t.clone()).or_insert(next);
        }
    }
    let q = PolyQ::q();
    let mut rows = Vec::new();
    for &k in &gens {
        let tk = HCElement::<PolyQ>::gen_t(r, k);
        for e in &basis {
            for prod in [tk.mul(e), e.mul(&tk)] {
                let diff = prod.sub(&e.scale(&q));
                let mut row = vec![PolyQ::zero(); key_index.len()];
                for (t, coeff) in diff.terms() {
                    row[*key_index.get(t)?] = coeff.clone();
                }
                rows.push(row);
            }
        }
    }
    Some(basis.len() - PolyMatrix::from_rows(rows).exact_rank())
}

fn check_parabolic_intersections(max_r: usize, _max_n: usize) -> CheckReport {
    let mut failures = Vec::new();
    let mut details = Vec::new();
    for r in 1..=3.min(max_r) {
        let ctx = match SchurContext::<PolyQ>::new(1, r) {
            Ok(ctx) => ctx,
            Err(e) => {
                failures.push(format!("context (1, {r}): {e}"));
                continue;
            }
        };
        let lam = Composition::new(vec![r]);
        let dim = ctx.intersection_dim_bruteforce(&lam, &lam);
        if dim != 2 {
            failures.push(format!("one-row intersection at r = {r} has dimension {dim}, expected 2"));
        }
        details.push(format!("({r}) -> {dim}"));
    }
    if max_r >= 3 {
        for parts in [vec![2, 1], vec![1, 2], vec![1, 1, 1]] {
            let lam = Composition::new(parts.clone());
            let ell = parts.len();
            let expected = 1usize << ell;
            match parabolic_intersection_dim(&lam) {
                Some(dim) if dim == expected => details.push(format!("{lam} -> {dim}")),
                Some(dim) => failures.push(format!(
                    "parabolic intersection at lambda = {lam} has dimension {dim}, expected {expected}"
                )),
                None => failures.push(format!(
                    "arithmetic left the parabolic span at lambda = {lam}"
                )),
            }
            // the claimed basis: x_lambda times each 0/1-weighted product of
            // block elements, membership-checked on both sides
            let x = x_lambda::<PolyQ>(&lam);
            let mut members = Vec::new();
            for mask in 0..(1u32 << ell) {
                let alpha: Vec<u8> = (0..ell).map(|i| ((mask >> i) & 1) as u8).collect();
                let cw = c_lambda_alpha::<PolyQ>(&lam, &alpha, false).expect("no empty blocks");
                let e = x.mul(&HCElement::from_clifford(&cw));
                if !(is_in_x_h(&e, &lam) && is_in_h_x(&e, &lam)) {
                    failures.push(format!(
                        "x_lambda c^alpha with lambda = {lam}, alpha mask {mask} leaves the intersection"
                    ));
                }
                members.push(e);
            }
            let (_, coords) = coordinate_matrix(&members);
            if coords.exact_rank() != expected {
                failures.push(format!("claimed basis at lambda = {lam} is not independent"));
            }
        }
    }
    report(
        4,
        "parabolic intersection dimensions and their bases",
        failures.is_empty(),
        if failures.is_empty() {
            format!("dimensions {}", details.join(", "))
        } else {
            failures.join("; ")
        },
    )
}

fn check_decorated_basis_census(max_r: usize, max_n: usize) -> CheckReport {
    let n = 2.min(max_n);
    let mut failures = Vec::new();
    let mut details = Vec::new();
    for r in 1..=3.min(max_r) {
        let ctx = match SchurContext::<PolyQ>::new(n, r) {
            Ok(ctx) => ctx,
            Err(e) => {
                failures.push(format!("context ({n}, {r}): {e}"));
                continue;
            }
        };
        let mut total = 0usize;
        for lam in ctx.margins().to_vec() {
            for mu in ctx.margins().to_vec() {
                let count = enumerate_decorated_margins(&lam, &mu).len();
                let brute = ctx.intersection_dim_bruteforce(&lam, &mu);
                let rank = ctx.block_rank(&lam, &mu);
                if brute != count {
                    failures.push(format!(
                        "({lam}, {mu}): brute-force dimension {brute} vs matrix count {count}"
                    ));
                }
                if rank != count {
                    failures.push(format!(
                        "({lam}, {mu}): operator block has rank {rank}, expected {count}"
                    ));
                }
                total += count;
            }
        }
        if total != schur_dimension(n, r) {
            failures.push(format!(
                "blocks at (n, r) = ({n}, {r}) sum to {total}, expected {}",
                schur_dimension(n, r)
            ));
        }
        details.push(format!("({n},{r}) -> {total}"));
    }
    if max_n >= 2 && max_r >= 2 && schur_dimension(2, 2) != 32 {
        failures.push("dimension at (2, 2) is not 32".to_string());
    }
    report(
        5,
        "decorated-matrix basis vs brute-force intersection dimensions",
        failures.is_empty(),
        if failures.is_empty() {
            format!("block sums {}", details.join(", "))
        } else {
            failures.join("; ")
        },
    )
}

fn check_algebra_structure(max_r: usize, max_n: usize) -> CheckReport {
    let mut failures = Vec::new();
    let mut checked = 0usize;
    // exhaustive associativity and unit at n = 1
    for r in 1..=2.min(max_r) {
        let ctx = match SchurContext::<PolyQ>::new(1, r) {
            Ok(ctx) => ctx,
            Err(e) => {
                failures.push(format!("context (1, {r}): {e}"));
                continue;
            }
        };
        let basis: Vec<SchurElement<PolyQ>> = ctx
            .basis()
            .iter()
            .map(|dm| SchurElement::basis_vector(1, r, dm))
            .collect();
        let id = ctx.identity();
        for x in &basis {
            if ctx.multiply(&id, x).unwrap() != *x || ctx.multiply(x, &id).unwrap() != *x {
                failures.push(format!("identity fails at (1, {r})"));
            }
            for y in &basis {
                let xy = ctx.multiply(x, y).unwrap();
                for z in &basis {
                    let yz = ctx.multiply(y, z).unwrap();
                    checked += 1;
                    if ctx.multiply(&xy, z).unwrap() != ctx.multiply(x, &yz).unwrap() {
                        failures.push(format!("associativity fails at (1, {r})"));
                    }
                }
            }
        }
    }
    // randomized associativity, the full-rank idempotent, and the corner
    // algebra at n = r = 2
    if max_n >= 2 && max_r >= 2 {
        match SchurContext::<PolyQ>::new(2, 2) {
            Ok(ctx) => {
                let mut rng = StdRng::seed_from_u64(0x5eed_0060);
                let basis: Vec<SchurElement<PolyQ>> = ctx
                    .basis()
                    .iter()
                    .map(|dm| SchurElement::basis_vector(2, 2, dm))
                    .collect();
                let random_elem = |rng: &mut StdRng| {
                    let mut e = SchurElement::zero(2, 2);
                    for _ in 0..2 {
                        let b = &basis[rng.gen_range(0..basis.len())];
                        let coeff = PolyQ::monomial(rng.gen_range(0..2usize), rng.gen_range(-2i64..=2).into());
                        e = e.add(&b.scale(&coeff));
                    }
                    e
                };
                for _ in 0..12 {
                    let x = random_elem(&mut rng);
                    let y = random_elem(&mut rng);
                    let z = random_elem(&mut rng);
                    let lhs = ctx.multiply(&ctx.multiply(&x, &y).unwrap(), &z).unwrap();
                    let rhs = ctx.multiply(&x, &ctx.multiply(&y, &z).unwrap()).unwrap();
                    checked += 1;
                    if lhs != rhs {
                        failures.push("randomized associativity fails at (2, 2)".to_string());
                    }
                }
                let id = ctx.identity();
                for x in &basis {
                    if ctx.multiply(&id, x).unwrap() != *x || ctx.multiply(x, &id).unwrap() != *x {
                        failures.push("identity fails at (2, 2)".to_string());
                    }
                }
                match ctx.e_omega() {
                    Ok(e) => {
                        if ctx.multiply(&e, &e).unwrap() != e {
                            failures.push("the full-rank idempotent does not square to itself".to_string());
                        }
                        // the corner algebra spanned by e * basis * e has the
                        // dimension of the rank-2 algebra itself
                        let keys: Vec<_> = ctx.basis().to_vec();
                        let key_index: std::collections::BTreeMap<_, _> =
                            keys.iter().cloned().zip(0..).collect();
                        let mut columns = Vec::new();
                        for b in &basis {
                            let ebe = ctx.multiply(&ctx.multiply(&e, b).unwrap(), &e).unwrap();
                            let mut col = vec![PolyQ::zero(); keys.len()];
                            for (dm, c) in ebe.terms() {
                                col[key_index[dm]] = c.clone();
                            }
                            columns.push(col);
                        }
                        let rank = PolyMatrix::from_columns(&columns).exact_rank();
                        if rank as u64 != hc_dimension(2) {
                            failures.push(format!(
                                "corner algebra has dimension {rank}, expected {}",
                                hc_dimension(2)
                            ));
                        }
                    }
                    Err(e) => failures.push(format!("full-rank idempotent: {e}")),
                }
            }
            Err(e) => failures.push(format!("context (2, 2): {e}")),
        }
    }
    report(
        6,
        "associativity, unit, and the full-rank corner idempotent",
        failures.is_empty(),
        if failures.is_empty() {
            format!("{checked} associativity instances plus unit and corner checks")
        } else {
            failures.join("; ")
        },
    )
}

fn specialization_commutes_for_pairs<const Q0: i64>(
    pairs: &[(HCElement<PolyQ>, HCElement<PolyQ>)],
) -> bool {
    let q0 = ExactInteger::from(Q0);
    let spec = |h: &HCElement<PolyQ>| h.map_coeffs(|p| IntAtQ::<Q0>::new(p.specialize(&q0)));
    pairs
        .iter()
        .all(|(a, b)| spec(&a.mul(b)) == spec(a).mul(&spec(b)))
}

fn check_base_change(max_r: usize, max_n: usize) -> CheckReport {
    let r = 3.min(max_r.max(1));
    let mut failures = Vec::new();
    let perms = Permutation::all(r);
    let mut rng = StdRng::seed_from_u64(0x5eed_0070);
    let pairs: Vec<(HCElement<PolyQ>, HCElement<PolyQ>)> = (0..110)
        .map(|_| {
            (
                random_hc_element(r, &mut rng, &perms),
                random_hc_element(r, &mut rng, &perms),
            )
        })
        .collect();
    if !specialization_commutes_for_pairs::<1>(&pairs) {
        failures.push("products do not commute with the specialization q = 1".to_string());
    }
    if !specialization_commutes_for_pairs::<5>(&pairs) {
        failures.push("products do not commute with the specialization q = 5".to_string());
    }
    let mut schur_pairs = 0usize;
    if max_n >= 2 && max_r >= 2 {
        match (
            SchurContext::<PolyQ>::new(2, 2),
            SchurContext::<IntAtQ<1>>::new(2, 2),
            SchurContext::<IntAtQ<5>>::new(2, 2),
        ) {
            (Ok(sym), Ok(at1), Ok(at5)) => {
                let dim = sym.basis().len();
                for _ in 0..20 {
                    let i = rng.gen_range(0..dim);
                    let j = rng.gen_range(0..dim);
                    let x = SchurElement::<PolyQ>::basis_vector(2, 2, &sym.basis()[i]);
                    let y = SchurElement::<PolyQ>::basis_vector(2, 2, &sym.basis()[j]);
                    let product = sym.multiply(&x, &y).expect("same shape");
                    for q0 in [1i64, 5] {
                        let ok = match q0 {
                            1 => {
                                let sx = x.map_coeffs(|p| IntAtQ::<1>::new(p.specialize(&1.into())));
                                let sy = y.map_coeffs(|p| IntAtQ::<1>::new(p.specialize(&1.into())));
                                let sp = product.map_coeffs(|p| IntAtQ::<1>::new(p.specialize(&1.into())));
                                at1.multiply(&sx, &sy).map(|z| z == sp).unwrap_or(false)
                            }
                            _ => {
                                let sx = x.map_coeffs(|p| IntAtQ::<5>::new(p.specialize(&5.into())));
                                let sy = y.map_coeffs(|p| IntAtQ::<5>::new(p.specialize(&5.into())));
                                let sp = product.map_coeffs(|p| IntAtQ::<5>::new(p.specialize(&5.into())));
                                at5.multiply(&sx, &sy).map(|z| z == sp).unwrap_or(false)
                            }
                        };
                        if !ok {
                            failures.push(format!(
                                "structure constants change under q = {q0} on a basis pair"
                            ));
                        }
                    }
                    schur_pairs += 1;
                }
            }
            _ => failures.push("could not build the specialized contexts".to_string()),
        }
    }
    report(
        7,
        "base change: products commute with integer specialization",
        failures.is_empty(),
        if failures.is_empty() {
            format!(
                "{} element pairs at rank {r} and {schur_pairs} basis pairs, at q = 1 and q = 5",
                pairs.len()
            )
        } else {
            failures.join("; ")
        },
    )
}

fn check_commutant_dimensions(max_r: usize, max_n: usize) -> CheckReport {
    let mut failures = Vec::new();
    let mut details = Vec::new();
    for (n, r) in [(1usize, 1usize), (1, 2), (2, 1), (2, 2)] {
        if n > max_n || r > max_r {
            continue;
        }
        match TensorSpace::new(n, r).and_then(|sp| sp.commutant_dim()) {
            Ok(dim) => {
                let expected = schur_dimension(n, r);
                if dim != expected {
                    failures.push(format!(
                        "commutant at (n, r) = ({n}, {r}) has dimension {dim}, expected {expected}"
                    ));
                }
                details.push(format!("({n},{r}) -> {dim}"));
            }
            Err(e) => failures.push(format!("commutant at ({n}, {r}): {e}")),
        }
    }
    report(
        8,
        "tensor commutant dimensions equal the endomorphism algebra dimensions",
        failures.is_empty(),
        if failures.is_empty() {
            format!("dimensions {}", details.join(", "))
        } else {
            failures.join("; ")
        },
    )
}

fn check_irreducible_census(max_r: usize, _max_n: usize) -> CheckReport {
    // independent oracle: enumerate every partition, then keep the ones with
    // strictly decreasing parts and at most n parts
    fn all_partitions(r: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if rest == 0 {
                out.push(current.clone());
                return;
            }
            for p in (1..=max.min(rest)).rev() {
                current.push(p);
                rec(rest - p, p, current, out);
                current.pop();
            }
        }
        rec(r, r, &mut current, &mut out);
        out
    }
    let mut failures = Vec::new();
    let mut total = 0usize;
    for r in 1..=8.min(max_r) {
        let everything = all_partitions(r);
        for n in 1..=r + 2 {
            let census = strict_partitions(r, Some(n));
            let oracle: Vec<Vec<usize>> = everything
                .iter()
                .filter(|p| p.len() <= n && p.windows(2).all(|w| w[0] > w[1]))
                .cloned()
                .collect();
            total += oracle.len();
            if census.iter().map(|s| s.parts().to_vec()).collect::<Vec<_>>() != oracle {
                failures.push(format!("census disagrees with the oracle at (n, r) = ({n}, {r})"));
            }
        }
        // stability: the census stops depending on n once n >= r
        let stable = strict_partitions(r, Some(r));
        for n in r..=r + 2 {
            if strict_partitions(r, Some(n)) != stable {
                failures.push(format!("census is not stable at (n, r) = ({n}, {r})"));
            }
        }
    }
    report(
        9,
        "strict-partition census against an independent enumerator",
        failures.is_empty(),
        if failures.is_empty() {
            format!("{total} census entries match, with stability for n >= r")
        } else {
            failures.join("; ")
        },
    )
}

fn check_involutions(max_r: usize, _max_n: usize) -> CheckReport {
    let mut failures = Vec::new();
    let mut checked = 0usize;
    for r in 1..=3.min(max_r) {
        let perms = Permutation::all(r);
        let mut rng = StdRng::seed_from_u64(0x5eed_0100 + r as u64);
        for _ in 0..5 {
            let a = random_hc_element(r, &mut rng, &perms);
            let b = random_hc_element(r, &mut rng, &perms);
            for tag in Involution::ALL {
                let img = |h: &HCElement<PolyQ>| h.involution(tag);
                checked += 1;
                if img(&img(&a)) != a {
                    failures.push(format!("{} is not an involution at r = {r}", tag.name()));
                }
                let lhs = img(&a.mul(&b));
                let rhs = if tag.is_anti() {
                    img(&b).mul(&img(&a))
                } else {
                    img(&a).mul(&img(&b))
                };
                if lhs != rhs {
                    failures.push(format!(
                        "{} fails the (anti)multiplicativity test at r = {r}",
                        tag.name()
                    ));
                }
            }
        }
        // the twist carries each antisymmetrizer module onto the matching
        // symmetrizer module: compare spans by ranks over Z[v, v^-1]
        for lam in positive_compositions(r) {
            let y = match y_lambda::<LaurentV>(&lam) {
                Ok(y) => y,
                Err(e) => {
                    failures.push(format!("antisymmetrizer at {lam}: {e}"));
                    continue;
                }
            };
            let x = x_lambda::<LaurentV>(&lam);
            let mut twisted = Vec::new();
            let mut right_module = Vec::new();
            for w in &perms {
                for mask in 0..(1u32 << r) {
                    let m = HCElement::from_term(r, w.clone(), mask, LaurentV::one());
                    twisted.push(m.mul(&y).involution(Involution::Tau));
                    right_module.push(x.mul(&m));
                }
            }
            let (_, mat_twisted) = coordinate_matrix(&twisted);
            let (_, mat_right) = coordinate_matrix(&right_module);
            let mut joint = twisted.clone();
            joint.extend(right_module.iter().cloned());
            let (_, mat_joint) = coordinate_matrix(&joint);
            let (rt, rr, rj) = (
                mat_twisted.exact_rank(),
                mat_right.exact_rank(),
                mat_joint.exact_rank(),
            );
            checked += 1;
            if !(rt == rr && rr == rj) {
                failures.push(format!(
                    "twist does not carry the antisymmetrizer module onto the symmetrizer module at {lam} (ranks {rt}, {rr}, {rj})"
                ));
            }
        }
    }
    report(
        10,
        "involutions: orders, (anti)multiplicativity, and the module twist",
        failures.is_empty(),
        if failures.is_empty() {
            format!("{checked} involution checks pass")
        } else {
            failures.join("; ")
        },
    )
}

const CHECKS: [fn(usize, usize) -> CheckReport; 10] = [
    check_defining_relations,
    check_dimension_counts,
    check_weighted_conjugation,
    check_parabolic_intersections,
    check_decorated_basis_census,
    check_algebra_structure,
    check_base_change,
    check_commutant_dimensions,
    check_irreducible_census,
    check_involutions,
];

/// Resolve the worker count: an explicit request wins, then the
/// QS_MAX_THREADS environment variable, then the machine's parallelism.
fn worker_count(requested: Option<usize>) -> usize {
    let cap = requested.or_else(|| {
        std::env::var("QS_MAX_THREADS")
            .ok()
            .and_then(|s| s.parse::<usize>().ok())
    });
    let hw = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    cap.unwrap_or(hw).clamp(1, CHECKS.len())
}

/// Run the whole verification suite with the given size caps. Independent
/// checks run on a small worker pool; the report order is canonical
/// (ascending index) regardless of scheduling.
pub fn run_all(max_r: usize, max_n: usize, threads: Option<usize>) -> Vec<CheckReport> {
    let workers = worker_count(threads);
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<CheckReport>>> = Mutex::new(vec![None; CHECKS.len()]);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= CHECKS.len() {
                    break;
                }
                let rep = CHECKS[i](max_r, max_n);
                results.lock().expect("no poisoned locks")[i] = Some(rep);
            });
        }
    });
    results
        .into_inner()
        .expect("no poisoned locks")
        .into_iter()
        .map(|r| r.expect("every check ran"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation_suite_counts() {
        let checks = hc_relation_checks(3);
        assert!(checks.iter().all(|c| c.ok));
        // 2 quadratic + 1 braid + 0 distant + 3 squares + 3 anticommutation
        // + 2 distant mixed + 4 adjacent mixed
        assert_eq!(checks.len(), 15);
    }

    #[test]
    fn small_full_run_passes() {
        let reports = run_all(2, 2, Some(2));
        assert_eq!(reports.len(), 10);
        for rep in &reports {
            assert!(rep.passed, "{}: {}", rep.name, rep.details);
        }
        // canonical order
        for (i, rep) in reports.iter().enumerate() {
            assert_eq!(rep.index, i + 1);
        }
    }

    #[test]
    fn report_json_shape() {
        let rep = report(3, "sample", true, "ok".to_string());
        assert_eq!(
            rep.to_json().to_string(),
            r#"{"index":3,"name":"sample","passed":true,"details":"ok"}"#
        );
    }
}
