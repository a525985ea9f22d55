//! Acceptance checks, one line per criterion. Runs without the libtest
//! harness; exits non-zero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use common::q;
use liegen::catalog;
use liegen::coadjoint::{coadjoint_matrix, corollary1_check, generic_order, invariant_report, product_j0_formula, Corollary1};
use liegen::exterior::{generic_differential, maurer_cartan};
use liegen::genproduct::{enumerate_types, generator_product, prop3_construct, swap_isomorphism, theorem1_for, verify_prop4, GeneratorProduct};
use liegen::prodstruct::{
    check_product_structure, enumerate_extensions, example_10d_product, example_10d_signs, forced_signs_respected, DiagonalSigns,
    Extension, StructureError,
};
use liegen::random::random_solvable;
use liegen::{fingerprint, LieAlgebra, QMatrix, Rational};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pairs() -> Vec<(String, String, LieAlgebra, LieAlgebra)> {
    let set = catalog::product_test_set();
    let mut out = Vec::new();
    for (a, ga) in &set {
        for (b, gb) in &set {
            out.push((a.to_string(), b.to_string(), ga.clone(), gb.clone()));
        }
    }
    out
}

fn product(a: &LieAlgebra, b: &LieAlgebra) -> GeneratorProduct {
    generator_product(a, b).expect("solvable factors")
}

fn dense(m: &QMatrix, n: usize) -> Vec<Vec<Rational>> {
    (0..n).map(|r| (0..n).map(|c| m.get(r, c).clone()).collect()).collect()
}

fn at(dims: &[usize], k: usize) -> usize {
    dims[k.min(dims.len() - 1)]
}

fn random_set() -> Vec<LieAlgebra> {
    (0..200u64).map(|s| random_solvable(s, 1 + (s as usize % 7))).collect()
}

fn criterion1() -> Outcome {
    let g = catalog::remark_5d();
    let r = invariant_report(&g);
    ensure(r.n_rank == 1 && r.n_wedge == 1 && r.j0 == 2, || format!("g: N={} j0={}", r.n_rank, r.j0))?;

    let start = Instant::now();
    let gp = product(&g, &g);
    let p = &gp.algebra;
    ensure(p.dim() == 14, || format!("dim {}", p.dim()))?;
    ensure(common::betti1(p) == 4, || format!("b1 {}", common::betti1(p)))?;
    ensure(gp.centrals.len() == 4, || format!("{} central elements", gp.centrals.len()))?;
    let r = invariant_report(p);
    ensure(r.n_rank == 4 && r.n_wedge == 4 && r.j0 == 5, || format!("g x g: N={} j0={}", r.n_rank, r.j0))?;
    ensure(p.dim() - common::coadjoint_rank(p, 11) == 4, || "oracle N differs".into())?;

    let theta = generic_differential(p);
    let (j0, top) = generic_order(p);
    ensure(j0 == 5, || format!("generic order {j0}"))?;
    let sixth = top.wedge(&theta).map_err(|e| e.to_string())?;
    ensure(sixth.is_zero(), || "sixth power of theta is nonzero".into())?;
    let top5 = theta.wedge_power(5).map_err(|e| e.to_string())?;
    ensure(top5 == top, || "fifth power differs from the iterated product".into())?;

    // superscripts are indices: α¹ ↦ a1, β¹ ↦ the first primed form, γ⁴ ↦ η4
    let (alpha, beta, gamma) = (gp.embed1[0], gp.embed2[0], gp.centrals[3]);
    let cert = &r.generic_certificate;
    ensure(!cert.is_zero(), || "zero certificate".into())?;
    for (m, _) in cert.terms() {
        ensure(m.exponent(alpha) >= 2 && m.exponent(beta) >= 2 && m.exponent(gamma) >= 1, || {
            format!("certificate {cert} is not divisible by the expected monomial")
        })?;
    }

    let mc = maurer_cartan(p);
    let w = mc[gp.embed1[0]].add(&mc[gp.embed2[0]]).and_then(|f| f.add(&mc[gamma])).map_err(|e| e.to_string())?;
    let m = w.to_matrix().map_err(|e| e.to_string())?.ok_or("witness is not constant")?;
    let rank = common::rank(dense(&m, 14));
    ensure(rank == 10, || format!("witness rank {rank}"))?;
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 30.0, || format!("14-dim computation took {secs:.1}s"))?;
    Ok(format!("N=1, j0=2; square: N=4, j0=5, certificate {cert}, witness rank 10 in {secs:.2}s"))
}

fn criterion2() -> Outcome {
    let mut failures = Vec::new();
    let mut lib_disagrees = 0;
    for (a, b, g1, g2) in pairs() {
        let gp = product(&g1, &g2);
        let (m1, m2) = (gp.m1(), gp.m2());
        let (d, d1, d2) = (common::derived_dims(&gp.algebra), common::derived_dims(&g1), common::derived_dims(&g2));
        let (z, z1, z2) = (common::center_dim(&gp.algebra), common::center_dim(&g1), common::center_dim(&g2));
        let mut bad = Vec::new();
        if common::betti1(&gp.algebra) != common::betti1(&g1) + common::betti1(&g2) {
            bad.push("b1".to_string());
        }
        if at(&d, 1) != at(&d1, 1) + at(&d2, 1) + m1 * m2 {
            bad.push("D1".to_string());
        }
        for k in 2..=d.len().max(d1.len()).max(d2.len()) {
            if at(&d, k) != at(&d1, k) + at(&d2, k) {
                bad.push(format!("D{k}"));
            }
        }
        if z != z1 + z2 + m1 * m2 {
            bad.push(format!("center {z} vs {}", z1 + z2 + m1 * m2));
        }
        let lib = theorem1_for(&g1, &g2, &gp).items_hold();
        let oracle = [!bad.contains(&"b1".to_string()), !bad.iter().any(|s| s == "D1"), !bad.iter().any(|s| s.starts_with('D') && s != "D1"), !bad.iter().any(|s| s.starts_with("center"))];
        if lib != oracle {
            lib_disagrees += 1;
        }
        if !bad.is_empty() {
            failures.push(format!("{a} x {b}: {}", bad.join(", ")));
        }
    }
    ensure(lib_disagrees == 0, || format!("library and oracle verdicts differ on {lib_disagrees} pairs"))?;
    if failures.is_empty() {
        Ok("all four identities hold on 64 pairs".into())
    } else {
        let shown: Vec<&String> = failures.iter().take(3).collect();
        Err(format!("{} of 64 pairs violate an identity, e.g. {shown:?}", failures.len()))
    }
}

fn criterion3() -> Outcome {
    let expected = ["(5,1;1,1)", "(4,1;2,1)", "(3,1;3,1)", "(4,2;1,1)", "(3,2;2,1)", "(3,1;2,2)", "(3,3;1,1)"];
    let got: Vec<String> = enumerate_types(7).iter().map(ToString::to_string).collect();
    ensure(got == expected, || format!("library list {got:?}"))?;
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_liegen"))
        .args(["classify", "--dim", "7"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || format!("exit {:?}", out.status.code()))?;
    let text = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = text.lines().map(|l| l.split_whitespace().next().unwrap_or("")).collect();
    ensure(lines == expected, || format!("cli emitted {lines:?}"))?;
    Ok("seven cases in order".into())
}

fn criterion4() -> Outcome {
    let r2 = catalog::r2_aff();
    match corollary1_check(&r2, &r2).map_err(|e| e.to_string())? {
        Corollary1::Holds { n: 1, m1m2: 1 } => {}
        other => return Err(format!("r2 x r2: {other:?}")),
    }
    let gp = product(&r2, &r2);
    ensure(gp.dim() - common::coadjoint_rank(&gp.algebra, 3) == 1, || "oracle N(r2 x r2) != 1".into())?;
    for (a, b, g1, g2) in pairs() {
        let rep = product_j0_formula(&g1, &g2).map_err(|e| e.to_string())?;
        let n_oracle = rep.product.dim() - common::coadjoint_rank(&rep.product.algebra, 5);
        ensure(n_oracle == rep.n_product, || format!("{a} x {b}: N {} vs oracle {n_oracle}", rep.n_product))?;
        ensure(rep.sandwich_lower() && rep.sandwich_upper(), || {
            format!(
                "{a} x {b}: {} <= {} <= {} + {} + {} - {}",
                rep.m1m2,
                rep.n_product,
                rep.n1,
                rep.n2,
                rep.m1m2,
                2 * rep.j0_omega
            )
        })?;
    }
    Ok("N(r2 x r2) = 1 and the bounds hold on 64 pairs".into())
}

fn criterion5() -> Outcome {
    let gp = example_10d_product();
    let (e1, e2) = example_10d_signs();
    let exts = enumerate_extensions(&gp, &e1, &e2).map_err(|e| e.to_string())?;
    let dims: Vec<(usize, usize)> = exts.iter().map(Extension::dims).collect();
    ensure(dims == [(6, 4), (5, 5)], || format!("dims {dims:?}"))?;
    let para: Vec<bool> = exts.iter().map(Extension::is_paracomplex).collect();
    ensure(para == [false, true], || format!("paracomplex flags {para:?}"))?;
    let r = check_product_structure(&catalog::r4_0_paper(), &e2.matrix()).map_err(|e| e.to_string())?;
    Ok(format!(
        "extensions (6,4) and (5,5), the latter paracomplex; E2 alone: automorphism {}, integrable {}",
        r.automorphism, r.integrable
    ))
}

fn criterion6() -> Outcome {
    let mut algebras: Vec<(String, LieAlgebra)> = catalog::listed().into_iter().map(|e| (e.name.to_string(), e.algebra)).collect();
    for (a, b, g1, g2) in pairs() {
        algebras.push((format!("{a} x {b}"), product(&g1, &g2).algebra));
    }
    for (i, g) in random_set().into_iter().enumerate() {
        algebras.push((format!("random #{i}"), g));
    }
    for (i, (name, g)) in algebras.iter().enumerate() {
        let r = invariant_report(g);
        ensure(r.n_rank == r.n_wedge, || format!("{name}: N_rank {} vs N_wedge {}", r.n_rank, r.n_wedge))?;
        ensure(r.rank == 2 * r.j0, || format!("{name}: rank {} vs 2 j0 {}", r.rank, 2 * r.j0))?;
        let a = coadjoint_matrix(g);
        let sym = a.symbolic_rank();
        let cert = a.certified_random_rank(20, 0x1000 + i as u64);
        ensure(sym == cert, || format!("{name}: symbolic {sym} vs random {cert}"))?;
        let oracle = common::coadjoint_rank(g, i as u64);
        ensure(sym == oracle, || format!("{name}: symbolic {sym} vs oracle {oracle}"))?;
    }
    Ok(format!("{} algebras agree across all counting routes", algebras.len()))
}

fn criterion7() -> Outcome {
    let mut checked = 0;
    let mut objects: Vec<(String, LieAlgebra)> = catalog::listed().into_iter().map(|e| (e.name.to_string(), e.algebra)).collect();
    for (i, g) in random_set().into_iter().enumerate() {
        objects.push((format!("random #{i}"), g));
    }
    for n in 4..=10 {
        objects.push((format!("rn_{n}"), catalog::rn(n).map_err(|e| e.to_string())?));
        objects.push((format!("rn_{n} x L1"), prop3_construct(n).map_err(|e| e.to_string())?.algebra));
    }
    let mut rng = common::SplitMix(77);
    for (a, b, g1, g2) in pairs() {
        let gp = product(&g1, &g2);
        let back = product(&g2, &g1);
        ensure(fingerprint(&gp.algebra) == fingerprint(&back.algebra), || format!("{a} x {b}: swapped fingerprints differ"))?;
        let s = swap_isomorphism(&gp, &back);
        ensure(common::is_homomorphism(&gp.algebra, &back.algebra, &dense(&s, gp.dim())), || format!("{a} x {b}: swap map"))?;
        ensure(verify_prop4(&gp).holds(), || format!("{a} x {b}: bounds"))?;
        let (dd, z) = (common::derived_dims(&gp.algebra), common::center_dim(&gp.algebra));
        ensure(at(&dd, 1) + 2 <= gp.dim() && z >= 1 && gp.dim() >= 3, || format!("{a} x {b}: oracle bounds"))?;

        for _ in 0..4 {
            let mut signs = |n: usize| DiagonalSigns((0..n).map(|_| if rng.next() & 1 == 0 { 1 } else { -1 }).collect());
            let (e1, e2) = (signs(g1.dim()), signs(g2.dim()));
            let exts = match enumerate_extensions(&gp, &e1, &e2) {
                Ok(x) => x,
                Err(StructureError::TooManyFreePairs(_)) => continue,
                Err(e) => return Err(format!("{a} x {b}: {e}")),
            };
            for x in exts {
                checked += 1;
                ensure(forced_signs_respected(&gp, &e1, &e2, &x.map), || format!("{a} x {b}: forced sign"))?;
                for p in &gp.cocycle_support {
                    let (ei, ek) = (e1.0[p.left], e2.0[p.right]);
                    if ei == ek {
                        ensure(*x.map.get(p.central, p.central) == q(ei.into()), || format!("{a} x {b}: E(Z) sign"))?;
                    }
                }
                if x.report.valid() {
                    let ok = x.report.plus_closed
                        && x.report.minus_closed
                        && common::is_subalgebra(&gp.algebra, x.report.plus.basis())
                        && common::is_subalgebra(&gp.algebra, x.report.minus.basis());
                    ensure(ok, || format!("{a} x {b}: eigenspace not closed"))?;
                }
            }
        }
        objects.push((format!("{a} x {b}"), gp.algebra));
    }
    let gp10 = example_10d_product();
    objects.push(("paper_example_10d".into(), gp10.algebra));
    for (name, g) in &objects {
        ensure(g.check_jacobi().holds() && common::jacobi_holds(g), || format!("{name}: Jacobi"))?;
    }
    Ok(format!("{} objects satisfy Jacobi; {checked} extensions checked", objects.len()))
}

fn criterion8() -> Outcome {
    for n in 4..=10 {
        let gp = prop3_construct(n).map_err(|e| e.to_string())?;
        let g = &gp.algebra;
        let d = common::derived_dims(g);
        ensure(g.dim() == n, || format!("n={n}: dim {}", g.dim()))?;
        ensure(d.last() == Some(&0), || format!("n={n}: not solvable, derived dims {d:?}"))?;
        ensure(!common::is_nilpotent(g), || format!("n={n}: nilpotent"))?;
        ensure(common::betti1(g) == 2, || format!("n={n}: b1 {}", common::betti1(g)))?;
    }
    let l1 = catalog::abelian(1);
    let gp = product(&l1, &l1);
    let h = catalog::heisenberg_h1();
    ensure(fingerprint(&gp.algebra) == fingerprint(&h), || "fingerprints differ".into())?;
    ensure(common::tensor(&gp.algebra) == common::tensor(&h), || "structure constants differ".into())?;
    let id = dense(&QMatrix::identity(3), 3);
    ensure(
        common::is_homomorphism(&gp.algebra, &h, &id) && common::is_homomorphism(&h, &gp.algebra, &id),
        || "relabeling is not an isomorphism".into(),
    )?;
    Ok("n = 4..10 solvable, non-nilpotent, b1 = 2; L1 x L1 = h1".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("1 five-dimensional example and its square", criterion1),
        ("2 dimension identities of products", criterion2),
        ("3 dimension-7 decomposition types", criterion3),
        ("4 invariant count of products", criterion4),
        ("5 ten-dimensional extension example", criterion5),
        ("6 cross-method invariant counts", criterion6),
        ("7 structural properties", criterion7),
        ("8 r_n products and L1 squared", criterion8),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let t = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("[PASS] {name}: {msg} ({t:.2}s)"),
            Err(msg) => {
                failed += 1;
                println!("[FAIL] {name}: {msg} ({t:.2}s)");
            }
        }
    }
    println!("{} of 8 criteria passed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
