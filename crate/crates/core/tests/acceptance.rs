//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sln_ext::clifford::{conjugation_twist, orbit_stabilizer, CliffordTransfer, Permutation};
use sln_ext::exterior::{isotypic_mult, subset_sum_mult};
use sln_ext::intmat::binomial;
use sln_ext::koszul::{semidirect_cohomology_dim, KoszulComplex};
use sln_ext::lattice::standard_a;
use sln_ext::tables::{
    euler_poincare, ramanujan_sum, theorem1_ext1, theorem2_table, CaseTag, Theorem1Config,
};

type Check = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn n2_reproduction() -> Check {
    let t = theorem2_table(2, CaseTag::Ramified).map_err(e)?;
    for a in 0..2i64 {
        for b in 0..2i64 {
            let j = b - a;
            ensure(t.dim(0, j) == u64::from(a == b), || {
                format!("Ext^0({a},{b}) = {}", t.dim(0, j))
            })?;
            ensure(t.dim(1, j) == u64::from(a != b), || {
                format!("Ext^1({a},{b}) = {}", t.dim(1, j))
            })?;
        }
    }
    let cfg = Theorem1Config {
        reducible: true,
        ..Default::default()
    };
    let ext1 = theorem1_ext1(&cfg).map_err(e)?;
    ensure(ext1 == vec![vec![0, 1], vec![1, 0]], || {
        format!("case analysis gave {ext1:?}")
    })?;
    Ok("Ext^0(a,a)=1, Ext^1(a,a)=0, Ext^1(a,b)=1".into())
}

fn headline() -> Check {
    for n in 2..=12u32 {
        let t = theorem2_table(n, CaseTag::Unramified).map_err(e)?;
        for j in 0..n as i64 {
            let expect = u64::from(j != 0);
            ensure(t.dim(1, j) == expect, || {
                format!("n={n}: dims[1][{j}] = {}", t.dim(1, j))
            })?;
        }
    }
    Ok("dims[1][j] = [j != 0] for 2 <= n <= 12".into())
}

fn three_pipelines() -> Check {
    let mut cells = 0;
    for n in 2..=8u32 {
        let a = standard_a(n).map_err(e)?;
        for r in 0..n as usize {
            for j in 0..n as i64 {
                let s = subset_sum_mult(n, r, j).map_err(e)?;
                let c = isotypic_mult(&a, r, j).map_err(e)?;
                let k = semidirect_cohomology_dim(&a, j, r).map_err(e)? as u64;
                ensure(s == c && c == k, || {
                    format!("n={n} r={r} j={j}: {s} / {c} / {k}")
                })?;
                cells += 1;
            }
        }
    }
    Ok(format!(
        "{cells} cells agree across subset-sum, character and projector"
    ))
}

fn ep_identity() -> Check {
    for n in 2..=12u32 {
        let t = theorem2_table(n, CaseTag::Ramified).map_err(e)?;
        let mut total = 0;
        for j in 0..n as i64 {
            let ep = euler_poincare(&t, j);
            let c = ramanujan_sum(n, j).map_err(e)?;
            ensure(ep == c, || format!("n={n} j={j}: EP {ep} vs c_n(j) {c}"))?;
            total += ep;
        }
        ensure(total == 0, || format!("n={n}: sum of EP = {total}"))?;
    }
    Ok("EP(j) = c_n(j) and sum_j EP(j) = 0 for n <= 12".into())
}

fn koszul_vanishing() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut count = 0;
    for n in 2..=8u32 {
        let m = n as usize - 1;
        for _ in 0..100 {
            let exps = loop {
                let v: Vec<i64> = (0..m).map(|_| rng.gen_range(0..n as i64)).collect();
                if v.iter().any(|&x| x != 0) {
                    break v;
                }
            };
            let dims = KoszulComplex::from_exponents(n, &exps)
                .map_err(e)?
                .cohomology_dims();
            ensure(dims.iter().all(|&d| d == 0), || {
                format!("n={n} χ={exps:?}: {dims:?}")
            })?;
            count += 1;
        }
        let dims = KoszulComplex::from_exponents(n, &vec![0; m])
            .map_err(e)?
            .cohomology_dims();
        let expect: Vec<usize> = (0..=m).map(|i| binomial(m, i) as usize).collect();
        ensure(dims == expect, || format!("n={n} trivial: {dims:?}"))?;
    }
    Ok(format!(
        "{count} nontrivial characters acyclic, trivial gives binomials"
    ))
}

fn orbit_check() -> Check {
    for n in 2..=6u32 {
        let o = orbit_stabilizer(n).map_err(e)?;
        let fact: usize = (1..n as usize).product();
        ensure(o.orbit_size == fact, || {
            format!("n={n}: orbit {}", o.orbit_size)
        })?;
        ensure(o.stabilizer.len() == n as usize, || {
            format!("n={n}: stabilizer {}", o.stabilizer.len())
        })?;
        ensure(o.generator == Permutation::cycle(n as usize), || {
            format!("n={n}: generator {}", o.generator)
        })?;
        ensure(o.generator.order() == n as usize, || {
            format!("n={n}: generator order")
        })?;
        let mut powers: Vec<Permutation> = (0..n as usize).map(|k| o.generator.pow(k)).collect();
        powers.sort();
        ensure(powers == o.stabilizer, || {
            format!("n={n}: stabilizer is not cyclic")
        })?;
    }
    Ok("orbit (n-1)!, stabilizer <(1 2 ... n)> for 2 <= n <= 6".into())
}

fn transfer_consistency() -> Check {
    for n in 2..=6u32 {
        let table = theorem2_table(n, CaseTag::Unramified).map_err(e)?;
        let t = CliffordTransfer::new(n).map_err(e)?;
        for a in 0..n as i64 {
            for b in 0..n as i64 {
                let got: Vec<u64> = t
                    .ext_dims(a, b)
                    .map_err(e)?
                    .into_iter()
                    .map(|d| d as u64)
                    .collect();
                let col = table.column(b - a);
                ensure(got == col, || {
                    format!("n={n} ({a},{b}): {got:?} vs {col:?}")
                })?;
            }
        }
    }
    Ok("transfer equals column b-a for n <= 6".into())
}

fn twist_check() -> Check {
    for n in 2..=8u32 {
        ensure(conjugation_twist(n, n as i64).map_err(e)? == 0, || {
            format!("n={n}: twist(n) != 0")
        })?;
        let mut seen = vec![false; n as usize];
        for d in -(n as i64)..=2 * n as i64 {
            let td = conjugation_twist(n, d).map_err(e)?;
            if (0..n as i64).contains(&d) {
                seen[td as usize] = true;
            }
            for f in 0..n as i64 {
                let lhs = conjugation_twist(n, d + f).map_err(e)?;
                let rhs = (td + conjugation_twist(n, f).map_err(e)?) % n;
                ensure(lhs == rhs, || {
                    format!("n={n}: twist({d}+{f}) = {lhs}, expected {rhs}")
                })?;
            }
        }
        ensure(seen.iter().all(|&s| s), || {
            format!("n={n}: twist not surjective")
        })?;
    }
    Ok("homomorphic, trivial at d=n, surjective for n <= 8".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("n=2 reproduction", 1, n2_reproduction),
        ("Ext^1 headline n<=12", 5, headline),
        ("three-pipeline agreement n<=8", 60, three_pipelines),
        ("EP vs Ramanujan sums n<=12", 5, ep_identity),
        ("Koszul vanishing n<=8", 30, koszul_vanishing),
        ("orbit/stabilizer n<=6", 10, orbit_check),
        ("Clifford transfer n<=6", 10, transfer_consistency),
        ("conjugation twist n<=8", 5, twist_check),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(limit);
        let (status, detail) = match outcome {
            Ok(msg) if elapsed < limit => ("PASS", msg),
            Ok(msg) => ("FAIL", format!("{msg}; too slow")),
            Err(msg) => ("FAIL", msg),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {}: {status} [{name}] {:.3}s (limit {}s): {detail}",
            i + 1,
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
