//! The chain of blocks used for the pair `(λ³, μ³)` of the principal
//! weight-4 block: abacus displays, Ḟ images, branching steps through
//! `B⁰, …, B^{e−2}` and `C`, the v-decomposition numbers along the way and
//! the solver's value `[W^{f(λ³)} : L^{f(μ³)}] = 2` in positive
//! characteristic.

use std::collections::{BTreeMap, BTreeSet};

use fockdec::blocks::{
    core_and_weight, dot_f_down, enumerate_block, find_semisimple_path_to, induce_simple, induce_weyl,
    is_rouquier, semisimple_induction, BlockDescriptor, SimpleBranch,
};
use fockdec::fock::DecompositionContext;
use fockdec::jantzen::{FieldSpec, Solver};
use fockdec::notation::parse_abacus_rows;
use fockdec::orders::{product_leq, JantzenOrder};
use fockdec::blocks::canonical_beads;
use fockdec::Partition;

use crate::report::VerificationReport;
use crate::tables::block_from_counts;
use crate::CliResult;

const WEIGHT: usize = 4;

/// Abacus displays, `h` marking the elided middle runners.
const LAMBDA3: &str = "bbbhb,bbbhb,nbbhb,nbbhb,bnbhb,bnnhn,nnnhn";
const F_LAMBDA3: &str = "bhbbb,bhbbn,bhbbn,bhbbb,bhbnb,bhbnn,nhnnn";
const MU3: &str = "bbbhb,bbbhb,bbbhb,nnbhb,nnbhb,bbnhn,nnnhn";
const F_MU3: &str = "bhbbb,bhbbb,bhbbn,bhbnn,bhbnb,bhbbn,nhnnn";
const LAMBDA_Y: &str = "bhbbb,bhbbn,bhbnb,bhbbb,bhbnb,bhbnn,nhnnn";
const LAMBDA_X: &str = "bhbbb,bhbnb,bhbbn,bhbbb,bhbnb,bhbnn,nhnnn";
const MU_X: &str = "bhbbb,bhbbb,bhbnb,bhbnn,bhbnb,bhbbn,nhnnn";
const LAMBDA_YX: &str = "bbhbb,bbhbn,nbhbb,bbhbb,nbhbb,nbhbn,nnhnn";
const LAMBDA_XX: &str = "bbhbb,nbhbb,bbhbn,bbhbb,nbhbb,nbhbn,nnhnn";
const MU_XX: &str = "bbhbb,bbhbb,nbhbb,nbhbn,nbhbb,bbhbn,nnhnn";
const LAMBDA_YXX: &str = "bbhbb,bbhbn,nbhbb,bbhbn,bbhbn,bbhbn,nnhnn";
const LAMBDA_XXX: &str = "bbhbb,nbhbb,bbhbn,bbhbn,bbhbn,bbhbn,nnhnn";
const LAMBDA_XXY: &str = "bbhbn,bbhbb,bbhbn,bbhbb,nbhbn,bbhbn,nnhnn";
const LAMBDA_XXZ: &str = "bbhbn,bbhbb,bbhbn,bbhbn,bbhbb,nbhbn,nnhnn";
const MU_XXX: &str = "bbhbb,bbhbn,bbhbn,bbhbn,nbhbb,bbhbn,nnhnn";

fn runs(items: &[(usize, usize)]) -> String {
    items.iter().filter(|(_, k)| *k > 0).map(|(v, k)| format!("{v}^{k}")).collect::<Vec<_>>().join(",")
}

/// Bead counts of `B^i = ⟨6^{e−i−2}, 3, 6^i, 4⟩`.
fn b_block(e: usize, i: usize) -> String {
    runs(&[(6, e - i - 2), (3, 1), (6, i), (4, 1)])
}

fn listing(terms: &[(Partition, u64)]) -> String {
    let mut items: Vec<String> = terms.iter().map(|(p, m)| format!("{m}x({p})")).collect();
    items.sort();
    items.join(" + ")
}

fn set_listing<'a>(parts: impl IntoIterator<Item = &'a Partition>) -> String {
    let set: BTreeSet<&Partition> = parts.into_iter().collect();
    set.iter().map(|p| format!("({p})")).collect::<Vec<_>>().join(" ")
}

/// Residues `j, j−1, …, j−m+1` of `Ḟ_j↘_m`.
fn down_residues(e: usize, j: usize, m: usize) -> Vec<usize> {
    (0..m).map(|s| (j + e * m - s) % e).collect()
}

/// The residue j for which inducing λ across k nodes of residue j lands in
/// `target`.
fn step_residue(lambda: &Partition, e: usize, k: usize, target: &BlockDescriptor) -> CliResult<Option<usize>> {
    for j in 0..e {
        if let Some((nu, _)) = induce_weyl(lambda, e, j, k)?.first() {
            if in_block(nu, target)? {
                return Ok(Some(j));
            }
        }
    }
    Ok(None)
}

fn in_block(lambda: &Partition, block: &BlockDescriptor) -> CliResult<bool> {
    Ok(core_and_weight(lambda, block.e)? == (block.core.clone(), block.weight))
}

fn simple_listing(branch: &SimpleBranch) -> String {
    match branch {
        SimpleBranch::Zero => "0".into(),
        SimpleBranch::Exact(p, m) => format!("{m}x({p})"),
        SimpleBranch::SocleOnly(p, m) => format!("socle {m}x({p})"),
    }
}

/// All checks at one e ≥ 3.
pub fn verify(e: usize) -> CliResult<VerificationReport> {
    let params = BTreeMap::from([("e".to_string(), e as i64)]);
    let mut report = VerificationReport::new("prop-4e", params);
    let abacus = |rows: &str| -> CliResult<Partition> { Ok(parse_abacus_rows(rows, e)?.to_partition()) };

    let home = block_from_counts(&runs(&[(4, 2), (5, e - 2)]), WEIGHT)?;
    let f_block = block_from_counts(&runs(&[(6, e - 2), (4, 1), (3, 1)]), WEIGHT)?;
    let b0 = block_from_counts(&b_block(e, 0), WEIGHT)?;
    let b_last = block_from_counts(&b_block(e, e - 2), WEIGHT)?;
    let c_block = block_from_counts(&runs(&[(5, 1), (6, e - 2), (2, 1)]), WEIGHT)?;

    // Displays agree with the runner notation and lie in the stated blocks.
    let lambda3 = home.partition("<0_{2^2}>")?;
    let mu3 = home.partition("<0_{2},1_{2}>")?;
    let lambda0 = home.partition("<0_{2,1^2}>")?;
    let f_lambda3 = f_block.partition(&format!("<{}_{{2^2}}>", e - 1))?;
    let f_mu3 = f_block.partition(&format!("<{}_{{2}},{}_{{2}}>", e - 2, e - 1))?;
    report.check(&["lambda3", "display"], &lambda3, abacus(LAMBDA3)?);
    report.check(&["mu3", "display"], &mu3, abacus(MU3)?);
    report.check(&["f(lambda3)", "display"], &f_lambda3, abacus(F_LAMBDA3)?);
    report.check(&["f(mu3)", "display"], &f_mu3, abacus(F_MU3)?);

    let named = [
        ("lambda^y", LAMBDA_Y, &b0),
        ("lambda^x", LAMBDA_X, &b0),
        ("mu^x", MU_X, &b0),
        ("lambda^{y,x}", LAMBDA_YX, &b_last),
        ("lambda^{x,x}", LAMBDA_XX, &b_last),
        ("mu^{x,x}", MU_XX, &b_last),
        ("lambda^{y,x,x}", LAMBDA_YXX, &c_block),
        ("lambda^{x,x,x}", LAMBDA_XXX, &c_block),
        ("lambda^{x,x,y}", LAMBDA_XXY, &c_block),
        ("lambda^{x,x,z}", LAMBDA_XXZ, &c_block),
        ("mu^{x,x,x}", MU_XXX, &c_block),
    ];
    let mut p = BTreeMap::new();
    for (name, rows, block) in named {
        let lambda = abacus(rows)?;
        report.check(&[name, "block"], block.label(), if in_block(&lambda, block)? { block.label() } else { "elsewhere".into() });
        p.insert(name, lambda);
    }

    // f = Ḟ_2↘_{e−2} is a semisimple induction.
    let f_res = down_residues(e, 2, e - 2);
    for (name, from, to) in [("lambda3", &lambda3, &f_lambda3), ("mu3", &mu3, &f_mu3)] {
        let (image, semisimple) = semisimple_induction(from, e, &f_res)?;
        report.check(&[name, "f"], format!("({to}) semisimple"), format!("({image}) {}", if semisimple { "semisimple" } else { "exceptional" }));
        report.check(&[name, "dot_f_down"], to, dot_f_down(from, e, 2, e - 2)?);
    }

    // Branching up to B⁰.
    let Some(j0) = step_residue(&f_lambda3, e, 1, &b0)? else {
        report.check(&["f(lambda3)", "induce to B^0"], "a residue", "none");
        return Ok(report.finish());
    };
    report.check(
        &["W^f(lambda3) induced to B^0"],
        listing(&[(p["lambda^y"].clone(), 1), (p["lambda^x"].clone(), 1)]),
        listing(&induce_weyl(&f_lambda3, e, j0, 1)?),
    );
    report.check(
        &["L^f(mu3) induced to B^0"],
        format!("1x({})", p["mu^x"]),
        simple_listing(&induce_simple(&f_mu3, e, j0, 1)?),
    );

    // B⁰ → B¹ → … → B^{e−2}, three nodes at a time. Multiplicities of
    // the divided-power steps are not tracked; supports must be single
    // partitions.
    let mut chains = [
        ("lambda^y", vec![p["lambda^y"].clone()], "lambda^{y,x}"),
        ("lambda^x", vec![p["lambda^x"].clone()], "lambda^{x,x}"),
    ];
    let mut mu_chain = SimpleBranch::Exact(p["mu^x"].clone(), 1);
    for i in 0..e - 2 {
        let target = block_from_counts(&b_block(e, i + 1), WEIGHT)?;
        let Some(j) = step_residue(&chains[0].1[0], e, 3, &target)? else {
            report.check(&["B^i step", &i.to_string()], "a residue", "none");
            return Ok(report.finish());
        };
        for (_, support, _) in chains.iter_mut() {
            let mut next = BTreeSet::new();
            for lambda in support.iter() {
                next.extend(induce_weyl(lambda, e, j, 3)?.into_iter().map(|(nu, _)| nu));
            }
            *support = next.into_iter().collect();
        }
        mu_chain = match mu_chain {
            SimpleBranch::Exact(nu, _) => induce_simple(&nu, e, j, 3)?,
            other => other,
        };
    }
    for (start, support, end) in &chains {
        report.check(&[start, "induced to B^{e-2}"], format!("({})", p[end]), set_listing(support));
    }
    let mu_end = match &mu_chain {
        SimpleBranch::Exact(nu, _) => format!("({nu})"),
        other => simple_listing(other),
    };
    report.check(&["mu^x", "induced to B^{e-2}"], format!("({})", p["mu^{x,x}"]), mu_end);

    // B^{e−2} → C, two nodes.
    let Some(jc) = step_residue(&p["lambda^{y,x}"], e, 2, &c_block)? else {
        report.check(&["B^{e-2} to C"], "a residue", "none");
        return Ok(report.finish());
    };
    report.check(
        &["W^lambda^{y,x} induced to C"],
        listing(&[(p["lambda^{y,x,x}"].clone(), 2)]),
        listing(&induce_weyl(&p["lambda^{y,x}"], e, jc, 2)?),
    );
    report.check(
        &["W^lambda^{x,x} induced to C"],
        listing(&[
            (p["lambda^{x,x,x}"].clone(), 2),
            (p["lambda^{x,x,y}"].clone(), 2),
            (p["lambda^{x,x,z}"].clone(), 2),
        ]),
        listing(&induce_weyl(&p["lambda^{x,x}"], e, jc, 2)?),
    );
    report.check(
        &["L^mu^{x,x} induced to C"],
        format!("2x({})", p["mu^{x,x,x}"]),
        simple_listing(&induce_simple(&p["mu^{x,x}"], e, jc, 2)?),
    );

    // v-decomposition numbers.
    let mut ctx = DecompositionContext::new(e)?;
    let mu_xxx = &p["mu^{x,x,x}"];
    for (name, expected) in [
        ("lambda^{y,x,x}", "v^2"),
        ("lambda^{x,x,x}", "v^3"),
        ("lambda^{x,x,y}", "0"),
        ("lambda^{x,x,z}", "0"),
    ] {
        report.check(&[name, "d(-, mu^{x,x,x})"], expected, ctx.v_decomposition(&p[name], mu_xxx)?);
    }
    report.check(&["d(f(lambda3), f(mu3))"], "v^3+v", ctx.v_decomposition(&f_lambda3, &f_mu3)?);
    report.check(&["d(lambda0, mu3)"], "0", ctx.v_decomposition(&lambda0, &mu3)?);
    let two = block_from_counts("4,4", WEIGHT)?;
    let d2 = DecompositionContext::new(2)?.v_decomposition(&two.partition("<0_{2^2}>")?, &two.partition("<0_{2},1_{2}>")?)?;
    report.check(&["d at e=2 of (lambda3, mu3)"], "v^3+v", d2);

    // The first e−1 rows agree.
    let head = |l: &Partition| l.parts().iter().copied().chain(std::iter::repeat(0)).take(e - 1).collect::<Vec<_>>();
    for name in ["lambda^{y,x,x}", "lambda^{x,x,x}", "lambda^{x,x,y}"] {
        report.check(&[name, "first e-1 rows"], format!("{:?}", head(mu_xxx)), format!("{:?}", head(&p[name])));
    }

    // No ν strictly J-between λ^{x,x,z} and μ^{x,x,x} has a shorter row e−1.
    let xxz = &p["lambda^{x,x,z}"];
    let mut order = JantzenOrder::new(e, canonical_beads(&c_block.core, e, WEIGHT));
    let row = |l: &Partition| l.parts().get(e - 2).copied().unwrap_or(0);
    let mut between = Vec::new();
    for nu in enumerate_block(&c_block)? {
        if nu != *xxz && nu != *mu_xxx && order.leq(xxz, &nu)? && order.leq(&nu, mu_xxx)? && row(&nu) < row(mu_xxx) {
            between.push(nu);
        }
    }
    report.check(&["J-interval with shorter row e-1"], "", set_listing(&between));

    // λ^{x,x,z} induces semisimply into the Rouquier block ⟨4, 7, …, 3e+1⟩.
    let ramp = (0..e).map(|k| (4 + 3 * k).to_string()).collect::<Vec<_>>().join(",");
    let rock = block_from_counts(&ramp, WEIGHT)?;
    let target = rock.partition("<0_{3,1}>")?;
    let path = find_semisimple_path_to(xxz, &target, e)?;
    report.check(
        &["lambda^{x,x,z}", "semisimple to <0_{3,1}> in Rouquier block"],
        "path Rouquier",
        format!("{} {}", if path.is_some() { "path" } else { "no-path" }, if is_rouquier(&rock) { "Rouquier" } else { "not-Rouquier" }),
    );

    // ν with λ⁰ <_P ν and μ³ ≫ ν, i.e. also μ³_1 > ν_1 and l(μ³) < l(ν).
    // The rest of the P-interval is settled by row or column removal.
    let mut p_between = Vec::new();
    let mut removable = Vec::new();
    for nu in enumerate_block(&home)? {
        if nu != lambda0 && nu != mu3 && product_leq(&lambda0, &nu, e)? && product_leq(&nu, &mu3, e)? {
            if nu.part(0) < mu3.part(0) && nu.parts().len() > mu3.parts().len() {
                p_between.push(nu);
            } else {
                removable.push(nu);
            }
        }
    }
    let expected = [home.partition("<0_{2},1_{1^2}>")?, home.partition("<0_{2,1},1>")?, lambda3.clone()];
    report.check(&["P-interval (lambda0, mu3) with mu3 >> nu"], set_listing(&expected), set_listing(&p_between));
    if !removable.is_empty() {
        report.note(format!("P-interval members sharing a first row or length with mu3: {}", set_listing(&removable)));
    }

    // Ḟ_1↘_{e−2} Ḟ_0↘_{e−2} carries (λ^i, μ^i) to (λ⁰, μ³).
    let principal = block_from_counts(&format!("4^{e}"), WEIGHT)?;
    let (li, mi) = if e == 3 { ("<0_{1^3},2>", "<0_{2},1,2>") } else { ("<0_{1^3},2>", "<0,1,2,3>") };
    let mut residues = down_residues(e, 0, e - 2);
    residues.extend(down_residues(e, 1, e - 2));
    for (name, from, to) in [("lambda^i", li, &lambda0), ("mu^i", mi, &mu3)] {
        let (image, semisimple) = semisimple_induction(&principal.partition(from)?, e, &residues)?;
        report.check(
            &[name, "F_1 down F_0 down"],
            format!("({to}) semisimple"),
            format!("({image}) {}", if semisimple { "semisimple" } else { "exceptional" }),
        );
    }

    // The solver settles [W^{f(λ³)} : L^{f(μ³)}] = 2.
    for prime in [5, 7] {
        let mut solver = Solver::new(e, FieldSpec::new(prime)?)?;
        report.check(&["[W^f(lambda3) : L^f(mu3)]", &format!("p={prime}")], 2, solver.decomposition(&f_lambda3, &f_mu3)?);
    }
    Ok(report.finish())
}
