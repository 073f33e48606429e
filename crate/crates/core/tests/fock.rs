use fockdec::abacus::{insert_runner, relative_e_sign, RunnerKind};
use fockdec::blocks::{blocks_up_to, canonical_beads, enumerate_block, BlockDescriptor};
use fockdec::fock::{
    canonical_basis, decomposition_matrix_c, divided_power, divided_power_by_division, f_action, full_runner_delete_check,
    ladder_sequence, ladder_vector, v_decomposition, v_decomposition_lifted, v_decomposition_matrix, DecompositionContext,
    FockVector,
};
use fockdec::notation::RunnerNotation;
use fockdec::orders::JantzenOrder;
use fockdec::partition::partitions_of;
use fockdec::{Partition, VPolynomial};

fn p(text: &str) -> Partition {
    text.parse().unwrap()
}

fn n(text: &str) -> Partition {
    text.parse::<RunnerNotation>().unwrap().to_partition().unwrap()
}

fn v(text: &str) -> VPolynomial {
    text.parse().unwrap()
}

#[test]
fn f_action_on_small_vectors() {
    let x = f_action(&FockVector::basis(p("")), 0, 2).unwrap();
    assert_eq!(x, FockVector::basis(p("1")));
    // (1) at e = 2 has two addable 1-nodes.
    let y = f_action(&FockVector::basis(p("1")), 1, 2).unwrap();
    assert_eq!(y.coeff(&p("2")), VPolynomial::one());
    assert_eq!(y.coeff(&p("1,1")), v("v"));
    let z = divided_power(&FockVector::basis(p("1")), 1, 2, 2).unwrap();
    assert_eq!(z, FockVector::basis(p("2,1")));
}

#[test]
fn closed_form_divided_powers_agree_with_division() {
    for size in 0..=6 {
        for lambda in partitions_of(size) {
            let x = FockVector::basis(lambda.clone());
            for e in 2..=3 {
                for j in 0..e {
                    for a in 1..=3 {
                        assert_eq!(
                            divided_power(&x, j, a, e).unwrap(),
                            divided_power_by_division(&x, j, a, e).unwrap(),
                            "{lambda} e={e} j={j} a={a}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn ladders() {
    assert_eq!(ladder_sequence(&p("1"), 2).unwrap(), [(0, 1)]);
    assert_eq!(ladder_sequence(&p("2,1"), 2).unwrap(), [(0, 1), (1, 2)]);
    assert!(ladder_sequence(&p("1,1"), 2).is_err());
    let a = ladder_vector(&p("2,1"), 2).unwrap();
    assert_eq!(a.coeff(&p("2,1")), VPolynomial::one());
}

#[test]
fn small_canonical_basis_vectors() {
    let g = canonical_basis(&p("2"), 2).unwrap();
    assert_eq!(g.coeff(&p("2")), VPolynomial::one());
    assert_eq!(g.coeff(&p("1,1")), v("v"));
    assert_eq!(v_decomposition(&p("1,1"), &p("2"), 2).unwrap(), v("v"));
    assert_eq!(v_decomposition(&p("2"), &p("1,1"), 2).unwrap(), VPolynomial::zero());
}

#[test]
fn semisimple_when_e_exceeds_n() {
    for size in 0..=5 {
        let parts = partitions_of(size);
        for lambda in &parts {
            for mu in &parts {
                let d = v_decomposition(lambda, mu, size + 2).unwrap();
                let expect = if lambda == mu { VPolynomial::one() } else { VPolynomial::zero() };
                assert_eq!(d, expect, "{lambda} {mu}");
            }
        }
    }
}

#[test]
fn weight_one_blocks_are_two_diagonal() {
    for e in 2..=6 {
        for block in blocks_up_to(e, 1, 6).unwrap() {
            let mut ctx = DecompositionContext::new(e).unwrap();
            let m = v_decomposition_matrix(&mut ctx, &block).unwrap();
            assert_eq!(m.partitions.len(), e);
            for r in 0..e {
                for c in 0..e {
                    let expect = match r.checked_sub(c) {
                        Some(0) => VPolynomial::one(),
                        Some(1) => v("v"),
                        _ => VPolynomial::zero(),
                    };
                    assert_eq!(m.entries[r][c], expect, "{} ({r},{c})", block.label());
                }
            }
        }
    }
}

#[test]
fn positivity_support_and_parity() {
    for e in 2..=3 {
        for w in 0..=3 {
            for block in blocks_up_to(e, w, 3).unwrap() {
                let mut ctx = DecompositionContext::new(e).unwrap();
                let m = v_decomposition_matrix(&mut ctx, &block).unwrap();
                let mut order = JantzenOrder::new(e, canonical_beads(&block.core, e, w));
                for (r, lambda) in m.partitions.iter().enumerate() {
                    for (c, mu) in m.partitions.iter().enumerate() {
                        let d = &m.entries[r][c];
                        if r == c {
                            assert_eq!(*d, VPolynomial::one());
                            continue;
                        }
                        assert!(d.in_v_n_v(), "d({lambda},{mu}) = {d}");
                        if !d.is_zero() {
                            assert!(mu.dominates(lambda).unwrap());
                            assert!(order.leq(lambda, mu).unwrap());
                            let same = relative_e_sign(lambda, e).unwrap() == relative_e_sign(mu, e).unwrap();
                            assert!(d.has_parity(if same { 0 } else { 1 }), "d({lambda},{mu}) = {d}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn row_and_column_removal() {
    for e in 2..=3 {
        for w in 1..=3 {
            for block in blocks_up_to(e, w, 2).unwrap() {
                let parts = enumerate_block(&block).unwrap();
                let mut ctx = DecompositionContext::new(e).unwrap();
                for lambda in &parts {
                    for mu in &parts {
                        let d = ctx.v_decomposition(lambda, mu).unwrap();
                        if lambda.part(0) == mu.part(0) {
                            let (a, b) = (lambda.row_removal().unwrap(), mu.row_removal().unwrap());
                            assert_eq!(ctx.v_decomposition(&a, &b).unwrap(), d, "rows of {lambda} {mu}");
                        }
                        if lambda.len() == mu.len() {
                            let (a, b) = (lambda.column_removal().unwrap(), mu.column_removal().unwrap());
                            assert_eq!(ctx.v_decomposition(&a, &b).unwrap(), d, "columns of {lambda} {mu}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn empty_runner_example() {
    let (lambda_hat, mu_hat) = (n("<0_{1^2},2_{1^2}|2^4>"), n("<0,1,2,3|2^4>"));
    assert_eq!(v_decomposition(&lambda_hat, &mu_hat, 4).unwrap(), v("v"));
    let (lambda_plus, mu_plus) = (n("<0_{1^2},2_{1^2}|2^4,0>"), n("<0,1,2,3|2^4,0>"));
    assert_eq!(v_decomposition(&lambda_plus, &mu_plus, 5).unwrap(), v("v"));
    for slot in 0..=4 {
        assert_eq!(v_decomposition_lifted(&lambda_hat, &mu_hat, 4, 8, slot).unwrap(), v("v"), "slot {slot}");
    }
    for e in 4..=6 {
        let counts = vec!["2"; e].join(",");
        let lambda = n(&format!("<0_{{1^2}},2_{{1^2}}|{counts}>"));
        let mu = n(&format!("<0,1,2,3|{counts}>"));
        assert_eq!(v_decomposition(&lambda, &mu, e).unwrap(), v("v"), "e={e}");
        if e < 6 {
            for slot in 0..=e {
                let (l, m) = (
                    insert_runner(&lambda, e, 2 * e, RunnerKind::Empty, slot).unwrap(),
                    insert_runner(&mu, e, 2 * e, RunnerKind::Empty, slot).unwrap(),
                );
                assert_eq!(v_decomposition(&l, &m, e + 1).unwrap(), v("v"), "e={e} slot={slot}");
            }
        }
        if e >= 5 {
            let (l, m) = full_runner_delete_check(&lambda, &mu, e, 2 * e).unwrap();
            assert_eq!(v_decomposition(&l, &m, e - 1).unwrap(), v("v"));
        }
    }
}

#[test]
fn weight_four_values() {
    let home = BlockDescriptor::from_counts(&[4, 4], 4).unwrap();
    let lambda3 = home.partition("<0_{2^2}>").unwrap();
    let mu3 = home.partition("<0_{2},1_{2}>").unwrap();
    let lambda0 = home.partition("<0_{2,1^2}>").unwrap();
    assert_eq!(v_decomposition(&lambda3, &mu3, 2).unwrap(), v("v^3+v"));
    assert_eq!(v_decomposition(&lambda0, &mu3, 2).unwrap(), VPolynomial::zero());
}

#[test]
fn principal_weight_two_matrix_is_unitriangular() {
    let block = BlockDescriptor::from_counts(&[2, 2], 2).unwrap();
    let m = decomposition_matrix_c(&block).unwrap();
    let parts = enumerate_block(&block).unwrap();
    let names: Vec<String> = parts.iter().map(ToString::to_string).collect();
    assert_eq!(names, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
    for (r, row) in m.iter().enumerate() {
        assert_eq!(row[r], 1);
        assert!(row[r + 1..].iter().all(|&x| x == 0));
    }
}
