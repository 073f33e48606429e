use fockdec::blocks::{blocks_up_to, canonical_beads, enumerate_block, BlockDescriptor};
use fockdec::fock::{v_decomposition_matrix, DecompositionContext};
use fockdec::jantzen::{
    derivative_check, js_bound_c_with, js_coefficient, js_row, solve_decomposition, FieldSpec, Solver, SolverCell,
};
use fockdec::orders::jantzen_successors;
use fockdec::Partition;

fn p(text: &str) -> Partition {
    text.parse().unwrap()
}

#[test]
fn field_spec() {
    assert!(FieldSpec::new(4).is_err());
    assert!(FieldSpec::new(1).is_err());
    let f = FieldSpec::new(3).unwrap();
    assert_eq!((f.valuation(9), f.valuation(6), f.valuation(5)), (2, 1, 0));
    assert_eq!(FieldSpec::complex().valuation(9), 0);
}

#[test]
fn coefficients_live_on_successors() {
    for e in 2..=3 {
        for w in 0..=3 {
            for block in blocks_up_to(e, w, 2).unwrap() {
                let r = canonical_beads(&block.core, e, w);
                let parts = enumerate_block(&block).unwrap();
                for lambda in &parts {
                    let succ: Vec<Partition> = jantzen_successors(lambda, e, r).unwrap().into_iter().map(|(t, _)| t).collect();
                    let row = js_row(lambda, e, FieldSpec::complex()).unwrap();
                    assert!(row.keys().all(|t| succ.contains(t)), "{lambda}");
                    for tau in &parts {
                        let c = js_coefficient(lambda, tau, e, FieldSpec::complex()).unwrap();
                        assert_eq!(c, row.get(tau).copied().unwrap_or(0));
                    }
                }
            }
        }
    }
}

#[test]
fn coefficient_independent_of_large_characteristic() {
    let block = BlockDescriptor::from_counts(&[3, 3, 3], 3).unwrap();
    for lambda in enumerate_block(&block).unwrap() {
        let c = js_row(&lambda, 3, FieldSpec::complex()).unwrap();
        for q in [5, 7, 11] {
            assert_eq!(js_row(&lambda, 3, FieldSpec::new(q).unwrap()).unwrap(), c);
        }
    }
}

#[test]
fn bound_vanishes_exactly_when_d_does() {
    for e in 2..=3 {
        for w in 1..=3 {
            for block in blocks_up_to(e, w, 2).unwrap() {
                let mut ctx = DecompositionContext::new(e).unwrap();
                let m = v_decomposition_matrix(&mut ctx, &block).unwrap();
                for (r, lambda) in m.partitions.iter().enumerate() {
                    for (c, mu) in m.partitions.iter().enumerate() {
                        if r == c {
                            continue;
                        }
                        let b = js_bound_c_with(&mut ctx, lambda, mu).unwrap();
                        let d = m.at_one(r, c);
                        assert_eq!(b == 0, d == 0, "({lambda}, {mu}) B={b} d={d}");
                        assert!(d <= b, "({lambda}, {mu}) B={b} d={d}");
                    }
                }
            }
        }
    }
}

#[test]
fn derivative_identity_on_small_blocks() {
    for e in 2..=4 {
        for w in 0..=3 {
            for block in blocks_up_to(e, w, 3).unwrap() {
                assert!(derivative_check(&block).unwrap().is_empty(), "{}", block.label());
            }
        }
    }
    let principal = BlockDescriptor::from_counts(&[4, 4], 4).unwrap();
    assert!(derivative_check(&principal).unwrap().is_empty());
}

#[test]
fn solver_agrees_with_llt_in_large_characteristic() {
    for e in 2..=3 {
        for w in 0..=3 {
            for block in blocks_up_to(e, w, 2).unwrap() {
                let mut ctx = DecompositionContext::new(e).unwrap();
                let m = v_decomposition_matrix(&mut ctx, &block).unwrap();
                for q in [0, 5, 7] {
                    let mut solver = Solver::new(e, FieldSpec::new(q).unwrap()).unwrap();
                    for (r, lambda) in m.partitions.iter().enumerate() {
                        for (c, mu) in m.partitions.iter().enumerate() {
                            let cell = solver.decomposition(lambda, mu).unwrap();
                            if let SolverCell::Determined(x) = cell {
                                assert_eq!(x, m.at_one(r, c), "p={q} ({lambda}, {mu})");
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn weight_one_solved_in_every_characteristic() {
    for e in 2..=4 {
        for block in blocks_up_to(e, 1, 3).unwrap() {
            for q in [0, 2, 3, 5] {
                let solved = solve_decomposition(&block, FieldSpec::new(q).unwrap()).unwrap();
                let n = solved.partitions.len();
                for r in 0..n {
                    for c in 0..n {
                        let expect = i64::from(r == c || r == c + 1);
                        assert_eq!(solved.decomposition[r][c], SolverCell::Determined(expect), "p={q} {} ({r},{c})", block.label());
                    }
                }
            }
        }
    }
}

#[test]
fn complex_bound_at_the_weight_four_pair() {
    let home = BlockDescriptor::from_counts(&[4, 4], 4).unwrap();
    let lambda3 = home.partition("<0_{2^2}>").unwrap();
    let mu3 = home.partition("<0_{2},1_{2}>").unwrap();
    let mut ctx = DecompositionContext::new(2).unwrap();
    assert_eq!(js_bound_c_with(&mut ctx, &lambda3, &mu3).unwrap(), 4);
    assert_eq!(p("3,2,2,1"), lambda3);
}
