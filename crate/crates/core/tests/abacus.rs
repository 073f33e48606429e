use fockdec::abacus::{
    delete_runner, e_core, e_quotient, e_weight, epsilon, insert_runner, phi, relative_e_sign, removable_nodes, Abacus,
    RunnerKind,
};
use fockdec::blocks::core_and_weight;
use fockdec::notation::{parse_abacus_rows, RunnerNotation};
use fockdec::partition::partitions_of;
use fockdec::Partition;
use proptest::prelude::*;

fn p(text: &str) -> Partition {
    text.parse().unwrap()
}

fn arb_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=7usize, 0..=7).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

/// Hook lengths of every node of λ.
fn hook_lengths(lambda: &Partition) -> Vec<usize> {
    let conj = lambda.conjugate();
    let mut out = Vec::new();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            out.push(row - j + conj.part(j) - i - 1);
        }
    }
    out
}

/// Beads drawn as rows of two-letter cells, left runner first.
fn two_runner(rows: &[&str]) -> Abacus {
    let mut positions = Vec::new();
    for (t, row) in rows.iter().enumerate() {
        for (c, ch) in row.chars().enumerate() {
            if ch == 'b' {
                positions.push(2 * t + c);
            }
        }
    }
    Abacus::from_positions(2, &positions).unwrap()
}

#[test]
fn beta_numbers() {
    let a = Abacus::from_partition(&p("10,6,5,2,1,1"), 5, 10).unwrap();
    let mut beta = a.beta();
    beta.sort_unstable_by(|x, y| y.cmp(x));
    assert_eq!(beta, [19, 14, 12, 8, 6, 5, 3, 2, 1, 0]);
    assert_eq!(a.to_partition(), p("10,6,5,2,1,1"));
    let mut empty = Abacus::from_partition(&p(""), 3, 4).unwrap().beta();
    empty.sort_unstable();
    assert_eq!(empty, [0, 1, 2, 3]);
    assert_eq!(Abacus::from_partition(&p("1"), 2, 1).unwrap().beta(), [1]);
    assert_eq!(Abacus::from_positions(2, &[2, 1]).unwrap().to_partition(), p("1,1"));
    assert_eq!(Abacus::from_positions(3, &[0, 1, 2, 3]).unwrap().to_partition(), p(""));
}

#[test]
fn cores_weights_and_signs() {
    let lambda = p("10,6,5,2,1,1");
    assert_eq!(e_core(&lambda, 5).unwrap(), p(""));
    assert_eq!(e_weight(&lambda, 5).unwrap(), 5);
    assert_eq!(e_core(&p("2"), 2).unwrap(), p(""));
    assert_eq!(e_weight(&p("1,1"), 2).unwrap(), 1);
    assert_eq!(e_core(&p("3,1"), 3).unwrap(), p("3,1"));
    assert_eq!(e_weight(&p("3,1"), 3).unwrap(), 0);
    assert_eq!(relative_e_sign(&p("3,1"), 3).unwrap(), 1);
    assert_eq!(relative_e_sign(&p("2"), 2).unwrap(), 1);
    assert_eq!(relative_e_sign(&p("1,1"), 2).unwrap(), -1);
}

#[test]
fn quotients() {
    let q = e_quotient(&p("10,6,5,2,1,1"), 5, 10).unwrap();
    assert_eq!(q, "<2,4_{2^2}|2^5>".parse::<RunnerNotation>().unwrap());
    let q = e_quotient(&p("15,3,3,2,2"), 5, 10).unwrap();
    assert_eq!(q, "<0,1,4_{3}|2^5>".parse::<RunnerNotation>().unwrap());
    assert_eq!(q.to_partition().unwrap(), p("15,3,3,2,2"));
    assert_eq!(e_quotient(&p(""), 3, 6).unwrap().to_string(), "<|2^3>");
}

#[test]
fn residue_convention() {
    // λ = (1) with two beads sits at {2, 0}; its node has residue 0.
    assert_eq!(removable_nodes(&p("1"), 2, 2, 0).unwrap(), [2]);
    assert!(removable_nodes(&p("1"), 2, 2, 1).unwrap().is_empty());
    let a = Abacus::from_partition(&p("10,6,5,2,1,1"), 5, 10).unwrap();
    let j = a.residue_of_runner(0);
    assert_eq!(a.removable(j), [5]);
    assert_eq!(a.residue_of_position(10), 0);
    for j in 0..2 {
        assert!(Abacus::from_partition(&p(""), 2, 4).unwrap().removable(j).is_empty());
    }
}

#[test]
fn single_node_signature() {
    assert_eq!(epsilon(&p("1"), 2, 0).unwrap(), 1);
    assert_eq!(phi(&p(""), 3, 0).unwrap(), 1);
    for j in 1..3 {
        assert_eq!(phi(&p(""), 3, j).unwrap(), 0);
    }
}

#[test]
fn normal_and_conormal_beads_of_the_two_runner_example() {
    let mu = two_runner(&["bn", "bn", "nb", "nb", "bb", "nb", "bn", "bn", "nb", "nb", "bb", "bn", "nb"]);
    let lowered = two_runner(&["bn", "bn", "bn", "nb", "bb", "nb", "bn", "bn", "bn", "nb", "bb", "bn", "bn"]);
    let raised = two_runner(&["nb", "nb", "nb", "nb", "bb", "nb", "bn", "bn", "nb", "nb", "bb", "bn", "nb"]);
    let j = mu.residue_of_runner(1);
    assert_eq!((mu.epsilon(j), mu.phi(j)), (3, 2));
    assert_eq!(mu.weight(), 43);
    let e = mu.remove_normal(j, 3).unwrap();
    let f = mu.add_conormal(j, 2).unwrap();
    assert_eq!(e.to_partition(), lowered.to_partition());
    assert_eq!(f.to_partition(), raised.to_partition());
    assert_eq!((e.weight(), f.weight()), (37, 37));
}

#[test]
fn normal_then_conormal_round_trip() {
    let lambda = p("1");
    let up = fockdec::abacus::add_conormal(&p(""), 2, 0, 1).unwrap();
    assert_eq!(up, lambda);
    assert_eq!(fockdec::abacus::remove_normal(&lambda, 2, 0, 1).unwrap(), p(""));
    assert_eq!(fockdec::abacus::remove_normal(&lambda, 2, 0, 0).unwrap(), lambda);
}

#[test]
fn empty_and_full_runners() {
    let lambda_hat = "<0_{1^2},2_{1^2}|2^4>".parse::<RunnerNotation>().unwrap();
    let lambda_plus = "<0_{1^2},2_{1^2}|2^4,0>".parse::<RunnerNotation>().unwrap();
    let lifted = insert_runner(&lambda_hat.to_partition().unwrap(), 4, 8, RunnerKind::Empty, 4).unwrap();
    assert_eq!(lifted, lambda_plus.to_partition().unwrap());
    for e in 5..=7 {
        let counts = vec!["2"; e].join(",");
        let mu = format!("<0,1,2,3|{counts}>").parse::<RunnerNotation>().unwrap().to_partition().unwrap();
        let mut cur = mu;
        for f in (4..e).rev() {
            cur = delete_runner(&cur, f + 1, 2 * (f + 1), f).unwrap();
        }
        assert_eq!(cur, "<0,1,2,3|2^4>".parse::<RunnerNotation>().unwrap().to_partition().unwrap());
    }
}

#[test]
fn abacus_rows() {
    let a = parse_abacus_rows("bbbbn,bbnbn,nnbnb,nnnnb,nnnnn", 5).unwrap();
    assert_eq!(a.to_partition(), p("10,6,5,2,1,1"));
    let b = parse_abacus_rows("bbbbb,nnbbn,bbnnn,nnnnn,nnnnb", 5).unwrap();
    assert_eq!(b.to_partition(), p("15,3,3,2,2"));
}

#[test]
fn weight_is_the_number_of_hooks_divisible_by_e() {
    for n in 0..=14 {
        for lambda in partitions_of(n) {
            let hooks = hook_lengths(&lambda);
            for e in 2..=5 {
                let w = hooks.iter().filter(|&&h| h % e == 0).count();
                assert_eq!(e_weight(&lambda, e).unwrap(), w, "{lambda} e={e}");
                let core = e_core(&lambda, e).unwrap();
                assert!(hook_lengths(&core).iter().all(|&h| h % e != 0), "{core} is not a {e}-core");
                assert_eq!(lambda.size(), core.size() + e * w);
            }
        }
    }
}

#[test]
fn weight_drop_after_full_normal_strip() {
    for e in 2..=3 {
        for n in 0..=4 * e + 3 {
            for mu in partitions_of(n) {
                let (_, w) = core_and_weight(&mu, e).unwrap();
                if w > 4 {
                    continue;
                }
                for j in 0..e {
                    let (k, l) = (epsilon(&mu, e, j).unwrap(), phi(&mu, e, j).unwrap());
                    let lowered = fockdec::abacus::remove_normal(&mu, e, j, k).unwrap();
                    let raised = fockdec::abacus::add_conormal(&mu, e, j, l).unwrap();
                    assert_eq!(e_weight(&lowered, e).unwrap(), w - k * l, "{mu} e={e} j={j}");
                    assert_eq!(e_weight(&raised, e).unwrap(), w - k * l, "{mu} e={e} j={j}");
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn size_splits_into_core_and_hooks(lambda in arb_partition(), e in 2..=5usize) {
        let core = e_core(&lambda, e).unwrap();
        prop_assert_eq!(lambda.size(), core.size() + e * e_weight(&lambda, e).unwrap());
        prop_assert_eq!(e_core(&core, e).unwrap(), core);
    }

    #[test]
    fn quotient_stable_under_extra_beads(lambda in arb_partition(), e in 2..=5usize) {
        let r = e * (lambda.len() / e + 1);
        let a = Abacus::from_partition(&lambda, e, r).unwrap();
        let b = Abacus::from_partition(&lambda, e, r + e).unwrap();
        prop_assert_eq!(a.core().to_partition(), b.core().to_partition());
        prop_assert_eq!(a.weight(), b.weight());
        prop_assert_eq!(a.relative_sign(), b.relative_sign());
        let (qa, qb) = (a.quotient().to_string(), b.quotient().to_string());
        prop_assert_eq!(qa.split('|').next(), qb.split('|').next());
    }

    #[test]
    fn quotient_round_trip(lambda in arb_partition(), e in 2..=5usize) {
        let r = e * (lambda.len() / e + 1);
        let q = e_quotient(&lambda, e, r).unwrap();
        prop_assert_eq!(q.to_partition().unwrap(), lambda.clone());
        prop_assert_eq!(q.to_string().parse::<RunnerNotation>().unwrap(), q);
    }
}
