use fockdec::blocks::{blocks_up_to, canonical_beads, enumerate_block};
use fockdec::orders::{induced_e_sequence, jantzen_leq, jantzen_successors, product_leq, product_leq_at, JantzenOrder};
use fockdec::Partition;

fn p(text: &str) -> Partition {
    text.parse().unwrap()
}

#[test]
fn induced_sequences_of_the_worked_example() {
    let (lambda, mu) = (p("10,6,5,2,1,1"), p("15,3,3,2,2"));
    assert_eq!(induced_e_sequence(&lambda, 5, 10).unwrap(), [19, 14, 14, 12, 9]);
    assert_eq!(induced_e_sequence(&mu, 5, 10).unwrap(), [24, 19, 14, 11, 10]);
    assert!(mu.dominates(&lambda).unwrap());
    assert!(!product_leq(&lambda, &mu, 5).unwrap());
    assert!(!product_leq_at(&lambda, &mu, 5, 10).unwrap());
    assert!(induced_e_sequence(&p("3,1"), 3, 6).unwrap().is_empty());
}

#[test]
fn different_blocks_are_incomparable() {
    assert!(!product_leq(&p("2"), &p("1,1"), 3).unwrap());
    assert!(!jantzen_leq(&p("3,1"), &p("4"), 3).unwrap());
}

#[test]
fn cores_have_no_moves() {
    assert!(jantzen_successors(&p("3,1"), 3, 6).unwrap().is_empty());
    assert!(jantzen_successors(&p(""), 2, 4).unwrap().is_empty());
}

#[test]
fn moves_go_up_in_dominance() {
    for e in 2..=4 {
        for w in 1..=3 {
            for block in blocks_up_to(e, w, 3).unwrap() {
                let r = canonical_beads(&block.core, e, w);
                for lambda in enumerate_block(&block).unwrap() {
                    for (tau, moves) in jantzen_successors(&lambda, e, r).unwrap() {
                        assert!(!moves.is_empty());
                        assert_ne!(tau, lambda);
                        assert!(tau.dominates(&lambda).unwrap(), "{lambda} -> {tau}");
                    }
                }
            }
        }
    }
}

#[test]
fn order_chain() {
    for e in 2..=4 {
        for w in 0..=3 {
            for block in blocks_up_to(e, w, 4).unwrap() {
                let parts = enumerate_block(&block).unwrap();
                let mut order = JantzenOrder::new(e, canonical_beads(&block.core, e, w));
                for lambda in &parts {
                    for mu in &parts {
                        let j = order.leq(lambda, mu).unwrap();
                        let pr = product_leq(lambda, mu, e).unwrap();
                        let d = mu.dominates(lambda).unwrap();
                        assert!(!j || pr, "{lambda} <=_J {mu} but not <=_P");
                        assert!(!pr || d, "{lambda} <=_P {mu} but not dominated");
                    }
                }
            }
        }
    }
}

#[test]
fn product_order_bounds_first_row_and_length() {
    for e in 2..=3 {
        for w in 0..=4 {
            for block in blocks_up_to(e, w, 3).unwrap() {
                let parts = enumerate_block(&block).unwrap();
                for lambda in &parts {
                    for mu in &parts {
                        if product_leq(lambda, mu, e).unwrap() {
                            assert!(mu.part(0) >= lambda.part(0));
                            assert!(mu.len() <= lambda.len());
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn jantzen_order_is_reflexive_and_transitive() {
    let block = &blocks_up_to(3, 3, 0).unwrap()[0];
    let parts = enumerate_block(block).unwrap();
    let mut order = JantzenOrder::new(3, canonical_beads(&block.core, 3, 3));
    for a in &parts {
        assert!(order.leq(a, a).unwrap());
        for b in &parts {
            if !order.leq(a, b).unwrap() {
                continue;
            }
            for c in &parts {
                if order.leq(b, c).unwrap() {
                    assert!(order.leq(a, c).unwrap(), "{a} <= {b} <= {c}");
                }
            }
        }
    }
}

#[test]
fn jantzen_order_agrees_across_bead_counts() {
    let block = &blocks_up_to(2, 3, 1).unwrap()[1];
    let parts = enumerate_block(block).unwrap();
    let r = canonical_beads(&block.core, 2, 3);
    let mut a = JantzenOrder::new(2, r);
    let mut b = JantzenOrder::new(2, r + 2);
    for x in &parts {
        for y in &parts {
            assert_eq!(a.leq(x, y).unwrap(), b.leq(x, y).unwrap());
            assert_eq!(a.leq(x, y).unwrap(), jantzen_leq(x, y, 2).unwrap());
        }
    }
}
