use polyvis_core::ds::{
    extreme_positions, generate_ds3, inverse_ackermann, is_davenport_schinzel, k33_free_lowerbound, lambda_bruteforce,
    pad_singletons, walczak_graph, Ds3Strategy, DsSequence, K33Verdict,
};
use polyvis_core::ordered::{find_ordered_pattern, h1};
use polyvis_core::Budget;
use proptest::prelude::*;

/// DS check by projecting onto every letter pair and collapsing runs.
fn oracle_is_ds(w: &[usize], n: usize, s: usize) -> bool {
    if w.windows(2).any(|p| p[0] == p[1]) {
        return false;
    }
    for a in 1..=n {
        for b in a + 1..=n {
            let mut runs = 0;
            let mut last = 0;
            for &x in w {
                if (x == a || x == b) && x != last {
                    runs += 1;
                    last = x;
                }
            }
            if runs >= s + 2 {
                return false;
            }
        }
    }
    true
}

/// Longest DS sequence over `n` letters, growing every valid sequence one
/// letter at a time until a level comes out empty. Only first-occurrence
/// normal forms are kept, which loses nothing since relabeling preserves
/// the property.
fn oracle_lambda(s: usize, n: usize) -> usize {
    let mut level: Vec<Vec<usize>> = vec![vec![]];
    let mut len = 0;
    loop {
        let mut next = Vec::new();
        for w in &level {
            let used = w.iter().copied().max().unwrap_or(0);
            for x in 1..=(used + 1).min(n) {
                let mut v = w.clone();
                v.push(x);
                if oracle_is_ds(&v, n, s) {
                    next.push(v);
                }
            }
        }
        if next.is_empty() {
            return len;
        }
        len += 1;
        level = next;
    }
}

/// All sequences over `1..=n` of length at most `max_len`.
fn all_sequences(n: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut frontier = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for x in 1..=n {
                let mut v: Vec<usize> = w.clone();
                v.push(x);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

#[test]
fn lambda_three_matches_oracle() {
    let b = &mut Budget::default();
    assert_eq!(lambda_bruteforce(3, 1, b).unwrap().0, 1);
    assert_eq!(lambda_bruteforce(3, 2, b).unwrap().0, 4);
    for n in 1..=4 {
        let (len, w) = lambda_bruteforce(3, n, b).unwrap();
        assert_eq!(len, oracle_lambda(3, n), "n = {n}");
        assert_eq!(w.len(), len);
        assert!(oracle_is_ds(w.letters(), n, 3));
    }
}

#[test]
fn lambda_two_is_linear() {
    let b = &mut Budget::default();
    for n in 1..=5 {
        assert_eq!(lambda_bruteforce(2, n, b).unwrap().0, 2 * n - 1);
        assert_eq!(oracle_lambda(2, n), 2 * n - 1);
    }
}

#[test]
fn walczak_exhaustive_small() {
    let mut checked = 0;
    for n in 1..=3 {
        for w in all_sequences(n, 8) {
            if !oracle_is_ds(&w, n, 3) {
                continue;
            }
            let seq = DsSequence::new(n, w.clone()).unwrap();
            if seq.counts()[1..].iter().any(|&c| c < 2) {
                assert!(walczak_graph(&seq).is_err());
                continue;
            }
            let g = walczak_graph(&seq).unwrap();
            assert_eq!(g.edge_count(), w.len() - 2 * n);
            assert_eq!(extreme_positions(&seq).len(), 2 * n);
            assert!(find_ordered_pattern(&g, &h1()).is_none(), "{w:?}");
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn strategies_feed_walczak() {
    let b = &mut Budget::default();
    for n in 2..=6 {
        for strategy in [Ds3Strategy::Baseline, Ds3Strategy::BruteSmall] {
            let seq = generate_ds3(n, strategy, b).unwrap();
            assert!(oracle_is_ds(seq.letters(), n, 3));
            let g = walczak_graph(&seq).unwrap();
            assert_eq!(g.edge_count(), seq.len() - 2 * n);
            assert!(find_ordered_pattern(&g, &h1()).is_none());
        }
    }
}

#[test]
fn lowerbound_certificates() {
    for n in 2..=10 {
        let strategies: &[Ds3Strategy] =
            if n <= 5 { &[Ds3Strategy::Baseline, Ds3Strategy::BruteSmall] } else { &[Ds3Strategy::Baseline] };
        for &strategy in strategies {
            let c = k33_free_lowerbound(n, strategy, &mut Budget::default()).unwrap();
            assert!(c.h0_free && c.h1_free);
            assert_eq!(c.k33_verdict, K33Verdict::Free);
            assert_eq!(c.edge_count, c.graph.edge_count());
        }
    }
}

#[test]
fn inverse_ackermann_is_monotone() {
    let mut prev = 0;
    for e in 0..64 {
        let a = inverse_ackermann(1u64 << e);
        assert!(a >= prev);
        prev = a;
    }
    assert!(prev <= 5);
}

proptest! {
    #[test]
    fn validity_matches_projection_oracle(n in 1usize..5, w in prop::collection::vec(1usize..5, 0..14), s in 1usize..5) {
        let w: Vec<usize> = w.into_iter().map(|x| 1 + (x - 1) % n).collect();
        let seq = DsSequence::new(n, w.clone()).unwrap();
        prop_assert_eq!(is_davenport_schinzel(&seq, s).is_ok(), oracle_is_ds(&w, n, s));
    }

    #[test]
    fn padding_keeps_ds3(n in 2usize..6, w in prop::collection::vec(1usize..6, 0..12)) {
        let mut w: Vec<usize> = w.into_iter().map(|x| 1 + (x - 1) % n).collect();
        w.dedup();
        prop_assume!(oracle_is_ds(&w, n, 3));
        let seq = DsSequence::new(n, w).unwrap();
        let padded = pad_singletons(seq.clone());
        prop_assert!(oracle_is_ds(padded.letters(), n, 3));
        let before = seq.counts();
        for (letter, &count) in padded.counts().iter().enumerate().skip(1) {
            prop_assert!(count >= before[letter]);
            // A singleton stays single only if no second copy fits anywhere.
            if count == 1 {
                let insertable = (0..=padded.len()).any(|pos| {
                    let mut v = padded.letters().to_vec();
                    v.insert(pos, letter);
                    oracle_is_ds(&v, n, 3)
                });
                prop_assert!(!insertable);
            }
        }
    }
}
