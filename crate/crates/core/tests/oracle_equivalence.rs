//! Randomized cross-checks of every index against the brute-force oracles on
//! small inputs. The acceptance target runs the same checks at full scale.

use std::sync::Arc;

use idmatch::approx::partition_by_periodicity;
use idmatch::internal_pm::{bounded_lcp, exists};
use idmatch::oracle::*;
use idmatch::squares::{bsq, bsq_prime, run_squares};
use idmatch::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_text(rng: &mut ChaCha8Rng, n: usize, sigma: u8) -> Vec<u8> {
    (0..n).map(|_| b'a' + rng.gen_range(0..sigma)).collect()
}

fn random_dict(rng: &mut ChaCha8Rng, n: usize, d: usize) -> Vec<Fragment> {
    (0..d)
        .map(|_| {
            let a = rng.gen_range(1..=n);
            let max_len = (n + 1 - a).min(if rng.gen_bool(0.5) { 4 } else { n });
            let len = rng.gen_range(1..=max_len);
            Fragment::new_unchecked(a, a + len - 1)
        })
        .collect()
}

fn frag(a: usize, b: usize) -> Fragment {
    Fragment::new_unchecked(a, b)
}

#[test]
fn runs_match_definition() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for trial in 0..300 {
        let n = rng.gen_range(1..=60);
        let t = random_text(&mut rng, n, 1 + (trial % 3) as u8);
        let idx = TextIndex::from_bytes(t.clone()).unwrap();
        let got: Vec<_> = idx.runs().iter().map(|r| (r.start, r.end, r.period)).collect();
        assert_eq!(got, naive_runs(&t).unwrap(), "{}", String::from_utf8_lossy(&t));
        for r in idx.runs() {
            let root = idx.text().slice(r.root);
            assert_eq!(naive_min_rotation(root), 0);
            assert_eq!(r.root.start - r.start, r.root_offset);
        }
        for a in 1..=n {
            for b in a..=n {
                let f = frag(a, b);
                let s = &t[a - 1..b];
                let p = naive_period(s);
                assert_eq!(idx.period(f), p);
                match idx.run_of(f) {
                    Some(r) => {
                        assert!(2 * p <= s.len());
                        assert_eq!(r.period, p);
                        assert!(r.contains(f));
                        let rep = idx.periodic_rep(f).unwrap();
                        assert_eq!(idx.expand(&rep), s);
                    }
                    None => assert!(2 * p > s.len()),
                }
                if s.len() <= 12 {
                    assert_eq!(idx.minimal_rotation(f).unwrap(), naive_min_rotation(s));
                }
            }
        }
    }
}

#[test]
fn bounded_lcp_and_exists_match() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..60 {
        let n = rng.gen_range(1..=30);
        let t = random_text(&mut rng, n, 2);
        let idx = TextIndex::from_bytes(t.clone()).unwrap();
        for _ in 0..200 {
            let a = rng.gen_range(1..=n);
            let b = rng.gen_range(a..=n);
            let c = rng.gen_range(1..=n + 1);
            let d = rng.gen_range(c - 1..=n);
            let (u, v) = (frag(a, b), frag(c, d));
            assert_eq!(bounded_lcp(&idx, u, v), naive_bounded_lcp(&t, u, v));
            assert_eq!(exists(&idx, u, c, d), naive_exists(&t, u, c, d));
        }
    }
}

#[test]
fn prefix_counts_and_deltas_match() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for trial in 0..150 {
        let n = rng.gen_range(1..=40);
        let t = random_text(&mut rng, n, 1 + (trial % 4) as u8);
        let text = Arc::new(TextIndex::from_bytes(t.clone()).unwrap());
        let d = rng.gen_range(0..12);
        let raw = random_dict(&mut rng, n, d);
        let dict = Dictionary::new(&text, raw.clone()).unwrap();
        let ext = ExtensionIndex::new(text.clone(), &dict);
        let tree = ext.forward_tree();
        for l in 1..=n {
            for len in 0..=n + 1 - l {
                let w = &t[l - 1..l - 1 + len];
                let want = dict
                    .patterns()
                    .iter()
                    .filter(|p| w.starts_with(text.text().slice(**p)))
                    .count();
                assert_eq!(tree.pattern_prefix_count(l, len), want);
            }
        }
        let table = naive_window_table(&t, &raw).unwrap();
        for l in 1..=n {
            for r in l..=n {
                let cd = |a: usize, b: usize| if b < a { 0 } else { table[a][b] as usize };
                assert_eq!(ext.delta_only_at_left(l, r), cd(l, r) - cd(l + 1, r));
                assert_eq!(ext.delta_only_at_right(l, r), cd(l, r) - cd(l, r - 1));
            }
        }
    }
}

#[test]
fn exact_modes_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for trial in 0..60 {
        let n = rng.gen_range(1..=50);
        let t = random_text(&mut rng, n, 1 + (trial % 4) as u8);
        let text = Arc::new(TextIndex::from_bytes(t.clone()).unwrap());
        let d = rng.gen_range(0..20);
        let raw = random_dict(&mut rng, n, d);
        let dict = Dictionary::new(&text, raw.clone()).unwrap();
        let table = naive_window_table(&t, &raw).unwrap();
        let root = (n as f64).sqrt().ceil() as usize;
        for m in [1, root, n] {
            let can = CanonicalIndex::build(text.clone(), &dict, m).unwrap();
            let ps = PathSetIndex::build(text.clone(), &dict, m).unwrap();
            for i in 1..=n {
                for j in i..=n {
                    let want = table[i][j] as usize;
                    assert_eq!(can.count_distinct(i, j).unwrap(), want, "canonical m={m}");
                    assert_eq!(ps.count_distinct(i, j).unwrap(), want, "pathset m={m}");
                }
            }
        }
    }
}

#[test]
fn approx_within_bounds_and_three_fragments_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for trial in 0..80 {
        let n = rng.gen_range(1..=80);
        let t = random_text(&mut rng, n, 1 + (trial % 3) as u8);
        let text = Arc::new(TextIndex::from_bytes(t.clone()).unwrap());
        let d = rng.gen_range(0..25);
        let raw = random_dict(&mut rng, n, d);
        let dict = Dictionary::new(&text, raw.clone()).unwrap();
        let approx = ApproxIndex::build(text.clone(), &dict).unwrap();
        let table = naive_window_table(&t, &raw).unwrap();
        for i in 1..=n {
            for j in i..=n {
                let want = table[i][j] as usize;
                let got = approx.count_distinct(i, j).unwrap();
                assert!(want <= got && got <= 2 * want, "{i} {j}: {got} vs {want}");
            }
        }
        for _ in 0..200 {
            let a = rng.gen_range(1..=n);
            let f1 = rng.gen_range(0..=n / 10);
            let f2 = rng.gen_range(8 * f1..=8 * f1 + 8);
            if a + 2 * f1 + f2 - 1 > n {
                continue;
            }
            let (x, y, z) = (
                frag(a, a + f1 - 1),
                frag(a + f1, a + f1 + f2 - 1),
                frag(a + f1 + f2, a + 2 * f1 + f2 - 1),
            );
            assert_eq!(
                approx.three_fragments_count(x, y, z).unwrap(),
                naive_three_fragments(&t, &raw, x, y, z).unwrap()
            );
        }
        let (hp, _) = partition_by_periodicity(&text, &dict);
        for i in 1..=n {
            for j in i..=n {
                let f = frag(i, j);
                if text.run_of(f).is_some() {
                    let want = naive_periodic_count(&t, &raw, f).unwrap();
                    assert_eq!(approx.periodic_count(f).unwrap(), want);
                } else {
                    assert!(approx.periodic_count(f).is_err());
                }
            }
        }
        assert!(hp.len() <= dict.len());
    }
}

#[test]
fn squares_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for trial in 0..80 {
        let n = rng.gen_range(1..=60);
        let t = random_text(&mut rng, n, 1 + (trial % 3) as u8);
        let text = Arc::new(TextIndex::from_bytes(t.clone()).unwrap());
        let sq = SquaresIndex::build(text.clone());
        let table = naive_squares_table(&t).unwrap();
        for i in 1..=n {
            for j in i..=n {
                assert_eq!(sq.count_distinct(i, j).unwrap(), table[i][j] as usize, "{i} {j}");
            }
        }
        for r in text.runs() {
            let s = text.text().slice(r.fragment());
            assert_eq!(run_squares(s.len(), r.period), naive_run_squares(s));
            for f1 in 0..=r.period {
                assert_eq!(bsq_prime(s.len(), r.period, f1).unwrap(), naive_bsq_prime(s.len(), r.period, f1));
                for f2 in 0..=r.period {
                    assert_eq!(bsq(s.len(), r.period, f1, f2).unwrap(), naive_bsq(s, f1, f2));
                }
            }
        }
    }
}
