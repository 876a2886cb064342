use std::sync::Arc;

use idmatch::oracle::{naive_count, naive_count_distinct, naive_period, naive_squares_count};
use idmatch::*;
use proptest::prelude::*;

fn text_and_dict() -> impl Strategy<Value = (Vec<u8>, Vec<(usize, usize)>)> {
    (1usize..40, 1u8..4).prop_flat_map(|(n, sigma)| {
        let text = proptest::collection::vec(b'a'..b'a' + sigma, n);
        let pats = proptest::collection::vec((1..=n, 1usize..6), 0..12).prop_map(move |v| {
            v.into_iter()
                .map(|(a, len)| (a, (a + len - 1).min(n)))
                .collect::<Vec<_>>()
        });
        (text, pats)
    })
}

fn windows(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |i| (i..=n).map(move |j| (i, j)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn lce_agrees_with_letters(t in proptest::collection::vec(b'a'..b'c', 1..50), a in 0usize..50, b in 0usize..50) {
        let n = t.len();
        let (i, j) = (a % n + 1, b % n + 1);
        let idx = TextIndex::from_bytes(t.clone()).unwrap();
        let want = t[i - 1..].iter().zip(&t[j - 1..]).take_while(|(x, y)| x == y).count();
        prop_assert_eq!(idx.lce(i, j).unwrap(), want);
    }

    #[test]
    fn period_and_content_keys(t in proptest::collection::vec(b'a'..b'c', 1..30)) {
        let n = t.len();
        let idx = TextIndex::from_bytes(t.clone()).unwrap();
        for (i, j) in windows(n) {
            let f = Fragment::new_unchecked(i, j);
            prop_assert_eq!(idx.period(f), naive_period(&t[i - 1..j]));
            let g = Fragment::new_unchecked(1, j + 1 - i);
            prop_assert_eq!(idx.content_key(f) == idx.content_key(g), t[i - 1..j] == t[..j + 1 - i]);
        }
    }

    #[test]
    fn exact_modes_and_count((t, pairs) in text_and_dict(), m in 1usize..8) {
        let n = t.len();
        let text = Arc::new(TextIndex::from_bytes(t.clone()).unwrap());
        let dict = Dictionary::from_pairs(&text, pairs.iter().copied()).unwrap();
        let raw: Vec<Fragment> = pairs.iter().map(|&(a, b)| Fragment::new_unchecked(a, b)).collect();
        let m = m.min(n);
        let canon = CanonicalIndex::build(text.clone(), &dict, m).unwrap();
        let paths = PathSetIndex::build(text.clone(), &dict, m).unwrap();
        let count = CountIndex::build(&text, &dict).unwrap();
        for (i, j) in windows(n) {
            let want = naive_count_distinct(&t, &raw, i, j).unwrap();
            prop_assert_eq!(canon.count_distinct(i, j).unwrap(), want);
            prop_assert_eq!(paths.count_distinct(i, j).unwrap(), want);
            prop_assert_eq!(count.count(i, j), naive_count(&t, &raw, i, j).unwrap());
        }
    }

    #[test]
    fn approx_is_a_two_approximation((t, pairs) in text_and_dict()) {
        let text = Arc::new(TextIndex::from_bytes(t.clone()).unwrap());
        let dict = Dictionary::from_pairs(&text, pairs.iter().copied()).unwrap();
        let raw: Vec<Fragment> = pairs.iter().map(|&(a, b)| Fragment::new_unchecked(a, b)).collect();
        let approx = ApproxIndex::build(text, &dict).unwrap();
        for (i, j) in windows(t.len()) {
            let want = naive_count_distinct(&t, &raw, i, j).unwrap();
            let got = approx.count_distinct(i, j).unwrap();
            prop_assert!(want <= got && got <= 2 * want, "({}, {}): {} vs {}", i, j, got, want);
        }
    }

    #[test]
    fn squares_match_enumeration(t in proptest::collection::vec(b'a'..b'c', 1..40)) {
        let sq = SquaresIndex::build(Arc::new(TextIndex::from_bytes(t.clone()).unwrap()));
        for (i, j) in windows(t.len()) {
            prop_assert_eq!(sq.count_distinct(i, j).unwrap(), naive_squares_count(&t, i, j).unwrap());
        }
    }

    #[test]
    fn count_distinct_is_monotone((t, pairs) in text_and_dict()) {
        let text = Arc::new(TextIndex::from_bytes(t.clone()).unwrap());
        let dict = Dictionary::from_pairs(&text, pairs.iter().copied()).unwrap();
        let idx = PathSetIndex::build(text, &dict, 3).unwrap();
        let n = t.len();
        for (i, j) in windows(n) {
            let here = idx.count_distinct(i, j).unwrap();
            if j < n {
                prop_assert!(idx.count_distinct(i, j + 1).unwrap() >= here);
            }
            if i > 1 {
                prop_assert!(idx.count_distinct(i - 1, j).unwrap() >= here);
            }
        }
    }
}
