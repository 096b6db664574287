use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use proptest::prelude::*;
use vonkoch::turtle::swap_letters;
use vonkoch::{
    block_decompose, cantor_intervals, maholdener_curve, make_curve_spec, partial_sum_polyline,
    renormalize, run_turtle, substitution_polyline, tm_prefix_word, to_csv, to_svg, BlockSign,
    CantorSet, CurveSpec64, Polyline64, RenderStyle, Scaling, TurtleLetter, TurtleProgram64,
};

fn spec(q: u32) -> CurveSpec64 {
    make_curve_spec(2, q).unwrap()
}

fn max_vertex_gap(a: &Polyline64, b: &Polyline64) -> f64 {
    assert_eq!(a.len(), b.len());
    a.points()
        .iter()
        .zip(b.points())
        .map(|(x, y)| x.distance(*y))
        .fold(0.0, f64::max)
}

#[test]
fn substitution_matches_partial_sums() {
    for (q, max_gen) in [(3, 6), (5, 3), (7, 2), (13, 1)] {
        let s = spec(q);
        for n in 0..=max_gen {
            let sub = substitution_polyline(&s, n).unwrap();
            let sums = partial_sum_polyline(&s, s.block.pow(n)).unwrap();
            assert!(max_vertex_gap(&sub, &sums) < 1e-9, "q={q} n={n}");
        }
    }
}

#[test]
fn endpoint_is_sigma_power() {
    for (q, max_gen) in [(3, 6), (5, 3), (7, 2), (13, 1)] {
        let s = spec(q);
        for n in 0..=max_gen {
            let end = substitution_polyline(&s, n).unwrap().end().to_complex();
            let expected = s.sigma.pow(n).eval::<f64>();
            let tol = 1e-9 * s.sigma_complex.norm().powi(n as i32);
            assert!(
                (end - expected).norm() <= tol,
                "q={q} n={n}: {end} vs {expected}"
            );
        }
    }
}

#[test]
fn renormalised_koch_segments_have_equal_length() {
    let s = spec(3);
    for n in 0..=6 {
        let poly = renormalize(&substitution_polyline(&s, n).unwrap(), &s, n).unwrap();
        let target = 3f64.powi(-(n as i32));
        for (a, b) in poly.segments() {
            assert!((a.distance(b) - target).abs() < 1e-12, "n={n}");
        }
    }
}

#[test]
fn partial_sum_endpoint_is_exact_sum() {
    let s = spec(7);
    for count in [1u64, 10, 64, 100, 777] {
        let end = partial_sum_polyline(&s, count).unwrap().end().to_complex();
        let exact = vonkoch::z_bruteforce(count, 2, 7).unwrap().eval::<f64>();
        assert!((end - exact).norm() < 1e-9, "count={count}");
    }
}

#[test]
fn gluing_law() {
    let rot = Complex::from_polar(1.0, -std::f64::consts::FRAC_PI_3);
    for n in 1..=4u32 {
        let small = maholdener_curve::<f64>(n, Scaling::None).unwrap();
        let big = maholdener_curve::<f64>(n + 1, Scaling::None).unwrap();
        let quarter = 4usize.pow(n);
        assert!(
            max_vertex_gap(
                &Polyline64::new(big.points()[..=quarter].to_vec()).unwrap(),
                &small
            ) < 1e-9
        );
        let junction = big.points()[quarter].to_complex();
        for k in 0..=quarter {
            let expected = junction + rot * small.points()[k].to_complex();
            let got = big.points()[quarter + k].to_complex();
            assert!((got - expected).norm() < 1e-9, "n={n} k={k}");
        }
    }
}

#[test]
fn block_self_similarity() {
    for n in 1..=3u32 {
        let word = tm_prefix_word(4 * n, TurtleLetter::F).unwrap();
        let block = tm_prefix_word(2 * n, TurtleLetter::F).unwrap();
        let signs = block_decompose(&word, &block).unwrap();
        let bits: Vec<u8> = (0..4u64.pow(n)).map(|i| vonkoch::thue_morse(&i)).collect();
        let expected: Vec<BlockSign> = bits
            .iter()
            .map(|&b| {
                if b == 0 {
                    BlockSign::Plain
                } else {
                    BlockSign::Swapped
                }
            })
            .collect();
        assert_eq!(signs, expected);
        let flipped = block_decompose(&swap_letters(&word), &block).unwrap();
        assert!(flipped.iter().zip(&signs).all(|(a, b)| a != b));
    }
}

#[test]
fn cantor_measure_and_nesting() {
    let two_thirds = BigRational::new(BigInt::from(2), BigInt::from(3));
    let mut previous: Option<CantorSet> = None;
    for k in 0..=10u32 {
        let set: CantorSet = cantor_intervals(k).unwrap();
        assert_eq!(
            set.total_length(),
            num_traits::pow(two_thirds.clone(), k as usize)
        );
        if let Some(prev) = &previous {
            assert!(prev.contains_set(&set), "k={k}");
        }
        previous = Some(set);
    }
}

#[test]
fn svg_is_well_formed() {
    let s = spec(3);
    let polys: Vec<Polyline64> = (1..=3)
        .map(|n| renormalize(&substitution_polyline(&s, n).unwrap(), &s, n).unwrap())
        .collect();
    let svg = to_svg(&polys, &RenderStyle::default()).unwrap();
    let doc = roxmltree::Document::parse(&svg).unwrap();
    let root = doc.root_element();
    assert_eq!(root.tag_name().name(), "svg");
    let lines: Vec<_> = root
        .children()
        .filter(|n| n.has_tag_name("polyline"))
        .collect();
    assert_eq!(lines.len(), 3);
    for (node, poly) in lines.iter().zip(&polys) {
        let count = node.attribute("points").unwrap().split(' ').count();
        assert_eq!(count, poly.len());
    }
}

#[test]
fn snowflake_option_closes_outline() {
    let s = spec(3);
    let curve = renormalize(&substitution_polyline(&s, 2).unwrap(), &s, 2).unwrap();
    let style = RenderStyle {
        snowflake: true,
        ..RenderStyle::default()
    };
    let svg = to_svg(std::slice::from_ref(&curve), &style).unwrap();
    let doc = roxmltree::Document::parse(&svg).unwrap();
    let node = doc
        .descendants()
        .find(|n| n.has_tag_name("polyline"))
        .unwrap();
    let pts: Vec<&str> = node.attribute("points").unwrap().split(' ').collect();
    assert_eq!(pts.len(), 3 * (curve.len() - 1) + 1);
    assert_eq!(pts.first(), pts.last());
}

#[test]
fn turtle_track_vertex_count() {
    for k in 0..=8 {
        let word = tm_prefix_word(k, TurtleLetter::F).unwrap();
        let forwards = word.iter().filter(|&&l| l == TurtleLetter::F).count();
        let track = run_turtle(&TurtleProgram64::sixty_degrees(word));
        assert_eq!(track.len(), forwards + 1);
    }
}

fn parse_csv(text: &str) -> Vec<(f64, f64)> {
    text.lines()
        .map(|line| {
            let (x, y) = line.split_once(',').unwrap();
            (x.parse().unwrap(), y.parse().unwrap())
        })
        .collect()
}

proptest! {
    #[test]
    fn csv_round_trip(coords in proptest::collection::vec((-1e4f64..1e4, -1e4f64..1e4), 1..50)) {
        let poly = Polyline64::new(coords.iter().map(|&(x, y)| vonkoch::Point64::new(x, y)).collect()).unwrap();
        let back = parse_csv(&to_csv(&poly));
        prop_assert_eq!(back.len(), coords.len());
        for ((x, y), (bx, by)) in coords.iter().zip(back) {
            prop_assert!((x - bx).abs() <= 0.5e-9 + 1e-12 * x.abs());
            prop_assert!((y - by).abs() <= 0.5e-9 + 1e-12 * y.abs());
        }
    }

    #[test]
    fn svg_is_deterministic(n in 0u32..4, q_idx in 0usize..2) {
        let s = spec([3, 5][q_idx]);
        let poly = substitution_polyline(&s, n.min(2)).unwrap();
        let a = to_svg(std::slice::from_ref(&poly), &RenderStyle::default()).unwrap();
        let b = to_svg(&[poly], &RenderStyle::default()).unwrap();
        prop_assert_eq!(a, b);
    }
}
