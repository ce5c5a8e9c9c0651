use std::path::PathBuf;

use crosscap::adams_kindred::{ak_search, SearchConfig};
use crosscap::bounds::crosscap_trivalent;
use crosscap::diagram::Orientation;
use crosscap::generators::{inflate_twist, pretzel, trivalent_graph_link, RotationSystem};
use crosscap::jones::jones_with_cap;

fn graph(name: &str) -> RotationSystem {
    RotationSystem::load(&PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/graphs").join(name)).unwrap()
}

#[test]
fn trivalent_links_follow_the_graph_formula() {
    let cases: Vec<(&str, Vec<i64>)> = vec![
        ("theta.txt", vec![3, 3, 3]),
        ("theta.txt", vec![3, 4, 5]),
        ("theta.txt", vec![4, 4, 4]),
        ("k4.txt", vec![3; 6]),
        ("k4.txt", vec![3, 4, 3, 4, 3, 4]),
        ("k4.txt", vec![4, 3, 5, 3, 3, 3]),
        ("k4.txt", vec![-3; 6]),
    ];
    for (file, twists) in cases {
        let d = trivalent_graph_link(&graph(file), &twists).unwrap();
        let t = d.twist_regions().len();
        assert_eq!(t, twists.len(), "{file} {twists:?}");
        let ak = ak_search(&d, &SearchConfig::default()).unwrap();
        let eps = if ak.nonorientable_at_max { 2 } else { 3 };
        assert_eq!(ak.crosscap, crosscap_trivalent(t, eps, d.components()), "{file} {twists:?}");
        let j = jones_with_cap(&d, &Orientation::default_for(&d), 40).unwrap();
        assert_eq!(j.t_k, t as u64, "{file} {twists:?}");
    }
}

#[test]
fn theta_graph_is_the_pretzel() {
    let d = trivalent_graph_link(&graph("theta.txt"), &[3, 3, 4]).unwrap();
    assert_eq!(d, pretzel(&[3, 3, 4]).unwrap());
}

#[test]
fn inflation_keeps_twist_number_and_jones_t() {
    let mut d = pretzel(&[3, 3, 3]).unwrap();
    for _ in 0..3 {
        d = inflate_twist(&d, 0, 2).unwrap();
        assert_eq!(d.twist_regions().len(), 3);
        let j = jones_with_cap(&d, &Orientation::default_for(&d), 40).unwrap();
        assert_eq!((j.t_k, j.span_t), (3, d.crossing_count() as u64));
    }
    assert_eq!(d.crossing_count(), 15);
    assert_eq!(ak_search(&d, &SearchConfig::default()).unwrap().crosscap, 3);
}
