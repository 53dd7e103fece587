use grr_core::sampler::{parse_generators, GroupSampler, SamplerConfig};
use num_bigint::BigUint;

fn load(name: &str) -> GroupSampler {
    let path = format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(path).unwrap();
    GroupSampler::new(&parse_generators(&text).unwrap()).unwrap()
}

/// |GL_n(2)| = prod_{i<n} (2^n - 2^i).
fn gl2_order(n: u32) -> BigUint {
    (0..n)
        .map(|i| BigUint::from((1u128 << n) - (1u128 << i)))
        .product()
}

#[test]
fn psl3_2_is_the_simple_group_of_order_168() {
    let g = load("psl3_2.txt");
    assert_eq!(g.order(), &BigUint::from(168u32));
}

#[test]
fn psl9_2_fixture_has_the_right_order() {
    let g = load("psl9_2.txt");
    assert_eq!(g.degree(), 511);
    assert_eq!(g.order(), &gl2_order(9));
}

#[test]
fn psl10_2_fixture_has_the_right_order() {
    let g = load("psl10_2.txt");
    assert_eq!(g.degree(), 1023);
    assert_eq!(g.order(), &gl2_order(10));
}

#[test]
fn psl9_2_contains_elements_of_order_73() {
    let g = load("psl9_2.txt");
    let x = g.element_of_order(73, &SamplerConfig::default()).unwrap();
    assert_eq!(x.order_u64(), Some(73));
    assert!(g.chain().contains(&x).unwrap());
}
