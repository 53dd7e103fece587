use grr_core::grrcert::stabilizing_multipliers;
use grr_web::demo;

#[test]
fn alternating_fourteen() {
    let v = demo::construct_alternating(14, 6).unwrap();
    assert_eq!(v.p, 11);
    assert_eq!(v.transpositions, vec![[2, 13], [3, 14], [9, 10], [11, 12]]);
    assert_eq!(v.fix_y, vec![1, 4, 5, 6, 7, 8]);
    assert!(v.admissible);
    assert_eq!(v.aut_gs_order, 1);
    assert!(demo::construct_alternating(13, 5).is_err());
    assert!(demo::construct_alternating(14, 4).is_err());
}

#[test]
fn circulant_seven() {
    let v = demo::circulant(7, "1,2").unwrap();
    assert_eq!(v.connection_set, vec![1, 2, 5, 6]);
    assert_eq!(v.edges.len(), 14);
    assert_eq!(v.aut_order, "14");
    assert_eq!(v.multipliers, stabilizing_multipliers(7, 2));
    assert!(!v.is_grr);
    assert!(demo::circulant(7, "7").is_err());
    assert!(demo::circulant(2, "1").is_err());
}

#[test]
fn circulant_orders_match_multipliers_for_primes() {
    for p in [11usize, 13] {
        for jumps in ["1,2", "1,3", "2,5"] {
            let v = demo::circulant(p, jumps).unwrap();
            if v.edges.len() == p * (p - 1) / 2 {
                continue;
            }
            assert_eq!(
                v.aut_order,
                (p * v.multipliers.len()).to_string(),
                "p = {p}, {jumps}"
            );
        }
    }
}

#[test]
fn ppd_views() {
    let v = demo::ppd(2, 9).unwrap();
    assert_eq!(v.value, "511");
    assert_eq!(v.factorization, vec![(7, 1), (73, 1)]);
    assert_eq!(v.ppd, vec![73]);
    assert!(demo::ppd(2, 6).unwrap().ppd.is_empty());
    assert!(demo::ppd(4, 3).is_err());
}

#[test]
fn exports_return_json() {
    let ok: serde_json::Value = serde_json::from_str(&grr_web::circulant(7, "1,2")).unwrap();
    assert_eq!(ok["aut_order"], "14");
    let err: serde_json::Value = serde_json::from_str(&grr_web::ppd(4, 3)).unwrap();
    assert!(err["error"].is_string());
}
