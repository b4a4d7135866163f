//! Regenerates the committed CSV fixtures and diffs them byte for byte.

use soergel_core::grotring::enumerate_x;
use soergel_core::hilbert::HilbertOracle;
use soergel_core::{CoxeterGroup, Ring, Variant};

fn assert_same(name: &str, golden: &str, fresh: &str) {
    if golden == fresh {
        return;
    }
    let line = golden
        .lines()
        .zip(fresh.lines())
        .position(|(a, b)| a != b)
        .unwrap_or_else(|| golden.lines().count().min(fresh.lines().count()));
    panic!(
        "{name} differs from the golden file at line {}:\n  golden: {:?}\n  fresh:  {:?}",
        line + 1,
        golden.lines().nth(line),
        fresh.lines().nth(line)
    );
}

#[test]
fn structure_tables() {
    for (variant, golden, name) in [
        (Variant::Plain, include_str!("golden/a2_plain_table.csv"), "a2_plain_table.csv"),
        (Variant::Extended, include_str!("golden/a2_extended_table.csv"), "a2_extended_table.csv"),
    ] {
        let ring = Ring::new(variant).unwrap();
        assert_same(name, golden, &ring.structure_constants().to_csv());
    }
}

#[test]
fn hilbert_fixtures() {
    let a2 = CoxeterGroup::a2();
    let oracle = HilbertOracle::new(&a2).unwrap();
    let x = enumerate_x(&a2).unwrap();
    assert_same("hilbert_a2_x.csv", include_str!("golden/hilbert_a2_x.csv"), &oracle.table(&x, 10).to_csv());

    let b2 = CoxeterGroup::b2();
    let oracle = HilbertOracle::new(&b2).unwrap();
    assert_same(
        "hilbert_b2_w.csv",
        include_str!("golden/hilbert_b2_w.csv"),
        &oracle.table(&[b2.full_set()], 10).to_csv(),
    );

    let a3 = CoxeterGroup::a3();
    let oracle = HilbertOracle::new(&a3).unwrap();
    assert_same(
        "hilbert_a3_w.csv",
        include_str!("golden/hilbert_a3_w.csv"),
        &oracle.table(&[a3.full_set()], 5).to_csv(),
    );
}

#[test]
fn golden_table_shape() {
    let plain = include_str!("golden/a2_plain_table.csv");
    assert_eq!(plain.lines().next(), Some("a,b,c,coefficient"));
    assert_eq!(plain.lines().count(), 20 * 20 * 20 + 1);
}
