use qcy_core::classify::PermClass;
use qcy_core::realize::catalog::{catalog_outcomes, realization_catalog, MatchKind};
use qcy_core::realize::{
    bundled_group, hdet_of_linear_action, inner_product, ore_type, parse_cyc_matrix, perm4, twist_type, Cyc24,
    Irrep, RealizedGroup, BUNDLED_GROUPS,
};
use qcy_core::typealg::text::parse_matrix;
use qcy_core::typealg::{quivers_isomorphic, IntMat, Permutation, QuiverType};

fn group(name: &str) -> RealizedGroup {
    RealizedGroup::new(bundled_group(name).unwrap()).unwrap()
}

fn mat(text: &str) -> IntMat {
    parse_matrix(text).unwrap()
}

fn perm(text: &str) -> Permutation {
    Permutation::from_matrix(&mat(text)).unwrap()
}

#[test]
fn characters_are_orthonormal() {
    for (name, _) in BUNDLED_GROUPS {
        let g = group(name);
        let irreps = g.verified_irreps().unwrap();
        for (i, a) in irreps.iter().enumerate() {
            for (j, b) in irreps.iter().enumerate() {
                let want = Cyc24::from_i64((i == j) as i64);
                assert_eq!(inner_product(&g.group, &a.character, &b.character), want, "{name}: {} {}", a.name, b.name);
            }
        }
    }
}

#[test]
fn mckay_column_sums_balance() {
    for (name, _) in BUNDLED_GROUPS {
        let g = group(name);
        let irreps = g.verified_irreps().unwrap();
        let mk = g.mckay().unwrap();
        assert!(mk.is_complete(), "{name}: defect {:?}", mk.defect);
        let dim_v = g.data.reps[g.rep_index(&g.data.action).unwrap()].dim as i64;
        for (j, wj) in irreps.iter().enumerate() {
            let sum: i64 = irreps.iter().enumerate().map(|(i, wi)| mk.matrix[i][j] * wi.dim as i64).sum();
            assert_eq!(sum, dim_v * wj.dim as i64, "{name}: column {j}");
        }
    }
}

#[test]
fn trivial_character_winds_to_identity() {
    for (name, _) in BUNDLED_GROUPS {
        let g = group(name);
        let ones = vec![Cyc24::one(); g.group.classes.len()];
        let w = g.winding(&ones).unwrap();
        assert_eq!(w, (0..w.len()).collect::<Vec<_>>(), "{name}");
    }
}

#[test]
fn klein_four_on_three_variables() {
    let g = group("klein4_xyz");
    assert_eq!(g.group.order(), 4);
    assert_eq!(g.group.classes.len(), 4);
    let t = g.mckay_type().unwrap();
    assert_eq!(t.m, mat("0,1,1,1;1,0,1,1;1,1,0,1;1,1,1,0"));
    assert_eq!(t.p, Permutation::identity());
    for gen in ["-1 0 0 ; 0 1 0 ; 0 0 -1", "1 0 0 ; 0 -1 0 ; 0 0 -1"] {
        assert!(hdet_of_linear_action(&parse_cyc_matrix(gen).unwrap()).is_one());
    }
}

#[test]
fn scalar_c4_gives_triple_arrow_circulant() {
    let g = group("c4_iii");
    assert_eq!(g.group.order(), 4);
    let t = g.mckay_type().unwrap();
    assert!(quivers_isomorphic(&t.m, &mat("0,0,0,3;3,0,0,0;0,3,0,0;0,0,3,0")));
    assert_eq!(t.p.cycle_type(), vec![4]);
}

#[test]
fn a4_and_its_twist() {
    let g = group("a4");
    assert_eq!(g.group.order(), 12);
    let t = g.mckay_type().unwrap();
    let m = mat("0,0,0,1;0,0,0,1;0,0,0,1;1,1,1,2");
    assert_eq!(t.m, m);
    let n = g.character_permutation("tau_omega").unwrap();
    assert_eq!(n.cycle_type(), vec![3, 1]);
    let tw = twist_type(&t, &n);
    assert_eq!(tw, QuiverType { m, p: n, s: 3 });
}

/// Ordering the irreps (chi0, chi2, chi3, chi1) reproduces the displayed winding permutation.
#[test]
fn plane_c4_winding_matches_display() {
    let g = group("c4_plane");
    let gen = parse_cyc_matrix("1 0 ; 0 (0,0,0,0,0,0,1,0)").unwrap();
    assert_eq!(hdet_of_linear_action(&gen), Cyc24::i());
    let irreps = g.verified_irreps().unwrap();
    let by_name = |n: &str| -> Irrep { irreps.iter().find(|i| i.name == n).unwrap().clone() };
    let ordered: Vec<Irrep> = ["chi0", "chi2", "chi3", "chi1"].into_iter().map(by_name).collect();
    let w = qcy_core::realize::winding_permutation(&ordered, &g.hdet().unwrap()).unwrap();
    assert_eq!(perm4(&w).unwrap(), perm("0,0,1,0;0,0,0,1;0,1,0,0;1,0,0,0"));
}

#[test]
fn plane_c4_ore_extension_by_transposition() {
    let base = QuiverType::new(mat("1,0,0,1;0,1,1,0;1,0,1,0;0,1,0,1"), perm("0,0,1,0;0,0,0,1;0,1,0,0;1,0,0,0"), 2)
        .unwrap();
    let o = ore_type(&base, &Permutation::from_cycles(&[&[2, 3]])).unwrap();
    assert_eq!(o.m, mat("2,0,0,1;0,2,1,0;1,0,1,1;0,1,1,1"));
    assert_eq!(o.p, perm("0,0,0,1;0,0,1,0;0,1,0,0;1,0,0,0"));
    assert_eq!(o.s, 3);
}

/// Order 128 agrees with an independent closure of the same generators.
#[test]
fn binary_swap_group() {
    let g = group("binary_swap");
    assert_eq!(g.group.order(), 128);
    let mk = g.mckay().unwrap();
    assert!(mk.is_complete());
    assert_eq!(mk.to_int_mat().unwrap(), mat("1,1,0,0;1,0,1,0;0,1,0,1;0,0,1,1"));
    let pp = g.character_permutation("rho_sigma").unwrap();
    assert_eq!(pp, Permutation::from_cycles(&[&[0, 3], &[1, 2]]));
    let o = ore_type(&g.mckay_type().unwrap(), &pp).unwrap();
    assert_eq!(PermClass::of(&o.p), Some(PermClass::TwoTwo));
    assert!(quivers_isomorphic(&o.m, &mat("1,1,1,0;1,1,0,1;1,0,0,2;0,1,2,0")));
}

#[test]
fn quartic_superpotentials_have_hdet_minus_one() {
    for name in ["c4_quartic_sym", "c4_quartic_rot"] {
        let g = group(name);
        let gen = g.group.index_of(&g.group.generators[0]).unwrap();
        assert_eq!(g.hdet().unwrap()[g.group.class_of[gen]], Cyc24::from_i64(-1), "{name}");
    }
}

#[test]
fn catalog_executes_end_to_end() {
    let outcomes = catalog_outcomes();
    assert_eq!(outcomes.len(), realization_catalog().len());
    let mut by_kind = std::collections::BTreeMap::new();
    for (entry, o) in realization_catalog().iter().zip(outcomes) {
        let o = o.as_ref().unwrap_or_else(|e| panic!("{}: {e}", entry.id));
        by_kind.entry(format!("{:?}", o.matched)).or_insert_with(Vec::new).push(entry.id.as_str());
    }
    assert_eq!(by_kind["None"], ["F7", "T3", "E3", "E4"]);
    assert_eq!(by_kind["Some(Mirror)"], ["F3", "F5", "T1"]);
    assert_eq!(
        by_kind["Some(Exact)"],
        ["F2", "F4", "F6", "T2", "D1", "D2", "D3", "D4", "D6", "D7", "E1", "E2"]
    );
    let mismatched: Vec<&str> = realization_catalog()
        .iter()
        .zip(outcomes)
        .filter(|(_, o)| o.as_ref().unwrap().matched == Some(MatchKind::Mismatch))
        .map(|(e, _)| e.id.as_str())
        .collect();
    assert_eq!(mismatched, ["F1", "D5"]);
}
