//! Idempotent, twist-invariant and conductor properties over the bundled
//! character tables.

use gradord_core::group::galois::decomposition_group;
use gradord_core::group::{
    bruteforce_conductor, bundled, chi_invariants, epsilon_idempotent, p_adic_orbits, primitive_idempotent, Automorphism,
    GroupAlgebraElement, BUNDLED_NAMES,
};

#[test]
fn idempotent_suite_on_every_bundled_group() {
    for name in BUNDLED_NAMES {
        let t = bundled(name).unwrap();
        let g = t.group();
        for p in [3u64, 5, 7] {
            let orbits = p_adic_orbits(&t, p).unwrap();
            let dg = decomposition_group(t.level(), p).unwrap();
            let eps: Vec<GroupAlgebraElement> = orbits.iter().map(|o| epsilon_idempotent(&t, o).unwrap()).collect();
            let mut total = GroupAlgebraElement::zero(g.order(), t.level());
            for (i, e) in eps.iter().enumerate() {
                assert_eq!(&e.mul(e, g).unwrap(), e, "{name} p={p}");
                assert!(e.is_central(g));
                for &a in &dg.elements {
                    assert_eq!(&e.galois(a).unwrap(), e, "{name} p={p}: ε not Galois stable");
                }
                for f in &eps[i + 1..] {
                    assert!(e.mul(f, g).unwrap().is_zero());
                }
                total = total.add(e).unwrap();
            }
            assert_eq!(total, GroupAlgebraElement::one(g.order(), t.level()));
        }
        for eta in 0..t.len() {
            let e = primitive_idempotent(&t, eta).unwrap();
            assert_eq!(e.mul(&e, g).unwrap(), e);
            assert!(e.is_central(g));
        }
    }
}

#[test]
fn orbit_sizes_are_local_degrees() {
    for name in BUNDLED_NAMES {
        let t = bundled(name).unwrap();
        for p in [3u64, 5, 7] {
            let dg = decomposition_group(t.level(), p).unwrap();
            for orbit in p_adic_orbits(&t, p).unwrap() {
                let vals = t.element_values(orbit[0]);
                let fixing = dg.elements.iter().filter(|&&a| vals.iter().all(|v| v.galois(a as i64).unwrap() == *v)).count();
                assert_eq!(orbit.len() * fixing, dg.order(), "{name} p={p}");
            }
        }
    }
}

#[test]
fn v_divides_w_for_power_twists() {
    for (name, p) in [("C7", 3u64), ("C9", 3), ("C5", 5), ("C3", 3), ("C6", 3)] {
        let t = bundled(name).unwrap();
        let g = t.group();
        for k in 1..g.order() as u32 {
            let Ok(alpha) = Automorphism::new(g, (0..g.order()).map(|h| g.pow(h, k)).collect()) else {
                continue;
            };
            for eta in 0..t.len() {
                match chi_invariants(&t, &alpha, eta, p) {
                    Ok(inv) => assert_eq!(inv.w_chi % inv.v_chi, 0, "{name} k={k} eta={eta}"),
                    Err(e) => assert!(e.to_string().contains("not a power"), "{e}"),
                }
            }
        }
    }
}

#[test]
fn oracle_agrees_with_the_formula() {
    for name in ["C2", "C3", "C5", "S3", "C9"] {
        for p in [3u64, 5] {
            for o in bruteforce_conductor(&bundled(name).unwrap(), p, 8).unwrap() {
                assert!(o.agrees(), "{name} p={p}: {o:?}");
                assert!(o.valuation >= 0);
            }
        }
    }
}

#[test]
fn idempotent_coefficients_have_bounded_denominators() {
    for name in BUNDLED_NAMES {
        let t = bundled(name).unwrap();
        let n = t.group().order() as i64;
        for orbit in p_adic_orbits(&t, 3).unwrap() {
            let e = epsilon_idempotent(&t, &orbit).unwrap();
            for c in e.coeffs() {
                let scaled = c.scale(&num_rational::BigRational::from_integer(n.into()));
                assert!(scaled.is_integral_vector(), "{name}: {c}");
            }
        }
    }
}
