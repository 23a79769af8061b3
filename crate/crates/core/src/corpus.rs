//! Prebuilt sample rings used by the regression and acceptance suites.

use crate::construct::{duplicate, subring_of_image_plus_ideal};
use crate::ideal::Ideal;
use crate::ring::{make_monomial_quotient, make_product, make_zmod, FiniteRing};
use crate::theorems::{build_example_2_5, build_example_2_7};

/// Small rings (≤ 64 elements) covering the constructor families: residue
/// rings, monomial quotients, products, trivial extensions, duplications,
/// amalgamation pieces, and the 32-element reference bi-amalgamation.
pub fn standard_corpus() -> Vec<FiniteRing> {
    let mut out: Vec<FiniteRing> = Vec::new();
    for n in [1usize, 2, 3, 4, 5, 6, 8, 9, 12, 16, 27, 32] {
        out.push(make_zmod(n).expect("zmod fits the cap"));
    }
    out.push(make_monomial_quotient(2, &["x"], &[2], &[]).expect("F2[x]/(x^2)"));
    out.push(make_monomial_quotient(2, &["x"], &[3], &[]).expect("F2[x]/(x^3)"));
    out.push(make_monomial_quotient(3, &["x"], &[2], &[]).expect("F3[x]/(x^2)"));
    out.push(make_monomial_quotient(2, &["x", "y"], &[2, 2], &[]).expect("F2[x,y]/(x^2,y^2)"));
    out.push(
        make_monomial_quotient(2, &["x", "y"], &[3, 2], &[vec![1, 1]])
            .expect("F2[x,y]/(x^3,y^2,xy)"),
    );
    let z2 = make_zmod(2).expect("Z/2");
    let z3 = make_zmod(3).expect("Z/3");
    let z4 = make_zmod(4).expect("Z/4");
    out.push(make_product(&z2, &z3).expect("Z/2 x Z/3"));
    out.push(make_product(&z4, &z4).expect("Z/4 x Z/4"));
    let z6 = make_zmod(6).expect("Z/6");
    out.push(
        duplicate(&z6, &Ideal::principal(&z6, z6.elem(2)))
            .expect("Z/6 duplicated along (2)")
            .ring,
    );
    let ex5 = build_example_2_5();
    out.push(ex5.a_ext.ring.clone());
    out.push(ex5.b_ext.ring.clone());
    out.push(ex5.d.ring.clone());
    out.push(
        subring_of_image_plus_ideal(ex5.cfg.f(), ex5.cfg.j())
            .expect("f(A)+J inside B")
            .ring,
    );
    out
}

/// The standard corpus plus the 256-element reference bi-amalgamation and
/// its 64- and 128-element building blocks.
pub fn extended_corpus() -> Vec<FiniteRing> {
    let mut out = standard_corpus();
    let ex7 = build_example_2_7();
    out.push(ex7.a_ext.ring.clone());
    out.push(ex7.b_ext.ring.clone());
    out.push(ex7.c_ext.ring.clone());
    out.push(ex7.d.ring.clone());
    out
}
