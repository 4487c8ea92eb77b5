//! Built-in example library: the finite crossed modules and numeric data
//! used throughout the test and acceptance suites.

use crate::algebra::{FiniteGroup, MatrixLieAlgebra};
use crate::crossed::{CrossedModule, Lie2Algebra};

/// The trivial 2-group `1 -> 1`.
pub fn trivial() -> CrossedModule {
    let g = FiniteGroup::cyclic(1);
    let h = FiniteGroup::cyclic(1);
    CrossedModule::new("trivial", g, h, vec![0], vec![vec![0]]).unwrap()
}

/// `Z2 -> Z2` with `t = id` and the trivial action.
pub fn z2_id_z2() -> CrossedModule {
    let g = FiniteGroup::cyclic(2);
    let h = FiniteGroup::cyclic(2);
    let t = vec![0, 1];
    let act = vec![vec![0, 1], vec![0, 1]];
    CrossedModule::new("z2-id-z2", g, h, t, act).unwrap()
}

/// `Z2 -> Z2` with `t = 0` and the trivial action.
pub fn z2_zero_z2() -> CrossedModule {
    let g = FiniteGroup::cyclic(2);
    let h = FiniteGroup::cyclic(2);
    let t = vec![0, 0];
    let act = vec![vec![0, 1], vec![0, 1]];
    CrossedModule::new("z2-zero-z2", g, h, t, act).unwrap()
}

/// `Z4 -> Z4` with `t = multiplication by 2` and the trivial action.
pub fn z4_x2_z4() -> CrossedModule {
    let g = FiniteGroup::cyclic(4);
    let h = FiniteGroup::cyclic(4);
    let t = (0..4).map(|y| (2 * y) % 4).collect();
    let act = vec![(0..4).collect::<Vec<_>>(); 4];
    CrossedModule::new("z4-x2-z4", g, h, t, act).unwrap()
}

/// The inner-automorphism 2-group of `S3`: `t = id`, conjugation action.
pub fn inn_s3() -> CrossedModule {
    let g = FiniteGroup::symmetric3();
    let h = g.clone();
    let t = (0..6).collect();
    let act = (0..6)
        .map(|x| (0..6).map(|y| g.conj(x, y)).collect())
        .collect();
    CrossedModule::new("inn-s3", g, h, t, act).unwrap()
}

/// The five library finite 2-groups, in a fixed order.
pub fn finite_library() -> Vec<CrossedModule> {
    vec![trivial(), z2_id_z2(), z2_zero_z2(), z4_x2_z4(), inn_s3()]
}

/// The inner-automorphism Lie 2-algebra of `sl2`.
pub fn inn_sl2() -> Lie2Algebra {
    Lie2Algebra::inn(MatrixLieAlgebra::sl2()).expect("inn(sl2) builds")
}
