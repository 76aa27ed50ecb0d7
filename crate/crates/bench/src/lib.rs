//! Fixtures shared by the benchmarks.

use dialgebra::corpus::{corpus_list, Profile};
use dialgebra::fleet::identity_matrix_algebra;
use dialgebra::{Dialgebra, Q};

/// Every corpus entry under the default profile, keyed by id.
pub fn corpus_fixtures() -> Vec<(&'static str, Dialgebra<Q>)> {
    corpus_list()
        .iter()
        .map(|e| (e.id, e.build_profile(Profile::Default).expect("corpus entry builds")))
        .collect()
}

/// Matrix dialgebras `M_k` for the given sizes.
pub fn matrix_fixtures(sizes: &[usize]) -> Vec<(usize, Dialgebra<Q>)> {
    sizes.iter().map(|&k| (k, identity_matrix_algebra::<Q>(k).expect("matrix algebra"))).collect()
}
