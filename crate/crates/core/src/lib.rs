//! Pinned dot products over finite planes.
//!
//! For a point set `E ⊆ F_q²` with `|E| > q` this crate finds `x, y ∈ E` such
//! that the pinned dot set `E · (y − x) = {u · (y − x) : u ∈ E}` has more than
//! `q/2` elements, and checks the surrounding facts exactly: the second-moment
//! identity `Σ_ℓ |ℓ ∩ E|² = |E|² + q|E|` over all lines, the fact that `E − E`
//! determines every direction, `(E + E) · (y − x) = F_q`, and the subfield
//! construction showing `|E| > q` cannot be relaxed.
//!
//! ```
//! use pinned_dot::{make_field, pinned_pair, Point, PointSet};
//!
//! let f3 = make_field(3, 1)?;
//! let e = PointSet::new(&f3, [(0, 0), (1, 0), (0, 1), (1, 1)].map(|(x, y)| Point::from_codes(x, y)))?;
//! let w = pinned_pair(&e)?;
//! assert_eq!((w.x, w.y), (Point::from_codes(0, 0), Point::from_codes(1, 1)));
//! assert_eq!(w.dot_count, 3);
//! # Ok::<(), pinned_dot::Error>(())
//! ```

pub mod error;
pub mod ffield;
pub mod format;
pub mod harness;
pub mod incidence;
pub mod pinned;
pub mod plane;
pub mod sumsets;

pub use error::{Error, Result};
pub use ffield::{make_field, Elem, FieldSpec};
pub use incidence::{
    directional_second_moment, first_moment, incidence_count, moment_profile, total_second_moment, MomentProfile,
};
pub use pinned::{
    best_direction, good_vector, pair_with_direction, pinned_extremes, pinned_pair, verify_imp, PinnedWitness,
};
pub use plane::{
    difference_set, direction_of, direction_vector, directions_determined, dot, dot_set, line_through, on_line,
    Direction, Line, Point, PointSet,
};
pub use sumsets::{
    aa_plus_aa_stats, complete_pair_check, full_field_pinned_sum, glibichuk_check, iterated_sumset, mult_subgroup,
    productset, subfield_example, sumset, ScalarSet,
};
