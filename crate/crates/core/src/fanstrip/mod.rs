//! Fans, strips, augmentations, the searches that capture them, and
//! structure extraction for internally 3-connected graphs.

mod augment;
mod detect;
mod extract;
mod fan;
mod interact;
mod search;
mod strip;

pub use augment::{
    j_presentation, make_j, may_share, random_augmentation, regular_pieces_for, Addition, AugmentationPresentation,
    CornerRole,
};
pub use detect::{apply_corner_convention, find_maximal_fans, find_maximal_strips};
pub use extract::{
    check_normal_form_script, extract_augmentation, normal_form_script, AuditOp, ExtractOptions, Extraction, ROUND_TRIP_LIMIT,
};
pub use fan::{make_fan, Fan};
pub use interact::{agrees, almost_disjoint, check_pairwise_interaction, embedded_in, fan_center_conflicts, Interaction};
pub use search::{
    capture_between_paths, classify_edge_pair, degree2_path_near, long_nonseparating_path, neighbor_run, Capture, EdgePair,
};
pub use strip::{normal_form_strip, random_strip, regular_strip, strip_from_host, strip_on, Strip};
