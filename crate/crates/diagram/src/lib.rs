//! Local operators of the dilute loop model: plaquettes, boundary pieces,
//! merge and split maps, weight tables, diagram gluing and the scalar
//! operators on components.

pub mod action;
pub mod glue;
pub mod kinds;
pub mod ops;
pub mod weights;

pub use action::{
    kappa_action, merge_apply, merge_join_action, merge_join_apply, merge_pattern, plaquette_action, plaquette_preimages, split_apply, split_pattern,
    ActionTable, Closures,
};
pub use glue::{first_difference, Choice, Closed, Connectivity, Diagram, DiagramBuilder, End, Inner, Piece, PortRef};
pub use kinds::{BoundaryKind, BoundaryShape, PlaquetteKind};
pub use ops::{delta_apply, eta_apply, factor_f, factor_f_parts, gamma_apply, mu_apply, sigma_apply, tau_apply};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("port ({0}, {1}) is unlinked or linked twice")]
    PortMismatch(usize, u8),
    #[error("external connectivity is not a planar link pattern")]
    NotPlanar,
}
