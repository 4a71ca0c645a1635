//! Symbolic data for representations of GL2, D^×, GL4, GSp4 and the GSO groups.

pub mod classify;
pub mod gl2;
pub mod gso;
pub mod gsp4;
pub mod reducibility;

pub use classify::{classify_standard_module, standard_module, Classified, StandardModule};
pub use gl2::{jl, jl_inverse, DRep, Gl2Rep, ScToken};
pub use gso::{Gl4Rep, Gso22Rep, Gso33Rep, Gso40Rep};
pub use gsp4::{
    canonicalize_gsp4, gsp4_equal, gsp4_is_generic, gsp4_is_tempered_ng, packet_has_generic, packet_of, GSp4Rep,
    PacketId, ScOrigin,
};
pub use reducibility::{
    borel_reducible, gl4_ip_reducible, klingen_reducible, siegel_reducible, Gl4InducedReducibility,
    KlingenReducibility, SiegelReducibility,
};
