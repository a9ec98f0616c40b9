//! Deterministic discrete-event simulator for a semantic network stack.
//!
//! The stack is organized in three semantic layers. The physical
//! transportation layer moves symbol embodiments through space and time and
//! offers multihop paths with time/energy/space metrics. The network layer
//! multiplexes flows, picks among offered paths, fragments and reassembles,
//! and floods topology and content state. The computation layer packages
//! application data units and adapts encodings to the capacity the network
//! offers back.
//!
//! Everything is a pure function of a [`sim::Scenario`] and a master seed:
//! two runs of the same pair produce byte-identical traces.

pub mod bits;
pub mod bounds;
pub mod computation;
pub mod embodiment;
pub mod error;
pub mod ident;
pub mod network;
pub mod physical;
pub mod sim;
pub mod time;

pub use error::{Error, Result};
pub use ident::{EntityId, Namespace};
pub use time::{Energy, SimTime};
