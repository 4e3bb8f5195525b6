//! Exact real-rootedness, interlacing and the sequence properties that
//! follow from them.

mod interlace;
mod sequences;
mod sturm;
mod verify;

pub use interlace::{interlaces, is_interlacing_sequence, is_interlacing_sequence_fast, InterlaceOutcome};
pub use sequences::{
    alternatingly_increasing, g_vector, gamma_vector, is_m_sequence, macaulay_bound, peak_in_middle, unimodal,
    MSequenceCheck, Unimodality,
};
pub use sturm::{is_real_rooted, isolate, refine, RootInterval, RootIsolation, SturmChain, WIDTH_FLOOR_BITS};
pub use verify::{verify, Claim, InstanceReport, Status, VerificationReport, Witness};
