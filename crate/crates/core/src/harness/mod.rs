//! Sample generators and statistical checks of unimodularity identities.

pub mod balls;
pub mod generators;
pub mod involution;
pub mod mtp;

pub use balls::{ball, ball_type};
pub use generators::{generate, generate_named, Generator, GeneratorParams};
pub use involution::{involution_check, InvolutionReport};
pub use mtp::{
    face_length_histogram, mtp_check, payment_corpus, Adjacency, BlockMinimum, Decorated, DegreeWeighted, MtpResult,
    PaymentFunction, RotationDecoration,
};
