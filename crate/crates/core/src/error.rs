use num_bigint::BigInt;

/// Errors raised by the exact-arithmetic and verifier layers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero in a cyclotomic field")]
    DivisionByZero,

    #[error("conductor {src} does not divide target conductor {dst}")]
    ConductorNotDivisible { src: u64, dst: u64 },

    #[error("galois residue {k} is not coprime to conductor {n} (gcd {g})")]
    NotCoprime { k: u64, n: u64, g: u64 },

    #[error("value is not fixed by complex conjugation, so it has no real sign")]
    NotTotallyReal,

    #[error("sign undecided at precision cap of {cap_bits} bits")]
    PrecisionExhausted { cap_bits: u32 },

    #[error("jacobi symbol needs an odd positive modulus, got {0}")]
    EvenModulus(i128),

    #[error("incompatible residues in CRT system: {0} and {1} disagree")]
    IncompatibleResidues(i128, i128),

    #[error("rank {rank} is below the minimum {min} for this family")]
    RankTooSmall { rank: u64, min: u64 },

    #[error("weight {0} is outside the fundamental alcove")]
    OutsideAlcove(String),

    #[error("weight ranks differ: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("gauss sum vanishes, central charge undefined")]
    VanishingGaussSum,

    #[error("|τ_n|² is not dim(C) times a rational square; exact central charge not representable here (ratio {0})")]
    UnsupportedModulus(String),

    #[error("arithmetic progression {residue} mod {modulus} is not coprime")]
    BadProgression { residue: u64, modulus: u64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("square root of a negative integer {0} requested")]
    NegativeSquareRoot(BigInt),
}
