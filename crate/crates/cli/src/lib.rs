//! Grid files, the verification runner and report rendering behind the `msm`
//! binary.

pub mod grid;
pub mod report;
pub mod verify;

use msm_core::Error;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const VERIFY_FAILED: i32 = 1;
    pub const DOMAIN: i32 = 2;
    pub const CONVERGENCE: i32 = 3;
    pub const IO_OR_PARSE: i32 = 4;
}

/// Exit code for an evaluation error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Pole(_) | Error::Domain(_) | Error::Branch(_) => exit::DOMAIN,
        Error::Convergence(_) | Error::KernelDivergence(_) | Error::Overflow { .. } => exit::CONVERGENCE,
    }
}
