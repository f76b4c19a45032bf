//! Comodules, anti-Yetter-Drinfeld coefficients, the cyclic module of a
//! comodule algebra, bar complexes of smash-product modules and relative
//! Hopf modules.

mod ayd;
mod bar;
mod chain;
mod comodule;
mod comodule_algebra;
mod cyclic;
mod relative;
mod tensor;

pub use ayd::{group_like, AydModule};
pub use bar::{bar_complex, bar_shift_check, MoritaReport, ShiftReport, ShiftRow, SmashModule};
pub use chain::{ChainComplex, ComplexSummary};
pub use comodule::{comodule_to_module, module_to_comodule, Comodule};
pub use comodule_algebra::ComoduleAlgebra;
pub use cyclic::{Bounds, CyclicLevel, CyclicModule, IdentityCheck, LevelCheck};
pub use relative::{t_shift_check, RelativeHopfModule, TShiftReport};
