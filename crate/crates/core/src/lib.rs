//! Decoding one-point codes on plane curves `y^a + d x^b + ... = 0` (Hermitian
//! codes in particular) by Groebner-basis interpolation and majority voting.
//!
//! The pipeline, bottom-up:
//!
//! - [`gf`]: GF(p^m) via log/antilog tables.
//! - [`curvering`]: the Weierstrass semigroup `<a, b>` and the coordinate ring,
//!   with monomials indexed by their pole order.
//! - [`code`]: evaluation codes `C_u`, the vanishing ideal of the point set and
//!   the decoding radius `d_u`.
//! - [`decoder`]: the interpolation decoder itself.
//! - [`oracle`]: brute-force cross-checks for tests.
//! - [`io`], [`trace`], [`sim`]: file formats, golden traces and Monte-Carlo runs.
//!
//! ```
//! use plane_ag::code::Code;
//! use plane_ag::decoder::{decode, Status};
//!
//! let code = Code::hermitian(3, 16).unwrap();
//! let f = code.field();
//! let msg: Vec<_> = (0..code.dimension() as i64).map(|i| f.alpha_pow(i)).collect();
//! let mut v = code.encode(&msg).unwrap();
//! for i in [0, 7, 13, 20, 26] {
//!     v[i] = f.add(v[i], f.one());
//! }
//! let r = decode(&code, &v).unwrap();
//! assert_eq!(r.message, msg);
//! assert_eq!(r.status, Status::Ok);
//! ```

pub mod code;
pub mod curvering;
pub mod decoder;
pub mod gf;
pub mod io;
pub mod oracle;
pub mod sim;
pub mod trace;
