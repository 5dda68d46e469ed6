//! Named sequences and triangles, three-term recurrences and spec files.

pub mod catalogue;
pub mod recurrence;
pub mod seq;
pub mod spec_file;

pub use catalogue::{gen_named, gen_triangle, named_recurrence, SEQUENCE_NAMES, TRIANGLE_NAMES};
pub use recurrence::{gen_from_recurrence3, Recurrence3, RecurrenceTerms, Sign};
pub use seq::{Seq, Triangle};
pub use spec_file::{parse_seq_spec, SeqSpec};
