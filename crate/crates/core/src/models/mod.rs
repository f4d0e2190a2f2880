pub mod rel;
pub mod table;
pub mod span;
pub mod graded;
pub mod hop;
pub mod product;

pub use graded::{GHCell, GSquare, GVMor, GradedModel};
pub use hop::HOp;
pub use product::{ProductModel, Terminal};
pub use rel::{RelModel, RelSquare, Relation};
pub use table::{HId, ObjId, SqId, TableModel, TableSpec, VId};
pub use span::{Label, Span, SpanModel, SpanSquare};
