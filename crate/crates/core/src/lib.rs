pub mod algebra;
pub mod fixtures;
pub mod formulas;
pub mod linalg;
pub mod mesh;
pub mod oracle;
pub mod refine;
pub mod verify;
