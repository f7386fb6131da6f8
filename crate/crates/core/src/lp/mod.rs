//! Exact linear programming over the subtour, T-join and cover polyhedra.

pub mod membership;
pub mod mincut;
pub mod simplex;
pub mod subtour;
