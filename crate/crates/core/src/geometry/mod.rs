//! Triangulations, circle packings and area allocations.

pub mod allocation;
pub mod hyperbolic;
pub mod packing;
pub mod svg;
pub mod triangulate;

pub use allocation::{allocations, AllocationOptions, AllocationReport};
pub use hyperbolic::hyperbolic_area;
pub use packing::{circle_pack, corner_angle, BoundaryCondition, Geometry, PackOptions, Packing};
pub use svg::render_svg;
pub use triangulate::{triangulate_one_ended, Triangulation, VertexRole};
