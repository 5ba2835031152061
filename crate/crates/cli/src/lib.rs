//! Command-line driver, job configuration and SVG rendering.

mod app;
pub mod config;
pub mod render;

pub use app::run;
pub use config::{parse_config, JobConfig};
pub use render::{render_svg, Drawing, Orientation, RenderSpec};
