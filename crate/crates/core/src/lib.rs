pub mod braid;
pub mod gassner;
pub mod laurent;
pub mod potential;
pub mod verify;
