//! Energy-guided diffusion sampling (EDIS) for offline-to-online RL.
//!
//! The crate is organized around the data path of one experiment:
//!
//! - [`numcore`]: dense tensors, a small MLP with reverse-mode gradients
//!   (including gradients with respect to inputs), and Adam.
//! - [`diffusion`]: Karras sigma ladder, sigma-conditioned denoiser, L2
//!   denoising training, and reverse-SDE sampling with optional guidance
//!   and inpainting-style conditioning.
//! - [`energy`]: the three contrastive energy functions (state, action,
//!   next-state) trained with InfoNCE, and the combined guidance gradient.
//! - [`envs`]: the maze MDP, offline dataset generation, and dataset file IO.
//! - [`agent`]: fitted-Q pretraining and the online fine-tuning loop that
//!   periodically refills a buffer with guided synthetic transitions.
//! - [`baselines`]: MLP and diffusion transition models with short-branch
//!   policy rollouts, capacity-matched to the generative stack.
//! - [`eval`]: exact and discriminator-based JS divergence, action/transition
//!   MSE divergences, and visitation histograms.
//! - [`config`] / [`experiments`]: run configuration files and the
//!   reproducible experiment drivers behind the CLI subcommands.

pub mod agent;
pub mod baselines;
pub mod checkpoint;
pub mod config;
pub mod diffusion;
pub mod energy;
pub mod envs;
pub mod error;
pub mod eval;
pub mod experiments;
pub mod numcore;
pub mod rng;

pub use error::{Error, Result};
pub use numcore::{AdamState, Mlp, Tensor};
